#pragma once
/**
 * @file random.hpp
 * @brief Seeded sampling of octonions, vectors, and Hermitian fixtures.
 *
 * Coefficients are i.i.d. uniform on [-1,1] unless a unit-norm input is
 * required, in which case the sample is normalized.
 */

#include <cmath>
#include <random>

#include "octo/matrix.hpp"
#include "octo/octonion.hpp"

namespace octo {

using Rng = std::mt19937_64;

inline Octonion random_octonion(Rng& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Octonion o;
    for (int q = 0; q < 8; ++q) o[q] = u(rng);
    return o;
}

/// Unit-norm octonion, rejection-free (resamples near-zero draws).
inline Octonion random_unit(Rng& rng) {
    for (;;) {
        Octonion o = random_octonion(rng);
        const double n = norm(o);
        if (n > 1e-3) return o / n;
    }
}

inline Octonion random_unit_imaginary(Rng& rng) {
    for (;;) {
        Octonion o = im(random_octonion(rng));
        const double n = norm(o);
        if (n > 1e-3) return o / n;
    }
}

inline OctVector random_vector(Rng& rng, std::size_t n) {
    OctVector v(n);
    for (std::size_t q = 0; q < n; ++q) v[q] = random_octonion(rng);
    return v;
}

inline Hermitian2Params random_hermitian2(Rng& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {u(rng), u(rng), random_octonion(rng)};
}

inline Hermitian3Params random_hermitian3(Rng& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {u(rng),           u(rng),           u(rng),
            random_octonion(rng), random_octonion(rng), random_octonion(rng)};
}

/// Random member of the family p I + q J(r) that admits non-real eigenvalues.
inline Hermitian2Params random_in_A(Rng& rng, double q_min = 0.2) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> uq(q_min, 1.5);
    const double p = u(rng);
    const double q = uq(rng);
    const Octonion r_hat = random_unit_imaginary(rng);
    return {p, p, r_hat * (-q)};
}

}  // namespace octo
