#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "octo/random.hpp"
#include "octo/spin.hpp"

using namespace octo;
using namespace octo::spin;
using namespace octo::units;

TEST_CASE("generators are the Pauli matrices times l/2") {
    const OctMatrix& rx = generator(Axis::x);
    REQUIRE(norm(rx(0, 1) - l * 0.5) == 0.0);
    REQUIRE(norm(rx(1, 0) - l * 0.5) == 0.0);
    const OctMatrix& ry = generator(Axis::y);
    REQUIRE(norm(ry(0, 1) - Octonion(0.5)) == 0.0);
    REQUIRE(norm(ry(1, 0) + Octonion(0.5)) == 0.0);
    const OctMatrix& rz = generator(Axis::z);
    REQUIRE(norm(rz(0, 0) - l * 0.5) == 0.0);
    REQUIRE(norm(rz(1, 1) + l * 0.5) == 0.0);
}

TEST_CASE("rest states are simultaneous eigenstates with known eigenvalues") {
    const OctVector plus = psi_plus();
    const OctVector minus = psi_minus();

    // L_z eigenvalues +-1/2.
    REQUIRE(vector_norm(apply_L(Axis::z, plus) - plus * 0.5) <= 1e-12);
    REQUIRE(vector_norm(apply_L(Axis::z, minus) - minus * -0.5) <= 1e-12);

    // Printed non-real eigenvalues of psi plus.
    REQUIRE(vector_norm(apply_L(Axis::x, plus) - vec_scale_right(plus, k * -0.5)) <=
            1e-12);
    REQUIRE(vector_norm(apply_L(Axis::y, plus) - vec_scale_right(plus, kl * -0.5)) <=
            1e-12);

    // psi minus eigenvalues are computed, not assumed.
    for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
        const Octonion lambda = eigenvalue_on(axis, minus);
        REQUIRE(vector_norm(apply_L(axis, minus) - vec_scale_right(minus, lambda)) <=
                1e-12);
    }
}

TEST_CASE("eigenvalue_on rejects non-eigenstates") {
    const OctVector not_eigen{Octonion(1.0), Octonion(0.0)};
    REQUIRE_THROWS(eigenvalue_on(Axis::x, not_eigen));
    REQUIRE_THROWS(eigenvalue_on(Axis::x, OctVector{Octonion(), Octonion()}));
}

TEST_CASE("commutator relation on psi plus") {
    const OctVector plus = psi_plus();
    const OctVector lxly = apply_L(Axis::x, apply_L(Axis::y, plus));
    const OctVector lylx = apply_L(Axis::y, apply_L(Axis::x, plus));
    REQUIRE(vector_norm(lxly * 4.0 - vec_scale_right(plus, l)) <= 1e-12);
    REQUIRE(vector_norm(lylx * 4.0 + vec_scale_right(plus, l)) <= 1e-12);
    // [L_x, L_y] psi+ = L_z psi+ l.
    const OctVector lz = apply_L(Axis::z, plus);
    REQUIRE(vector_norm(lxly - lylx - vec_scale_right(lz, l)) <= 1e-12);
}

TEST_CASE("phase family over a 64-point grid") {
    for (int g = 0; g < 64; ++g) {
        const double theta = 2.0 * M_PI * g / 64.0;
        const OctVector psi = phase_state(theta);
        const Octonion e2 = unit_complex(l, 2.0 * theta);
        REQUIRE(vector_norm(apply_L(Axis::z, psi) - psi * 0.5) <= 1e-12);
        REQUIRE(vector_norm(apply_L(Axis::x, psi) -
                            vec_scale_right(psi, (k * e2) * -0.5)) <= 1e-12);
        REQUIRE(vector_norm(apply_L(Axis::y, psi) -
                            vec_scale_right(psi, (kl * e2) * -0.5)) <= 1e-12);
    }
}

TEST_CASE("projection and inner product") {
    Rng rng(73);
    for (int s = 0; s < 200; ++s) {
        const Octonion q = random_octonion(rng);
        const Octonion pq = pi_project(q);
        // Idempotent, lands in span{1, l}, and keeps exactly those parts.
        REQUIRE(norm(pi_project(pq) - pq) <= 1e-12);
        for (int idx = 1; idx < 7; ++idx) REQUIRE(std::abs(pq[idx]) <= 1e-12);
        REQUIRE(std::abs(pq[0] - q[0]) <= 1e-12);
        REQUIRE(std::abs(pq[7] - q[7]) <= 1e-12);
    }
    REQUIRE(norm(pi_project(i)) <= 1e-12);
    REQUIRE(norm(pi_project(Octonion(2.0) + l * 3.0 + kl) -
                 (Octonion(2.0) + l * 3.0)) <= 1e-12);
}

TEST_CASE("rest states are orthonormal in the projected inner product") {
    REQUIRE(norm(spin_inner(psi_plus(), psi_minus())) <= 1e-12);
    REQUIRE(norm(spin_inner(psi_plus(), psi_plus()) - Octonion(2.0)) <= 1e-12);
    REQUIRE(norm(spin_inner(psi_minus(), psi_minus()) - Octonion(2.0)) <= 1e-12);
}

TEST_CASE("operators are self-adjoint in the projected inner product") {
    Rng rng(79);
    for (int s = 0; s < 200; ++s) {
        const OctVector psi = random_vector(rng, 2);
        const OctVector chi = random_vector(rng, 2);
        for (Axis axis : {Axis::x, Axis::y, Axis::z})
            REQUIRE(norm(spin_inner(apply_L(axis, psi), chi) -
                         spin_inner(psi, apply_L(axis, chi))) <= 1e-10);
    }
}
