#pragma once
/**
 * @file octonion.hpp
 * @brief Octonion scalar arithmetic over a fixed named basis.
 *
 * Basis order is (1, i, j, k, kl, jl, il, l), i.e. index 0 is the real
 * part and indices 1..7 are the imaginary units.  The multiplication
 * table is generated from seven oriented quaternionic triples and
 * validated at construction.
 */

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace octo {

/// Thrown when the generated multiplication table violates an axiom.
struct TableInvalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown on inversion of a (numerically) zero octonion.
struct DivisionByZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a unit imaginary direction was expected.
struct NotUnitImaginary : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Residual tolerances used throughout the library.
struct Tolerance {
    double eps_identity = 1e-12;  ///< algebraic identities on O(1) inputs
    double eps_solve = 1e-9;      ///< solver / constructor residuals

    Tolerance() = default;
    Tolerance(double identity, double solve)
        : eps_identity(identity), eps_solve(solve) {
        if (!(eps_identity > 0.0) || !(eps_solve > 0.0))
            throw std::invalid_argument("Tolerance: values must be positive");
        if (eps_identity > eps_solve)
            throw std::invalid_argument("Tolerance: eps_identity must not exceed eps_solve");
    }
};

namespace basis {
inline constexpr int one = 0;
inline constexpr int i = 1;
inline constexpr int j = 2;
inline constexpr int k = 3;
inline constexpr int kl = 4;
inline constexpr int jl = 5;
inline constexpr int il = 6;
inline constexpr int l = 7;

inline constexpr std::array<const char*, 8> names = {"1",  "i",  "j",  "k",
                                                     "kl", "jl", "il", "l"};
}  // namespace basis

/// Signed basis-product table generated from seven oriented triples.
struct MultiplicationTable {
    std::array<std::array<int, 8>, 8> sign{};   ///< sign of e_p e_q
    std::array<std::array<int, 8>, 8> index{};  ///< basis index of e_p e_q
    std::array<std::array<int, 3>, 7> triples{};
};

class Octonion {
  public:
    Octonion() : c_{} {}

    /// Real octonion.
    Octonion(double real) : c_{} {  // NOLINT: implicit by design
        check_finite(real);
        c_[0] = real;
    }

    explicit Octonion(const std::array<double, 8>& coeffs) : c_(coeffs) {
        for (double v : c_) check_finite(v);
    }

    /// Basis unit e_q, q in 0..7.
    static Octonion unit(int q) {
        if (q < 0 || q > 7) throw std::out_of_range("Octonion::unit: index");
        Octonion o;
        o.c_[static_cast<std::size_t>(q)] = 1.0;
        return o;
    }

    double operator[](int q) const { return c_[static_cast<std::size_t>(q)]; }
    double& operator[](int q) { return c_[static_cast<std::size_t>(q)]; }
    const std::array<double, 8>& coeffs() const { return c_; }

    Octonion operator+(const Octonion& o) const {
        Octonion r;
        for (int q = 0; q < 8; ++q) r.c_[q] = c_[q] + o.c_[q];
        return r;
    }
    Octonion operator-(const Octonion& o) const {
        Octonion r;
        for (int q = 0; q < 8; ++q) r.c_[q] = c_[q] - o.c_[q];
        return r;
    }
    Octonion operator-() const {
        Octonion r;
        for (int q = 0; q < 8; ++q) r.c_[q] = -c_[q];
        return r;
    }
    Octonion& operator+=(const Octonion& o) {
        for (int q = 0; q < 8; ++q) c_[q] += o.c_[q];
        return *this;
    }
    Octonion& operator-=(const Octonion& o) {
        for (int q = 0; q < 8; ++q) c_[q] -= o.c_[q];
        return *this;
    }
    Octonion operator*(double s) const {
        Octonion r;
        for (int q = 0; q < 8; ++q) r.c_[q] = c_[q] * s;
        return r;
    }
    Octonion operator/(double s) const { return *this * (1.0 / s); }
    friend Octonion operator*(double s, const Octonion& o) { return o * s; }

    Octonion operator*(const Octonion& o) const;

  private:
    static void check_finite(double v) {
        if (!std::isfinite(v))
            throw std::invalid_argument("Octonion: non-finite coefficient");
    }

    std::array<double, 8> c_;
};

namespace detail {

inline void table_check(bool ok, const char* what) {
    if (!ok) throw TableInvalid(std::string("multiplication table: ") + what);
}

}  // namespace detail

/// Conjugate: flips the sign of coefficients 1..7.
inline Octonion conj(const Octonion& a) {
    Octonion r = a;
    for (int q = 1; q < 8; ++q) r[q] = -r[q];
    return r;
}

inline double re(const Octonion& a) { return a[0]; }

inline Octonion im(const Octonion& a) {
    Octonion r = a;
    r[0] = 0.0;
    return r;
}

/// Euclidean inner product inherited from R^8.
inline double dot(const Octonion& a, const Octonion& b) {
    double s = 0.0;
    for (int q = 0; q < 8; ++q) s += a[q] * b[q];
    return s;
}

inline double norm_sq(const Octonion& a) { return dot(a, a); }
inline double norm(const Octonion& a) { return std::sqrt(norm_sq(a)); }

/**
 * Builds and certifies the multiplication table.
 *
 * The seven oriented triples each satisfy ab=c, bc=a, ca=b and close a
 * quaternionic subalgebra.  Construction validates the identity element,
 * unit squares, norm composition on all basis pairs, and three worked
 * basis products (ij=k, j(kl)=-il, l(kl)=k) before the table is used.
 */
inline MultiplicationTable build_table() {
    using namespace basis;
    MultiplicationTable t;
    t.triples = {{{i, j, k},
                  {i, l, il},
                  {j, l, jl},
                  {k, l, kl},
                  {i, kl, jl},
                  {j, il, kl},
                  {k, jl, il}}};

    std::array<std::array<bool, 8>, 8> filled{};
    auto set = [&](int p, int q, int s, int idx) {
        detail::table_check(!filled[p][q], "duplicate basis product");
        t.sign[p][q] = s;
        t.index[p][q] = idx;
        filled[p][q] = true;
    };

    for (int q = 0; q < 8; ++q) {
        set(0, q, 1, q);
        if (q != 0) set(q, 0, 1, q);
    }
    for (int q = 1; q < 8; ++q) set(q, q, -1, 0);
    for (const auto& tr : t.triples) {
        const int a = tr[0], b = tr[1], c = tr[2];
        set(a, b, 1, c);
        set(b, a, -1, c);
        set(b, c, 1, a);
        set(c, b, -1, a);
        set(c, a, 1, b);
        set(a, c, -1, b);
    }
    for (int p = 0; p < 8; ++p)
        for (int q = 0; q < 8; ++q)
            detail::table_check(filled[p][q], "incomplete basis product table");

    // e1 is a two-sided identity and e_q^2 = -1 for the imaginary units.
    for (int q = 0; q < 8; ++q) {
        detail::table_check(t.sign[0][q] == 1 && t.index[0][q] == q, "left identity");
        detail::table_check(t.sign[q][0] == 1 && t.index[q][0] == q, "right identity");
    }
    for (int q = 1; q < 8; ++q)
        detail::table_check(t.sign[q][q] == -1 && t.index[q][q] == 0, "unit square");

    // Norm composition |e_p e_q| = 1: every entry carries sign +-1.
    for (int p = 0; p < 8; ++p)
        for (int q = 0; q < 8; ++q)
            detail::table_check(t.sign[p][q] == 1 || t.sign[p][q] == -1,
                                "norm composition on basis pair");

    // Each triple closes a quaternionic subalgebra.
    for (const auto& tr : t.triples) {
        const int a = tr[0], b = tr[1], c = tr[2];
        detail::table_check(a != b && b != c && a != c && a > 0 && b > 0 && c > 0,
                            "triple indices");
        detail::table_check(t.sign[a][b] == 1 && t.index[a][b] == c, "triple ab=c");
        detail::table_check(t.sign[b][c] == 1 && t.index[b][c] == a, "triple bc=a");
        detail::table_check(t.sign[c][a] == 1 && t.index[c][a] == b, "triple ca=b");
    }

    // Worked basis products pinned by the 2x2 eigenvector examples.
    detail::table_check(t.sign[i][j] == 1 && t.index[i][j] == k, "ij = k");
    detail::table_check(t.sign[j][kl] == -1 && t.index[j][kl] == il, "j(kl) = -il");
    detail::table_check(t.sign[l][kl] == 1 && t.index[l][kl] == k, "l(kl) = k");

    return t;
}

/// The shared, validated table; built once, read-only afterwards.
inline const MultiplicationTable& table() {
    static const MultiplicationTable t = build_table();
    return t;
}

inline Octonion Octonion::operator*(const Octonion& o) const {
    const MultiplicationTable& t = table();
    Octonion r;
    for (int p = 0; p < 8; ++p) {
        const double ap = c_[p];
        if (ap == 0.0) continue;
        for (int q = 0; q < 8; ++q) {
            const double bq = o.c_[q];
            if (bq == 0.0) continue;
            r.c_[static_cast<std::size_t>(t.index[p][q])] += t.sign[p][q] * ap * bq;
        }
    }
    return r;
}

inline Octonion mul(const Octonion& a, const Octonion& b) { return a * b; }

/// a^{-1} = conj(a) / |a|^2.
inline Octonion inverse(const Octonion& a, double eps = 1e-12) {
    const double n2 = norm_sq(a);
    if (n2 <= eps * eps) throw DivisionByZero("inverse: zero octonion");
    return conj(a) / n2;
}

/// [a,b,c] = (ab)c - a(bc); totally antisymmetric, purely imaginary.
inline Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c) {
    return (a * b) * c - a * (b * c);
}

inline Octonion commutator(const Octonion& a, const Octonion& b) {
    return a * b - b * a;
}

/// cos(theta) + u sin(theta) for a unit imaginary direction u.
inline Octonion unit_complex(const Octonion& u, double theta, double eps = 1e-12) {
    if (std::abs(re(u)) > eps || std::abs(norm(u) - 1.0) > eps)
        throw NotUnitImaginary("unit_complex: direction must be unit imaginary");
    return Octonion(std::cos(theta)) + u * std::sin(theta);
}

namespace units {
inline const Octonion one = Octonion::unit(basis::one);
inline const Octonion i = Octonion::unit(basis::i);
inline const Octonion j = Octonion::unit(basis::j);
inline const Octonion k = Octonion::unit(basis::k);
inline const Octonion kl = Octonion::unit(basis::kl);
inline const Octonion jl = Octonion::unit(basis::jl);
inline const Octonion il = Octonion::unit(basis::il);
inline const Octonion l = Octonion::unit(basis::l);
}  // namespace units

}  // namespace octo
