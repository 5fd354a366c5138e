#pragma once
/**
 * @file eigen2.hpp
 * @brief Non-real left/right eigentheory of 2x2 octonionic Hermitian
 *        matrices: the family A = pI + qJ(r) that admits non-real
 *        eigenvalues, the shared eigenvector set V, the generalized
 *        characteristic equation, and both decomposition theorems.
 */

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "octo/matrix.hpp"
#include "octo/octonion.hpp"
#include "octo/random.hpp"

namespace octo {

struct NotInA : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInV : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InadmissibleLambda : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroComponent : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PreconditionViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidPair : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotQuaternionic : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateSample : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Side { left, right };

/// Eigenpair with a residual-based validity contract.
struct EigenPair2 {
    OctVector v;       ///< length 2
    Octonion lambda;
    Side side = Side::right;
    double residual = 0.0;
};

/// Defining residual ||Av - v lambda|| (right) or ||Av - lambda v|| (left).
inline double verify_pair(const Hermitian2Params& h, const EigenPair2& pair) {
    const OctVector av = matvec(h.to_matrix(), pair.v);
    const OctVector sv = pair.side == Side::right
                             ? vec_scale_right(pair.v, pair.lambda)
                             : vec_scale_left(pair.lambda, pair.v);
    return vector_norm(av - sv);
}

/// Classification of membership in A = { pI + qJ(r) }.
struct AMembership {
    bool in_A = false;
    double p = 0.0;
    double q = 0.0;       ///< strictly positive when in_A
    Octonion r_hat;       ///< unit imaginary; top off-diagonal equals -q r_hat
    double defect = 0.0;  ///< max(|p - m|, |Re a|)
};

/**
 * A matrix admits non-real eigenvalues (either side) iff its diagonal is
 * balanced (p = m), the off-diagonal is purely imaginary, and nonzero.
 * The sign convention fixes the top off-diagonal entry as -q r_hat with
 * q > 0.
 */
inline AMembership classify_in_A(const Hermitian2Params& h, double tol = 1e-9) {
    AMembership r;
    r.p = h.p;
    r.defect = std::max(std::abs(h.p - h.m), std::abs(re(h.a)));
    const double qa = norm(im(h.a));
    if (r.defect <= tol && qa > tol) {
        r.in_A = true;
        r.q = qa;
        r.r_hat = im(h.a) * (-1.0 / qa);
    }
    return r;
}

/**
 * Uniform sample from V = { (x,y) : |x| = |y| = 1, x . y = 0 }, built by
 * Gram-Schmidt on two random R^8 vectors.
 */
inline OctVector sample_V(Rng& rng) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        Octonion x = random_octonion(rng);
        const double nx = norm(x);
        if (nx < 1e-3) continue;
        x = x / nx;
        Octonion y = random_octonion(rng);
        y = y - x * dot(x, y);
        const double ny = norm(y);
        if (ny < 1e-3) continue;
        y = y / ny;
        return OctVector{x, y};
    }
    throw DegenerateSample("sample_V: repeated degenerate draws");
}

inline OctVector sample_V(std::uint64_t seed) {
    Rng rng(seed);
    return sample_V(rng);
}

inline bool in_V(const OctVector& v, double tol = 1e-9) {
    if (v.size() != 2) return false;
    return std::abs(norm_sq(v[0]) - norm_sq(v[1])) <= tol &&
           std::abs(dot(v[0], v[1])) <= tol;
}

/// Swap the two components; V is closed under this map.
inline OctVector flip(const OctVector& v) {
    if (v.size() != 2) throw ShapeMismatch("flip: length 2 required");
    return OctVector{v[1], v[0]};
}

namespace detail {

/// Solves A v = v lambda (or lambda v) component-wise; the component
/// solutions must agree or the pair is rejected.
inline Octonion lambda_from_pair(const Hermitian2Params& h, const OctVector& v,
                                 Side side, double tol) {
    const OctVector av = matvec(h.to_matrix(), v);
    std::optional<Octonion> lambda;
    double best = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        const double n2 = norm_sq(v[i]);
        if (n2 <= tol * tol) continue;
        const Octonion li = side == Side::right ? (conj(v[i]) * av[i]) / n2
                                                : (av[i] * conj(v[i])) / n2;
        if (!lambda || n2 > best) {
            if (lambda && norm(*lambda - li) > 10.0 * tol)
                throw InvalidPair("component eigenvalue solutions disagree");
            lambda = li;
            best = n2;
        } else if (norm(*lambda - li) > 10.0 * tol) {
            throw InvalidPair("component eigenvalue solutions disagree");
        }
    }
    if (!lambda) throw InvalidPair("zero eigenvector");
    return *lambda;
}

}  // namespace detail

/**
 * Left eigenpair from an eigenvector in V: lambda = p - q (r y) conj(x) / |x|^2,
 * with the second defining equation used as a consistency check.
 */
inline EigenPair2 left_pair_from_V(const Hermitian2Params& h, const OctVector& v,
                                   const Tolerance& tol = {}) {
    const AMembership a = classify_in_A(h, tol.eps_solve);
    if (!a.in_A) throw NotInA("left_pair_from_V: matrix admits only real eigenvalues");
    if (!in_V(v, tol.eps_solve)) throw NotInV("left_pair_from_V: vector not in V");

    const Octonion& x = v[0];
    const Octonion& y = v[1];
    const Octonion lambda = Octonion(a.p) + (-(a.r_hat * y) * conj(x)) * (a.q / norm_sq(x));
    const Octonion lambda2 = Octonion(a.p) + ((a.r_hat * x) * conj(y)) * (a.q / norm_sq(y));
    if (norm(lambda - lambda2) > tol.eps_solve)
        throw NotInV("left_pair_from_V: defining equations disagree");

    EigenPair2 pair{v, lambda, Side::left, 0.0};
    pair.residual = verify_pair(h, pair);
    if (pair.residual > tol.eps_solve)
        throw InvalidPair("left_pair_from_V: residual exceeds tolerance");
    return pair;
}

/**
 * Right eigenpair for an admissible eigenvalue: lambda must satisfy
 * |lambda - p| = q, lambda . a = 0, and Im(lambda) != 0.  The eigenvector
 * frame is fixed deterministically: x is the first basis direction (in
 * basis order) orthogonal to the quaternionic span {1, a, Im(lambda),
 * a Im(lambda)}, and y follows from the defining equation.
 */
inline EigenPair2 right_pair_for_lambda(const Hermitian2Params& h,
                                        const Octonion& lambda,
                                        const Tolerance& tol = {}) {
    const AMembership am = classify_in_A(h, tol.eps_solve);
    if (!am.in_A) throw NotInA("right_pair_for_lambda: matrix not in A");

    const Octonion iml = im(lambda);
    const double imn = norm(iml);
    if (imn <= tol.eps_solve)
        throw InadmissibleLambda("right_pair_for_lambda: Im(lambda) = 0; use real_eigen2");
    if (std::abs(norm(lambda - Octonion(am.p)) - am.q) > tol.eps_solve)
        throw InadmissibleLambda("right_pair_for_lambda: |lambda - p| != q");
    if (std::abs(dot(iml, im(h.a))) > tol.eps_solve)
        throw InadmissibleLambda("right_pair_for_lambda: lambda . a != 0");

    // Orthonormal frame of the quaternionic subalgebra generated by a and lambda.
    const Octonion a_hat = am.r_hat;
    const Octonion l_hat = iml / imn;
    std::vector<Octonion> span = {Octonion(1.0), a_hat, l_hat, a_hat * l_hat};
    for (std::size_t s = 1; s < span.size(); ++s) {
        for (std::size_t t = 0; t < s; ++t)
            span[s] -= span[t] * dot(span[t], span[s]);
        span[s] = span[s] / norm(span[s]);
    }

    std::optional<Octonion> x;
    for (int q = 1; q < 8 && !x; ++q) {
        Octonion cand = Octonion::unit(q);
        for (const Octonion& s : span) cand -= s * dot(s, cand);
        const double n = norm(cand);
        if (n > 1e-6) x = cand / n;
    }
    if (!x) throw InadmissibleLambda("right_pair_for_lambda: no admissible frame");

    const Octonion y = (conj(h.a) * (*x * (lambda - Octonion(am.p)))) / (am.q * am.q);
    OctVector v{*x, y};
    v = v / std::sqrt(re(inner(v, v)));

    EigenPair2 pair{v, lambda, Side::right, 0.0};
    pair.residual = verify_pair(h, pair);
    if (pair.residual > tol.eps_solve)
        throw InvalidPair("right_pair_for_lambda: residual exceeds tolerance");
    return pair;
}

/// Residuals of the generalized characteristic equation, both symmetric forms.
struct Char2Residual {
    Octonion primary;    ///< lambda^2 - lambda tr + det - [conj(a),x,y](lambda-p)/|y|^2
    Octonion alternate;  ///< same with [a,y,x](lambda-m)/|x|^2
    double cross_check;  ///< norm of the difference between the two forms
};

inline Char2Residual char2_residual(const Hermitian2Params& h, const OctVector& v,
                                    const Octonion& lambda, double tol = 1e-12) {
    if (v.size() != 2) throw ShapeMismatch("char2_residual: length 2 required");
    const Octonion& x = v[0];
    const Octonion& y = v[1];
    if (norm_sq(y) <= tol * tol) throw ZeroComponent("char2_residual: y = 0");
    if (norm_sq(x) <= tol * tol) throw ZeroComponent("char2_residual: x = 0");

    const double tr = h.p + h.m;
    const double det = det2(h);
    const Octonion lhs = lambda * lambda - lambda * tr + Octonion(det);

    Char2Residual r;
    r.primary = lhs - (associator(conj(h.a), x, y) * (lambda - Octonion(h.p))) / norm_sq(y);
    r.alternate = lhs - (associator(h.a, y, x) * (lambda - Octonion(h.m))) / norm_sq(x);
    r.cross_check = norm(r.primary - r.alternate);
    return r;
}

/// Per-constraint residuals implied by the characteristic equation.
struct Char2Constraints {
    double char2a;        ///< (Re l)^2 - (Re l) tr + det + |Im l|^2
    double alt;           ///< || [conj(a),x,y]/(|x||y|) - 2 Im(lambda) ||
    double lambda_dot_a;
    double lambda_dot_x;
    double a_dot_x;
    double lambda_dot_y;
    double a_dot_y;
    double im_bound;      ///< max(0, |Im lambda| - |a|)
    double max_residual;
};

inline Char2Constraints char2_constraints(const Hermitian2Params& h,
                                          const OctVector& v, const Octonion& lambda) {
    if (v.size() != 2) throw ShapeMismatch("char2_constraints: length 2 required");
    const Octonion& x = v[0];
    const Octonion& y = v[1];
    const Octonion iml = im(lambda);

    Char2Constraints c{};
    c.char2a = std::abs(re(lambda) * re(lambda) - re(lambda) * (h.p + h.m) +
                        det2(h) + norm_sq(iml));
    const double nx = norm(x), ny = norm(y);
    c.alt = (nx > 0 && ny > 0)
                ? norm(associator(conj(h.a), x, y) / (nx * ny) - iml * 2.0)
                : 0.0;
    c.lambda_dot_a = std::abs(dot(lambda, h.a));
    c.lambda_dot_x = std::abs(dot(lambda, x));
    c.a_dot_x = std::abs(dot(h.a, x));
    c.lambda_dot_y = std::abs(dot(lambda, y));
    c.a_dot_y = std::abs(dot(h.a, y));
    c.im_bound = std::max(0.0, norm(iml) - norm(h.a));
    c.max_residual =
        std::max({c.char2a, c.alt, c.lambda_dot_a, c.lambda_dot_x, c.a_dot_x,
                  c.lambda_dot_y, c.a_dot_y, c.im_bound});
    return c;
}

/**
 * |det(Q Q^dagger)| for Q = A - lambda I, the Hermitian-square route to a
 * determinant for the non-Hermitian Q.  Vanishes iff |lambda - p|^2 = |a|^2
 * under the stated preconditions.
 */
inline double dieudonne_residual(const Hermitian2Params& h, const Octonion& lambda,
                                 const Tolerance& tol = {}) {
    const AMembership am = classify_in_A(h, tol.eps_solve);
    const bool lambda_real = norm(im(lambda)) <= tol.eps_solve;
    if (!am.in_A && !lambda_real)
        throw PreconditionViolated("dieudonne_residual: matrix not in A");
    if (std::abs(dot(im(lambda), im(h.a))) > tol.eps_solve)
        throw PreconditionViolated("dieudonne_residual: lambda . a != 0");

    OctMatrix q = h.to_matrix();
    q(0, 0) = q(0, 0) - lambda;
    q(1, 1) = q(1, 1) - lambda;
    const OctMatrix qq = matmul(q, dagger(q));
    const Hermitian2Params hq = Hermitian2Params::from_matrix(qq, 1e-9);
    return std::abs(det2(hq));
}

/// Residual report for the two non-real decomposition theorems.
struct DecomposeReport {
    Octonion lambda_w;
    double surprise;       ///< ||A - lambda_v (v v+) - lambda_w (w w+)||
    double surprise_ii;    ///< ||A - (v lambda_v) v+ - (w lambda_w) w+||
    double new_ortho;      ///< ||((v lambda_v) v+) w||
    double witness_norm;   ///< ||(lambda_v (v v+)) w||, nonzero off the quaternionic locus
};

namespace detail {

inline OctMatrix scalar_left_outer(const Octonion& lambda, const OctVector& v) {
    OctMatrix m = outer(v, v);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = lambda * m(i, j);
    return m;
}

inline OctMatrix right_scaled_outer(const OctVector& v, const Octonion& lambda) {
    return outer(vec_scale_right(v, lambda), v);
}

}  // namespace detail

/**
 * Both reconstruction theorems for a normalized right eigenpair of A in A:
 * A = lambda_v (v v+) + lambda_w (w w+) and A = (v lambda_v) v+ + (w lambda_w) w+,
 * with w the component swap of v.
 */
inline DecomposeReport decompose_right(const Hermitian2Params& h,
                                       const EigenPair2& pair,
                                       const Tolerance& tol = {}) {
    if (pair.side != Side::right)
        throw InvalidPair("decompose_right: right-side pair required");
    const AMembership am = classify_in_A(h, tol.eps_solve);
    if (!am.in_A) throw NotInA("decompose_right: matrix not in A");
    if (std::abs(re(inner(pair.v, pair.v)) - 1.0) > tol.eps_solve)
        throw InvalidPair("decompose_right: eigenvector not normalized");
    if (verify_pair(h, pair) > tol.eps_solve)
        throw InvalidPair("decompose_right: pair fails verification");

    const OctVector w = flip(pair.v);
    const Octonion lambda_w = detail::lambda_from_pair(h, w, Side::right, tol.eps_solve);
    EigenPair2 wp{w, lambda_w, Side::right, 0.0};
    if (verify_pair(h, wp) > tol.eps_solve)
        throw InvalidPair("decompose_right: flipped vector is not an eigenvector");

    const OctMatrix a = h.to_matrix();
    DecomposeReport r{};
    r.lambda_w = lambda_w;
    r.surprise = frobenius_norm(a - detail::scalar_left_outer(pair.lambda, pair.v) -
                                detail::scalar_left_outer(lambda_w, w));
    r.surprise_ii = frobenius_norm(a - detail::right_scaled_outer(pair.v, pair.lambda) -
                                   detail::right_scaled_outer(w, lambda_w));
    r.new_ortho = vector_norm(matvec(detail::right_scaled_outer(pair.v, pair.lambda), w));
    r.witness_norm =
        vector_norm(matvec(detail::scalar_left_outer(pair.lambda, pair.v), w));
    return r;
}

/// Reconstruction residual of A = lambda_v v v+ + lambda_w w w+ in the
/// quaternionic (associative) case; fails when the associator obstruction
/// [r, x, y] is present.
struct LeftDecomposeReport {
    Octonion lambda_w;
    double reconstruction;
};

inline LeftDecomposeReport decompose_left_quaternionic(const Hermitian2Params& h,
                                                       const EigenPair2& pair,
                                                       const Tolerance& tol = {}) {
    if (pair.side != Side::left)
        throw InvalidPair("decompose_left_quaternionic: left-side pair required");
    const AMembership am = classify_in_A(h, tol.eps_solve);
    if (!am.in_A) throw NotInA("decompose_left_quaternionic: matrix not in A");
    if (verify_pair(h, pair) > tol.eps_solve)
        throw InvalidPair("decompose_left_quaternionic: pair fails verification");
    const Octonion& x = pair.v[0];
    const Octonion& y = pair.v[1];
    if (norm(associator(am.r_hat, x, y)) > tol.eps_solve)
        throw NotQuaternionic("decompose_left_quaternionic: associator obstruction");

    const Octonion lambda_w =
        Octonion(am.p) + (-(am.r_hat * x) * conj(y)) * (am.q / norm_sq(y));
    const OctVector w = flip(pair.v);
    const double n2 = re(inner(pair.v, pair.v));

    LeftDecomposeReport r{};
    r.lambda_w = lambda_w;
    r.reconstruction =
        frobenius_norm(h.to_matrix() -
                       detail::scalar_left_outer(pair.lambda / n2, pair.v) -
                       detail::scalar_left_outer(lambda_w / n2, w));
    return r;
}

/**
 * Real eigendecomposition: roots of lambda^2 - tr lambda + det with
 * eigenvectors in the complex subalgebra spanned by {1, a}.  Works for any
 * Hermitian 2x2, including a = 0.
 */
inline std::vector<EigenPair2> real_eigen2(const Hermitian2Params& h,
                                           const Tolerance& tol = {}) {
    std::vector<EigenPair2> out;
    if (norm(h.a) <= tol.eps_identity) {
        out.push_back({OctVector{Octonion(1.0), Octonion(0.0)}, Octonion(h.p),
                       Side::right, 0.0});
        out.push_back({OctVector{Octonion(0.0), Octonion(1.0)}, Octonion(h.m),
                       Side::right, 0.0});
    } else {
        const double tr = h.p + h.m;
        const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det2(h)));
        const double lp = 0.5 * (tr + disc);
        const double lm = 0.5 * (tr - disc);

        OctVector vp{h.a, Octonion(lp - h.p)};
        vp = vp / std::sqrt(re(inner(vp, vp)));
        OctVector vm{Octonion(lm - h.m), conj(h.a)};
        vm = vm / std::sqrt(re(inner(vm, vm)));
        out.push_back({vp, Octonion(lp), Side::right, 0.0});
        out.push_back({vm, Octonion(lm), Side::right, 0.0});
    }
    for (EigenPair2& p : out) {
        p.residual = verify_pair(h, p);
        if (p.residual > tol.eps_solve)
            throw InvalidPair("real_eigen2: residual exceeds tolerance");
    }
    return out;
}

/// Residuals of the matrix form of the eigenvalue problem, U columns = v, w.
struct MatrixFormReport {
    double unitary;         ///< ||U U+ - I||
    double eigen_relation;  ///< ||A U - U D||
    double reconstruction;  ///< ||A - (U D) U+||
    double associativity;   ///< ||(A U) U+ - A (U U+)||
};

inline MatrixFormReport matrix_form_check(const Hermitian2Params& h,
                                          const EigenPair2& first,
                                          const EigenPair2& second) {
    if (first.v.size() != 2 || second.v.size() != 2)
        throw ShapeMismatch("matrix_form_check: length 2 vectors required");
    if (first.side != Side::right || second.side != Side::right)
        throw InvalidPair("matrix_form_check: right-side pairs required");

    OctMatrix u(2, 2);
    for (std::size_t i = 0; i < 2; ++i) {
        u(i, 0) = first.v[i];
        u(i, 1) = second.v[i];
    }
    OctMatrix d(2, 2);
    d(0, 0) = first.lambda;
    d(1, 1) = second.lambda;

    const OctMatrix a = h.to_matrix();
    const OctMatrix udag = dagger(u);
    MatrixFormReport r{};
    r.unitary = frobenius_norm(matmul(u, udag) - OctMatrix::identity(2));
    r.eigen_relation = frobenius_norm(matmul(a, u) - matmul(u, d));
    r.reconstruction = frobenius_norm(a - matmul(matmul(u, d), udag));
    r.associativity = frobenius_norm(matmul(matmul(a, u), udag) -
                                     matmul(a, matmul(u, udag)));
    return r;
}

}  // namespace octo
