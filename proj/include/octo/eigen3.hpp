#pragma once
/**
 * @file eigen3.hpp
 * @brief 3x3 octonionic Hermitian apparatus: the generalized third-order
 *        characteristic equation as a residual oracle, the Rayleigh route
 *        to the eigenvalue, the Re/Im component formulas, and a
 *        multi-start damped Gauss-Newton eigenpair search.
 */

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "octo/eigen2.hpp"
#include "octo/matrix.hpp"
#include "octo/octonion.hpp"
#include "octo/random.hpp"

namespace octo {

struct NotNormalized : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EigenPair3 {
    OctVector v;  ///< length 3, normalized
    Octonion lambda;
    double residual = 0.0;
};

struct SearchConfig {
    int restarts = 16;
    int max_iterations = 200;
    double tol = 1e-9;
    std::uint64_t seed = 42;
    bool constrain_imaginary = false;  ///< keep |Im lambda| away from 0
    double im_floor = 0.3;

    void validate() const {
        if (restarts < 1) throw std::invalid_argument("SearchConfig: restarts >= 1");
        if (!(tol > 0.0)) throw std::invalid_argument("SearchConfig: tol > 0");
    }
};

/// Cyclic relabeling (rows/cols 1->2->3->1): (p,m,n,a,b,c) -> (m,n,p,c,a,b).
inline Hermitian3Params cycle(const Hermitian3Params& h) {
    return {h.m, h.n, h.p, h.c, h.a, h.b};
}

inline OctVector cycle(const OctVector& v) {
    if (v.size() != 3) throw ShapeMismatch("cycle: length 3 required");
    return OctVector{v[1], v[2], v[0]};
}

namespace detail {

inline Octonion scalar_assoc(const Octonion& a, const Octonion& b, const Octonion& c) {
    return associator(a, b, c);
}

}  // namespace detail

/**
 * Residual of the generalized characteristic equation with z as the pivot
 * component.  Every product is evaluated in the printed order.
 */
inline Octonion char3_residual(const Hermitian3Params& h, const OctVector& v,
                               const Octonion& lambda, double tol = 1e-9) {
    if (v.size() != 3) throw ShapeMismatch("char3_residual: length 3 required");
    const Octonion& x = v[0];
    const Octonion& y = v[1];
    const Octonion& z = v[2];
    if (norm(z) <= tol) throw ZeroComponent("char3_residual: z = 0");

    const Invariants3 inv = invariants3(h);
    const Octonion l2 = lambda * lambda;
    const Octonion poly = l2 * lambda - l2 * inv.tr + lambda * inv.sigma -
                          Octonion(inv.det);
    const Octonion lhs = z * poly;

    const Octonion a = h.a, b = h.b, c = h.c;
    const Octonion cb = conj(c), ab = conj(a), bb = conj(b);
    Octonion rhs = b * (a * (c * z)) + cb * (ab * (bb * z)) -
                   (b * (a * c) + (cb * ab) * bb) * z;
    rhs += b * associator(a, y, lambda) + associator(b, a * y, lambda) +
           associator(b, x, lambda) * (lambda - Octonion(h.m));
    rhs += cb * associator(ab, x, lambda) + associator(cb, ab * x, lambda) +
           associator(cb, y, lambda) * (lambda - Octonion(h.p));
    return lhs - rhs;
}

/// Pivoted evaluation: relabels cyclically so the largest-norm component
/// takes the z slot.
struct Char3Result {
    Octonion residual;
    int pivot;  ///< 0 = z, 1 = x in the z slot after one cycle, 2 = y
};

inline Char3Result char3_residual_auto(const Hermitian3Params& h, const OctVector& v,
                                       const Octonion& lambda) {
    Hermitian3Params hh = h;
    OctVector vv = v;
    int best = 0;
    double best_norm = norm(v[2]);
    Hermitian3Params bh = h;
    OctVector bv = v;
    for (int s = 1; s < 3; ++s) {
        hh = cycle(hh);
        vv = cycle(vv);
        const double n = norm(vv[2]);
        if (n > best_norm) {
            best_norm = n;
            best = s;
            bh = hh;
            bv = vv;
        }
    }
    if (best_norm <= 1e-12)
        throw ZeroComponent("char3_residual_auto: zero vector");
    return {char3_residual(bh, bv, lambda, 1e-13), best};
}

/// v+ (A v) for normalized v; equals lambda on right eigenpairs.
inline Octonion rayleigh3(const Hermitian3Params& h, const OctVector& v,
                          double tol = 1e-9) {
    if (v.size() != 3) throw ShapeMismatch("rayleigh3: length 3 required");
    if (std::abs(re(inner(v, v)) - 1.0) > tol)
        throw NotNormalized("rayleigh3: v must be normalized");
    return inner(v, matvec(h.to_matrix(), v));
}

struct ReLambda {
    double value;                       ///< variant with the largest pivot norm
    double max_deviation;               ///< max pairwise gap among evaluated variants
    std::array<bool, 3> evaluated;      ///< which cyclic variants had |pivot| > eps
};

/// Re(lambda) = (x.(ay) + z.(bx) + p|x|^2) / |x|^2, plus cyclic variants.
inline ReLambda re_lambda(const Hermitian3Params& h, const OctVector& v,
                          double eps = 1e-9) {
    if (v.size() != 3) throw ShapeMismatch("re_lambda: length 3 required");
    ReLambda out{0.0, 0.0, {false, false, false}};
    std::array<double, 3> vals{};
    std::array<double, 3> pivots{};
    Hermitian3Params hh = h;
    OctVector vv = v;
    for (int s = 0; s < 3; ++s) {
        const Octonion& x = vv[0];
        const Octonion& y = vv[1];
        const Octonion& z = vv[2];
        pivots[s] = norm(x);
        if (pivots[s] > eps) {
            vals[s] = (dot(x, hh.a * y) + dot(z, hh.b * x) + hh.p * norm_sq(x)) /
                      norm_sq(x);
            out.evaluated[s] = true;
        }
        hh = cycle(hh);
        vv = cycle(vv);
    }
    int best = -1;
    for (int s = 0; s < 3; ++s) {
        if (!out.evaluated[s]) continue;
        if (best < 0 || pivots[s] > pivots[best]) best = s;
        for (int t = 0; t < s; ++t)
            if (out.evaluated[t])
                out.max_deviation = std::max(out.max_deviation,
                                             std::abs(vals[s] - vals[t]));
    }
    if (best < 0) throw ZeroComponent("re_lambda: all pivots vanish");
    out.value = vals[best];
    return out;
}

/// Im(lambda) = [x,a,y] + [z,b,x] + [y,c,z].
inline Octonion im_lambda(const Hermitian3Params& h, const OctVector& v) {
    if (v.size() != 3) throw ShapeMismatch("im_lambda: length 3 required");
    return associator(v[0], h.a, v[1]) + associator(v[2], h.b, v[0]) +
           associator(v[1], h.c, v[2]);
}

enum class Block { b12, b23, b13 };

/// Places a 2x2 Hermitian block in the chosen principal block of a 3x3 form.
inline Hermitian3Params embed2(const Hermitian2Params& h2, double n, Block block) {
    switch (block) {
        case Block::b12:
            return {h2.p, h2.m, n, h2.a, Octonion(), Octonion()};
        case Block::b23:
            return {n, h2.p, h2.m, Octonion(), Octonion(), h2.a};
        default:  // entry (1,3) is conj(b), so b = conj(a2)
            return {h2.p, n, h2.m, Octonion(), conj(h2.a), Octonion()};
    }
}

/// Zero-pads a 2-vector into the slots of the chosen block.
inline OctVector lift2(const OctVector& v2, Block block) {
    if (v2.size() != 2) throw ShapeMismatch("lift2: length 2 required");
    switch (block) {
        case Block::b12: return OctVector{v2[0], v2[1], Octonion()};
        case Block::b23: return OctVector{Octonion(), v2[0], v2[1]};
        default: return OctVector{v2[0], Octonion(), v2[1]};
    }
}

// ---------------------------------------------------------------------------
// Eigenpair search: damped Gauss-Newton on ||A v - v lambda||^2 over the
// 8n vector coordinates and 8 eigenvalue coordinates, with v renormalized
// each iteration.  The residual is polynomial in the coordinates, so the
// Jacobian assembles exactly from the multiplication table.
// ---------------------------------------------------------------------------

namespace search_detail {

inline OctVector residual_vec(const OctMatrix& a, const OctVector& v,
                              const Octonion& lambda) {
    return matvec(a, v) - vec_scale_right(v, lambda);
}

inline double objective(const OctMatrix& a, const OctVector& v,
                        const Octonion& lambda) {
    const OctVector r = residual_vec(a, v, lambda);
    return vector_norm(r) * vector_norm(r);
}

/// Jacobian of the stacked real residual w.r.t. (v coords, lambda coords).
inline Eigen::MatrixXd jacobian(const OctMatrix& a, const OctVector& v,
                                const Octonion& lambda) {
    const std::size_t n = v.size();
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(8 * n, 8 * n + 8);
    for (std::size_t i = 0; i < n; ++i) {
        for (int q = 0; q < 8; ++q) {
            const Octonion eq = Octonion::unit(q);
            // d r_row / d v_{i,q} = A(row,i) e_q - delta_{row,i} e_q lambda
            for (std::size_t row = 0; row < n; ++row) {
                Octonion d = a(row, i) * eq;
                if (row == i) d -= eq * lambda;
                for (int p = 0; p < 8; ++p) jac(8 * row + p, 8 * i + q) = d[p];
            }
        }
    }
    for (int q = 0; q < 8; ++q) {
        const Octonion eq = Octonion::unit(q);
        for (std::size_t row = 0; row < n; ++row) {
            const Octonion d = -(v[row] * eq);
            for (int p = 0; p < 8; ++p) jac(8 * row + p, 8 * n + q) = d[p];
        }
    }
    return jac;
}

inline Eigen::VectorXd stack(const OctVector& r) {
    Eigen::VectorXd out(8 * r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        for (int q = 0; q < 8; ++q) out(8 * i + q) = r[i][q];
    return out;
}

inline void normalize(OctVector& v) {
    const double n = vector_norm(v);
    if (n > 0.0)
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] / n;
}

inline void project_lambda(Octonion& lambda, double floor, const Octonion& fallback) {
    const Octonion iml = im(lambda);
    const double n = norm(iml);
    if (n >= floor) return;
    const Octonion dir = n > 1e-12 ? iml / n : fallback;
    lambda = Octonion(re(lambda)) + dir * floor;
}

}  // namespace search_detail

/// Analytic gradient of ||A v - v lambda||^2 in the 8n + 8 coordinates
/// (vector coordinates first, eigenvalue coordinates last).
inline std::vector<double> eigensearch_gradient(const Hermitian3Params& h,
                                                const OctVector& v,
                                                const Octonion& lambda) {
    const OctMatrix a = h.to_matrix();
    const Eigen::MatrixXd jac = search_detail::jacobian(a, v, lambda);
    const Eigen::VectorXd r = search_detail::stack(search_detail::residual_vec(a, v, lambda));
    const Eigen::VectorXd g = 2.0 * jac.transpose() * r;
    return std::vector<double>(g.data(), g.data() + g.size());
}

inline double eigensearch_objective(const Hermitian3Params& h, const OctVector& v,
                                    const Octonion& lambda) {
    return search_detail::objective(h.to_matrix(), v, lambda);
}

struct SearchResult {
    std::vector<EigenPair3> pairs;
    int converged_restarts = 0;
    double best_residual = std::numeric_limits<double>::infinity();
    std::string diagnostics;
};

/**
 * Multi-start Levenberg-Marquardt minimization of the eigenpair residual.
 * Every returned pair carries three independent certificates: the defining
 * residual, the characteristic-equation residual, and agreement with the
 * Rayleigh route.  Distinct minima are deduplicated by eigenvalue and
 * eigenvector-overlap proximity and sorted by (Re lambda, |Im lambda|).
 */
inline SearchResult eigensearch(const Hermitian3Params& h, const SearchConfig& cfg) {
    cfg.validate();
    const OctMatrix a = h.to_matrix();
    SearchResult result;

    for (int restart = 0; restart < cfg.restarts; ++restart) {
        Rng rng(cfg.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(restart));
        OctVector v = random_vector(rng, 3);
        // Skew the component weights so the Rayleigh initialization spreads
        // across the spectrum instead of clustering at the trace mean.
        std::uniform_real_distribution<double> skew(-2.0, 0.0);
        for (std::size_t i = 0; i < 3; ++i) v[i] = v[i] * std::pow(10.0, skew(rng));
        search_detail::normalize(v);
        const Octonion im_fallback = random_unit_imaginary(rng);
        Octonion lambda = inner(v, matvec(a, v));
        if (cfg.constrain_imaginary)
            search_detail::project_lambda(lambda, cfg.im_floor, im_fallback);

        double f = search_detail::objective(a, v, lambda);
        double mu = 1e-3;
        for (int iter = 0; iter < cfg.max_iterations; ++iter) {
            if (f <= 0.01 * cfg.tol * cfg.tol) break;
            const Eigen::MatrixXd jac = search_detail::jacobian(a, v, lambda);
            const Eigen::VectorXd r =
                search_detail::stack(search_detail::residual_vec(a, v, lambda));
            const Eigen::MatrixXd jtj = jac.transpose() * jac;
            const Eigen::VectorXd jtr = jac.transpose() * r;

            bool accepted = false;
            for (int attempt = 0; attempt < 25 && !accepted; ++attempt) {
                Eigen::MatrixXd lhs = jtj;
                lhs.diagonal().array() += mu;
                const Eigen::VectorXd delta = lhs.ldlt().solve(-jtr);

                OctVector vt = v;
                for (std::size_t i = 0; i < 3; ++i)
                    for (int q = 0; q < 8; ++q) vt[i][q] += delta(8 * i + q);
                search_detail::normalize(vt);
                Octonion lt = lambda;
                for (int q = 0; q < 8; ++q) lt[q] += delta(24 + q);
                if (cfg.constrain_imaginary)
                    search_detail::project_lambda(lt, cfg.im_floor, im_fallback);

                const double ft = search_detail::objective(a, vt, lt);
                if (ft < f) {
                    v = vt;
                    lambda = lt;
                    f = ft;
                    mu = std::max(mu / 3.0, 1e-14);
                    accepted = true;
                } else {
                    mu *= 4.0;
                }
            }
            if (!accepted) break;
        }

        const double res = std::sqrt(f);
        result.best_residual = std::min(result.best_residual, res);
        if (res > cfg.tol) continue;

        // Certificates beyond the defining residual.
        try {
            const Char3Result c3 = char3_residual_auto(h, v, lambda);
            if (norm(c3.residual) > 10.0 * cfg.tol) continue;
            const Octonion ray = rayleigh3(h, v, 10.0 * cfg.tol);
            if (norm(ray - lambda) > 10.0 * cfg.tol) continue;
        } catch (const std::exception&) {
            continue;
        }
        ++result.converged_restarts;

        bool duplicate = false;
        for (const EigenPair3& known : result.pairs) {
            if (norm(known.lambda - lambda) <= 1e-6 &&
                std::abs(norm(inner(known.v, v)) - 1.0) <= 1e-6) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) result.pairs.push_back({v, lambda, res});
    }

    std::sort(result.pairs.begin(), result.pairs.end(),
              [](const EigenPair3& lhs, const EigenPair3& rhs) {
                  const double rl = re(lhs.lambda), rr = re(rhs.lambda);
                  if (rl != rr) return rl < rr;
                  return norm(im(lhs.lambda)) < norm(im(rhs.lambda));
              });
    if (result.pairs.empty())
        result.diagnostics = "no restart converged below tol; best residual " +
                             std::to_string(result.best_residual);
    return result;
}

}  // namespace octo
