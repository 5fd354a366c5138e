#pragma once
/**
 * @file identities.hpp
 * @brief Vector associators and the commuting 3-Psi's rule.
 *
 * [U,V,W] := (U V+) W - U (V+ W) for octonionic column vectors; the
 * alternativity-driven identity family ([W,V,V] = 0, its polarizations,
 * and the six-term sum) makes the spinor identity tilde(VV+)V = 0
 * executable in both unpolarized and polarized form.
 */

#include "octo/matrix.hpp"
#include "octo/octonion.hpp"

namespace octo {

/// [U,V,W] = (U V+) W - U (V+ W).
inline OctVector vector_associator(const OctVector& u, const OctVector& v,
                                   const OctVector& w) {
    if (u.size() != v.size() || v.size() != w.size())
        throw ShapeMismatch("vector_associator: equal lengths required");
    return matvec(outer(u, v), w) - vec_scale_right(u, inner(v, w));
}

/// [lambda,V,W] = (lambda V+) W - lambda (V+ W).
inline Octonion scalar_vector_associator(const Octonion& lambda, const OctVector& v,
                                         const OctVector& w) {
    if (v.size() != w.size())
        throw ShapeMismatch("scalar_vector_associator: equal lengths required");
    Octonion row;
    for (std::size_t i = 0; i < v.size(); ++i) row += (lambda * conj(v[i])) * w[i];
    return row - lambda * inner(v, w);
}

/// tilde(VV+) V, which equals [V,V,V] and vanishes identically.
inline OctVector three_psis_residual(const OctVector& v) {
    if (v.size() != 2) throw ShapeMismatch("three_psis_residual: length 2 required");
    return matvec(tilde(outer(v, v)), v);
}

namespace detail {

inline OctVector polarized_term(const OctVector& u, const OctVector& v,
                                const OctVector& w) {
    return matvec(tilde(outer(u, v)) + tilde(outer(v, u)), w);
}

}  // namespace detail

/// The polarized 3-Psi's rule: (tilde(UV+)+tilde(VU+))W + cyclic; vanishes.
inline OctVector three_psis_polarized_residual(const OctVector& u, const OctVector& v,
                                               const OctVector& w) {
    if (u.size() != 2 || v.size() != 2 || w.size() != 2)
        throw ShapeMismatch("three_psis_polarized_residual: length 2 required");
    return detail::polarized_term(u, v, w) + detail::polarized_term(v, w, u) +
           detail::polarized_term(w, u, v);
}

/// Six-term fully symmetrized vector-associator sum; vanishes identically.
inline OctVector six_term_sum(const OctVector& u, const OctVector& v,
                              const OctVector& w) {
    return vector_associator(u, v, w) + vector_associator(u, w, v) +
           vector_associator(v, w, u) + vector_associator(v, u, w) +
           vector_associator(w, u, v) + vector_associator(w, v, u);
}

}  // namespace octo
