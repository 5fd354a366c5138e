#pragma once
/**
 * @file spin.hpp
 * @brief Self-adjoint spin operators on octonionic 2-spinors.
 *
 * The generators r_alpha are the Pauli matrices times l/2 (l plays the
 * role of the complex unit); the operators act as L_alpha psi =
 * -(r_alpha psi) l, evaluated component-wise in exactly that order.
 */

#include <cmath>
#include <stdexcept>

#include "octo/matrix.hpp"
#include "octo/octonion.hpp"

namespace octo {
namespace spin {

enum class Axis { x, y, z };

inline const OctMatrix& generator(Axis axis) {
    using namespace units;
    static const OctMatrix rx(2, 2, {Octonion(0.0), l * 0.5, l * 0.5, Octonion(0.0)});
    static const OctMatrix ry(2, 2, {Octonion(0.0), Octonion(0.5), Octonion(-0.5),
                                     Octonion(0.0)});
    static const OctMatrix rz(2, 2, {l * 0.5, Octonion(0.0), Octonion(0.0), l * -0.5});
    switch (axis) {
        case Axis::x: return rx;
        case Axis::y: return ry;
        default: return rz;
    }
}

/// Spin-up and spin-down rest states.
inline OctVector psi_plus() { return OctVector{Octonion(1.0), units::k}; }
inline OctVector psi_minus() { return OctVector{-units::k, Octonion(1.0)}; }

/// L_alpha psi = -(r_alpha psi) l.
inline OctVector apply_L(Axis axis, const OctVector& psi) {
    OctVector u = matvec(generator(axis), psi);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = -(u[i] * units::l);
    return u;
}

/// pi(q) = (q + l q conj(l)) / 2; projects onto the complex span {1, l}.
inline Octonion pi_project(const Octonion& q) {
    return (q + (units::l * q) * conj(units::l)) * 0.5;
}

/// <psi, chi> = pi(psi^dagger chi), valued in the span {1, l}.
inline Octonion spin_inner(const OctVector& psi, const OctVector& chi) {
    return pi_project(inner(psi, chi));
}

/// Psi+ e^{l theta}: the phase family of simultaneous eigenstates.
inline OctVector phase_state(double theta) {
    return vec_scale_right(psi_plus(), unit_complex(units::l, theta));
}

/**
 * Extracts lambda with psi lambda = L_alpha psi, solving component-wise and
 * requiring the component solutions to agree.  Throws if psi is not an
 * eigenstate.
 */
inline Octonion eigenvalue_on(Axis axis, const OctVector& psi, double tol = 1e-12) {
    const OctVector u = apply_L(axis, psi);
    bool found = false;
    Octonion lambda;
    double best = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        const double n2 = norm_sq(psi[i]);
        if (n2 <= tol) continue;
        const Octonion li = (conj(psi[i]) * u[i]) / n2;
        if (found && norm(li - lambda) > 100.0 * tol)
            throw std::runtime_error("eigenvalue_on: not a simultaneous eigenstate");
        if (!found || n2 > best) {
            lambda = li;
            best = n2;
        }
        found = true;
    }
    if (!found) throw std::runtime_error("eigenvalue_on: zero state");
    const double res = vector_norm(u - vec_scale_right(psi, lambda));
    if (res > 100.0 * tol)
        throw std::runtime_error("eigenvalue_on: residual exceeds tolerance");
    return lambda;
}

}  // namespace spin
}  // namespace octo
