#pragma once

// Kinetic and potential energy of the planar chain, written directly from the
// COM kinematics. The closed-form equations of motion in dynamics.hpp are
// derived from these expressions; the finite-difference oracle in oracle.hpp
// differentiates them numerically. Keeping this file free of any equation-of-
// motion code is what makes that cross-check meaningful.

#include <cmath>
#include <vector>

#include "grip/model.hpp"

namespace grip {

// K = sum_i 1/2 m_i |v_ci|^2 + 1/2 I_i thdot_i^2 where the COM velocity of
// link i is v_ci = sum_{j<i} L_j thdot_j t(th_j) + d_i thdot_i t(th_i),
// t(th) = (-sin th, cos th).
inline double kinetic_energy(const LinkChain& chain, const std::vector<double>& theta,
                             const std::vector<double>& theta_dot) {
    check_dim("theta", theta.size(), chain.n_links());
    check_dim("theta_dot", theta_dot.size(), chain.n_links());

    double k = 0.0;
    double jvx = 0.0, jvy = 0.0;  // velocity of joint i (base of link i)
    for (std::size_t i = 0; i < chain.n_links(); ++i) {
        const double s = std::sin(theta[i]);
        const double c = std::cos(theta[i]);
        const double w = theta_dot[i];
        const double vx = jvx - chain.com_offsets[i] * w * s;
        const double vy = jvy + chain.com_offsets[i] * w * c;
        k += 0.5 * chain.masses[i] * (vx * vx + vy * vy) +
             0.5 * chain.inertias[i] * w * w;
        jvx -= chain.lengths[i] * w * s;
        jvy += chain.lengths[i] * w * c;
    }
    return k;
}

inline double kinetic_energy(const LinkChain& chain, const JointState& state) {
    return kinetic_energy(chain, state.theta, state.theta_dot);
}

// P = g sum_i m_i h_i with h_i the COM height; datum at y = 0, gravity along -y.
inline double potential_energy(const LinkChain& chain, const std::vector<double>& theta,
                               double g) {
    check_dim("theta", theta.size(), chain.n_links());

    double p = 0.0;
    double base_y = 0.0;  // height of joint i
    for (std::size_t i = 0; i < chain.n_links(); ++i) {
        const double s = std::sin(theta[i]);
        p += chain.masses[i] * g * (base_y + chain.com_offsets[i] * s);
        base_y += chain.lengths[i] * s;
    }
    return p;
}

}  // namespace grip
