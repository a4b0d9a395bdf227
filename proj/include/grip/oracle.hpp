#pragma once

// Finite-difference Euler-Lagrange evaluation. Deliberately built on the
// energy functions alone (this header must not include dynamics.hpp), so it
// can serve as an independent referee for the closed-form torques.

#include <cmath>
#include <vector>

#include "grip/energy.hpp"
#include "grip/model.hpp"

namespace grip {

inline double lagrangian(const LinkChain& chain, const JointState& state, double g) {
    return kinetic_energy(chain, state.theta, state.theta_dot) -
           potential_energy(chain, state.theta, g);
}

// Angle-direction step for the central differences below. The default is the
// sweet spot for second differences of desk-scale energies in doubles;
// truncation scales as h^2 above it, round-off as 1/h^2 below it.
inline constexpr double kOracleAngleStep = 1e-4;

// Rate-direction step. Kinetic energy is exactly quadratic in the joint
// rates, so differences in that direction have no truncation error at all and
// a wide step just buries round-off.
inline constexpr double kOracleRateStep = 0.5;

// tau_i = d/dt(dL/dthdot_i) - dL/dth_i, expanded by the chain rule through
// (theta, theta_dot) with the supplied rates and accelerations:
//   tau_i = sum_j d2L/dthdot_i dthdot_j * thddot_j
//         + sum_j d2L/dth_j dthdot_i  * thdot_j
//         - dL/dth_i
// every derivative taken by central differences of the Lagrangian.
inline std::vector<double> euler_lagrange_fd(const LinkChain& chain, const JointState& state,
                                             double g, double h = kOracleAngleStep) {
    check_full_state(chain, state);
    if (!(h > 0.0))
        throw std::invalid_argument("euler_lagrange_fd: h must be > 0");
    const std::size_t n = chain.n_links();
    const double hv = kOracleRateStep;

    std::vector<double> th = state.theta;
    std::vector<double> om = state.theta_dot;
    auto L = [&]() { return kinetic_energy(chain, th, om) - potential_energy(chain, th, g); };

    const double l0 = L();
    std::vector<double> tau(n, 0.0);

    for (std::size_t i = 0; i < n; ++i) {
        // inertia row: d2L/dthdot_i dthdot_j
        for (std::size_t j = 0; j < n; ++j) {
            double a;
            if (i == j) {
                om[i] += hv;
                const double lp = L();
                om[i] -= 2.0 * hv;
                const double lm = L();
                om[i] += hv;
                a = (lp - 2.0 * l0 + lm) / (hv * hv);
            } else {
                om[i] += hv; om[j] += hv;
                const double lpp = L();
                om[j] -= 2.0 * hv;
                const double lpm = L();
                om[i] -= 2.0 * hv;
                const double lmm = L();
                om[j] += 2.0 * hv;
                const double lmp = L();
                om[i] += hv; om[j] -= hv;
                a = (lpp - lpm - lmp + lmm) / (4.0 * hv * hv);
            }
            tau[i] += a * state.theta_ddot[j];
        }

        // mixed row: d2L/dth_j dthdot_i
        for (std::size_t j = 0; j < n; ++j) {
            th[j] += h; om[i] += hv;
            const double lpp = L();
            om[i] -= 2.0 * hv;
            const double lpm = L();
            th[j] -= 2.0 * h;
            const double lmm = L();
            om[i] += 2.0 * hv;
            const double lmp = L();
            th[j] += h; om[i] -= hv;
            const double b = (lpp - lpm - lmp + lmm) / (4.0 * h * hv);
            tau[i] += b * state.theta_dot[j];
        }

        // configuration gradient: dL/dth_i
        th[i] += h;
        const double lp = L();
        th[i] -= 2.0 * h;
        const double lm = L();
        th[i] += h;
        tau[i] -= (lp - lm) / (2.0 * h);
    }
    return tau;
}

}  // namespace grip
