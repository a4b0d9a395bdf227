#pragma once

// Closed-form Lagrangian dynamics of the chain in absolute angles, plus a
// fixed-step RK4 integrator. With sig_j = sum of masses distal to link j and
// gam_j = m_j d_j + sig_j L_j, working out d/dt(dL/dthdot) - dL/dth from the
// energies in energy.hpp gives
//
//   M_jj = I_j + m_j d_j^2 + sig_j L_j^2
//   M_jk = gam_max(j,k) L_min(j,k) cos(th_j - th_k)         (j != k)
//   c_i  = sum_{j != i} gam_max(i,j) L_min(i,j) sin(th_i - th_j) thdot_j^2
//   G_i  = gam_i g cos th_i
//
// The velocity terms collapse to pure thdot_j^2 products; that is a property
// of the absolute-angle coordinates. oracle.hpp re-derives all of this
// numerically from the energies alone and never sees these formulas.

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "grip/energy.hpp"
#include "grip/model.hpp"

namespace grip {

struct EomTerms {
    Eigen::MatrixXd mass_matrix;   // n x n, kg m^2
    Eigen::VectorXd coriolis;      // N m
    Eigen::VectorXd gravity;       // N m
};

inline EomTerms eom_terms(const LinkChain& chain, const std::vector<double>& theta,
                          const std::vector<double>& theta_dot, double g) {
    check_dim("theta", theta.size(), chain.n_links());
    check_dim("theta_dot", theta_dot.size(), chain.n_links());
    const auto n = static_cast<Eigen::Index>(chain.n_links());

    std::vector<double> sig(n), gam(n);
    double distal = 0.0;
    for (Eigen::Index j = n; j-- > 0;) {
        sig[j] = distal;
        gam[j] = chain.masses[j] * chain.com_offsets[j] + distal * chain.lengths[j];
        distal += chain.masses[j];
    }

    EomTerms out;
    out.mass_matrix.resize(n, n);
    out.coriolis = Eigen::VectorXd::Zero(n);
    out.gravity.resize(n);

    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            if (r == c) {
                out.mass_matrix(r, r) = chain.inertias[r] +
                                        chain.masses[r] * chain.com_offsets[r] *
                                            chain.com_offsets[r] +
                                        sig[r] * chain.lengths[r] * chain.lengths[r];
            } else {
                const Eigen::Index lo = std::min(r, c), hi = std::max(r, c);
                out.mass_matrix(r, c) =
                    gam[hi] * chain.lengths[lo] * std::cos(theta[r] - theta[c]);
            }
        }
    }

    for (Eigen::Index i = 0; i < n; ++i) {
        double ci = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j == i) continue;
            const Eigen::Index lo = std::min(i, j), hi = std::max(i, j);
            ci += gam[hi] * chain.lengths[lo] * std::sin(theta[i] - theta[j]) *
                  theta_dot[j] * theta_dot[j];
        }
        out.coriolis(i) = ci;
        out.gravity(i) = gam[i] * g * std::cos(theta[i]);
    }
    return out;
}

inline std::vector<double> inverse_dynamics(const LinkChain& chain, const JointState& state,
                                            double g) {
    check_full_state(chain, state);
    const EomTerms t = eom_terms(chain, state.theta, state.theta_dot, g);
    const auto n = static_cast<Eigen::Index>(chain.n_links());
    Eigen::VectorXd ddq =
        Eigen::Map<const Eigen::VectorXd>(state.theta_ddot.data(), n);
    Eigen::VectorXd tau = t.mass_matrix * ddq + t.coriolis + t.gravity;
    return {tau.data(), tau.data() + n};
}

inline std::vector<double> forward_dynamics_accel(const LinkChain& chain,
                                                  const std::vector<double>& theta,
                                                  const std::vector<double>& theta_dot,
                                                  const std::vector<double>& tau, double g) {
    check_dim("tau", tau.size(), chain.n_links());
    const EomTerms t = eom_terms(chain, theta, theta_dot, g);
    const auto n = static_cast<Eigen::Index>(chain.n_links());
    Eigen::LLT<Eigen::MatrixXd> llt(t.mass_matrix);
    if (llt.info() != Eigen::Success)
        throw NumericalError("forward_dynamics: mass matrix is not positive definite");
    Eigen::VectorXd rhs =
        Eigen::Map<const Eigen::VectorXd>(tau.data(), n) - t.coriolis - t.gravity;
    Eigen::VectorXd ddq = llt.solve(rhs);
    return {ddq.data(), ddq.data() + n};
}

// One classical RK4 step of thddot = M^-1 (tau - c - G), tau held fixed.
inline JointState forward_dynamics_step(const LinkChain& chain, const JointState& state,
                                        const std::vector<double>& tau, double g, double dt) {
    check_velocity_state(chain, state);
    if (!(dt > 0.0))
        throw std::invalid_argument("forward_dynamics_step: dt must be > 0");
    const std::size_t n = chain.n_links();

    auto accel = [&](const std::vector<double>& q, const std::vector<double>& qd) {
        return forward_dynamics_accel(chain, q, qd, tau, g);
    };
    auto shifted = [n](const std::vector<double>& base, const std::vector<double>& delta,
                       double scale) {
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = base[i] + scale * delta[i];
        return out;
    };

    const std::vector<double>& q0 = state.theta;
    const std::vector<double>& v0 = state.theta_dot;

    std::vector<double> a1 = accel(q0, v0);
    std::vector<double> q2 = shifted(q0, v0, dt / 2), v2 = shifted(v0, a1, dt / 2);
    std::vector<double> a2 = accel(q2, v2);
    std::vector<double> q3 = shifted(q0, v2, dt / 2), v3 = shifted(v0, a2, dt / 2);
    std::vector<double> a3 = accel(q3, v3);
    std::vector<double> q4 = shifted(q0, v3, dt), v4 = shifted(v0, a3, dt);
    std::vector<double> a4 = accel(q4, v4);

    JointState next;
    next.theta.resize(n);
    next.theta_dot.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        next.theta[i] = q0[i] + dt / 6.0 * (v0[i] + 2.0 * v2[i] + 2.0 * v3[i] + v4[i]);
        next.theta_dot[i] = v0[i] + dt / 6.0 * (a1[i] + 2.0 * a2[i] + 2.0 * a3[i] + a4[i]);
    }
    return next;
}

struct DynamicsTrajectory {
    std::vector<double> time;                         // s
    std::vector<JointState> states;                   // theta, theta_dot per sample
    std::vector<std::vector<double>> applied_torques; // N m per joint per sample
    std::vector<double> kinetic;                      // J
    std::vector<double> potential;                    // J
    std::vector<double> total;                        // J
};

// tau = program(t, theta, theta_dot), evaluated once per step and held over it.
using TorqueProgram = std::function<std::vector<double>(
    double, const std::vector<double>&, const std::vector<double>&)>;

inline DynamicsTrajectory simulate(const LinkChain& chain, const JointState& initial,
                                   const TorqueProgram& program, double g, double duration,
                                   double dt) {
    check_velocity_state(chain, initial);
    if (!(duration > 0.0) || !(dt > 0.0))
        throw std::invalid_argument("simulate: duration and dt must be > 0");
    if (dt > duration)
        throw std::invalid_argument("simulate: dt must not exceed duration");
    const auto nsteps = static_cast<long long>(std::llround(duration / dt));

    DynamicsTrajectory traj;
    traj.time.reserve(nsteps + 1);
    traj.states.reserve(nsteps + 1);

    JointState s{initial.theta, initial.theta_dot, {}};
    auto record = [&](double t, const JointState& st, const std::vector<double>& tau) {
        traj.time.push_back(t);
        traj.states.push_back(st);
        traj.applied_torques.push_back(tau);
        const double ke = kinetic_energy(chain, st.theta, st.theta_dot);
        const double pe = potential_energy(chain, st.theta, g);
        traj.kinetic.push_back(ke);
        traj.potential.push_back(pe);
        traj.total.push_back(ke + pe);
    };

    for (long long k = 0; k < nsteps; ++k) {
        const double t = k * dt;
        std::vector<double> tau = program(t, s.theta, s.theta_dot);
        check_dim("torque program output", tau.size(), chain.n_links());
        record(t, s, tau);
        s = forward_dynamics_step(chain, s, tau, g, dt);
        for (std::size_t i = 0; i < chain.n_links(); ++i) {
            if (!std::isfinite(s.theta[i]) || !std::isfinite(s.theta_dot[i])) {
                char msg[128];
                std::snprintf(msg, sizeof msg,
                              "simulate: state diverged at step %lld (t = %.6g s)", k + 1,
                              (k + 1) * dt);
                throw NumericalError(msg);
            }
        }
    }
    const double t_end = nsteps * dt;
    record(t_end, s, program(t_end, s.theta, s.theta_dot));
    return traj;
}

inline constexpr double kHoldKp = 1.0;  // N m / rad
inline constexpr double kHoldKd = 0.1;  // N m s / rad

namespace detail {
inline std::vector<double> parse_double_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": bad number '" + item + "'");
        }
        if (used != item.size())
            throw std::invalid_argument(std::string(what) + ": bad number '" + item + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument(std::string(what) + ": empty value list");
    return out;
}
}  // namespace detail

// Named torque programs for the CLI: "zero", "gravity_comp",
// "constant:<tau1,tau2,...>" (N m), "hold:<a1,a2,...>" (target angles, rad;
// PD law tau = kp (a - theta) - kd theta_dot).
inline TorqueProgram make_torque_program(const std::string& spec, const LinkChain& chain,
                                         double g) {
    const std::size_t n = chain.n_links();
    if (spec == "zero") {
        return [n](double, const std::vector<double>&, const std::vector<double>&) {
            return std::vector<double>(n, 0.0);
        };
    }
    if (spec == "gravity_comp") {
        LinkChain ch = chain;
        return [ch, g, n](double, const std::vector<double>& theta,
                          const std::vector<double>&) {
            const std::vector<double> rest(n, 0.0);
            Eigen::VectorXd gv = eom_terms(ch, theta, rest, g).gravity;
            return std::vector<double>(gv.data(), gv.data() + gv.size());
        };
    }
    if (spec.rfind("constant:", 0) == 0) {
        std::vector<double> tau = detail::parse_double_list(spec.substr(9), "constant torque");
        check_dim("constant torque", tau.size(), n);
        return [tau](double, const std::vector<double>&, const std::vector<double>&) {
            return tau;
        };
    }
    if (spec.rfind("hold:", 0) == 0) {
        std::vector<double> target = detail::parse_double_list(spec.substr(5), "hold target");
        check_dim("hold target", target.size(), n);
        return [target, n](double, const std::vector<double>& theta,
                           const std::vector<double>& theta_dot) {
            std::vector<double> tau(n);
            for (std::size_t i = 0; i < n; ++i)
                tau[i] = kHoldKp * (target[i] - theta[i]) - kHoldKd * theta_dot[i];
            return tau;
        };
    }
    throw std::invalid_argument(
        "unknown torque program '" + spec +
        "' (expected zero, gravity_comp, constant:<values>, or hold:<angles>)");
}

}  // namespace grip
