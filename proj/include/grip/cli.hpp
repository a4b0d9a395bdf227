#pragma once

// Command implementations behind the `grip` executable, kept out of main()
// so tests can drive them directly. Exit code convention: 0 success,
// 1 input/config error, 2 numerical failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "grip/config.hpp"
#include "grip/csv.hpp"
#include "grip/dynamics.hpp"
#include "grip/kinematics.hpp"
#include "grip/model.hpp"
#include "grip/statics.hpp"
#include "grip/verify.hpp"

namespace grip {

struct CommandOutcome {
    int exit_code = 0;
    std::string output_path;  // empty if nothing written, "-" for stdout
    std::string message;      // single-line diagnostic for nonzero exits
};

namespace detail {

inline void write_output(const std::string& out_path, const std::string& content) {
    if (out_path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot write output file '" + out_path + "'");
    out << content;
}

inline std::string pick_out(const std::string& requested, const std::string& command,
                            const std::string& finger) {
    return requested.empty() ? command + "_" + finger + ".csv" : requested;
}

inline CommandOutcome run_guarded(const std::function<CommandOutcome()>& body) {
    try {
        return body();
    } catch (const NumericalError& e) {
        return {2, "", e.what()};
    } catch (const std::invalid_argument& e) {
        return {1, "", e.what()};
    } catch (const std::exception& e) {
        return {1, "", e.what()};
    }
}

}  // namespace detail

inline CommandOutcome cmd_workspace(const std::string& hand_path, const std::string& finger_name,
                                    double min_deg, double max_deg, std::size_t steps,
                                    const std::string& out_path) {
    return detail::run_guarded([&]() -> CommandOutcome {
        const HandModel hand = load_hand_config(hand_path);
        const Finger& f = hand.finger(finger_name);
        const double to_rad = std::numbers::pi / 180.0;
        const auto rows =
            equal_angle_sweep(f.chain, min_deg * to_rad, max_deg * to_rad, steps);

        std::string csv = "theta_deg,x_mm,y_mm\n";
        for (const SweepSample& r : rows) {
            csv += format_fixed(r.theta / to_rad, 3);
            csv += ',';
            csv += format_fixed(r.tip.x * 1e3, 3);
            csv += ',';
            csv += format_fixed(r.tip.y * 1e3, 3);
            csv += '\n';
        }
        const std::string out = detail::pick_out(out_path, "workspace", finger_name);
        detail::write_output(out, csv);
        return {0, out, ""};
    });
}

inline CommandOutcome cmd_statics(const std::string& hand_path, const std::string& finger_name,
                                  double force, int n_fingers, const std::string& out_path) {
    return detail::run_guarded([&]() -> CommandOutcome {
        const HandModel hand = load_hand_config(hand_path);
        const Finger& f = hand.finger(finger_name);
        const StaticsReport r =
            full_statics_report(f.chain, f.tendon, force, n_fingers, hand.gravity);

        std::string csv = "quantity,value,unit\n";
        for (std::size_t i = 0; i < r.joint_moments.size(); ++i)
            csv += "joint_moment_" + std::to_string(i + 1) + "," +
                   format_value(r.joint_moments[i] * 1e3) + ",N.mm\n";
        csv += "max_moment," + format_value(r.max_moment * 1e3) + ",N.mm\n";
        csv += "tendon_tension," + format_value(r.tendon_tension) + ",N\n";
        csv += "actuator_torque," + format_value(r.actuator_torque) + ",N.m\n";
        csv += "payload_per_finger," + format_value(r.payload_per_finger) + ",kg\n";
        csv += "payload_total," + format_value(r.payload_total) + ",kg\n";
        csv += "min_wire_diameter," + format_value(r.min_wire_diameter * 1e3) + ",mm\n";

        const std::string out = detail::pick_out(out_path, "statics", finger_name);
        detail::write_output(out, csv);
        return {0, out, ""};
    });
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) fields.push_back(item);
    return fields;
}

inline std::string state_header(std::size_t n) {
    std::string h;
    for (const char* base : {"theta", "omega", "alpha"})
        for (std::size_t i = 1; i <= n; ++i)
            h += std::string(base) + std::to_string(i) + (base[0] == 'a' && i == n ? "" : ",");
    return h;
}

}  // namespace detail

inline CommandOutcome cmd_invdyn(const std::string& hand_path, const std::string& finger_name,
                                 const std::string& state_path, const std::string& out_path) {
    return detail::run_guarded([&]() -> CommandOutcome {
        const HandModel hand = load_hand_config(hand_path);
        const Finger& f = hand.finger(finger_name);
        const std::size_t n = f.chain.n_links();

        std::ifstream in(state_path);
        if (!in)
            throw std::invalid_argument("cannot open state file '" + state_path + "'");

        std::string line;
        if (!std::getline(in, line))
            throw std::invalid_argument("state file '" + state_path + "' is empty");
        const std::string want = detail::state_header(n);
        if (line != want)
            throw std::invalid_argument("state file header must be exactly '" + want + "'");

        std::string csv = want;
        for (std::size_t i = 1; i <= n; ++i) csv += ",tau" + std::to_string(i);
        csv += '\n';

        std::size_t lineno = 1;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            const auto fields = detail::split_csv_line(line);
            if (fields.size() != 3 * n)
                throw std::invalid_argument("state file line " + std::to_string(lineno) +
                                            ": expected " + std::to_string(3 * n) +
                                            " fields, got " + std::to_string(fields.size()));
            std::vector<double> vals(3 * n);
            for (std::size_t i = 0; i < fields.size(); ++i) {
                std::size_t used = 0;
                try {
                    vals[i] = std::stod(fields[i], &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != fields[i].size() || !std::isfinite(vals[i]))
                    throw std::invalid_argument("state file line " + std::to_string(lineno) +
                                                ": bad number '" + fields[i] + "'");
            }
            JointState st;
            st.theta.assign(vals.begin(), vals.begin() + n);
            st.theta_dot.assign(vals.begin() + n, vals.begin() + 2 * n);
            st.theta_ddot.assign(vals.begin() + 2 * n, vals.end());
            const std::vector<double> tau = inverse_dynamics(f.chain, st, hand.gravity);

            std::string row;
            for (double v : vals) {
                row += format_value(v);
                row += ',';
            }
            for (std::size_t i = 0; i < n; ++i) {
                row += format_value(tau[i]);
                row += (i + 1 == n) ? '\n' : ',';
            }
            csv += row;
        }
        const std::string out = detail::pick_out(out_path, "invdyn", finger_name);
        detail::write_output(out, csv);
        return {0, out, ""};
    });
}

// Peak deviation of total energy from its initial value, relative to the
// largest energy magnitude seen on the run.
inline double relative_energy_drift(const DynamicsTrajectory& traj) {
    double drift = 0.0, scale = 0.0;
    for (std::size_t k = 0; k < traj.total.size(); ++k) {
        drift = std::max(drift, std::abs(traj.total[k] - traj.total[0]));
        scale = std::max(scale, traj.kinetic[k] + std::abs(traj.potential[k]));
    }
    return scale > 0.0 ? drift / scale : drift;
}

inline CommandOutcome cmd_simulate(const std::string& hand_path, const std::string& finger_name,
                                   const std::string& program_spec, double duration, double dt,
                                   const std::string& out_path,
                                   const std::string& theta0_spec = "",
                                   const std::string& omega0_spec = "") {
    return detail::run_guarded([&]() -> CommandOutcome {
        const HandModel hand = load_hand_config(hand_path);
        const Finger& f = hand.finger(finger_name);
        const std::size_t n = f.chain.n_links();

        JointState initial;
        initial.theta.assign(n, 0.0);
        initial.theta_dot.assign(n, 0.0);
        if (!theta0_spec.empty())
            initial.theta = detail::parse_double_list(theta0_spec, "theta0");
        if (!omega0_spec.empty())
            initial.theta_dot = detail::parse_double_list(omega0_spec, "omega0");

        const TorqueProgram program = make_torque_program(program_spec, f.chain, hand.gravity);
        const DynamicsTrajectory traj =
            simulate(f.chain, initial, program, hand.gravity, duration, dt);

        std::string csv = "t_s";
        for (std::size_t i = 1; i <= n; ++i) csv += ",theta" + std::to_string(i) + "_rad";
        for (std::size_t i = 1; i <= n; ++i) csv += ",omega" + std::to_string(i);
        for (std::size_t i = 1; i <= n; ++i) csv += ",tau" + std::to_string(i);
        csv += ",ke_j,pe_j,e_total_j\n";
        for (std::size_t k = 0; k < traj.time.size(); ++k) {
            csv += format_value(traj.time[k]);
            for (std::size_t i = 0; i < n; ++i)
                csv += "," + format_value(traj.states[k].theta[i]);
            for (std::size_t i = 0; i < n; ++i)
                csv += "," + format_value(traj.states[k].theta_dot[i]);
            for (std::size_t i = 0; i < n; ++i)
                csv += "," + format_value(traj.applied_torques[k][i]);
            csv += "," + format_value(traj.kinetic[k]);
            csv += "," + format_value(traj.potential[k]);
            csv += "," + format_value(traj.total[k]);
            csv += '\n';
        }
        const std::string out = detail::pick_out(out_path, "simulate", finger_name);
        detail::write_output(out, csv);
        if (out != "-")
            std::cout << "energy drift (relative): "
                      << format_value(relative_energy_drift(traj)) << '\n';
        return {0, out, ""};
    });
}

inline CommandOutcome cmd_verify(const std::string& hand_path, const std::string& finger_name,
                                 std::size_t samples, std::uint64_t seed,
                                 const std::string& out_path) {
    return detail::run_guarded([&]() -> CommandOutcome {
        const HandModel hand = load_hand_config(hand_path);
        const Finger& f = hand.finger(finger_name);
        const OracleReport report = cross_check(f.chain, hand.gravity, samples, seed);
        const std::size_t n = f.chain.n_links();

        std::string csv = "samples,max_rel_err";
        for (std::size_t i = 1; i <= n; ++i) csv += ",worst_theta" + std::to_string(i);
        for (std::size_t i = 1; i <= n; ++i) csv += ",worst_omega" + std::to_string(i);
        csv += '\n';
        csv += std::to_string(report.samples) + "," + format_value(report.max_relative_error);
        for (std::size_t i = 0; i < n; ++i)
            csv += "," + format_value(report.worst_case_state.theta[i]);
        for (std::size_t i = 0; i < n; ++i)
            csv += "," + format_value(report.worst_case_state.theta_dot[i]);
        csv += '\n';

        const std::string out = detail::pick_out(out_path, "verify", finger_name);
        detail::write_output(out, csv);
        if (report.max_relative_error > kOracleTolerance) {
            char msg[128];
            std::snprintf(msg, sizeof msg,
                          "oracle mismatch: max relative error %.3g exceeds %.1g",
                          report.max_relative_error, kOracleTolerance);
            return {2, out, msg};
        }
        return {0, out, ""};
    });
}

}  // namespace grip
