#pragma once

// Randomized cross-check of the closed-form dynamics against the
// finite-difference oracle.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "grip/dynamics.hpp"
#include "grip/model.hpp"
#include "grip/oracle.hpp"

namespace grip {

struct OracleReport {
    std::size_t samples = 0;
    double max_relative_error = 0.0;
    JointState worst_case_state;
};

// Acceptance threshold for closed-form vs FD torque agreement.
inline constexpr double kOracleTolerance = 1e-6;

// Sampling ranges: wide enough for strong Coriolis coupling, small enough
// that torques stay well scaled.
inline constexpr double kSampleThetaMax = 3.14159265358979323846;
inline constexpr double kSampleOmegaMax = 5.0;   // rad/s
inline constexpr double kSampleAlphaMax = 20.0;  // rad/s^2

namespace detail {
// Uniform double in [lo, hi) from the top 53 bits of the engine output.
// std::uniform_real_distribution is implementation-defined; this is not.
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}
}  // namespace detail

inline OracleReport cross_check(const LinkChain& chain, double g, std::size_t samples,
                                std::uint64_t seed, double h = kOracleAngleStep) {
    if (samples < 1)
        throw std::invalid_argument("cross_check: samples must be >= 1");
    const std::size_t n = chain.n_links();
    std::mt19937_64 rng(seed);

    OracleReport report;
    report.samples = samples;

    for (std::size_t s = 0; s < samples; ++s) {
        JointState st;
        st.theta.resize(n);
        st.theta_dot.resize(n);
        st.theta_ddot.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            st.theta[i] = detail::uniform(rng, -kSampleThetaMax, kSampleThetaMax);
        for (std::size_t i = 0; i < n; ++i)
            st.theta_dot[i] = detail::uniform(rng, -kSampleOmegaMax, kSampleOmegaMax);
        for (std::size_t i = 0; i < n; ++i)
            st.theta_ddot[i] = detail::uniform(rng, -kSampleAlphaMax, kSampleAlphaMax);

        const std::vector<double> closed = inverse_dynamics(chain, st, g);
        const std::vector<double> fd = euler_lagrange_fd(chain, st, g, h);

        double diff = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            diff = std::max(diff, std::abs(fd[i] - closed[i]));
            scale = std::max(scale, std::abs(closed[i]));
        }
        const double rel = diff / std::max(scale, 1e-300);
        if (rel > report.max_relative_error) {
            report.max_relative_error = rel;
            report.worst_case_state = st;
        }
    }
    return report;
}

}  // namespace grip
