#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "grip/dynamics.hpp"
#include "grip/oracle.hpp"
#include "grip/verify.hpp"
#include "helpers.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
constexpr double kPi = std::numbers::pi;

double max_rel_gap(const std::vector<double>& a, const std::vector<double>& b) {
    double diff = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff = std::max(diff, std::abs(a[i] - b[i]));
        scale = std::max(scale, std::abs(b[i]));
    }
    return diff / std::max(scale, 1e-300);
}
}  // namespace

TEST_CASE("lagrangian is kinetic minus potential energy", "[oracle]") {
    auto chain = testutil::jamia_finger();
    grip::JointState s{{0.3, 0.5, -0.2}, {1.0, -2.0, 0.5}, {}};
    REQUIRE(grip::lagrangian(chain, s, 9.81) ==
            grip::kinetic_energy(chain, s.theta, s.theta_dot) -
                grip::potential_energy(chain, s.theta, 9.81));
    REQUIRE_THAT(grip::lagrangian(chain, s, 9.81),
                 WithinRel(9.5269796842735199e-07 - 0.00061161963644126101, 1e-12));
}

TEST_CASE("difference oracle nails the one-body law", "[oracle]") {
    grip::LinkChain one;
    one.lengths = {0.030};
    one.masses = {0.004};
    one.com_offsets = {0.012};
    one.inertias = {3e-7};

    const double alpha = 7.0;
    grip::JointState s{{0.6}, {2.0}, {alpha}};
    auto tau = grip::euler_lagrange_fd(one, s, 0.0);

    const double expected =
        (one.inertias[0] + one.masses[0] * one.com_offsets[0] * one.com_offsets[0]) * alpha;
    REQUIRE_THAT(tau[0], WithinRel(expected, 1e-10));
}

TEST_CASE("difference oracle reproduces the static gravity load", "[oracle]") {
    auto chain = testutil::jamia_finger();
    grip::JointState hold{{0.3, 0.5, -0.2}, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}};
    auto fd = grip::euler_lagrange_fd(chain, hold, 9.81);
    auto closed = grip::inverse_dynamics(chain, hold, 9.81);
    for (std::size_t i = 0; i < 3; ++i)
        REQUIRE_THAT(fd[i], WithinAbs(closed[i], 1e-8 * std::abs(closed[0])));
}

TEST_CASE("difference oracle agrees with closed-form torques on random states",
          "[oracle]") {
    std::mt19937_64 rng(41);
    auto chain = testutil::jamia_finger();
    for (int trial = 0; trial < 25; ++trial) {
        grip::JointState s;
        s.theta = testutil::random_vector(rng, 3, -kPi, kPi);
        s.theta_dot = testutil::random_vector(rng, 3, -5.0, 5.0);
        s.theta_ddot = testutil::random_vector(rng, 3, -20.0, 20.0);
        auto fd = grip::euler_lagrange_fd(chain, s, 9.81);
        auto closed = grip::inverse_dynamics(chain, s, 9.81);
        REQUIRE(max_rel_gap(fd, closed) <= 1e-6);
    }
}

TEST_CASE("difference oracle error shrinks quadratically with the step", "[oracle]") {
    auto chain = testutil::jamia_finger();
    grip::JointState s{{0.4, -0.3, 0.2}, {0.5, 0.8, -0.6}, {1.0, -2.0, 1.5}};
    auto closed = grip::inverse_dynamics(chain, s, 9.81);

    auto err = [&](double h) {
        auto fd = grip::euler_lagrange_fd(chain, s, 9.81, h);
        double e = 0.0;
        for (std::size_t i = 0; i < 3; ++i) e = std::max(e, std::abs(fd[i] - closed[i]));
        return e;
    };

    // Steps chosen well above round-off dominance so halving shows the h^2 law.
    const double e1 = err(2e-3);
    const double e2 = err(1e-3);
    REQUIRE(e1 > 0.0);
    const double ratio = e1 / e2;
    REQUIRE(ratio > 3.0);
    REQUIRE(ratio < 5.0);
}

TEST_CASE("oracle flags a corrupted mass matrix", "[oracle]") {
    auto chain = testutil::jamia_finger();
    grip::JointState s{{0.3, 0.5, -0.2}, {1.0, -2.0, 0.5}, {3.0, 1.0, -4.0}};

    auto fd = grip::euler_lagrange_fd(chain, s, 9.81);
    auto good = grip::inverse_dynamics(chain, s, 9.81);
    REQUIRE(max_rel_gap(fd, good) <= grip::kOracleTolerance);

    // Rebuild the torques with M(0,0) inflated by 1%: the referee must notice.
    auto t = grip::eom_terms(chain, s.theta, s.theta_dot, 9.81);
    auto bad = good;
    bad[0] += 0.01 * t.mass_matrix(0, 0) * s.theta_ddot[0];
    REQUIRE(max_rel_gap(fd, bad) > 10.0 * grip::kOracleTolerance);
}

TEST_CASE("cross check stays within tolerance on the sample fingers", "[verify]") {
    auto report = grip::cross_check(testutil::jamia_finger(), 9.81, 1000, 1);
    REQUIRE(report.samples == 1000);
    REQUIRE(report.max_relative_error <= grip::kOracleTolerance);
    REQUIRE(report.worst_case_state.theta.size() == 3);

    auto thumb = grip::cross_check(testutil::jamia_thumb(), 9.81, 500, 1);
    REQUIRE(thumb.max_relative_error <= grip::kOracleTolerance);
}

TEST_CASE("cross check is reproducible for a fixed seed", "[verify]") {
    auto chain = testutil::jamia_finger();
    auto a = grip::cross_check(chain, 9.81, 64, 12345);
    auto b = grip::cross_check(chain, 9.81, 64, 12345);
    REQUIRE(a.max_relative_error == b.max_relative_error);
    REQUIRE(a.worst_case_state == b.worst_case_state);

    auto c = grip::cross_check(chain, 9.81, 64, 54321);
    REQUIRE(c.worst_case_state.theta != a.worst_case_state.theta);
}

TEST_CASE("cross check accepts a single sample", "[verify]") {
    auto report = grip::cross_check(testutil::jamia_finger(), 9.81, 1, 7);
    REQUIRE(report.samples == 1);
    REQUIRE(report.max_relative_error <= grip::kOracleTolerance);
    REQUIRE(report.worst_case_state.theta.size() == 3);
}

TEST_CASE("verification rejects malformed requests", "[verify]") {
    auto chain = testutil::jamia_finger();
    REQUIRE_THROWS_AS(grip::cross_check(chain, 9.81, 0, 1), std::invalid_argument);
    grip::JointState s{{0.1, 0.2, 0.3}, {0, 0, 0}, {0, 0, 0}};
    REQUIRE_THROWS_AS(grip::euler_lagrange_fd(chain, s, 9.81, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(grip::euler_lagrange_fd(chain, s, 9.81, -1e-4), std::invalid_argument);
    grip::JointState no_accel{{0.1, 0.2, 0.3}, {0, 0, 0}, {}};
    REQUIRE_THROWS_AS(grip::euler_lagrange_fd(chain, no_accel, 9.81), std::invalid_argument);
}
