#pragma once

#include <cstddef>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace grip {

// Thrown when a computation (not the input) goes bad: divergence,
// failed factorization, oracle mismatch. CLI maps it to exit 2.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Planar serial finger. Link i runs from joint i to joint i+1; angles are
// absolute, measured from the world x axis. All quantities in SI base units.
struct LinkChain {
    std::vector<double> lengths;      // m
    std::vector<double> masses;       // kg
    std::vector<double> com_offsets;  // m, joint i to the link's center of mass
    std::vector<double> inertias;     // kg m^2 about each link's own COM, out-of-plane axis

    std::size_t n_links() const { return lengths.size(); }

    void validate() const {
        const std::size_t n = lengths.size();
        if (n == 0)
            throw std::invalid_argument("LinkChain: needs at least one link");
        if (masses.size() != n || com_offsets.size() != n || inertias.size() != n)
            throw std::invalid_argument("LinkChain: field arrays must all have " +
                                        std::to_string(n) + " entries");
        for (std::size_t i = 0; i < n; ++i) {
            if (!(lengths[i] > 0.0))
                throw std::invalid_argument("LinkChain: lengths[" + std::to_string(i) +
                                            "] must be > 0");
            if (!(masses[i] > 0.0))
                throw std::invalid_argument("LinkChain: masses[" + std::to_string(i) +
                                            "] must be > 0");
            if (!(com_offsets[i] > 0.0) || com_offsets[i] > lengths[i])
                throw std::invalid_argument("LinkChain: com_offsets[" + std::to_string(i) +
                                            "] must lie in (0, lengths[" + std::to_string(i) +
                                            "]]");
            if (!(inertias[i] >= 0.0))
                throw std::invalid_argument("LinkChain: inertias[" + std::to_string(i) +
                                            "] must be >= 0");
        }
    }

    bool operator==(const LinkChain&) const = default;
};

struct TendonDrive {
    double pulley_radius = 0.0;     // m
    double actuator_radius = 0.0;   // m
    double allowable_stress = 0.0;  // Pa
    double friction_mu = 0.0;
    double max_grip_force = 0.0;    // N

    void validate() const {
        if (!(pulley_radius > 0.0))
            throw std::invalid_argument("TendonDrive: pulley_radius must be > 0");
        if (!(actuator_radius > 0.0))
            throw std::invalid_argument("TendonDrive: actuator_radius must be > 0");
        if (!(allowable_stress > 0.0))
            throw std::invalid_argument("TendonDrive: allowable_stress must be > 0");
        if (!(friction_mu >= 0.0))
            throw std::invalid_argument("TendonDrive: friction_mu must be >= 0");
        if (!(max_grip_force >= 0.0))
            throw std::invalid_argument("TendonDrive: max_grip_force must be >= 0");
    }

    bool operator==(const TendonDrive&) const = default;
};

// theta_ddot may be left empty for velocity-level uses (energies, forward
// dynamics); inverse dynamics requires all three arrays filled.
struct JointState {
    std::vector<double> theta;       // rad, absolute
    std::vector<double> theta_dot;   // rad/s
    std::vector<double> theta_ddot;  // rad/s^2

    bool operator==(const JointState&) const = default;
};

inline void check_dim(const char* what, std::size_t got, std::size_t want) {
    if (got != want)
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(want) + " entries, got " +
                                    std::to_string(got));
}

inline void check_velocity_state(const LinkChain& chain, const JointState& s) {
    check_dim("theta", s.theta.size(), chain.n_links());
    check_dim("theta_dot", s.theta_dot.size(), chain.n_links());
}

inline void check_full_state(const LinkChain& chain, const JointState& s) {
    check_velocity_state(chain, s);
    check_dim("theta_ddot", s.theta_ddot.size(), chain.n_links());
}

struct Finger {
    std::string name;
    LinkChain chain;
    TendonDrive tendon;

    bool operator==(const Finger&) const = default;
};

struct HandModel {
    double gravity = 9.81;  // m/s^2
    std::vector<Finger> fingers;

    void validate() const {
        if (!(gravity >= 0.0))
            throw std::invalid_argument("HandModel: gravity must be >= 0");
        if (fingers.empty())
            throw std::invalid_argument("HandModel: needs at least one finger");
        for (std::size_t i = 0; i < fingers.size(); ++i) {
            if (fingers[i].name.empty())
                throw std::invalid_argument("HandModel: fingers[" + std::to_string(i) +
                                            "] has an empty name");
            for (std::size_t j = 0; j < i; ++j)
                if (fingers[j].name == fingers[i].name)
                    throw std::invalid_argument("HandModel: duplicate finger name '" +
                                                fingers[i].name + "'");
            fingers[i].chain.validate();
            fingers[i].tendon.validate();
        }
    }

    const Finger& finger(const std::string& name) const {
        for (const Finger& f : fingers)
            if (f.name == name) return f;
        std::string known;
        for (const Finger& f : fingers) {
            if (!known.empty()) known += ", ";
            known += f.name;
        }
        throw std::invalid_argument("unknown finger '" + name + "' (available: " + known + ")");
    }

    bool operator==(const HandModel&) const = default;
};

// Cumulative sum: relative joint angles to absolute link angles.
inline std::vector<double> relative_to_absolute(const std::vector<double>& rel) {
    std::vector<double> abs_angles(rel.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < rel.size(); ++i) {
        acc += rel[i];
        abs_angles[i] = acc;
    }
    return abs_angles;
}

inline std::vector<double> absolute_to_relative(const std::vector<double>& abs_angles) {
    std::vector<double> rel(abs_angles.size());
    double prev = 0.0;
    for (std::size_t i = 0; i < abs_angles.size(); ++i) {
        rel[i] = abs_angles[i] - prev;
        prev = abs_angles[i];
    }
    return rel;
}

}  // namespace grip
