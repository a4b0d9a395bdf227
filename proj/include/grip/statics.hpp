#pragma once

// Tendon force chain for a straightened finger: fingertip force -> joint
// moments -> cable tension -> actuator torque, plus payload capacity and
// minimum tendon wire diameter.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "grip/model.hpp"

namespace grip {

struct StaticsReport {
    std::vector<double> joint_moments;  // N m, proximal to distal
    double max_moment = 0.0;            // N m
    double tendon_tension = 0.0;        // N
    double actuator_torque = 0.0;       // N m
    double payload_per_finger = 0.0;    // kg
    double payload_total = 0.0;         // kg
    double min_wire_diameter = 0.0;     // m
};

// Moment at joint k for a tip force F applied perpendicular to the extended
// finger: the lever arm is the total length beyond that joint.
inline std::vector<double> joint_moments(const LinkChain& chain, double force) {
    if (!(force >= 0.0))
        throw std::invalid_argument("joint_moments: force must be >= 0");
    const std::size_t n = chain.n_links();
    std::vector<double> m(n);
    double arm = 0.0;
    for (std::size_t k = n; k-- > 0;) {
        arm += chain.lengths[k];
        m[k] = force * arm;
    }
    return m;
}

inline double tendon_tension(double max_moment, const TendonDrive& drive) {
    return max_moment / drive.pulley_radius;
}

inline double actuator_torque(double tension, const TendonDrive& drive) {
    return tension * drive.actuator_radius;
}

// Friction grasp: each finger pressing with F holds F*mu/g of weight.
inline std::pair<double, double> payload_capacity(double force, double mu, double g,
                                                  int n_fingers) {
    if (!(g > 0.0))
        throw std::invalid_argument("payload_capacity: g must be > 0");
    if (n_fingers < 1)
        throw std::invalid_argument("payload_capacity: n_fingers must be >= 1");
    const double per_finger = force * mu / g;
    return {per_finger, n_fingers * per_finger};
}

// Smallest wire cross-section that keeps stress at the allowable limit:
// sigma = T / (pi D^2 / 4).
inline double min_wire_diameter(double tension, double allowable_stress) {
    if (!(allowable_stress > 0.0))
        throw std::invalid_argument("min_wire_diameter: allowable_stress must be > 0");
    if (!(tension >= 0.0))
        throw std::invalid_argument("min_wire_diameter: tension must be >= 0");
    return std::sqrt(4.0 * tension / (std::numbers::pi * allowable_stress));
}

inline StaticsReport full_statics_report(const LinkChain& chain, const TendonDrive& drive,
                                         double force, int n_fingers, double g) {
    StaticsReport r;
    r.joint_moments = joint_moments(chain, force);
    r.max_moment = *std::max_element(r.joint_moments.begin(), r.joint_moments.end());
    r.tendon_tension = tendon_tension(r.max_moment, drive);
    r.actuator_torque = actuator_torque(r.tendon_tension, drive);
    auto [per, total] = payload_capacity(force, drive.friction_mu, g, n_fingers);
    r.payload_per_finger = per;
    r.payload_total = total;
    r.min_wire_diameter = min_wire_diameter(r.tendon_tension, drive.allowable_stress);
    return r;
}

}  // namespace grip
