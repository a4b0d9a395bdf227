#pragma once

#include <cmath>
#include <vector>

#include "grip/model.hpp"

namespace grip {

struct PlanarPoint {
    double x = 0.0;  // m
    double y = 0.0;  // m
};

// Tip of the chain: x = sum L_i cos(theta_i), y = sum L_i sin(theta_i),
// with theta_i the absolute link angles.
inline PlanarPoint fingertip_position(const LinkChain& chain,
                                      const std::vector<double>& theta_abs) {
    check_dim("theta_abs", theta_abs.size(), chain.n_links());
    PlanarPoint p;
    for (std::size_t i = 0; i < chain.n_links(); ++i) {
        p.x += chain.lengths[i] * std::cos(theta_abs[i]);
        p.y += chain.lengths[i] * std::sin(theta_abs[i]);
    }
    return p;
}

// Base joint plus every link end; last point is the fingertip.
inline std::vector<PlanarPoint> joint_positions(const LinkChain& chain,
                                                const std::vector<double>& theta_abs) {
    check_dim("theta_abs", theta_abs.size(), chain.n_links());
    std::vector<PlanarPoint> pts(chain.n_links() + 1);
    pts[0] = {0.0, 0.0};
    for (std::size_t i = 0; i < chain.n_links(); ++i) {
        pts[i + 1].x = pts[i].x + chain.lengths[i] * std::cos(theta_abs[i]);
        pts[i + 1].y = pts[i].y + chain.lengths[i] * std::sin(theta_abs[i]);
    }
    return pts;
}

struct SweepSample {
    double theta = 0.0;  // rad, the common relative joint angle
    PlanarPoint tip;
};

// Workspace curve with all relative joint angles set equal: row k uses
// relative angles [theta_k, ..., theta_k], i.e. absolute [theta_k, 2 theta_k, ...].
// Endpoints are taken exactly; interior samples are uniform.
inline std::vector<SweepSample> equal_angle_sweep(const LinkChain& chain, double theta_start,
                                                  double theta_end, std::size_t steps) {
    if (steps < 2)
        throw std::invalid_argument("equal_angle_sweep: steps must be >= 2");
    if (!(theta_end > theta_start))
        throw std::invalid_argument("equal_angle_sweep: theta_end must exceed theta_start");

    std::vector<SweepSample> rows(steps);
    const double span = theta_end - theta_start;
    for (std::size_t k = 0; k < steps; ++k) {
        double th = (k + 1 == steps)
                        ? theta_end
                        : theta_start + span * static_cast<double>(k) /
                                            static_cast<double>(steps - 1);
        std::vector<double> rel(chain.n_links(), th);
        rows[k].theta = th;
        rows[k].tip = fingertip_position(chain, relative_to_absolute(rel));
    }
    return rows;
}

}  // namespace grip
