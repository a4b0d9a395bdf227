#pragma once

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "grip/model.hpp"

namespace testutil {

inline std::string jamia_path() {
    return std::string(GRIP_REPO_DIR) + "/hands/jamia.json";
}

// The sample finger, built directly so library tests do not depend on config
// parsing: 30/15/10 mm aluminium links, uniform rods.
inline grip::LinkChain jamia_finger() {
    grip::LinkChain c;
    c.lengths = {0.030, 0.015, 0.010};
    c.masses = {0.003975, 0.0019875, 0.001325};
    c.com_offsets = {0.015, 0.0075, 0.005};
    c.inertias = {2.98125e-7, 3.7265625e-8, 1.1041666666666666e-8};
    return c;
}

inline grip::LinkChain jamia_thumb() {
    grip::LinkChain c;
    c.lengths = {0.015, 0.010};
    c.masses = {0.0019875, 0.001325};
    c.com_offsets = {0.0075, 0.005};
    c.inertias = {3.7265625e-8, 1.1041666666666666e-8};
    return c;
}

inline grip::TendonDrive jamia_tendon(double f_max = 6.0) {
    grip::TendonDrive d;
    d.pulley_radius = 0.003;
    d.actuator_radius = 0.005;
    d.allowable_stress = 1.9e8;
    d.friction_mu = 0.5;
    d.max_grip_force = f_max;
    return d;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

inline std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo,
                                         double hi) {
    std::vector<double> v(n);
    for (double& x : v) x = uniform(rng, lo, hi);
    return v;
}

// Valid random chain for property tests.
inline grip::LinkChain random_chain(std::mt19937_64& rng, std::size_t n) {
    grip::LinkChain c;
    c.lengths = random_vector(rng, n, 0.01, 0.5);
    c.masses = random_vector(rng, n, 0.01, 2.0);
    c.com_offsets.resize(n);
    c.inertias.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        c.com_offsets[i] = c.lengths[i] * uniform(rng, 0.05, 1.0);
        c.inertias[i] = c.masses[i] * c.lengths[i] * c.lengths[i] * uniform(rng, 0.0, 0.4);
    }
    return c;
}

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return s;
}

inline std::filesystem::path fresh_temp_dir(const std::string& tag) {
    auto dir = std::filesystem::temp_directory_path() /
               ("grip_tests_" + tag + "_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace testutil
