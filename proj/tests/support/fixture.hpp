#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "morphwheel/params.hpp"

namespace morphwheel::testing {

inline std::string data_path(const std::string& name) { return std::string(MORPHWHEEL_DATA_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Same design as data/reference_module.yaml, built in code.
inline DesignParams reference_design() {
    DesignParams p;
    p.screw = {.n_levels = 4,
               .screw_level_length = 20.0,
               .stopper_width = 1.0,
               .thread_width = 0.5,
               .thread_clearance = 0.5,
               .base_screw_diameter = 2.3,
               .shaft_levels = 3,
               .stopper_height = 2.0};
    p.layout = {.joint_height = 10.0,
                .joint_arm_height = 5.0,
                .drive_assembly_length = 90.0,
                .tensioner_length = 60.0,
                .plate_clearance = 10.0};
    p.platform = {.screw_circle_spacing = 24.0,
                  .max_screw_extension = 80.0,
                  .joint_mount_width = 5.0,
                  .universal_joint_diameter = 2.5,
                  .plate_count = 4};
    p.wheel = {.rod_half_length = 140.0,
               .hub_offset = 60.0,
               .curved_rod_length = 120.0,
               .hinge_allowance = 15.0,
               .spoke_pairs = 6,
               .min_half_separation = 0.0};
    p.motor_stall_torque = 1470.0;
    p.screw_lead = 2.0;
    p.screw_friction = 0.2;
    p.screw_mean_diameter = 8.0;
    p.reported = {.elongated_length = 340.0,
                  .reduced_length = 165.0,
                  .chassis_diameter = 94.0,
                  .half_rod_expansion = 80.0,
                  .inner_rod_length = 85.0,
                  .outer_rod_length = 75.0,
                  .wheel_diameter = 400.0};
    return p;
}

/// Random valid design; every invariant holds by construction.
inline DesignParams random_design(std::mt19937_64& rng) {
    auto uniform = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
    auto integer = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    DesignParams p;
    p.screw.n_levels = integer(2, 10);
    p.screw.screw_level_length = uniform(5.0, 60.0);
    p.screw.stopper_width = uniform(0.2, 3.0);
    p.screw.thread_width = uniform(0.2, 2.0);
    p.screw.thread_clearance = uniform(0.0, 1.0);
    p.screw.base_screw_diameter = uniform(1.0, 5.0);
    p.screw.shaft_levels = p.screw.n_levels - 1;
    p.screw.stopper_height = uniform(0.5, 4.0);

    p.layout.joint_arm_height = uniform(2.0, 10.0);
    p.layout.joint_height = 2.0 * p.layout.joint_arm_height;
    p.layout.drive_assembly_length = uniform(20.0, 150.0);
    p.layout.tensioner_length = uniform(10.0, 100.0);
    p.layout.plate_clearance = uniform(2.0, 20.0);

    p.platform.screw_circle_spacing = uniform(10.0, 60.0);
    p.platform.max_screw_extension = uniform(10.0, 150.0);
    p.platform.joint_mount_width = uniform(1.0, 10.0);
    p.platform.universal_joint_diameter = uniform(1.0, 6.0);
    p.platform.plate_count = integer(1, 6);

    p.wheel.rod_half_length = uniform(50.0, 300.0);  // above the largest stopper stack
    p.wheel.hub_offset = uniform(0.0, 100.0);
    p.wheel.curved_rod_length = uniform(30.0, 200.0);
    p.wheel.hinge_allowance = uniform(0.0, 0.9) * p.wheel.curved_rod_length;
    p.wheel.spoke_pairs = integer(3, 12);
    if (integer(0, 1) == 1) p.wheel.min_half_separation = uniform(0.0, 0.9) * p.wheel.rod_half_length;

    p.motor_stall_torque = uniform(100.0, 5000.0);
    p.screw_lead = uniform(0.5, 5.0);
    p.screw_friction = uniform(0.0, 0.5);
    p.screw_mean_diameter = uniform(3.0, 15.0);

    p.targets.reduction_ratio = uniform(0.2, 1.0);
    p.targets.platform_bend = uniform(0.0, 1.0) * std::min(std::numbers::pi / 2, p.platform.plate_count * std::numbers::pi / 4);
    p.targets.motor_margin = uniform(0.1, 1.0);
    if (integer(0, 1) == 1) p.reported.elongated_length = uniform(100.0, 500.0);
    return p;
}

} // namespace morphwheel::testing
