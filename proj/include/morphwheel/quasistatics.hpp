#pragma once

#include <span>
#include <string>
#include <vector>

#include "morphwheel/params.hpp"

namespace morphwheel::quasistatics {

/// Restoring force of the silicone skin against axial compression, sampled
/// at increasing length change (cm).
class SiliconeForceTable {
public:
    /// Throws DomainError unless samples are nonempty, strictly increasing in
    /// length change, nonincreasing in force and nonnegative in force.
    explicit SiliconeForceTable(std::vector<ForceSample> samples);

    std::span<const ForceSample> samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }

    SiliconeForceTable scaled(double factor) const;

private:
    std::vector<ForceSample> samples_;
};

struct TorqueEntry {
    double module_length = 0.0;     ///< mm
    double axial_force = 0.0;       ///< N, total over the three screws
    double per_motor_torque = 0.0;  ///< N*mm
};

struct TorqueProfile {
    std::vector<TorqueEntry> entries;
    double peak_torque = 0.0;
    std::size_t peak_index = 0;
};

/// Torque that served to select the platform motors in the prototype.
inline constexpr double kReferenceMotorThreshold = 500.0;  // N*mm

/// 1 kg*cm expressed in N*mm.
inline constexpr double kKgCmToNmm = 9.80665 * 10.0;

struct MotorCheck {
    double peak_torque = 0.0;
    double stall_torque = 0.0;
    double margin = 1.0;
    double ratio = 0.0;  ///< peak / stall
    bool passes = false;
    double reference_threshold = kReferenceMotorThreshold;
    bool stall_exceeds_reference = false;
    std::string note;
};

/// The eight measured samples of the prototype's silicone skin.
SiliconeForceTable default_force_table();

/// Override from p.force_table when present, otherwise the default.
SiliconeForceTable force_table_for(const DesignParams& p);

/// Piecewise-linear lookup, clamped to the end samples outside the table.
double silicone_force(const SiliconeForceTable& table, double length_change_cm);

/// Raising-load torque of a square-thread power screw.
double screw_torque(double axial_force, double lead, double mean_diameter, double friction);

/// Quasi-static motor torque along transform_profile(p, steps). The axial
/// silicone load is shared equally by the three platform screws.
TorqueProfile torque_profile(const DesignParams& p, const SiliconeForceTable& table, int steps);

MotorCheck motor_check(const TorqueProfile& profile, double stall_torque, double margin);

} // namespace morphwheel::quasistatics
