#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "morphwheel/error.hpp"

// Units throughout: millimetres, radians, newtons, newton-millimetres.
// The silicone force table is the single exception and keeps centimetres on
// its abscissa.

namespace morphwheel {

/// Nested telescopic power screw stack driving one platform corner.
struct TelescopicScrewSpec {
    int n_levels = 4;                  ///< N
    double screw_level_length = 0.0;   ///< S_L, one level including its stopper
    double stopper_width = 0.0;        ///< S_w
    double thread_width = 0.0;         ///< T_w
    double thread_clearance = 0.0;     ///< T_c
    double base_screw_diameter = 0.0;  ///< D_1, innermost screw
    int shaft_levels = 3;              ///< N_s, must equal N - 1
    double stopper_height = 2.0;       ///< axial height of one stopper

    bool operator==(const TelescopicScrewSpec&) const = default;
};

/// Fixed-length stations along the module axis.
struct ModuleLayout {
    double joint_height = 0.0;           ///< J_H
    double joint_arm_height = 0.0;       ///< U_AH
    double drive_assembly_length = 0.0;  ///< D_L
    double tensioner_length = 0.0;       ///< T_L
    double plate_clearance = 0.0;        ///< C_i

    bool operator==(const ModuleLayout&) const = default;
};

struct PlatformSpec {
    double screw_circle_spacing = 0.0;      ///< L, centre distance of adjacent screws
    double max_screw_extension = 0.0;       ///< M_st
    double joint_mount_width = 0.0;         ///< W_d
    double universal_joint_diameter = 0.0;  ///< d
    int plate_count = 4;                    ///< cascaded tilt interfaces

    bool operator==(const PlatformSpec&) const = default;
};

struct WheelSpec {
    double rod_half_length = 0.0;    ///< l, one rod of a hinged chassis pair
    double hub_offset = 0.0;         ///< br
    double curved_rod_length = 0.0;  ///< L_cr
    double hinge_allowance = 0.0;    ///< h_0
    int spoke_pairs = 6;
    /// Half-separation of the rod pair ends at full compression. When unset
    /// it defaults to the stopper stack height (stopper_height x n_levels).
    std::optional<double> min_half_separation;

    bool operator==(const WheelSpec&) const = default;
};

/// Design goals evaluated by the report.
struct DesignTargets {
    double reduction_ratio = 0.5;                 ///< reduced / elongated must not exceed this
    double platform_bend = std::numbers::pi / 4;  ///< total bend of one cascaded platform stack
    double motor_margin = 1.0;                    ///< usable fraction of stall torque

    bool operator==(const DesignTargets&) const = default;
};

/// Values quoted for an existing build. They are never used as inputs; the
/// validator compares them against what the model computes and emits a
/// warning for every disagreement.
struct ReportedValues {
    std::optional<double> elongated_length;
    std::optional<double> reduced_length;
    std::optional<double> chassis_diameter;
    std::optional<double> half_rod_expansion;
    std::optional<double> inner_rod_length;
    std::optional<double> outer_rod_length;
    std::optional<double> wheel_diameter;

    bool operator==(const ReportedValues&) const = default;
    bool empty() const { return *this == ReportedValues{}; }
};

struct ForceSample {
    double length_change_cm = 0.0;
    double force_n = 0.0;

    bool operator==(const ForceSample&) const = default;
};

struct DesignParams {
    TelescopicScrewSpec screw;
    ModuleLayout layout;
    PlatformSpec platform;
    WheelSpec wheel;
    double motor_stall_torque = 0.0;  ///< N*mm
    double screw_lead = 2.0;          ///< mm per revolution
    double screw_friction = 0.2;
    double screw_mean_diameter = 8.0;
    DesignTargets targets;
    ReportedValues reported;
    /// Replaces the built-in silicone force table when non-empty.
    std::vector<ForceSample> force_table;

    bool operator==(const DesignParams&) const = default;
};

/// One broken structural invariant.
struct Violation {
    std::string field;       ///< dotted config path
    std::string constraint;  ///< the constraint that does not hold
    bool operator==(const Violation&) const = default;
};

/// Machine-readable record of a disagreement between a reported value and
/// the model, or of a degenerate but admissible input.
struct Warning {
    std::string code;
    std::string field;
    std::optional<double> reported;
    std::optional<double> computed;
    std::string message;
    bool operator==(const Warning&) const = default;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<Warning> warnings;

    bool valid() const { return violations.empty(); }
    bool has_warning(std::string_view code) const;
    bool mentions(std::string_view text) const;
    bool operator==(const ValidationReport&) const = default;
};

/// Thrown by operations that refuse invalid designs.
class ValidationError : public Error {
public:
    explicit ValidationError(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Checks every structural invariant and, when the design is valid, compares
/// any reported values against the model.
ValidationReport validate(const DesignParams& p);

/// Throws ValidationError unless validate(p) is clean of violations.
void require_valid(const DesignParams& p);

/// Residual length K = 2 J_H + C_i + D_L + T_L that does not telescope.
double residual_length(const ModuleLayout& layout);

/// Minimum rod-pair half-separation, applying the stopper-stack default.
double min_half_separation(const DesignParams& p);

struct LoadResult {
    DesignParams params;
    ValidationReport validation;
};

/// Parses a YAML design document. Throws ConfigError on malformed text,
/// unknown keys, or missing required keys; invariant violations are only
/// reported in the returned validation.
LoadResult load(std::string_view config_text);
LoadResult load_file(const std::string& path);

/// Emits a document that load() reads back to an identical DesignParams.
std::string serialize(const DesignParams& p);

/// Reads a standalone force table document (key `silicone_force_table`).
std::vector<ForceSample> load_force_table(std::string_view text);

} // namespace morphwheel
