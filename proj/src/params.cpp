#include "morphwheel/params.hpp"

#include <cmath>

#include <fmt/format.h>

#include "morphwheel/bending.hpp"
#include "morphwheel/telescopic.hpp"
#include "morphwheel/wheelgeom.hpp"

namespace morphwheel {
namespace {

/// Reported values closer than this to the model are not flagged.
constexpr double kReportedTolerance = 0.5;  // mm
constexpr double kIdentityTolerance = 1e-9;

class Checker {
public:
    explicit Checker(std::vector<Violation>& out) : out_(out) {}

    void require(bool holds, std::string field, std::string constraint) {
        if (!holds) out_.push_back({std::move(field), std::move(constraint)});
    }
    // Written as !(x > 0) so NaN fails too.
    void positive(double value, const std::string& field) {
        require(value > 0.0, field, field + " > 0");
    }
    void nonnegative(double value, const std::string& field) {
        require(value >= 0.0, field, field + " ≥ 0");
    }

private:
    std::vector<Violation>& out_;
};

void check_invariants(const DesignParams& p, std::vector<Violation>& out) {
    Checker c(out);

    const auto& s = p.screw;
    c.require(s.n_levels >= 1, "screw.n_levels", "n_levels ≥ 1");
    c.positive(s.screw_level_length, "screw.screw_level_length");
    c.positive(s.stopper_width, "screw.stopper_width");
    c.positive(s.thread_width, "screw.thread_width");
    c.nonnegative(s.thread_clearance, "screw.thread_clearance");
    c.positive(s.base_screw_diameter, "screw.base_screw_diameter");
    c.positive(s.stopper_height, "screw.stopper_height");
    c.require(s.shaft_levels == s.n_levels - 1, "screw.shaft_levels", "shaft_levels = n_levels − 1");

    const auto& l = p.layout;
    c.positive(l.joint_height, "layout.joint_height");
    c.positive(l.joint_arm_height, "layout.joint_arm_height");
    c.positive(l.drive_assembly_length, "layout.drive_assembly_length");
    c.positive(l.tensioner_length, "layout.tensioner_length");
    c.positive(l.plate_clearance, "layout.plate_clearance");
    c.require(std::abs(l.joint_height - 2.0 * l.joint_arm_height) <= kIdentityTolerance * std::max(1.0, l.joint_height),
              "layout.joint_height", "joint_height = 2 × joint_arm_height");

    const auto& pl = p.platform;
    c.positive(pl.screw_circle_spacing, "platform.screw_circle_spacing");
    c.positive(pl.max_screw_extension, "platform.max_screw_extension");
    c.positive(pl.joint_mount_width, "platform.joint_mount_width");
    c.positive(pl.universal_joint_diameter, "platform.universal_joint_diameter");
    c.require(pl.plate_count >= 1, "platform.plate_count", "plate_count ≥ 1");

    const auto& w = p.wheel;
    c.positive(w.rod_half_length, "wheel.rod_half_length");
    c.nonnegative(w.hub_offset, "wheel.hub_offset");
    c.positive(w.curved_rod_length, "wheel.curved_rod_length");
    c.nonnegative(w.hinge_allowance, "wheel.hinge_allowance");
    c.require(w.hinge_allowance < w.curved_rod_length, "wheel.hinge_allowance",
              "hinge_allowance < curved_rod_length");
    c.require(w.spoke_pairs >= 3, "wheel.spoke_pairs", "spoke_pairs ≥ 3");
    if (w.min_half_separation) c.nonnegative(*w.min_half_separation, "wheel.min_half_separation");

    c.positive(p.motor_stall_torque, "drive.motor_stall_torque");
    c.positive(p.screw_lead, "drive.screw_lead");
    c.require(p.screw_friction >= 0.0 && p.screw_friction < 1.0, "drive.screw_friction",
              "0 ≤ screw_friction < 1");
    c.positive(p.screw_mean_diameter, "drive.screw_mean_diameter");
    c.require(std::numbers::pi * p.screw_mean_diameter > p.screw_friction * p.screw_lead,
              "drive.screw_mean_diameter", "π × screw_mean_diameter > screw_friction × screw_lead");

    const auto& t = p.targets;
    c.require(t.reduction_ratio > 0.0 && t.reduction_ratio <= 1.0, "targets.reduction_ratio",
              "0 < reduction_ratio ≤ 1");
    c.require(t.platform_bend >= 0.0 && t.platform_bend <= bending::kMaxTotalBend,
              "targets.platform_bend", "0 ≤ platform_bend ≤ π/2");
    c.require(t.motor_margin > 0.0 && t.motor_margin <= 1.0, "targets.motor_margin",
              "0 < motor_margin ≤ 1");
    if (pl.plate_count >= 1) {
        c.require(t.platform_bend / pl.plate_count <= bending::kMaxPlateTilt, "targets.platform_bend",
                  "platform_bend / plate_count ≤ π/4");
    }

    if (!p.force_table.empty()) {
        for (std::size_t i = 0; i < p.force_table.size(); ++i) {
            const auto field = fmt::format("silicone_force_table[{}]", i);
            c.nonnegative(p.force_table[i].length_change_cm, field + ".length_change_cm");
            c.nonnegative(p.force_table[i].force_n, field + ".force_n");
            if (i > 0) {
                c.require(p.force_table[i].length_change_cm > p.force_table[i - 1].length_change_cm,
                          field, "length_change strictly increasing");
                c.require(p.force_table[i].force_n <= p.force_table[i - 1].force_n, field,
                          "force nonincreasing");
            }
        }
    }
}

void compare(std::vector<Warning>& out, std::string code, std::string field,
             const std::optional<double>& reported, double computed, std::string_view what) {
    if (!reported || std::abs(*reported - computed) <= kReportedTolerance) return;
    out.push_back({std::move(code), std::move(field), reported, computed,
                   fmt::format("reported {} {:.6g} mm differs from the model value {:.6g} mm", what,
                               *reported, computed)});
}

void check_consistency(const DesignParams& p, std::vector<Warning>& out) {
    const auto& rep = p.reported;
    const auto lengths = telescopic::module_lengths(p.screw.n_levels, p.screw.screw_level_length,
                                                    residual_length(p.layout));

    if (rep.elongated_length && rep.reduced_length) {
        const double reported_stroke = *rep.elongated_length - *rep.reduced_length;
        const double model_stroke = lengths.elongated - lengths.reduced;
        if (std::abs(reported_stroke - model_stroke) > kReportedTolerance) {
            out.push_back(
                {"reported_lengths_inconsistent", "reported.reduced_length", reported_stroke,
                 model_stroke,
                 fmt::format("reported elongated {:.6g} mm and reduced {:.6g} mm imply a stroke of "
                             "{:.6g} mm, but elongated − reduced = 2·S_L·(N−1) = {:.6g} mm for "
                             "any residual length",
                             *rep.elongated_length, *rep.reduced_length, reported_stroke,
                             model_stroke)});
        }
    }
    compare(out, "reported_elongated_length_mismatch", "reported.elongated_length",
            rep.elongated_length, lengths.elongated, "elongated length");
    compare(out, "reported_reduced_length_mismatch", "reported.reduced_length", rep.reduced_length,
            lengths.reduced, "reduced length");

    if (!telescopic::check_reduction(lengths, p.targets.reduction_ratio)) {
        const int needed = telescopic::solve_min_levels(p.screw.screw_level_length,
                                                        residual_length(p.layout),
                                                        p.targets.reduction_ratio);
        out.push_back({"reduction_target_unmet", "screw.n_levels", std::nullopt,
                       lengths.reduction_ratio,
                       fmt::format("reduction ratio {:.4f} exceeds the target {:.4g}; {} levels "
                                   "would be needed at screw_level_length {:.6g} mm",
                                   lengths.reduction_ratio, p.targets.reduction_ratio, needed,
                                   p.screw.screw_level_length)});
    }

    const double per_plate = p.targets.platform_bend / p.platform.plate_count;
    const auto chassis = bending::chassis_diameter(p, per_plate);
    compare(out, "reported_chassis_diameter_mismatch", "reported.chassis_diameter",
            rep.chassis_diameter, chassis.chassis_diameter, "chassis diameter");

    if (per_plate > 0.0) {
        try {
            const auto rods = bending::rod_sizing(p, per_plate, chassis.chassis_diameter);
            compare(out, "reported_half_rod_expansion_mismatch", "reported.half_rod_expansion",
                    rep.half_rod_expansion, rods.half_expansion, "half rod expansion");
            compare(out, "reported_inner_rod_length_mismatch", "reported.inner_rod_length",
                    rep.inner_rod_length, rods.inner_segment, "inner rod length");
            compare(out, "reported_outer_rod_length_mismatch", "reported.outer_rod_length",
                    rep.outer_rod_length, rods.outer_segment, "outer rod length");
        } catch (const InfeasibleError&) {
            // Surfaced by the design report.
        }
    }

    if (min_half_separation(p) <= p.wheel.rod_half_length) {
        compare(out, "reported_wheel_diameter_mismatch", "reported.wheel_diameter",
                rep.wheel_diameter, 2.0 * wheelgeom::max_wheel_radius(p), "wheel diameter");
    }
}

} // namespace

bool ValidationReport::has_warning(std::string_view code) const {
    for (const auto& w : warnings)
        if (w.code == code) return true;
    return false;
}

bool ValidationReport::mentions(std::string_view text) const {
    for (const auto& v : violations)
        if (v.constraint.find(text) != std::string::npos || v.field.find(text) != std::string::npos)
            return true;
    return false;
}

namespace {
std::string summarize(const ValidationReport& report) {
    std::string out = "invalid design:";
    for (const auto& v : report.violations) out += " [" + v.field + ": " + v.constraint + "]";
    return out;
}
} // namespace

ValidationError::ValidationError(ValidationReport report)
    : Error(summarize(report)), report_(std::move(report)) {}

ValidationReport validate(const DesignParams& p) {
    ValidationReport report;
    check_invariants(p, report.violations);
    if (report.valid()) check_consistency(p, report.warnings);
    return report;
}

void require_valid(const DesignParams& p) {
    ValidationReport report;
    check_invariants(p, report.violations);
    if (!report.valid()) throw ValidationError(std::move(report));
}

double residual_length(const ModuleLayout& layout) {
    return 2.0 * layout.joint_height + layout.plate_clearance + layout.drive_assembly_length +
           layout.tensioner_length;
}

double min_half_separation(const DesignParams& p) {
    return p.wheel.min_half_separation.value_or(p.screw.stopper_height * p.screw.n_levels);
}

} // namespace morphwheel
