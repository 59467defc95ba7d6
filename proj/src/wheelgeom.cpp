#include "morphwheel/wheelgeom.hpp"

#include <cmath>

#include <fmt/format.h>

#include "morphwheel/telescopic.hpp"

namespace morphwheel::wheelgeom {

std::string_view to_string(TriggerMode mode) {
    return mode == TriggerMode::Telescopic ? "telescopic" : "rigid";
}

double bulge_radius(double rod_half_length, double half_separation, double hub_offset) {
    if (!(rod_half_length > 0.0)) throw DomainError("rod half-length must be positive");
    if (!(half_separation >= 0.0)) throw DomainError("half-separation must be nonnegative");
    if (!(hub_offset >= 0.0)) throw DomainError("hub offset must be nonnegative");
    if (half_separation > rod_half_length) {
        throw DomainError(fmt::format("half-separation {} mm exceeds rod half-length {} mm: rod cannot stretch",
                                      half_separation, rod_half_length));
    }
    // Factored form keeps the closure (R - br)^2 + h^2 = l^2 tight near h = l.
    const double l = rod_half_length;
    const double h = half_separation;
    return std::sqrt((l - h) * (l + h)) + hub_offset;
}

TriggerMode trigger_state(double module_length, double elongated, double tolerance) {
    if (!(module_length > 0.0) || !(elongated > 0.0)) throw DomainError("lengths must be positive");
    if (!(tolerance >= 0.0)) throw DomainError("tolerance must be nonnegative");
    if (module_length > elongated + tolerance) {
        throw DomainError(fmt::format("module length {} mm exceeds elongated length {} mm", module_length,
                                      elongated));
    }
    return std::abs(module_length - elongated) <= tolerance ? TriggerMode::Telescopic : TriggerMode::Rigid;
}

std::vector<TransformState> transform_profile(const DesignParams& p, int steps) {
    if (steps < 2) throw DomainError("a transformation profile needs at least 2 steps");
    const auto lengths = telescopic::module_lengths(p);
    if (!(lengths.elongated > lengths.reduced))
        throw InfeasibleError("module cannot compress: elongated and reduced lengths coincide");

    const double l = p.wheel.rod_half_length;
    const double h_min = min_half_separation(p);
    if (!(h_min < l)) {
        throw InfeasibleError(fmt::format(
            "minimum half-separation {} mm is not below rod half-length {} mm: rods cannot bulge", h_min, l));
    }

    std::vector<TransformState> states(static_cast<std::size_t>(steps));
    const int last = steps - 1;
    for (int k = 0; k <= last; ++k) {
        const double t = static_cast<double>(k) / last;
        TransformState& s = states[k];
        if (k == 0) {
            s.module_length = lengths.elongated;
            s.axial_half_separation = l;
        } else if (k == last) {
            s.module_length = lengths.reduced;
            s.axial_half_separation = h_min;
        } else {
            s.module_length = lengths.elongated - t * (lengths.elongated - lengths.reduced);
            s.axial_half_separation = l - t * (l - h_min);
        }
        s.wheel_radius = bulge_radius(l, s.axial_half_separation, p.wheel.hub_offset);
        s.trigger_mode = trigger_state(s.module_length, lengths.elongated, kTriggerTolerance);
    }
    return states;
}

double max_wheel_radius(const DesignParams& p) {
    return bulge_radius(p.wheel.rod_half_length, min_half_separation(p), p.wheel.hub_offset);
}

CurvedRodPlan curved_rod_plan(double wheel_radius, int spoke_pairs, double curved_rod_length,
                              double hinge_allowance) {
    if (!(wheel_radius > 0.0)) throw DomainError("wheel radius must be positive");
    if (spoke_pairs < 1) throw DomainError("spoke_pairs must be positive");
    const double usable = curved_rod_length - hinge_allowance;
    if (!(usable > 0.0)) throw DomainError("curved rod length must exceed the hinge allowance");

    CurvedRodPlan plan;
    plan.arc_per_sector = 2.0 * std::numbers::pi * wheel_radius / spoke_pairs;
    plan.matched_curvature = wheel_radius;

    // Rounded up: a short cover leaves a gap in the rim.
    const double ratio = plan.arc_per_sector / usable;
    if (ratio > 1e9) throw InfeasibleError("curved rod plan needs more than 1e9 levels");
    int n = std::max(1, static_cast<int>(std::ceil(ratio)));
    while (n > 1 && (n - 1) * usable >= plan.arc_per_sector) --n;
    while (n * usable < plan.arc_per_sector) ++n;
    plan.levels = n;
    return plan;
}

CurvedRodPlan curved_rod_plan(double wheel_radius, const DesignParams& p) {
    return curved_rod_plan(wheel_radius, p.wheel.spoke_pairs, p.wheel.curved_rod_length,
                           p.wheel.hinge_allowance);
}

} // namespace morphwheel::wheelgeom
