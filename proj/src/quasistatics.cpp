#include "morphwheel/quasistatics.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "morphwheel/wheelgeom.hpp"

namespace morphwheel::quasistatics {

SiliconeForceTable::SiliconeForceTable(std::vector<ForceSample> samples) : samples_(std::move(samples)) {
    if (samples_.empty()) throw DomainError("force table must not be empty");
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const auto& s = samples_[i];
        if (!(s.length_change_cm >= 0.0) || !(s.force_n >= 0.0))
            throw DomainError(fmt::format("force table row {} must be nonnegative", i));
        if (i == 0) continue;
        if (!(s.length_change_cm > samples_[i - 1].length_change_cm))
            throw DomainError(fmt::format("force table row {}: length change must strictly increase", i));
        if (!(s.force_n <= samples_[i - 1].force_n))
            throw DomainError(fmt::format("force table row {}: force must not increase", i));
    }
}

SiliconeForceTable SiliconeForceTable::scaled(double factor) const {
    std::vector<ForceSample> out(samples_.begin(), samples_.end());
    for (auto& s : out) s.force_n *= factor;
    return SiliconeForceTable(std::move(out));
}

SiliconeForceTable default_force_table() {
    return SiliconeForceTable({{1.0, 3.4}, {2.0, 3.2}, {3.0, 2.5}, {4.0, 2.1},
                               {5.0, 1.5}, {6.0, 1.0}, {7.0, 0.6}, {8.0, 0.1}});
}

SiliconeForceTable force_table_for(const DesignParams& p) {
    return p.force_table.empty() ? default_force_table() : SiliconeForceTable(p.force_table);
}

double silicone_force(const SiliconeForceTable& table, double length_change_cm) {
    if (!(length_change_cm >= 0.0)) throw DomainError("length change must be nonnegative");
    const auto s = table.samples();
    if (length_change_cm <= s.front().length_change_cm) return s.front().force_n;
    if (length_change_cm >= s.back().length_change_cm) return s.back().force_n;

    const auto hi = std::upper_bound(s.begin(), s.end(), length_change_cm,
                                     [](double x, const ForceSample& row) { return x < row.length_change_cm; });
    const auto lo = hi - 1;
    if (length_change_cm == lo->length_change_cm) return lo->force_n;
    const double t = (length_change_cm - lo->length_change_cm) / (hi->length_change_cm - lo->length_change_cm);
    return lo->force_n + t * (hi->force_n - lo->force_n);
}

double screw_torque(double axial_force, double lead, double mean_diameter, double friction) {
    if (!(axial_force >= 0.0)) throw DomainError("axial force must be nonnegative");
    if (!(lead > 0.0) || !(mean_diameter > 0.0)) throw DomainError("lead and mean diameter must be positive");
    if (!(friction >= 0.0 && friction < 1.0)) throw DomainError("friction must lie in [0, 1)");

    const double pi_d = std::numbers::pi * mean_diameter;
    const double denom = pi_d - friction * lead;
    if (!(denom > 0.0)) throw DomainError("non-physical screw geometry: pi * d_m <= mu * lead");
    return axial_force * (mean_diameter / 2.0) * (lead + std::numbers::pi * friction * mean_diameter) / denom;
}

TorqueProfile torque_profile(const DesignParams& p, const SiliconeForceTable& table, int steps) {
    const auto states = wheelgeom::transform_profile(p, steps);
    const double elongated = states.front().module_length;

    TorqueProfile profile;
    profile.entries.reserve(states.size());
    for (const auto& s : states) {
        TorqueEntry e;
        e.module_length = s.module_length;
        // The skin is unstretched until the module starts to compress.
        if (s.trigger_mode == wheelgeom::TriggerMode::Rigid) {
            const double compression_cm = (elongated - s.module_length) / 10.0;
            e.axial_force = silicone_force(table, compression_cm);
        }
        e.per_motor_torque = screw_torque(e.axial_force / 3.0, p.screw_lead, p.screw_mean_diameter,
                                          p.screw_friction);
        profile.entries.push_back(e);
    }

    const auto peak = std::max_element(profile.entries.begin(), profile.entries.end(),
                                       [](const TorqueEntry& a, const TorqueEntry& b) {
                                           return a.per_motor_torque < b.per_motor_torque;
                                       });
    profile.peak_index = static_cast<std::size_t>(peak - profile.entries.begin());
    profile.peak_torque = peak->per_motor_torque;
    return profile;
}

MotorCheck motor_check(const TorqueProfile& profile, double stall_torque, double margin) {
    if (!(margin > 0.0 && margin <= 1.0)) throw DomainError("margin must lie in (0, 1]");
    if (!(stall_torque > 0.0)) throw DomainError("stall torque must be positive");

    MotorCheck check;
    check.peak_torque = profile.peak_torque;
    check.stall_torque = stall_torque;
    check.margin = margin;
    check.ratio = profile.peak_torque / stall_torque;
    check.passes = profile.peak_torque <= margin * stall_torque;
    check.stall_exceeds_reference = stall_torque > check.reference_threshold;
    check.note = fmt::format(
        "quasi-static peak {:.4g} N·mm vs stall {:.6g} N·mm (ratio {:.4g}, margin {:.3g}); "
        "prototype motor selection threshold {:.6g} N·mm from dynamic simulation, stall is {} it",
        check.peak_torque, stall_torque, check.ratio, margin, check.reference_threshold,
        check.stall_exceeds_reference ? "above" : "not above");
    return check;
}

} // namespace morphwheel::quasistatics
