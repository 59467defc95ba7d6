#include "morphwheel/bending.hpp"

#include <cmath>

#include <fmt/format.h>

namespace morphwheel::bending {

using std::numbers::pi;

double canonical_angle(double angle) {
    double wrapped = std::fmod(angle, 2.0 * pi);
    if (wrapped < 0.0) wrapped += 2.0 * pi;
    // fmod of a tiny negative angle can round up to exactly 2pi.
    if (wrapped >= 2.0 * pi) wrapped = 0.0;
    return wrapped;
}

std::vector<double> distribute_bend(double total_bend, int plate_count) {
    if (plate_count < 1) throw DomainError("plate_count must be at least 1");
    if (!(std::abs(total_bend) <= kMaxTotalBend))
        throw DomainError(fmt::format("total bend {} rad outside [-pi/2, pi/2]", total_bend));

    const double per_plate = total_bend / plate_count;
    std::vector<double> angles(plate_count);
    for (int k = 0; k < plate_count; ++k) angles[k] = (k + 1) * per_plate;
    angles.back() = total_bend;
    return angles;
}

double screw_circle_radius(const PlatformSpec& platform) {
    // Circumradius of the equilateral triangle of screw axes.
    return platform.screw_circle_spacing / std::sqrt(3.0);
}

Extensions screw_extensions(double plate_tilt, double direction, double radius) {
    if (!(radius > 0.0)) throw DomainError("screw circle radius must be positive");
    if (!(std::abs(plate_tilt) <= kMaxPlateTilt))
        throw DomainError(fmt::format("plate tilt {} rad outside [-pi/4, pi/4]", plate_tilt));

    const double amplitude = radius * std::sin(plate_tilt);
    Extensions out{};
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = amplitude * std::cos(kScrewAzimuths[i] - direction);
    return out;
}

PlatformTilt bend_from_extensions(const Extensions& e, double radius, double tolerance) {
    if (!(radius > 0.0)) throw DomainError("screw circle radius must be positive");
    const double scale = std::max({1.0, std::abs(e[0]), std::abs(e[1]), std::abs(e[2])});
    if (!(std::abs(e[0] + e[1] + e[2]) <= tolerance * scale))
        throw DomainError("incompatible extension triple: extensions must sum to zero");

    // Project onto the first harmonic over the three azimuths.
    double x = 0.0;
    double y = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        x += e[i] * std::cos(kScrewAzimuths[i]);
        y += e[i] * std::sin(kScrewAzimuths[i]);
    }
    x *= 2.0 / 3.0;
    y *= 2.0 / 3.0;

    const double amplitude = std::hypot(x, y);
    if (amplitude == 0.0) return {0.0, 0.0};
    const double s = amplitude / radius;
    if (s > std::sin(kMaxPlateTilt) * (1.0 + 1e-12))
        throw DomainError("extensions exceed the reachable platform tilt");
    return {std::asin(std::min(s, 1.0)), canonical_angle(std::atan2(y, x))};
}

BendState bend_state(const DesignParams& p, double total_bend, double direction) {
    BendState state;
    state.total_bend = total_bend;
    state.plate_angles = distribute_bend(total_bend, p.platform.plate_count);
    state.per_plate_angle = total_bend / p.platform.plate_count;
    state.direction = canonical_angle(direction);
    state.screw_extensions =
        screw_extensions(state.per_plate_angle, state.direction, screw_circle_radius(p.platform));
    return state;
}

ChassisGeometry chassis_diameter(double screw_spacing, double max_screw_extension,
                                 double per_plate_angle) {
    if (!(per_plate_angle >= 0.0 && per_plate_angle <= kMaxPlateTilt))
        throw DomainError("per-plate angle must lie in [0, pi/4]");
    if (!(screw_spacing >= 0.0) || !(max_screw_extension >= 0.0))
        throw DomainError("chassis lengths must be nonnegative");

    ChassisGeometry g;
    g.screw_offset_component = screw_spacing * std::cos(pi / 3.0);
    g.triangle_base = max_screw_extension * std::sin(per_plate_angle);
    g.chassis_diameter = 2.0 * (g.triangle_base + g.screw_offset_component);
    return g;
}

ChassisGeometry chassis_diameter(const DesignParams& p, double per_plate_angle) {
    return chassis_diameter(p.platform.screw_circle_spacing, p.platform.max_screw_extension,
                            per_plate_angle);
}

RodSizing rod_sizing_from_half_expansion(double half_expansion, double per_plate_angle,
                                         double chassis_diameter) {
    if (!(per_plate_angle > 0.0 && per_plate_angle <= kMaxPlateTilt))
        throw DomainError("per-plate angle must lie in (0, pi/4]");
    if (!(half_expansion > 0.0) || !(chassis_diameter > 0.0))
        throw DomainError("rod sizing inputs must be positive");

    RodSizing r;
    r.half_expansion = half_expansion;
    r.rod_max = 2.0 * half_expansion;
    r.rod_min = r.rod_max - chassis_diameter * std::sin(per_plate_angle);
    r.outer_segment = r.rod_min;
    r.inner_segment = r.rod_max - r.rod_min;
    if (!(r.rod_min > 0.0)) {
        throw InfeasibleError(fmt::format(
            "rod nested length {:.6g} mm is not positive: bend demand exceeds rod length", r.rod_min));
    }
    return r;
}

RodSizing rod_sizing(const DesignParams& p, double per_plate_angle, double chassis_diameter) {
    const auto& pl = p.platform;
    const double half_expansion =
        (pl.joint_mount_width + pl.universal_joint_diameter / 2.0 + pl.max_screw_extension) *
        std::sin(per_plate_angle);
    return rod_sizing_from_half_expansion(half_expansion, per_plate_angle, chassis_diameter);
}

} // namespace morphwheel::bending
