#pragma once

#include <array>
#include <vector>

#include "morphwheel/params.hpp"

namespace morphwheel::bending {

/// Azimuths of the three platform screws.
inline constexpr std::array<double, 3> kScrewAzimuths = {
    0.0, 2.0 * std::numbers::pi / 3.0, 4.0 * std::numbers::pi / 3.0};

/// Largest total bend accepted by distribute_bend.
inline constexpr double kMaxTotalBend = std::numbers::pi / 2;
/// Largest tilt of a single plate interface.
inline constexpr double kMaxPlateTilt = std::numbers::pi / 4;

using Extensions = std::array<double, 3>;

struct BendState {
    double total_bend = 0.0;
    double direction = 0.0;  ///< [0, 2pi)
    double per_plate_angle = 0.0;
    std::vector<double> plate_angles;  ///< cumulative tilt at each interface
    Extensions screw_extensions{};     ///< signed, screws at 0, 120, 240 deg
};

struct ChassisGeometry {
    double chassis_diameter = 0.0;        ///< D
    double triangle_base = 0.0;           ///< B_l
    double screw_offset_component = 0.0;  ///< V_s
};

struct RodSizing {
    double half_expansion = 0.0;  ///< M_rl
    double rod_max = 0.0;         ///< T_lmax
    double rod_min = 0.0;         ///< T_lmin
    double outer_segment = 0.0;   ///< E_rl
    double inner_segment = 0.0;   ///< I_rl
};

struct PlatformTilt {
    double tilt = 0.0;       ///< >= 0
    double direction = 0.0;  ///< [0, 2pi), 0 when tilt is 0
};

/// Uniform split of total_bend over plate_count interfaces: the k-th
/// interface carries k * total / count and the last one exactly total.
std::vector<double> distribute_bend(double total_bend, int plate_count);

/// Radius of the circle through the three screw axes.
double screw_circle_radius(const PlatformSpec& platform);

/// First-order inverse kinematics of a three-screw tilt platform:
/// e_i = r_s sin(tilt) cos(alpha_i - direction).
Extensions screw_extensions(double plate_tilt, double direction, double screw_circle_radius);

/// Inverse of screw_extensions. Throws DomainError when the triple does not
/// sum to zero within tolerance or exceeds the reachable amplitude.
PlatformTilt bend_from_extensions(const Extensions& extensions, double screw_circle_radius,
                                  double tolerance = 1e-9);

BendState bend_state(const DesignParams& p, double total_bend, double direction);

ChassisGeometry chassis_diameter(const DesignParams& p, double per_plate_angle);
ChassisGeometry chassis_diameter(double screw_spacing, double max_screw_extension,
                                 double per_plate_angle);

/// Telescopic chassis rod lengths for a given per-plate angle and chassis
/// diameter. Throws InfeasibleError if the nested length would be <= 0.
RodSizing rod_sizing(const DesignParams& p, double per_plate_angle, double chassis_diameter);
RodSizing rod_sizing_from_half_expansion(double half_expansion, double per_plate_angle,
                                         double chassis_diameter);

/// Wraps an angle into [0, 2pi).
double canonical_angle(double angle);

} // namespace morphwheel::bending
