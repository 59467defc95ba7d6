#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "morphwheel/params.hpp"

namespace morphwheel::wheelgeom {

/// Chassis rods slide freely (crawler) or are locked as spokes.
enum class TriggerMode { Telescopic, Rigid };

std::string_view to_string(TriggerMode mode);

/// One instant of the crawler to wheel transformation.
struct TransformState {
    double module_length = 0.0;
    double axial_half_separation = 0.0;  ///< h
    double wheel_radius = 0.0;           ///< R
    TriggerMode trigger_mode = TriggerMode::Telescopic;
};

struct CurvedRodPlan {
    double arc_per_sector = 0.0;  ///< S_1
    int levels = 1;               ///< N_cr
    double matched_curvature = 0.0;
};

/// Tolerance used by transform_profile when classifying the trigger state.
inline constexpr double kTriggerTolerance = 1e-9;

/// Radial reach of a hinged rod pair of half-length l whose ends sit h from
/// the mid-plane on a hub of radius br: sqrt(l^2 - h^2) + br.
double bulge_radius(double rod_half_length, double half_separation, double hub_offset);

/// Sweeps the module from fully elongated to fully reduced in `steps` evenly
/// spaced states. The rod-pair half-separation moves linearly from l to the
/// minimum half-separation over the same sweep.
std::vector<TransformState> transform_profile(const DesignParams& p, int steps);

/// Wheel radius at full compression.
double max_wheel_radius(const DesignParams& p);

/// Telescoping levels a curved rim rod needs so the deployed rods cover the
/// rim arc between adjacent spokes.
CurvedRodPlan curved_rod_plan(double wheel_radius, const DesignParams& p);
CurvedRodPlan curved_rod_plan(double wheel_radius, int spoke_pairs, double curved_rod_length,
                              double hinge_allowance);

/// Telescopic while the module sits at its elongated length, Rigid once it
/// has compressed. Throws DomainError for lengths beyond elongated + tolerance.
TriggerMode trigger_state(double module_length, double elongated, double tolerance);

} // namespace morphwheel::wheelgeom
