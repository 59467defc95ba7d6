#pragma once

#include <vector>

#include "morphwheel/params.hpp"

namespace morphwheel::telescopic {

/// Axial length of the module at both ends of its stroke.
struct ModuleLengths {
    double elongated = 0.0;  ///< L_E, every screw level extended
    double reduced = 0.0;    ///< L_R, every level nested
    double reduction_ratio = 1.0;
};

struct ScrewDiameterLadder {
    std::vector<double> diameters;  ///< innermost first
    bool degenerate = false;        ///< zero per-level increment, cannot nest
};

struct ScrewLengthSolution {
    double screw_level_length = 0.0;
    /// Set when the target is met by any positive length (target ratio 1).
    bool degenerate = false;
};

inline constexpr double kDefaultReductionTarget = 0.5;

/// Throws ValidationError when p is invalid.
ModuleLengths module_lengths(const DesignParams& p);

/// Raw length arithmetic on (N, S_L, K) without validation.
ModuleLengths module_lengths(int n_levels, double screw_level_length, double residual);

bool check_reduction(const ModuleLengths& lengths, double target_ratio = kDefaultReductionTarget);
bool check_reduction(double reduced, double elongated, double target_ratio = kDefaultReductionTarget);
bool check_reduction(const DesignParams& p);

/// Smallest level length S_L reaching target_ratio with the configured level
/// count and residual length. Throws InfeasibleError when N * target <= 1.
ScrewLengthSolution solve_min_screw_length(const DesignParams& p, double target_ratio);
ScrewLengthSolution solve_min_screw_length(int n_levels, double residual, double target_ratio);

/// Smallest level count reaching target_ratio with the configured level length.
int solve_min_levels(const DesignParams& p, double target_ratio);
int solve_min_levels(double screw_level_length, double residual, double target_ratio);

ScrewDiameterLadder diameter_ladder(const DesignParams& p);
ScrewDiameterLadder diameter_ladder(const TelescopicScrewSpec& screw);

/// Telescopic levels of the internal common shaft.
int shaft_levels(int n_levels);
inline int shaft_levels(const DesignParams& p) { return shaft_levels(p.screw.n_levels); }

} // namespace morphwheel::telescopic
