#include "morphwheel/telescopic.hpp"

#include <cmath>
#include <stdexcept>

namespace morphwheel::telescopic {
namespace {

void require_target(double target_ratio) {
    if (!(target_ratio > 0.0 && target_ratio <= 1.0))
        throw DomainError("target ratio must lie in (0, 1]");
}

double ratio_at(int n_levels, double screw_level_length, double residual) {
    return module_lengths(n_levels, screw_level_length, residual).reduction_ratio;
}

} // namespace

ModuleLengths module_lengths(int n_levels, double screw_level_length, double residual) {
    ModuleLengths out;
    out.elongated = 2.0 * n_levels * screw_level_length + residual;
    out.reduced = 2.0 * screw_level_length + residual;
    out.reduction_ratio = out.reduced / out.elongated;
    return out;
}

ModuleLengths module_lengths(const DesignParams& p) {
    require_valid(p);
    return module_lengths(p.screw.n_levels, p.screw.screw_level_length, residual_length(p.layout));
}

bool check_reduction(const ModuleLengths& lengths, double target_ratio) {
    return lengths.reduction_ratio <= target_ratio;
}

bool check_reduction(double reduced, double elongated, double target_ratio) {
    if (!(elongated > 0.0) || !(reduced > 0.0)) throw DomainError("lengths must be positive");
    return reduced / elongated <= target_ratio;
}

bool check_reduction(const DesignParams& p) {
    return check_reduction(module_lengths(p), kDefaultReductionTarget);
}

ScrewLengthSolution solve_min_screw_length(int n_levels, double residual, double target_ratio) {
    require_target(target_ratio);
    if (n_levels < 1) throw DomainError("n_levels must be at least 1");
    if (!(residual > 0.0)) throw DomainError("residual length must be positive");
    if (target_ratio == 1.0) return {0.0, true};

    // (2 S + K) / (2 N S + K) <= t  <=>  S >= K (1 - t) / (2 (N t - 1))
    const double denom = n_levels * target_ratio - 1.0;
    if (denom <= 0.0) throw InfeasibleError("infeasible: not enough levels for this ratio");
    double length = residual * (1.0 - target_ratio) / (2.0 * denom);

    // Cross-check against the defining inequality: the closed form must meet
    // the target and a 0.1 mm shorter screw must not.
    const double achieved = ratio_at(n_levels, length, residual);
    if (std::abs(achieved - target_ratio) > 1e-9)
        throw std::logic_error("closed-form screw length does not reproduce the target ratio");
    if (length > 0.1 && ratio_at(n_levels, length - 0.1, residual) <= target_ratio)
        throw std::logic_error("closed-form screw length is not minimal");
    // Nudge up by ulps if rounding left the ratio a hair above the target.
    while (ratio_at(n_levels, length, residual) > target_ratio)
        length = std::nextafter(length, INFINITY);
    return {length, false};
}

ScrewLengthSolution solve_min_screw_length(const DesignParams& p, double target_ratio) {
    require_valid(p);
    return solve_min_screw_length(p.screw.n_levels, residual_length(p.layout), target_ratio);
}

int solve_min_levels(double screw_level_length, double residual, double target_ratio) {
    require_target(target_ratio);
    if (!(screw_level_length > 0.0)) throw DomainError("screw level length must be positive");
    if (!(residual >= 0.0)) throw DomainError("residual length must be nonnegative");

    // N >= (2 S + K (1 - t)) / (2 S t), then settle rounding at the boundary.
    const double bound = (2.0 * screw_level_length + residual * (1.0 - target_ratio)) /
                         (2.0 * screw_level_length * target_ratio);
    if (bound > 1e9) throw InfeasibleError("required level count exceeds 1e9");
    int n = std::max(1, static_cast<int>(std::ceil(bound)));
    while (n > 1 && ratio_at(n - 1, screw_level_length, residual) <= target_ratio) --n;
    while (ratio_at(n, screw_level_length, residual) > target_ratio) ++n;
    return n;
}

int solve_min_levels(const DesignParams& p, double target_ratio) {
    require_valid(p);
    return solve_min_levels(p.screw.screw_level_length, residual_length(p.layout), target_ratio);
}

ScrewDiameterLadder diameter_ladder(const TelescopicScrewSpec& screw) {
    if (screw.n_levels < 1) throw DomainError("n_levels must be at least 1");
    const double step = screw.thread_width + screw.thread_clearance + screw.stopper_width;
    ScrewDiameterLadder ladder;
    ladder.degenerate = !(step > 0.0);
    ladder.diameters.reserve(screw.n_levels);
    ladder.diameters.push_back(screw.base_screw_diameter);
    for (int k = 1; k < screw.n_levels; ++k) ladder.diameters.push_back(ladder.diameters.back() + step);
    return ladder;
}

ScrewDiameterLadder diameter_ladder(const DesignParams& p) { return diameter_ladder(p.screw); }

int shaft_levels(int n_levels) {
    if (n_levels < 1) throw DomainError("n_levels must be at least 1");
    return n_levels - 1;
}

} // namespace morphwheel::telescopic
