#pragma once

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "morphwheel/params.hpp"
#include "morphwheel/wheelgeom.hpp"

namespace morphwheel::wheelgeom {

inline constexpr int kKeyframeSchemaVersion = 1;
/// Rim polyline vertices between two adjacent spokes.
inline constexpr int kRimSamplesPerSector = 8;

using Point3 = std::array<double, 3>;

/// A chassis rod pair: two rods hinged at `hinge`, ends on the hub.
struct RodPair {
    double azimuth = 0.0;
    Point3 lower_end{};
    Point3 hinge{};
    Point3 upper_end{};
};

/// Geometry of one TransformState in the module frame: z along the module
/// axis, origin on the middle plate.
struct Keyframe {
    int step = 0;
    TransformState state;
    std::array<double, 3> plate_z{};  ///< lower terminal, middle, upper terminal
    std::vector<RodPair> rods;
    std::vector<Point3> rim;  ///< closed polyline, first vertex repeated last
};

Keyframe make_keyframe(const DesignParams& p, const TransformState& state, int step);

/// Serialises keyframes as a versioned JSON document.
nlohmann::ordered_json keyframes_to_json(const std::vector<Keyframe>& frames);
std::string keyframes_document(const DesignParams& p, const std::vector<TransformState>& states);

} // namespace morphwheel::wheelgeom
