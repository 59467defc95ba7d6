#include "morphwheel/keyframes.hpp"

#include <cmath>

namespace morphwheel::wheelgeom {
namespace {

using Json = nlohmann::ordered_json;

Json point(const Point3& p) { return Json::array({p[0], p[1], p[2]}); }

Point3 polar(double radius, double azimuth, double z) {
    return {radius * std::cos(azimuth), radius * std::sin(azimuth), z};
}

} // namespace

Keyframe make_keyframe(const DesignParams& p, const TransformState& state, int step) {
    Keyframe frame;
    frame.step = step;
    frame.state = state;
    const double half_length = state.module_length / 2.0;
    frame.plate_z = {-half_length, 0.0, half_length};

    const int spokes = p.wheel.spoke_pairs;
    const double hub = p.wheel.hub_offset;
    const double h = state.axial_half_separation;
    for (int j = 0; j < spokes; ++j) {
        const double azimuth = 2.0 * std::numbers::pi * j / spokes;
        frame.rods.push_back({azimuth, polar(hub, azimuth, -h), polar(state.wheel_radius, azimuth, 0.0),
                              polar(hub, azimuth, h)});
    }

    const int samples = spokes * kRimSamplesPerSector;
    for (int i = 0; i <= samples; ++i) {
        const double azimuth = 2.0 * std::numbers::pi * (i % samples) / samples;
        frame.rim.push_back(polar(state.wheel_radius, azimuth, 0.0));
    }
    return frame;
}

nlohmann::ordered_json keyframes_to_json(const std::vector<Keyframe>& frames) {
    Json doc;
    doc["schema_version"] = kKeyframeSchemaVersion;
    doc["units"] = {{"length", "mm"}, {"angle", "rad"}};
    doc["frame"] = "z along module axis, origin at the middle plate";
    Json list = Json::array();
    for (const auto& f : frames) {
        Json rods = Json::array();
        for (const auto& r : f.rods) {
            rods.push_back({{"azimuth", r.azimuth},
                            {"lower_end", point(r.lower_end)},
                            {"hinge", point(r.hinge)},
                            {"upper_end", point(r.upper_end)}});
        }
        Json rim = Json::array();
        for (const auto& v : f.rim) rim.push_back(point(v));
        list.push_back({{"step", f.step},
                        {"module_length", f.state.module_length},
                        {"axial_half_separation", f.state.axial_half_separation},
                        {"wheel_radius", f.state.wheel_radius},
                        {"trigger_mode", std::string(to_string(f.state.trigger_mode))},
                        {"plates",
                         {{"lower_z", f.plate_z[0]}, {"middle_z", f.plate_z[1]}, {"upper_z", f.plate_z[2]}}},
                        {"rods", std::move(rods)},
                        {"rim", std::move(rim)}});
    }
    doc["keyframes"] = std::move(list);
    return doc;
}

std::string keyframes_document(const DesignParams& p, const std::vector<TransformState>& states) {
    std::vector<Keyframe> frames;
    frames.reserve(states.size());
    for (std::size_t i = 0; i < states.size(); ++i)
        frames.push_back(make_keyframe(p, states[i], static_cast<int>(i)));
    return keyframes_to_json(frames).dump(1) + "\n";
}

} // namespace morphwheel::wheelgeom
