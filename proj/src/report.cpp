#include "morphwheel/report.hpp"

#include <cmath>
#include <sstream>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "morphwheel/keyframes.hpp"

namespace morphwheel::cli {
namespace {

using Json = nlohmann::ordered_json;

template <class T>
Json optional_json(const std::optional<T>& value) {
    return value ? Json(*value) : Json(nullptr);
}

Json check(std::string name, bool passed, std::string detail) {
    return {{"name", std::move(name)}, {"passed", passed}, {"detail", std::move(detail)}};
}

} // namespace

DesignCard evaluate_design(const DesignParams& p, int steps) {
    require_valid(p);
    DesignCard card;

    card.lengths = telescopic::module_lengths(p);
    card.reduction_target = p.targets.reduction_ratio;
    card.reduction_ok = telescopic::check_reduction(card.lengths, card.reduction_target);
    try {
        card.min_screw_length = telescopic::solve_min_screw_length(p, card.reduction_target);
    } catch (const InfeasibleError& e) {
        card.infeasible.push_back({"min_screw_length", e.what()});
    }
    try {
        card.min_levels = telescopic::solve_min_levels(p, card.reduction_target);
    } catch (const InfeasibleError& e) {
        card.infeasible.push_back({"min_levels", e.what()});
    }
    card.ladder = telescopic::diameter_ladder(p);
    card.shaft_levels = telescopic::shaft_levels(p);

    card.platform_bend = p.targets.platform_bend;
    card.plate_angles = bending::distribute_bend(p.targets.platform_bend, p.platform.plate_count);
    card.per_plate_angle = p.targets.platform_bend / p.platform.plate_count;
    card.chassis = bending::chassis_diameter(p, card.per_plate_angle);
    try {
        card.rods = bending::rod_sizing(p, card.per_plate_angle, card.chassis.chassis_diameter);
    } catch (const Error& e) {
        card.infeasible.push_back({"rod_sizing", e.what()});
    }

    card.profile_steps = steps;
    try {
        const auto states = wheelgeom::transform_profile(p, steps);
        card.max_wheel_radius = states.back().wheel_radius;
        card.rim = wheelgeom::curved_rod_plan(*card.max_wheel_radius, p);

        const auto torque = quasistatics::torque_profile(p, quasistatics::force_table_for(p), steps);
        card.peak_torque = torque.peak_torque;
        card.peak_index = torque.peak_index;
        card.peak_axial_force = torque.entries[torque.peak_index].axial_force;
        card.motor = quasistatics::motor_check(torque, p.motor_stall_torque, p.targets.motor_margin);
    } catch (const InfeasibleError& e) {
        card.infeasible.push_back({"transformation", e.what()});
    }
    return card;
}

nlohmann::ordered_json to_json(const DesignCard& c) {
    Json tele = {
        {"elongated_length_mm", c.lengths.elongated},
        {"reduced_length_mm", c.lengths.reduced},
        {"reduction_ratio", c.lengths.reduction_ratio},
        {"reduction_target", c.reduction_target},
        {"reduction_ok", c.reduction_ok},
        {"min_screw_level_length_mm",
         c.min_screw_length ? Json(c.min_screw_length->screw_level_length) : Json(nullptr)},
        {"min_screw_level_length_degenerate", c.min_screw_length && c.min_screw_length->degenerate},
        {"min_levels", optional_json(c.min_levels)},
        {"diameter_ladder_mm", c.ladder.diameters},
        {"diameter_ladder_degenerate", c.ladder.degenerate},
        {"shaft_levels", c.shaft_levels},
    };

    Json rods = nullptr;
    if (c.rods) {
        rods = {{"half_expansion_mm", c.rods->half_expansion},
                {"rod_max_mm", c.rods->rod_max},
                {"rod_min_mm", c.rods->rod_min},
                {"outer_segment_mm", c.rods->outer_segment},
                {"inner_segment_mm", c.rods->inner_segment}};
    }
    Json bend = {
        {"platform_bend_rad", c.platform_bend},
        {"per_plate_angle_rad", c.per_plate_angle},
        {"plate_angles_rad", c.plate_angles},
        {"chassis_diameter_mm", c.chassis.chassis_diameter},
        {"triangle_base_mm", c.chassis.triangle_base},
        {"screw_offset_component_mm", c.chassis.screw_offset_component},
        {"rod_sizing", std::move(rods)},
    };

    Json rim = nullptr;
    if (c.rim) {
        rim = {{"arc_per_sector_mm", c.rim->arc_per_sector},
               {"levels", c.rim->levels},
               {"matched_curvature_mm", c.rim->matched_curvature}};
    }
    Json wheel = {
        {"max_wheel_radius_mm", optional_json(c.max_wheel_radius)},
        {"max_wheel_diameter_mm", c.max_wheel_radius ? Json(2.0 * *c.max_wheel_radius) : Json(nullptr)},
        {"curved_rod_plan", std::move(rim)},
    };

    Json motor = nullptr;
    if (c.motor) {
        motor = {{"peak_torque_Nmm", c.motor->peak_torque},
                 {"stall_torque_Nmm", c.motor->stall_torque},
                 {"margin", c.motor->margin},
                 {"ratio", c.motor->ratio},
                 {"passes", c.motor->passes},
                 {"reference_threshold_Nmm", c.motor->reference_threshold},
                 {"stall_exceeds_reference", c.motor->stall_exceeds_reference},
                 {"note", c.motor->note}};
    }
    Json torque = {
        {"profile_steps", c.profile_steps},
        {"peak_per_motor_torque_Nmm", optional_json(c.peak_torque)},
        {"peak_index", optional_json(c.peak_index)},
        {"peak_axial_force_N", optional_json(c.peak_axial_force)},
        {"motor_check", std::move(motor)},
    };

    Json checks = Json::array();
    checks.push_back(check("reduction_ratio", c.reduction_ok,
                           fmt::format("{:.4f} ≤ {:.4g}", c.lengths.reduction_ratio, c.reduction_target)));
    checks.push_back(check("diameter_ladder_nests", !c.ladder.degenerate, "per-level increment > 0"));
    checks.push_back(check("rod_sizing_feasible", c.rods.has_value(), "nested rod length > 0"));
    checks.push_back(check("transformation_feasible", c.max_wheel_radius.has_value(),
                           "module compresses and rods bulge"));
    checks.push_back(check("motor_torque", c.motor && c.motor->passes,
                           c.motor ? fmt::format("peak {:.4g} ≤ {:.3g} × stall {:.6g} N·mm", c.motor->peak_torque,
                                                 c.motor->margin, c.motor->stall_torque)
                                   : std::string("not evaluated")));

    Json infeasible = Json::array();
    for (const auto& f : c.infeasible) infeasible.push_back({{"section", f.section}, {"message", f.message}});

    return {{"telescopic", std::move(tele)}, {"bending", std::move(bend)}, {"wheel", std::move(wheel)},
            {"torque", std::move(torque)},   {"checks", std::move(checks)}, {"infeasible", std::move(infeasible)}};
}

nlohmann::ordered_json to_json(const ValidationReport& report) {
    Json violations = Json::array();
    for (const auto& v : report.violations) violations.push_back({{"field", v.field}, {"constraint", v.constraint}});
    return {{"valid", report.valid()}, {"violations", std::move(violations)}};
}

namespace {
Json warnings_json(const std::vector<Warning>& warnings) {
    Json out = Json::array();
    for (const auto& w : warnings) {
        out.push_back({{"code", w.code},
                       {"field", w.field},
                       {"reported", optional_json(w.reported)},
                       {"computed", optional_json(w.computed)},
                       {"message", w.message}});
    }
    return out;
}
} // namespace

nlohmann::ordered_json to_json(const RunReport& r) {
    return {{"command", r.command},       {"inputs_digest", r.inputs_digest},
            {"exit_code", r.exit_code},   {"validation", to_json(r.validation)},
            {"outputs", r.outputs},       {"warnings", warnings_json(r.warnings)}};
}

namespace {

std::string num(const Json& v, const char* spec = "{:.6g}") {
    if (v.is_null()) return "n/a";
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    return fmt::format(fmt::runtime(spec), v.get<double>());
}

void line(std::ostringstream& out, std::string_view label, const std::string& value) {
    out << fmt::format("  {:<28}{}\n", label, value);
}

void render_card(std::ostringstream& out, const Json& card) {
    const auto& t = card["telescopic"];
    out << "telescopic screw stack\n";
    line(out, "elongated length", num(t["elongated_length_mm"], "{:.3f}") + " mm");
    line(out, "reduced length", num(t["reduced_length_mm"], "{:.3f}") + " mm");
    line(out, "reduction ratio", num(t["reduction_ratio"], "{:.4f}") + " (target ≤ " + num(t["reduction_target"]) + ")");
    line(out, "min screw level length", num(t["min_screw_level_length_mm"], "{:.4f}") + " mm");
    line(out, "min levels", num(t["min_levels"]));
    std::string ladder;
    for (const auto& d : t["diameter_ladder_mm"]) ladder += (ladder.empty() ? "" : ", ") + num(d);
    line(out, "diameter ladder", ladder + " mm");
    line(out, "shaft levels", num(t["shaft_levels"]));

    const auto& b = card["bending"];
    out << "bending\n";
    line(out, "per-plate angle", num(b["per_plate_angle_rad"]) + " rad");
    line(out, "chassis diameter", num(b["chassis_diameter_mm"], "{:.3f}") + " mm");
    if (const auto& r = b["rod_sizing"]; !r.is_null()) {
        line(out, "half rod expansion", num(r["half_expansion_mm"], "{:.3f}") + " mm");
        line(out, "rod max / min", num(r["rod_max_mm"], "{:.3f}") + " / " + num(r["rod_min_mm"], "{:.3f}") + " mm");
        line(out, "outer / inner segment",
             num(r["outer_segment_mm"], "{:.3f}") + " / " + num(r["inner_segment_mm"], "{:.3f}") + " mm");
    }

    const auto& w = card["wheel"];
    out << "wheel\n";
    line(out, "max wheel radius", num(w["max_wheel_radius_mm"], "{:.3f}") + " mm");
    line(out, "max wheel diameter", num(w["max_wheel_diameter_mm"], "{:.3f}") + " mm");
    if (const auto& plan = w["curved_rod_plan"]; !plan.is_null()) {
        line(out, "rim arc per sector", num(plan["arc_per_sector_mm"], "{:.3f}") + " mm");
        line(out, "curved rod levels", num(plan["levels"]));
    }

    const auto& q = card["torque"];
    out << "torque\n";
    line(out, "peak per-motor torque", num(q["peak_per_motor_torque_Nmm"], "{:.4f}") + " N·mm at step " + num(q["peak_index"]));
    if (const auto& m = q["motor_check"]; !m.is_null()) {
        line(out, "stall torque", num(m["stall_torque_Nmm"]) + " N·mm");
        line(out, "peak / reference threshold",
             num(m["peak_torque_Nmm"], "{:.4f}") + " N·mm / " + num(m["reference_threshold_Nmm"]) + " N·mm");
    }

    out << "checks\n";
    for (const auto& c : card["checks"])
        line(out, c["name"].get<std::string>(), std::string(c["passed"].get<bool>() ? "[PASS] " : "[FAIL] ") +
                                                    c["detail"].get<std::string>());
    for (const auto& f : card["infeasible"])
        out << fmt::format("  infeasible: {}: {}\n", f["section"].get<std::string>(), f["message"].get<std::string>());
}

} // namespace

std::string render_text(const RunReport& r) {
    std::ostringstream out;
    out << "morphwheel " << r.command << "\n";
    out << "inputs sha256: " << r.inputs_digest << "\n";
    out << "validation: " << (r.validation.valid() ? "valid" : "INVALID") << "\n";
    for (const auto& v : r.validation.violations) out << "  violation: " << v.field << ": " << v.constraint << "\n";
    if (r.outputs.contains("card")) render_card(out, r.outputs["card"]);
    for (const auto& [key, value] : r.outputs.items()) {
        if (key == "card") continue;
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    if (!r.warnings.empty()) out << "warnings\n";
    for (const auto& w : r.warnings) out << "  [" << w.code << "] " << w.message << "\n";
    return out.str();
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int size = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &size, EVP_sha256(), nullptr) != 1)
        throw Error("sha256 digest failed");
    std::string hex;
    for (unsigned int i = 0; i < size; ++i) hex += fmt::format("{:02x}", digest[i]);
    return hex;
}

} // namespace morphwheel::cli
