#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "morphwheel/keyframes.hpp"
#include "morphwheel/report.hpp"

namespace morphwheel::cli {
namespace {

struct LoadedConfig {
    std::string digest;
    LoadResult loaded;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(fmt::format("cannot read '{}'", path));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(fmt::format("cannot write '{}'", path));
    out << contents;
    out.flush();
    if (!out) throw IoError(fmt::format("failed writing '{}'", path));
}

LoadedConfig read_config(const std::string& path, const std::optional<std::string>& force_table_path) {
    std::string text = read_file(path);
    std::string digest_input = text;
    LoadedConfig cfg;
    cfg.loaded = load(text);
    if (force_table_path) {
        const std::string table_text = read_file(*force_table_path);
        digest_input += table_text;
        cfg.loaded.params.force_table = load_force_table(table_text);
        cfg.loaded.validation = validate(cfg.loaded.params);
    }
    cfg.digest = sha256_hex(digest_input);
    spdlog::debug("loaded {} ({} violations, {} warnings)", path, cfg.loaded.validation.violations.size(),
                  cfg.loaded.validation.warnings.size());
    return cfg;
}

RunReport start_report(std::string command, const LoadedConfig& cfg) {
    RunReport r;
    r.command = std::move(command);
    r.inputs_digest = cfg.digest;
    r.validation = cfg.loaded.validation;
    r.warnings = cfg.loaded.validation.warnings;
    r.exit_code = r.validation.valid() ? kExitOk : kExitValidation;
    return r;
}

} // namespace

std::string profile_csv(const std::vector<wheelgeom::TransformState>& states,
                        const quasistatics::TorqueProfile& torque) {
    if (states.size() != torque.entries.size()) throw Error("profile and torque lengths differ");
    std::string out = "step,module_length_mm,h_mm,wheel_radius_mm,trigger_mode,axial_force_N,per_motor_torque_Nmm\n";
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto& s = states[i];
        const auto& t = torque.entries[i];
        out += fmt::format("{},{:.6f},{:.6f},{:.6f},{},{:.6f},{:.6f}\n", i, s.module_length, s.axial_half_separation,
                           s.wheel_radius, wheelgeom::to_string(s.trigger_mode), t.axial_force, t.per_motor_torque);
    }
    return out;
}

std::string keyframe_path_for(const std::string& csv_path) {
    std::filesystem::path path(csv_path);
    path.replace_extension(".keyframes.json");
    return path.string();
}

RunReport cmd_validate(const std::string& config_path) {
    const auto cfg = read_config(config_path, std::nullopt);
    return start_report("validate", cfg);
}

RunReport cmd_report(const std::string& config_path, int steps, const std::optional<std::string>& force_table_path) {
    const auto cfg = read_config(config_path, force_table_path);
    RunReport r = start_report("report", cfg);
    if (!r.validation.valid()) return r;
    r.outputs["card"] = to_json(evaluate_design(cfg.loaded.params, steps));
    return r;
}

RunReport cmd_profile(const std::string& config_path, int steps, const std::string& out_path,
                      const std::optional<std::string>& force_table_path) {
    if (steps < 2) throw DomainError("--steps must be at least 2");
    if (out_path.empty()) throw DomainError("profile needs --out PATH");
    const auto cfg = read_config(config_path, force_table_path);
    RunReport r = start_report("profile", cfg);
    if (!r.validation.valid()) return r;

    const auto& p = cfg.loaded.params;
    const auto states = wheelgeom::transform_profile(p, steps);
    const auto torque = quasistatics::torque_profile(p, quasistatics::force_table_for(p), steps);

    const std::string keyframe_path = keyframe_path_for(out_path);
    write_file(out_path, profile_csv(states, torque));
    write_file(keyframe_path, wheelgeom::keyframes_document(p, states));
    spdlog::info("wrote {} rows to {} and {}", states.size(), out_path, keyframe_path);

    r.outputs["csv_path"] = out_path;
    r.outputs["keyframe_path"] = keyframe_path;
    r.outputs["rows"] = states.size();
    r.outputs["final_wheel_radius_mm"] = states.back().wheel_radius;
    r.outputs["peak_per_motor_torque_Nmm"] = torque.peak_torque;
    r.outputs["peak_index"] = torque.peak_index;
    return r;
}

RunReport cmd_sweep(const std::string& config_path, const SweepSpec& sweep, const std::string& out_path, int steps,
                    const std::optional<std::string>& force_table_path) {
    if (out_path.empty()) throw DomainError("sweep needs --out PATH");
    const auto cfg = read_config(config_path, force_table_path);
    RunReport r = start_report("sweep", cfg);
    if (!r.validation.valid()) return r;

    const auto result = run_sweep(cfg.loaded.params, sweep, steps);
    write_file(out_path, sweep_csv(result));

    r.outputs["csv_path"] = out_path;
    r.outputs["parameter"] = sweep.parameter_path;
    r.outputs["objective"] = std::string(to_string(sweep.objective));
    r.outputs["rows"] = result.rows.size();
    if (result.best_index) {
        const auto& best = result.rows[*result.best_index];
        r.outputs["best_index"] = best.index;
        r.outputs["best_value"] = best.value;
        r.outputs["best_objective"] = *best.objective;
    } else {
        r.outputs["best_index"] = nullptr;
    }
    return r;
}

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
    try {
        RunReport report;
        switch (inv.verb) {
        case Verb::Validate: report = cmd_validate(inv.config_path); break;
        case Verb::Report: report = cmd_report(inv.config_path, inv.steps, inv.force_table_path); break;
        case Verb::Profile:
            report = cmd_profile(inv.config_path, inv.steps, inv.out_path, inv.force_table_path);
            break;
        case Verb::Sweep:
            if (!inv.sweep) throw DomainError("sweep needs --sweep-param and --sweep-range");
            report = cmd_sweep(inv.config_path, *inv.sweep, inv.out_path, inv.steps, inv.force_table_path);
            break;
        }
        out << (inv.json ? to_json(report).dump(2) + "\n" : render_text(report));
        return report.exit_code;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const InfeasibleError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

} // namespace morphwheel::cli
