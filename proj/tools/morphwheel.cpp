// Command-line front end: validate, report, profile, sweep.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "morphwheel/report.hpp"

namespace {

// MORPHWHEEL_LOG=trace|debug|info|warn|error|off, default warn. Logs go to
// stderr so stdout stays a clean report.
void init_logging() {
    auto logger = spdlog::stderr_color_mt("morphwheel");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char* env = std::getenv("MORPHWHEEL_LOG")) spdlog::set_level(spdlog::level::from_str(env));
}

} // namespace

int main(int argc, char** argv) {
    using namespace morphwheel::cli;
    init_logging();

    CLI::App app{"Design checks for a crawler-to-wheel transforming module"};
    app.require_subcommand(1);

    Invocation inv;
    std::string sweep_param;
    std::string sweep_range;
    std::string objective = "min_reduced_length";
    std::string force_table;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", inv.config_path, "Design config (YAML)")->required();
        sub->add_flag("--json", inv.json, "Print the run report as JSON");
    };
    auto add_model = [&](CLI::App* sub) {
        sub->add_option("--steps", inv.steps, "Transformation profile steps")->check(CLI::Range(2, 1000000));
        sub->add_option("--force-table", force_table, "Silicone force table override (YAML)");
    };

    auto* validate = app.add_subcommand("validate", "Check design invariants and reported values");
    add_common(validate);

    auto* report = app.add_subcommand("report", "Print the full design card");
    add_common(report);
    add_model(report);

    auto* profile = app.add_subcommand("profile", "Write the transformation profile CSV and keyframes");
    add_common(profile);
    add_model(profile);
    profile->add_option("--out", inv.out_path, "CSV output path; keyframes go next to it")->required();

    auto* sweep = app.add_subcommand("sweep", "Evaluate the design card over a parameter grid");
    add_common(sweep);
    add_model(sweep);
    sweep->add_option("--out", inv.out_path, "CSV output path")->required();
    sweep->add_option("--sweep-param", sweep_param, "Dotted parameter path, e.g. screw.screw_level_length")
        ->required();
    sweep->add_option("--sweep-range", sweep_range, "START:STOP:N")->required();
    sweep->add_option("--objective", objective, "min_reduced_length | max_wheel_radius | min_peak_torque");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitIo;
    }

    if (!force_table.empty()) inv.force_table_path = force_table;
    if (validate->parsed()) inv.verb = Verb::Validate;
    if (report->parsed()) inv.verb = Verb::Report;
    if (profile->parsed()) inv.verb = Verb::Profile;
    if (sweep->parsed()) {
        inv.verb = Verb::Sweep;
        try {
            inv.sweep = parse_sweep_range(sweep_param, sweep_range, parse_objective(objective));
        } catch (const morphwheel::Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitIo;
        }
    }
    return run(inv, std::cout, std::cerr);
}
