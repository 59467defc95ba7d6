#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "morphwheel/bending.hpp"
#include "morphwheel/params.hpp"
#include "morphwheel/quasistatics.hpp"
#include "morphwheel/telescopic.hpp"
#include "morphwheel/wheelgeom.hpp"

namespace morphwheel::cli {

inline constexpr int kDefaultSteps = 101;

/// A quantity of the design card that could not be produced.
struct InfeasibleFlag {
    std::string section;
    std::string message;
    bool operator==(const InfeasibleFlag&) const = default;
};

/// Every derived quantity of one design, evaluated in a single pass.
struct DesignCard {
    telescopic::ModuleLengths lengths;
    double reduction_target = 0.5;
    bool reduction_ok = false;
    std::optional<telescopic::ScrewLengthSolution> min_screw_length;
    std::optional<int> min_levels;
    telescopic::ScrewDiameterLadder ladder;
    int shaft_levels = 0;

    double platform_bend = 0.0;
    double per_plate_angle = 0.0;
    std::vector<double> plate_angles;
    bending::ChassisGeometry chassis;
    std::optional<bending::RodSizing> rods;

    std::optional<double> max_wheel_radius;
    std::optional<wheelgeom::CurvedRodPlan> rim;

    int profile_steps = 0;
    std::optional<double> peak_torque;
    std::optional<std::size_t> peak_index;
    std::optional<double> peak_axial_force;
    std::optional<quasistatics::MotorCheck> motor;

    std::vector<InfeasibleFlag> infeasible;
};

/// Throws ValidationError when p is invalid. Sections that are infeasible
/// for a valid design are left empty and listed in `infeasible`.
DesignCard evaluate_design(const DesignParams& p, int steps = kDefaultSteps);

nlohmann::ordered_json to_json(const DesignCard& card);
nlohmann::ordered_json to_json(const ValidationReport& report);

struct RunReport {
    std::string command;
    std::string inputs_digest;  ///< sha256 of the config bytes
    ValidationReport validation;
    nlohmann::ordered_json outputs = nlohmann::ordered_json::object();
    std::vector<Warning> warnings;
    int exit_code = 0;
};

nlohmann::ordered_json to_json(const RunReport& report);
std::string render_text(const RunReport& report);

std::string sha256_hex(std::string_view bytes);

// ---------------------------------------------------------------------------
// Sweeps

enum class Objective { MinReducedLength, MaxWheelRadius, MinPeakTorque };

std::string_view to_string(Objective objective);
Objective parse_objective(std::string_view text);

struct SweepSpec {
    std::string parameter_path;
    double start = 0.0;
    double stop = 0.0;
    int steps = 2;
    Objective objective = Objective::MinReducedLength;
};

/// Parses "A:B:N". Throws DomainError on malformed text, steps < 2 or A == B.
SweepSpec parse_sweep_range(std::string_view parameter_path, std::string_view range,
                            Objective objective);

/// Dotted config paths accepted by set_parameter.
std::vector<std::string> parameter_paths();
double get_parameter(const DesignParams& p, std::string_view path);
/// Throws DomainError for unknown paths or non-integral values of count fields.
void set_parameter(DesignParams& p, std::string_view path, double value);

struct SweepRow {
    std::size_t index = 0;
    double value = 0.0;
    bool valid = false;
    std::optional<DesignCard> card;
    std::optional<double> objective;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepRow> rows;
    std::optional<std::size_t> best_index;
};

/// Evaluates every grid point independently; rows come back in grid order.
SweepResult run_sweep(const DesignParams& base, const SweepSpec& spec, int steps = kDefaultSteps);
std::string sweep_csv(const SweepResult& result);

// ---------------------------------------------------------------------------
// Profile files

std::string profile_csv(const std::vector<wheelgeom::TransformState>& states,
                        const quasistatics::TorqueProfile& torque);

/// Keyframe file written next to a profile CSV.
std::string keyframe_path_for(const std::string& csv_path);

// ---------------------------------------------------------------------------
// Commands

enum class Verb { Validate, Report, Profile, Sweep };

struct Invocation {
    Verb verb = Verb::Validate;
    std::string config_path;
    int steps = kDefaultSteps;
    std::string out_path;
    std::optional<SweepSpec> sweep;
    std::optional<std::string> force_table_path;
    bool json = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

RunReport cmd_validate(const std::string& config_path);
RunReport cmd_report(const std::string& config_path, int steps,
                     const std::optional<std::string>& force_table_path = std::nullopt);
RunReport cmd_profile(const std::string& config_path, int steps, const std::string& out_path,
                      const std::optional<std::string>& force_table_path = std::nullopt);
RunReport cmd_sweep(const std::string& config_path, const SweepSpec& sweep,
                    const std::string& out_path, int steps = kDefaultSteps,
                    const std::optional<std::string>& force_table_path = std::nullopt);

/// Runs a command, prints its report to `out` and errors to `err`, and
/// returns the process exit code.
int run(const Invocation& invocation, std::ostream& out, std::ostream& err);

} // namespace morphwheel::cli
