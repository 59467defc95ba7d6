#include <algorithm>
#include <charconv>
#include <cmath>
#include <future>
#include <thread>

#include <fmt/format.h>

#include "fields.hpp"
#include "morphwheel/report.hpp"

namespace morphwheel::cli {
namespace {

double parse_double(std::string_view text, std::string_view what) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty())
        throw DomainError(fmt::format("sweep range: cannot parse {} '{}'", what, text));
    return value;
}

std::optional<double> objective_value(const DesignCard& card, Objective objective) {
    switch (objective) {
    case Objective::MinReducedLength: return card.lengths.reduced;
    case Objective::MaxWheelRadius: return card.max_wheel_radius;
    case Objective::MinPeakTorque: return card.peak_torque;
    }
    return std::nullopt;
}

bool better(double candidate, double incumbent, Objective objective) {
    return objective == Objective::MaxWheelRadius ? candidate > incumbent : candidate < incumbent;
}

std::string cell(const std::optional<double>& v) { return v ? fmt::format("{:.9g}", *v) : std::string(); }

} // namespace

std::string_view to_string(Objective objective) {
    switch (objective) {
    case Objective::MinReducedLength: return "min_reduced_length";
    case Objective::MaxWheelRadius: return "max_wheel_radius";
    case Objective::MinPeakTorque: return "min_peak_torque";
    }
    return "unknown";
}

Objective parse_objective(std::string_view text) {
    for (auto o : {Objective::MinReducedLength, Objective::MaxWheelRadius, Objective::MinPeakTorque})
        if (to_string(o) == text) return o;
    throw DomainError(fmt::format(
        "unknown objective '{}' (expected min_reduced_length, max_wheel_radius or min_peak_torque)", text));
}

SweepSpec parse_sweep_range(std::string_view parameter_path, std::string_view range, Objective objective) {
    const auto first = range.find(':');
    const auto second = first == std::string_view::npos ? first : range.find(':', first + 1);
    if (second == std::string_view::npos) throw DomainError(fmt::format("sweep range '{}' is not A:B:N", range));

    SweepSpec spec;
    spec.parameter_path = std::string(parameter_path);
    spec.objective = objective;
    spec.start = parse_double(range.substr(0, first), "start");
    spec.stop = parse_double(range.substr(first + 1, second - first - 1), "stop");
    const double steps = parse_double(range.substr(second + 1), "steps");
    if (steps != std::floor(steps) || steps < 2 || steps > 1e6)
        throw DomainError("sweep range: steps must be an integer ≥ 2");
    spec.steps = static_cast<int>(steps);
    if (spec.start == spec.stop) throw DomainError("sweep range: start and stop must differ");
    return spec;
}

std::vector<std::string> parameter_paths() {
    std::vector<std::string> out;
    for (const auto& f : detail::fields()) out.push_back(f.path());
    return out;
}

double get_parameter(const DesignParams& p, std::string_view path) {
    const auto* field = detail::find_field(path);
    if (!field) throw DomainError(fmt::format("unknown parameter path '{}'", path));
    return field->get(p);
}

void set_parameter(DesignParams& p, std::string_view path, double value) {
    const auto* field = detail::find_field(path);
    if (!field) throw DomainError(fmt::format("unknown parameter path '{}'", path));
    if (field->kind == detail::FieldKind::Count) {
        const double rounded = std::round(value);
        if (std::abs(value - rounded) > 1e-9 || std::abs(rounded) > 1e9)
            throw DomainError(fmt::format("parameter '{}' is a count; {} is not an integer", path, value));
        value = rounded;
    }
    field->set(p, value);
}

SweepResult run_sweep(const DesignParams& base, const SweepSpec& spec, int steps) {
    if (spec.steps < 2) throw DomainError("sweep needs at least 2 grid points");
    if (spec.start == spec.stop) throw DomainError("sweep start and stop must differ");
    if (!detail::find_field(spec.parameter_path))
        throw DomainError(fmt::format("unknown parameter path '{}'", spec.parameter_path));

    SweepResult result;
    result.spec = spec;
    result.rows.resize(static_cast<std::size_t>(spec.steps));

    const int last = spec.steps - 1;
    auto evaluate = [&](std::size_t i) {
        SweepRow& row = result.rows[i];
        row.index = i;
        row.value = i == static_cast<std::size_t>(last)
                        ? spec.stop
                        : spec.start + (spec.stop - spec.start) * static_cast<double>(i) / last;
        DesignParams p = base;
        set_parameter(p, spec.parameter_path, row.value);
        row.valid = validate(p).valid();
        if (!row.valid) return;
        row.card = evaluate_design(p, steps);
        row.objective = objective_value(*row.card, spec.objective);
    };

    // Grid points are independent; each worker fills a disjoint stride of rows.
    const std::size_t n = result.rows.size();
    const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, n);
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < n; i += workers) evaluate(i);
        }));
    }
    for (auto& job : jobs) job.get();

    for (const auto& row : result.rows) {
        if (!row.objective) continue;
        if (!result.best_index || better(*row.objective, *result.rows[*result.best_index].objective, spec.objective))
            result.best_index = row.index;
    }
    return result;
}

std::string sweep_csv(const SweepResult& result) {
    std::string out = fmt::format(
        "index,{},valid,elongated_length_mm,reduced_length_mm,reduction_ratio,reduction_ok,"
        "chassis_diameter_mm,rod_max_mm,max_wheel_radius_mm,curved_rod_levels,peak_torque_Nmm,motor_ok,"
        "objective_{}\n",
        result.spec.parameter_path, to_string(result.spec.objective));
    for (const auto& row : result.rows) {
        out += fmt::format("{},{:.9g},{}", row.index, row.value, row.valid ? 1 : 0);
        if (!row.card) {
            out += ",,,,,,,,,,,\n";
            continue;
        }
        const auto& c = *row.card;
        out += fmt::format(",{},{},{},{},{},{},{},{},{},{},{}\n", cell(c.lengths.elongated), cell(c.lengths.reduced),
                           cell(c.lengths.reduction_ratio), c.reduction_ok ? 1 : 0, cell(c.chassis.chassis_diameter),
                           c.rods ? cell(c.rods->rod_max) : std::string(), cell(c.max_wheel_radius),
                           c.rim ? std::to_string(c.rim->levels) : std::string(), cell(c.peak_torque),
                           c.motor ? (c.motor->passes ? "1" : "0") : "", cell(row.objective));
    }
    return out;
}

} // namespace morphwheel::cli
