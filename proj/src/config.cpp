#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "fields.hpp"
#include "morphwheel/params.hpp"

namespace morphwheel {
namespace {

using detail::FieldDescriptor;
using detail::FieldKind;
using detail::Presence;

int line_of(const YAML::Node& node) {
    const auto mark = node.Mark();
    return mark.is_null() ? 0 : mark.line + 1;
}

double read_number(const YAML::Node& node, const std::string& field) {
    if (!node.IsScalar()) throw ConfigError(field, line_of(node), "expected a number");
    try {
        return node.as<double>();
    } catch (const YAML::BadConversion&) {
        throw ConfigError(field, line_of(node), "expected a number, got '" + node.Scalar() + "'");
    }
}

double read_field(const YAML::Node& node, const FieldDescriptor& field) {
    const double value = read_number(node, field.path());
    if (field.kind == FieldKind::Count) {
        if (!std::isfinite(value) || value != std::floor(value) || std::abs(value) > 1e9)
            throw ConfigError(field.path(), line_of(node), "expected an integer count");
    }
    return value;
}

bool section_required(std::string_view section) {
    for (const auto& field : detail::fields()) {
        if (field.section == section && field.presence == Presence::Required) return true;
    }
    return false;
}

std::vector<ForceSample> read_force_table(const YAML::Node& node) {
    const std::string key(detail::kForceTableKey);
    if (!node.IsSequence()) throw ConfigError(key, line_of(node), "expected a list of [cm, N] pairs");
    std::vector<ForceSample> samples;
    for (std::size_t i = 0; i < node.size(); ++i) {
        const YAML::Node row = node[i];
        const std::string field = key + "[" + std::to_string(i) + "]";
        if (!row.IsSequence() || row.size() != 2)
            throw ConfigError(field, line_of(row), "expected a [cm, N] pair");
        samples.push_back({read_number(row[0], field), read_number(row[1], field)});
    }
    if (samples.empty()) throw ConfigError(key, line_of(node), "force table must not be empty");
    return samples;
}

YAML::Node parse_document(std::string_view text) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::ParserException& e) {
        throw ConfigError("", e.mark.is_null() ? 0 : e.mark.line + 1, e.msg);
    }
    if (root.IsNull()) throw ConfigError("", 0, "empty document");
    if (!root.IsMap()) throw ConfigError("", line_of(root), "top level must be a mapping");
    return root;
}

DesignParams read_params(const YAML::Node& root) {
    DesignParams p;
    std::set<std::string> known(detail::sections().begin(), detail::sections().end());
    known.insert(std::string(detail::kForceTableKey));

    for (const auto& entry : root) {
        const auto key = entry.first.as<std::string>();
        if (!known.contains(key))
            throw ConfigError(key, line_of(entry.first), "unknown section '" + key + "'");
    }

    for (const auto section : detail::sections()) {
        const std::string name(section);
        const YAML::Node node = root[name];
        if (!node) {
            if (section_required(section))
                throw ConfigError(name, 0, "missing required section '" + name + "'");
            continue;
        }
        if (!node.IsMap()) throw ConfigError(name, line_of(node), "section must be a mapping");

        for (const auto& entry : node) {
            const auto key = entry.first.as<std::string>();
            if (!detail::find_field(name + "." + key))
                throw ConfigError(name + "." + key, line_of(entry.first), "unknown key '" + key + "'");
        }
    }

    bool has_joint_height = false;
    bool has_shaft_levels = false;
    for (const auto& field : detail::fields()) {
        const YAML::Node section = root[std::string(field.section)];
        const bool missing = !section || !section[std::string(field.key)];
        if (missing) {
            if (field.presence == Presence::Required)
                throw ConfigError(field.path(), section ? line_of(section) : 0,
                                  "missing required key '" + field.path() + "'");
            continue;
        }
        const YAML::Node value = section[std::string(field.key)];
        if (field.presence == Presence::Optional && value.IsNull()) continue;
        field.set(p, read_field(value, field));
        if (field.path() == "layout.joint_height") has_joint_height = true;
        if (field.path() == "screw.shaft_levels") has_shaft_levels = true;
    }
    if (!has_joint_height) p.layout.joint_height = 2.0 * p.layout.joint_arm_height;
    if (!has_shaft_levels) p.screw.shaft_levels = p.screw.n_levels - 1;

    if (const YAML::Node table = root[std::string(detail::kForceTableKey)])
        p.force_table = read_force_table(table);
    return p;
}

} // namespace

LoadResult load(std::string_view config_text) {
    const YAML::Node root = parse_document(config_text);
    LoadResult result;
    result.params = read_params(root);
    result.validation = validate(result.params);
    return result;
}

LoadResult load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load(buffer.str());
}

std::vector<ForceSample> load_force_table(std::string_view text) {
    const YAML::Node root = parse_document(text);
    const std::string key(detail::kForceTableKey);
    for (const auto& entry : root) {
        const auto name = entry.first.as<std::string>();
        if (name != key) throw ConfigError(name, line_of(entry.first), "unknown key '" + name + "'");
    }
    if (!root[key]) throw ConfigError(key, 0, "missing required key '" + key + "'");
    return read_force_table(root[key]);
}

std::string serialize(const DesignParams& p) {
    YAML::Emitter out;
    out.SetDoublePrecision(17);
    out << YAML::BeginMap;
    for (const auto section : detail::sections()) {
        bool opened = false;
        for (const auto& field : detail::fields()) {
            if (field.section != section || !field.present(p)) continue;
            if (!opened) {
                out << YAML::Key << std::string(section) << YAML::Value << YAML::BeginMap;
                opened = true;
            }
            out << YAML::Key << std::string(field.key) << YAML::Value;
            if (field.kind == FieldKind::Count)
                out << static_cast<long long>(field.get(p));
            else
                out << field.get(p);
        }
        if (opened) out << YAML::EndMap;
    }
    if (!p.force_table.empty()) {
        out << YAML::Key << std::string(detail::kForceTableKey) << YAML::Value << YAML::BeginSeq;
        for (const auto& s : p.force_table)
            out << YAML::Flow << YAML::BeginSeq << s.length_change_cm << s.force_n << YAML::EndSeq;
        out << YAML::EndSeq;
    }
    out << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
}

} // namespace morphwheel
