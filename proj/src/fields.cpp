#include "fields.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace morphwheel::detail {
namespace {

template <class Access>
FieldDescriptor real(std::string_view section, std::string_view key, Presence presence,
                     Access access) {
    return {section,
            key,
            FieldKind::Real,
            presence,
            [](const DesignParams&) { return true; },
            [access](const DesignParams& p) { return static_cast<double>(access(p)); },
            [access](DesignParams& p, double v) { access(p) = v; }};
}

template <class Access>
FieldDescriptor count(std::string_view section, std::string_view key, Presence presence,
                      Access access) {
    return {section,
            key,
            FieldKind::Count,
            presence,
            [](const DesignParams&) { return true; },
            [access](const DesignParams& p) { return static_cast<double>(access(p)); },
            [access](DesignParams& p, double v) { access(p) = static_cast<int>(std::lround(v)); }};
}

template <class Access>
FieldDescriptor optional_real(std::string_view section, std::string_view key, Access access) {
    return {section,
            key,
            FieldKind::Real,
            Presence::Optional,
            [access](const DesignParams& p) { return access(p).has_value(); },
            [access](const DesignParams& p) { return access(p).value_or(std::nan("")); },
            [access](DesignParams& p, double v) { access(p) = v; }};
}

std::vector<FieldDescriptor> build() {
    using P = Presence;
    std::vector<FieldDescriptor> f;

    f.push_back(count("screw", "n_levels", P::Required, [](auto& p) -> auto& { return p.screw.n_levels; }));
    f.push_back(real("screw", "screw_level_length", P::Required, [](auto& p) -> auto& { return p.screw.screw_level_length; }));
    f.push_back(real("screw", "stopper_width", P::Required, [](auto& p) -> auto& { return p.screw.stopper_width; }));
    f.push_back(real("screw", "thread_width", P::Required, [](auto& p) -> auto& { return p.screw.thread_width; }));
    f.push_back(real("screw", "thread_clearance", P::Required, [](auto& p) -> auto& { return p.screw.thread_clearance; }));
    f.push_back(real("screw", "base_screw_diameter", P::Required, [](auto& p) -> auto& { return p.screw.base_screw_diameter; }));
    // Absent shaft_levels is filled with n_levels - 1 after loading.
    f.push_back(count("screw", "shaft_levels", P::Defaulted, [](auto& p) -> auto& { return p.screw.shaft_levels; }));
    f.push_back(real("screw", "stopper_height", P::Defaulted, [](auto& p) -> auto& { return p.screw.stopper_height; }));

    // Absent joint_height is filled with 2 * joint_arm_height after loading.
    f.push_back(real("layout", "joint_height", P::Defaulted, [](auto& p) -> auto& { return p.layout.joint_height; }));
    f.push_back(real("layout", "joint_arm_height", P::Required, [](auto& p) -> auto& { return p.layout.joint_arm_height; }));
    f.push_back(real("layout", "drive_assembly_length", P::Required, [](auto& p) -> auto& { return p.layout.drive_assembly_length; }));
    f.push_back(real("layout", "tensioner_length", P::Required, [](auto& p) -> auto& { return p.layout.tensioner_length; }));
    f.push_back(real("layout", "plate_clearance", P::Required, [](auto& p) -> auto& { return p.layout.plate_clearance; }));

    f.push_back(real("platform", "screw_circle_spacing", P::Required, [](auto& p) -> auto& { return p.platform.screw_circle_spacing; }));
    f.push_back(real("platform", "max_screw_extension", P::Required, [](auto& p) -> auto& { return p.platform.max_screw_extension; }));
    f.push_back(real("platform", "joint_mount_width", P::Required, [](auto& p) -> auto& { return p.platform.joint_mount_width; }));
    f.push_back(real("platform", "universal_joint_diameter", P::Required, [](auto& p) -> auto& { return p.platform.universal_joint_diameter; }));
    f.push_back(count("platform", "plate_count", P::Defaulted, [](auto& p) -> auto& { return p.platform.plate_count; }));

    f.push_back(real("wheel", "rod_half_length", P::Required, [](auto& p) -> auto& { return p.wheel.rod_half_length; }));
    f.push_back(real("wheel", "hub_offset", P::Required, [](auto& p) -> auto& { return p.wheel.hub_offset; }));
    f.push_back(real("wheel", "curved_rod_length", P::Required, [](auto& p) -> auto& { return p.wheel.curved_rod_length; }));
    f.push_back(real("wheel", "hinge_allowance", P::Required, [](auto& p) -> auto& { return p.wheel.hinge_allowance; }));
    f.push_back(count("wheel", "spoke_pairs", P::Defaulted, [](auto& p) -> auto& { return p.wheel.spoke_pairs; }));
    f.push_back(optional_real("wheel", "min_half_separation", [](auto& p) -> auto& { return p.wheel.min_half_separation; }));

    f.push_back(real("drive", "motor_stall_torque", P::Required, [](auto& p) -> auto& { return p.motor_stall_torque; }));
    f.push_back(real("drive", "screw_lead", P::Defaulted, [](auto& p) -> auto& { return p.screw_lead; }));
    f.push_back(real("drive", "screw_friction", P::Defaulted, [](auto& p) -> auto& { return p.screw_friction; }));
    f.push_back(real("drive", "screw_mean_diameter", P::Defaulted, [](auto& p) -> auto& { return p.screw_mean_diameter; }));

    f.push_back(real("targets", "reduction_ratio", P::Defaulted, [](auto& p) -> auto& { return p.targets.reduction_ratio; }));
    f.push_back(real("targets", "platform_bend", P::Defaulted, [](auto& p) -> auto& { return p.targets.platform_bend; }));
    f.push_back(real("targets", "motor_margin", P::Defaulted, [](auto& p) -> auto& { return p.targets.motor_margin; }));

    f.push_back(optional_real("reported", "elongated_length", [](auto& p) -> auto& { return p.reported.elongated_length; }));
    f.push_back(optional_real("reported", "reduced_length", [](auto& p) -> auto& { return p.reported.reduced_length; }));
    f.push_back(optional_real("reported", "chassis_diameter", [](auto& p) -> auto& { return p.reported.chassis_diameter; }));
    f.push_back(optional_real("reported", "half_rod_expansion", [](auto& p) -> auto& { return p.reported.half_rod_expansion; }));
    f.push_back(optional_real("reported", "inner_rod_length", [](auto& p) -> auto& { return p.reported.inner_rod_length; }));
    f.push_back(optional_real("reported", "outer_rod_length", [](auto& p) -> auto& { return p.reported.outer_rod_length; }));
    f.push_back(optional_real("reported", "wheel_diameter", [](auto& p) -> auto& { return p.reported.wheel_diameter; }));
    return f;
}

constexpr std::array<std::string_view, 7> kSections = {
    "screw", "layout", "platform", "wheel", "drive", "targets", "reported"};

} // namespace

std::span<const FieldDescriptor> fields() {
    static const std::vector<FieldDescriptor> table = build();
    return table;
}

const FieldDescriptor* find_field(std::string_view path) {
    for (const auto& field : fields()) {
        if (field.path() == path) return &field;
    }
    return nullptr;
}

std::span<const std::string_view> sections() { return kSections; }

} // namespace morphwheel::detail
