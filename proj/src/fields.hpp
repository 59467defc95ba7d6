#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "morphwheel/params.hpp"

namespace morphwheel::detail {

enum class FieldKind { Real, Count };

enum class Presence {
    Required,
    Defaulted,  ///< absent keys keep the DesignParams default
    Optional,   ///< absent keys leave the field unset
};

/// Describes one scalar config key and how it maps onto DesignParams.
struct FieldDescriptor {
    std::string_view section;
    std::string_view key;
    FieldKind kind;
    Presence presence;
    std::function<bool(const DesignParams&)> present;
    std::function<double(const DesignParams&)> get;
    std::function<void(DesignParams&, double)> set;

    std::string path() const { return std::string(section) + "." + std::string(key); }
};

std::span<const FieldDescriptor> fields();
const FieldDescriptor* find_field(std::string_view path);

/// Top-level sections in document order.
std::span<const std::string_view> sections();

inline constexpr std::string_view kForceTableKey = "silicone_force_table";

} // namespace morphwheel::detail
