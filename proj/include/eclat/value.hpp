#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <variant>
#include <vector>

namespace eclat {

/// Scalar integer type used for bounded integer fields and parameters.
using Int = std::int64_t;

/// A set over an enumeration of at most kMaxSmallElems symbols, one bit per
/// symbol index.
struct SetBits {
    std::uint32_t bits = 0;

    bool contains(unsigned idx) const { return (bits >> idx) & 1u; }
    void insert(unsigned idx) { bits |= (1u << idx); }
    void erase(unsigned idx) { bits &= ~(1u << idx); }

    auto operator<=>(const SetBits&) const = default;
};

/// A partial map from enumerated keys to scalar values. One slot per key
/// index; kAbsent marks a missing entry. Scalars are stored directly (ints
/// as their value, enum values as their symbol index).
struct MapSlots {
    static constexpr std::int32_t kAbsent = std::numeric_limits<std::int32_t>::min();
    static constexpr std::size_t kMaxKeys = 8;

    std::array<std::int32_t, kMaxKeys> slot{};

    MapSlots() { slot.fill(kAbsent); }

    bool has(unsigned key) const { return slot[key] != kAbsent; }
    int present_count() const {
        int n = 0;
        for (auto v : slot)
            if (v != kAbsent) ++n;
        return n;
    }

    auto operator<=>(const MapSlots&) const = default;
};

/// One field value. Enum values are stored as their symbol index (Int).
/// The field's domain (see domain.hpp) gives the value its meaning.
using Value = std::variant<Int, SetBits, MapSlots>;

/// Full aggregate state: one Value per field, in declaration order.
using State = std::vector<Value>;

/// Parameter valuation for one operation invocation: one scalar per declared
/// parameter, in declaration order.
using ParamValues = std::vector<Value>;

inline constexpr std::size_t kMaxSmallElems = 8;

} // namespace eclat
