#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eclat/errors.hpp"
#include "eclat/value.hpp"

namespace eclat {

/// Join-semilattice structure over an enumeration, derived from a declared
/// order (either the declaration-order chain or an explicit covering
/// relation). leq is the reflexive-transitive closure; join the least upper
/// bound table, valid only when is_semilattice.
struct EnumOrder {
    bool chain = false;
    std::vector<std::pair<std::uint16_t, std::uint16_t>> declared_pairs; // as written
    std::vector<std::uint32_t> leq_bits; // leq_bits[a] bit b set <=> a <= b
    std::vector<std::vector<std::uint16_t>> join;
    bool is_semilattice = false;

    bool leq(unsigned a, unsigned b) const { return (leq_bits[a] >> b) & 1u; }
};

struct IntRangeDomain {
    Int lo = 0;
    Int hi = 0;
    std::uint64_t size() const { return static_cast<std::uint64_t>(hi - lo + 1); }
};

struct EnumDomain {
    std::vector<std::string> symbols;
    std::optional<EnumOrder> order;
    std::uint64_t size() const { return symbols.size(); }
    int index_of(const std::string& sym) const; // -1 if unknown
};

/// Set over an enumeration of at most kMaxSmallElems symbols.
struct SetDomain {
    std::vector<std::string> symbols;
    std::uint64_t size() const { return 1ull << symbols.size(); }
    int index_of(const std::string& sym) const;
};

using ScalarDomain = std::variant<IntRangeDomain, EnumDomain>;

/// Map with enumerated keys and scalar values; each key is absent or mapped.
struct MapDomain {
    std::vector<std::string> keys;
    ScalarDomain values;
    std::uint64_t value_size() const;
    std::uint64_t size() const; // (value_size + 1) ^ |keys|
    int key_index(const std::string& key) const;
};

using FieldDomain = std::variant<IntRangeDomain, EnumDomain, SetDomain, MapDomain>;

std::uint64_t domain_size(const FieldDomain& d);
std::uint64_t scalar_size(const ScalarDomain& d);

/// Decode scalar value number i (0-based) of a scalar domain.
Value scalar_at(const ScalarDomain& d, std::uint64_t i);

/// True if v lies within d (same representation kind and in range).
bool value_in_domain(const FieldDomain& d, const Value& v);

struct FieldSpec {
    std::string name;
    FieldDomain domain;
};

/// Finite state space of one aggregate: field domains plus the initial
/// valuation. States enumerate in mixed-radix order, first field most
/// significant, so a single int field [0..3] enumerates 0,1,2,3.
struct StateSpace {
    std::vector<FieldSpec> fields;
    State initial;
    std::uint64_t enumeration_cap = 1'000'000;

    int field_index(const std::string& name) const; // -1 if unknown

    /// Product of the field domain sizes. Overflow is rejected at parse
    /// time, so this is always exact.
    std::uint64_t size() const;

    /// Decode state number i into out (reusing its storage).
    void state_at(std::uint64_t i, State& out) const;

    /// Enumerate every state in order; throws CapExceededError when
    /// size() > enumeration_cap.
    template <typename Fn> void for_each_state(Fn&& fn) const;
};

/// Computes the closure/join tables for a declared order. `pairs` holds the
/// declared a<=b index pairs (ignored when chain). Throws DomainError when
/// the declared relation is not a partial order (antisymmetry violated).
EnumOrder make_enum_order(std::size_t n, bool chain,
                          const std::vector<std::pair<std::uint16_t, std::uint16_t>>& pairs);

template <typename Fn> void StateSpace::for_each_state(Fn&& fn) const {
    std::uint64_t n = size();
    if (n > enumeration_cap)
        throw CapExceededError("state space of " + std::to_string(n) +
                               " states exceeds enumeration cap of " +
                               std::to_string(enumeration_cap));
    State scratch;
    for (std::uint64_t i = 0; i < n; ++i) {
        state_at(i, scratch);
        fn(static_cast<const State&>(scratch));
    }
}

} // namespace eclat
