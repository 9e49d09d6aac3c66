#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eclat/domain.hpp"

namespace eclat {

inline constexpr const char* kModelSchema = "eclat-model/1";

/// Reference to a parameter or a literal value inside effects/predicates.
/// Where a parameter's enum feeds a symbol-indexed position (enum field, set
/// element, map key/value), `remap` translates the parameter's symbol index
/// into the target universe; -1 marks a symbol with no counterpart and is
/// interpreted per use site (effect inapplicable, predicate false, empty
/// singleton). Literals are resolved to target indexes at parse time.
struct ValueRef {
    enum class Kind { Param, Literal };
    Kind kind = Kind::Literal;
    int param = -1; // index into the operation's parameter list
    Value literal{Int{0}};
    std::vector<std::int16_t> remap;

    static ValueRef of_param(int idx) { return {Kind::Param, idx, Int{0}, {}}; }
    static ValueRef of_literal(Value v) { return {Kind::Literal, -1, v, {}}; }
};

// ---------------------------------------------------------------------------
// Effect actions. An operation's effect is a list of per-field actions.
// ---------------------------------------------------------------------------

/// field += delta (bounded int field). Inapplicable when the result would
/// leave the field's declared range.
struct ActionAddDelta {
    int field;
    ValueRef delta;
};

/// field := value (scalar field), or field[key] := value for map fields.
/// Reads nothing; a per-field (or per-key) register write.
struct ActionSetRegister {
    int field;
    std::optional<ValueRef> key;
    ValueRef value;
};

/// Set field: insert element (idempotent union).
struct ActionInsertElement {
    int field;
    ValueRef element;
};

/// Map field: field[key] := value with the implicit precondition that key
/// is absent (first write per key wins; later attempts are inapplicable).
struct ActionInsertKeyed {
    int field;
    ValueRef key;
    ValueRef value;
};

/// Set field: remove element (plain removal, no tombstone).
struct ActionRemoveElement {
    int field;
    ValueRef element;
};

/// Set field acting as a tombstone set: insert element. Semantically a set
/// insert; the distinct name documents that the target is a removal marker.
struct ActionTombstoneDelete {
    int field;
    ValueRef element;
};

/// Ordered enum field: field := join(field, value) under the declared order.
struct ActionLatticeJoin {
    int field;
    ValueRef value;
};

/// Whole-state write: every field gets an assignment.
struct ReplaceAssign {
    enum class Kind { FromRef, KeepCurrent, SingletonOf };
    Kind kind = Kind::KeepCurrent;
    ValueRef ref; // FromRef / SingletonOf; SingletonOf maps an unmatched
                  // symbol (remap -1) to the empty set
};

struct ActionReplaceState {
    std::vector<ReplaceAssign> assigns; // one per field, field order
};

using EffectAction =
    std::variant<ActionAddDelta, ActionSetRegister, ActionInsertElement, ActionInsertKeyed,
                 ActionRemoveElement, ActionTombstoneDelete, ActionLatticeJoin, ActionReplaceState>;

struct Effect {
    std::vector<EffectAction> actions;
};

// ---------------------------------------------------------------------------
// Predicates: combinator tree over (state, params).
// ---------------------------------------------------------------------------

struct Predicate {
    enum class Kind {
        All,       // children
        Any,       // children
        Not,       // children[0]
        Eq,        // field <op> ref
        Ne,
        Le,
        Lt,
        Ge,
        Gt,
        Contains,  // set field contains element / map field has key
        KeyAbsent, // map field lacks key
        EntryEq,   // map field[key] == value (absent -> false)
        ParamIs,   // param == literal (state-independent)
    };
    Kind kind = Kind::All;
    std::vector<Predicate> children;
    int field = -1;
    ValueRef a; // element / key / param side
    ValueRef b; // value side (EntryEq, ParamIs)
};

struct NamedPredicate {
    std::string name;
    Predicate predicate;
};

// ---------------------------------------------------------------------------
// Descriptors
// ---------------------------------------------------------------------------

enum class UpdateKind { Incremental, TrueBlind, StateBased };

const char* to_string(UpdateKind k);

struct ParamSpec {
    std::string name;
    ScalarDomain domain;
};

struct OperationDescriptor {
    std::string name;
    UpdateKind update_kind = UpdateKind::Incremental;
    std::vector<ParamSpec> params;
    std::optional<Predicate> precondition;
    Effect effect;
    std::optional<Predicate> intent; // "this update's effect is still visible"
    std::vector<std::string> superseded_by; // op names whose later/concurrent
                                            // application legitimately masks the intent
    std::uint64_t param_space_size() const;
    /// Decode parameter valuation number i into out.
    void params_at(std::uint64_t i, ParamValues& out) const;
};

/// The six-way classification (see taxonomy.hpp for the classifier).
enum class AggregateClass {
    Immutable,
    Derived,
    SingleWriter,
    FullyCompatible,
    PartiallyCompatible,
    StateOpaque,
};

const char* to_string(AggregateClass c);
bool is_trivial(AggregateClass c);

/// Writers: either an explicit set of logical writer ids (possibly empty)
/// or "any" — open to writes from arbitrary parties.
struct WriterSet {
    bool any = false;
    std::vector<std::string> ids;
    bool single() const { return !any && ids.size() == 1; }
};

/// Pure projection turning a source aggregate's state into this aggregate's.
struct ProjectionSpec {
    enum class Fn {
        MapSize,       // #present keys of a map field
        LiveCount,     // |added_set \ removed_set|
        KeyedLiveCount // |keys(map) \ removed_set|
    };
    Fn fn = Fn::MapSize;
    std::string source_aggregate;
    int source_aggregate_index = -1;
    int source_field = -1;  // map or added-set field (index in source space)
    int removed_field = -1; // removed-set field (LiveCount/KeyedLiveCount)
    int target_field = -1;  // int field in this aggregate's space
};

struct AggregateDescriptor {
    std::string name;
    StateSpace state_space;
    std::vector<OperationDescriptor> operations;
    WriterSet writers;
    std::optional<ProjectionSpec> projection_of;
    std::optional<AggregateClass> declared_class;
    std::vector<NamedPredicate> invariants;

    int operation_index(const std::string& name) const; // -1 if unknown
};

struct ModelDescriptor {
    std::string name;
    std::string bounded_context;
    std::vector<AggregateDescriptor> aggregates;

    int aggregate_index(const std::string& name) const; // -1 if unknown
    std::uint64_t total_operations() const;
};

/// Applies one projection to a source state, producing the derived
/// aggregate's state (its initial valuation with the target field replaced,
/// clamped into the target domain).
State apply_projection(const ProjectionSpec& proj, const AggregateDescriptor& derived,
                       const AggregateDescriptor& source, const State& source_state);

} // namespace eclat
