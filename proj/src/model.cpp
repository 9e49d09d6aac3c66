#include "eclat/model.hpp"

#include <algorithm>

namespace eclat {

const char* to_string(UpdateKind k) {
    switch (k) {
    case UpdateKind::Incremental: return "incremental";
    case UpdateKind::TrueBlind: return "true_blind";
    case UpdateKind::StateBased: return "state_based";
    }
    return "?";
}

const char* to_string(AggregateClass c) {
    switch (c) {
    case AggregateClass::Immutable: return "Immutable";
    case AggregateClass::Derived: return "Derived";
    case AggregateClass::SingleWriter: return "SingleWriter";
    case AggregateClass::FullyCompatible: return "FullyCompatible";
    case AggregateClass::PartiallyCompatible: return "PartiallyCompatible";
    case AggregateClass::StateOpaque: return "StateOpaque";
    }
    return "?";
}

bool is_trivial(AggregateClass c) {
    return c == AggregateClass::Immutable || c == AggregateClass::Derived ||
           c == AggregateClass::SingleWriter;
}

std::uint64_t OperationDescriptor::param_space_size() const {
    std::uint64_t total = 1;
    for (const auto& p : params) total *= scalar_size(p.domain);
    return total;
}

void OperationDescriptor::params_at(std::uint64_t i, ParamValues& out) const {
    out.resize(params.size());
    for (std::size_t p = params.size(); p-- > 0;) {
        std::uint64_t n = scalar_size(params[p].domain);
        out[p] = scalar_at(params[p].domain, i % n);
        i /= n;
    }
}

int AggregateDescriptor::operation_index(const std::string& opname) const {
    for (std::size_t i = 0; i < operations.size(); ++i)
        if (operations[i].name == opname) return static_cast<int>(i);
    return -1;
}

int ModelDescriptor::aggregate_index(const std::string& aggname) const {
    for (std::size_t i = 0; i < aggregates.size(); ++i)
        if (aggregates[i].name == aggname) return static_cast<int>(i);
    return -1;
}

std::uint64_t ModelDescriptor::total_operations() const {
    std::uint64_t n = 0;
    for (const auto& a : aggregates) n += a.operations.size();
    return n;
}

State apply_projection(const ProjectionSpec& proj, const AggregateDescriptor& derived,
                       const AggregateDescriptor& source, const State& source_state) {
    Int count = 0;
    switch (proj.fn) {
    case ProjectionSpec::Fn::MapSize:
        count = std::get<MapSlots>(source_state[proj.source_field]).present_count();
        break;
    case ProjectionSpec::Fn::LiveCount: {
        auto added = std::get<SetBits>(source_state[proj.source_field]).bits;
        auto removed = std::get<SetBits>(source_state[proj.removed_field]).bits;
        count = __builtin_popcount(added & ~removed);
        break;
    }
    case ProjectionSpec::Fn::KeyedLiveCount: {
        const auto& slots = std::get<MapSlots>(source_state[proj.source_field]);
        auto removed = std::get<SetBits>(source_state[proj.removed_field]).bits;
        for (std::size_t k = 0; k < MapSlots::kMaxKeys; ++k)
            if (slots.slot[k] != MapSlots::kAbsent && !((removed >> k) & 1u)) ++count;
        break;
    }
    }
    (void)source;
    State out = derived.state_space.initial;
    const auto& dom = std::get<IntRangeDomain>(derived.state_space.fields[proj.target_field].domain);
    out[proj.target_field] = std::clamp(count, dom.lo, dom.hi);
    return out;
}

} // namespace eclat
