#include "eclat/validate.hpp"

#include <algorithm>
#include <optional>

#include "eclat/effects.hpp"

namespace eclat {

const char* to_string(Finding::Kind k) {
    switch (k) {
    case Finding::Kind::KindEffectMismatch: return "kind/effect mismatch";
    case Finding::Kind::InitialStateViolation: return "initial state violates invariant";
    case Finding::Kind::InvariantUnsatisfiable: return "invariant unsatisfiable";
    }
    return "?";
}

namespace {

constexpr std::uint64_t kStateSamples = 128;
constexpr std::uint64_t kParamSamples = 32;

/// Evenly strided sample of indexes [0, n); covers everything when n small.
std::vector<std::uint64_t> sample_indexes(std::uint64_t n, std::uint64_t want) {
    std::vector<std::uint64_t> out;
    if (n == 0) return out;
    std::uint64_t count = std::min(n, want);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(i * (n / count) + (n / count) / 2);
    if (out[0] != 0) out.insert(out.begin(), 0);
    return out;
}

/// First reason the declared update kind disagrees with the effect, if any.
std::optional<std::string> kind_mismatch(const AggregateDescriptor& agg,
                                         const OperationDescriptor& op) {
    const StateSpace& space = agg.state_space;

    // Static action-class check.
    for (const auto& action : op.effect.actions) {
        ActionClass cls = action_class(action);
        if (op.update_kind == UpdateKind::Incremental && cls != ActionClass::Delta)
            return "declared incremental but the effect is not a pure delta";
        if (op.update_kind == UpdateKind::TrueBlind && cls != ActionClass::Blind)
            return "declared true_blind but the effect is not a register write";
    }

    // Execution check over strided samples: diffs confined to written fields;
    // incremental int deltas and blind register results are param-determined
    // regardless of the starting state.
    std::vector<int> written = written_fields(space, op.effect);
    auto states = sample_indexes(space.size(), kStateSamples);
    auto valuations = sample_indexes(op.param_space_size(), kParamSamples);
    State s, out;
    ParamValues params;
    for (auto pi : valuations) {
        op.params_at(pi, params);
        std::vector<std::optional<Int>> first_delta(space.fields.size());
        std::vector<std::optional<Value>> first_result(space.fields.size());
        for (auto si : states) {
            space.state_at(si, s);
            if (!op_applicable(space, op, s, params)) continue;
            out = s;
            apply_effect(space, op.effect, out, params);
            for (std::size_t f = 0; f < space.fields.size(); ++f) {
                bool is_written = std::binary_search(written.begin(), written.end(),
                                                     static_cast<int>(f));
                if (!is_written) {
                    if (out[f] != s[f])
                        return "effect overwrites field '" + space.fields[f].name +
                               "' it does not declare";
                    continue;
                }
                if (op.update_kind == UpdateKind::Incremental) {
                    if (const Int* before = std::get_if<Int>(&s[f])) {
                        const auto* dom = std::get_if<IntRangeDomain>(&space.fields[f].domain);
                        if (!dom) continue; // enum joins move toward the lub
                        Int delta = std::get<Int>(out[f]) - *before;
                        if (!first_delta[f]) first_delta[f] = delta;
                        else if (*first_delta[f] != delta)
                            return "declared incremental but the delta on '" +
                                   space.fields[f].name + "' depends on the current state";
                    }
                } else if (op.update_kind == UpdateKind::TrueBlind) {
                    if (!first_result[f]) first_result[f] = out[f];
                    else if (*first_result[f] != out[f])
                        return "declared true_blind but the written value of '" +
                               space.fields[f].name + "' depends on the current state";
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::vector<Finding> validate_model(const ModelDescriptor& model) {
    std::vector<Finding> findings;
    static const ParamValues kNoParams;
    for (const auto& agg : model.aggregates) {
        for (const auto& inv : agg.invariants) {
            if (!eval_predicate(agg.state_space, inv.predicate, agg.state_space.initial,
                                kNoParams))
                findings.push_back({Finding::Kind::InitialStateViolation, agg.name, "",
                                    "invariant '" + inv.name + "' fails on the initial state"});
        }
        for (const auto& op : agg.operations) {
            if (auto reason = kind_mismatch(agg, op))
                findings.push_back({Finding::Kind::KindEffectMismatch, agg.name, op.name,
                                    *reason});
        }
    }
    return findings;
}

} // namespace eclat
