#include "eclat/compatibility.hpp"

#include <algorithm>

#include "eclat/canon.hpp"
#include "eclat/effects.hpp"
#include "eclat/rng.hpp"

namespace eclat {

const char* to_string(CompatibilityVerdict::Outcome o) {
    switch (o) {
    case CompatibilityVerdict::Outcome::Compatible: return "compatible";
    case CompatibilityVerdict::Outcome::Incompatible: return "incompatible";
    case CompatibilityVerdict::Outcome::ProbablyCompatible: return "probably_compatible";
    }
    return "?";
}

const char* to_string(AntiPatternFinding::Pattern p) {
    switch (p) {
    case AntiPatternFinding::Pattern::CoarseStateOverwrite: return "CoarseStateOverwrite";
    case AntiPatternFinding::Pattern::ReadModifyWriteAsBlind: return "ReadModifyWriteAsBlind";
    case AntiPatternFinding::Pattern::NonCommutingIncrementPair:
        return "NonCommutingIncrementPair";
    }
    return "?";
}

std::string Ratio::percent() const {
    if (denominator == 0) return "0.0";
    std::uint64_t tenths = (1000 * numerator + denominator / 2) / denominator;
    return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

namespace {

struct TripleScratch {
    State start, ab, ba;
    ParamValues pa, pb;
};

/// Runs both orders from one triple. Returns true when the triple is fine
/// (both orders agree, or neither order applies); fills the witness otherwise.
bool triple_ok(const StateSpace& space, const OperationDescriptor& a,
               const OperationDescriptor& b, TripleScratch& t, Witness& witness) {
    bool app_ab = false, app_ba = false;
    if (op_applicable(space, a, t.start, t.pa)) {
        t.ab = t.start;
        apply_effect(space, a.effect, t.ab, t.pa);
        if (op_applicable(space, b, t.ab, t.pb)) {
            apply_effect(space, b.effect, t.ab, t.pb);
            app_ab = true;
        }
    }
    if (op_applicable(space, b, t.start, t.pb)) {
        t.ba = t.start;
        apply_effect(space, b.effect, t.ba, t.pb);
        if (op_applicable(space, a, t.ba, t.pa)) {
            apply_effect(space, a.effect, t.ba, t.pa);
            app_ba = true;
        }
    }
    if (!app_ab && !app_ba) return true; // vacuous: the pair cannot run from here in any order
    if (app_ab && app_ba && t.ab == t.ba) return true;
    witness.state = t.start;
    witness.params_a = t.pa;
    witness.params_b = t.pb;
    witness.result_ab = app_ab ? std::optional<State>(t.ab) : std::nullopt;
    witness.result_ba = app_ba ? std::optional<State>(t.ba) : std::nullopt;
    return false;
}

std::uint64_t name_hash(const std::string& s) { return fnv1a64(s); }

} // namespace

CompatibilityVerdict check_pair(const OperationDescriptor& op_a, const OperationDescriptor& op_b,
                                const StateSpace& space, const CheckerOptions& options) {
    const std::uint64_t states = space.size();
    const std::uint64_t pa_n = op_a.param_space_size();
    const std::uint64_t pb_n = op_b.param_space_size();
    const bool same_op = &op_a == &op_b;

    bool exhaustive;
    {
        std::uint64_t combos;
        exhaustive = !__builtin_mul_overflow(states, pa_n * pb_n, &combos) &&
                     combos <= options.exhaustive_cap;
    }

    CompatibilityVerdict verdict;
    TripleScratch t;
    Witness witness;

    if (exhaustive) {
        verdict.coverage = Coverage{true, 0, 0};
        for (std::uint64_t si = 0; si < states; ++si) {
            space.state_at(si, t.start);
            for (std::uint64_t ai = 0; ai < pa_n; ++ai) {
                op_a.params_at(ai, t.pa);
                for (std::uint64_t bi = 0; bi < pb_n; ++bi) {
                    // An op against itself with identical params is literally
                    // the same composition in both orders.
                    if (same_op && ai == bi) continue;
                    op_b.params_at(bi, t.pb);
                    if (!triple_ok(space, op_a, op_b, t, witness)) {
                        verdict.outcome = CompatibilityVerdict::Outcome::Incompatible;
                        verdict.witness = witness;
                        return verdict;
                    }
                }
            }
        }
        verdict.outcome = CompatibilityVerdict::Outcome::Compatible;
        return verdict;
    }

    Rng rng(mix_seed(options.seed, mix_seed(name_hash(op_a.name), name_hash(op_b.name))));
    verdict.coverage = Coverage{false, options.samples, options.seed};
    for (std::uint64_t i = 0; i < options.samples; ++i) {
        space.state_at(rng.below(states), t.start);
        std::uint64_t ai = rng.below(pa_n);
        std::uint64_t bi = rng.below(pb_n);
        if (same_op && ai == bi) continue;
        op_a.params_at(ai, t.pa);
        op_b.params_at(bi, t.pb);
        if (!triple_ok(space, op_a, op_b, t, witness)) {
            verdict.outcome = CompatibilityVerdict::Outcome::Incompatible;
            verdict.witness = witness;
            return verdict;
        }
    }
    verdict.outcome = CompatibilityVerdict::Outcome::ProbablyCompatible;
    return verdict;
}

CompatibilityVerdict check_pair_in_model(const ModelDescriptor& model, const std::string& op_a,
                                         const std::string& op_b, const CheckerOptions& options) {
    const AggregateDescriptor* agg_a = nullptr;
    const AggregateDescriptor* agg_b = nullptr;
    const OperationDescriptor* a = nullptr;
    const OperationDescriptor* b = nullptr;
    for (const auto& agg : model.aggregates) {
        int ia = agg.operation_index(op_a);
        if (ia >= 0 && !a) {
            agg_a = &agg;
            a = &agg.operations[ia];
        }
        int ib = agg.operation_index(op_b);
        if (ib >= 0 && !b) {
            agg_b = &agg;
            b = &agg.operations[ib];
        }
    }
    if (!a) throw UnknownOperationError("unknown operation '" + op_a + "'");
    if (!b) throw UnknownOperationError("unknown operation '" + op_b + "'");
    if (agg_a != agg_b)
        throw DomainMismatchError("operations '" + op_a + "' and '" + op_b +
                                  "' belong to different aggregates");
    return check_pair(*a, *b, agg_a->state_space, options);
}

CompatibilityMatrix build_matrix(const AggregateDescriptor& agg, const CheckerOptions& options) {
    CompatibilityMatrix m;
    const std::size_t n = agg.operations.size();
    for (const auto& op : agg.operations) m.operations.push_back(op.name);
    m.verdicts.assign(n, std::vector<CompatibilityVerdict>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            CompatibilityVerdict v =
                check_pair(agg.operations[a], agg.operations[b], agg.state_space, options);
            m.verdicts[a][b] = v;
            if (a != b) {
                // mirror with the witness arguments swapped
                CompatibilityVerdict mirrored = v;
                if (mirrored.witness) {
                    std::swap(mirrored.witness->params_a, mirrored.witness->params_b);
                    std::swap(mirrored.witness->result_ab, mirrored.witness->result_ba);
                }
                m.verdicts[b][a] = mirrored;
            }
        }
    m.compatible_with_all.assign(n, true);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (m.verdicts[a][b].outcome != CompatibilityVerdict::Outcome::Compatible)
                m.compatible_with_all[a] = false;
    return m;
}

Ratio compatible_share(const ModelDescriptor& model,
                       const std::vector<CompatibilityMatrix>& matrices) {
    Ratio r;
    for (std::size_t i = 0; i < model.aggregates.size(); ++i) {
        const auto& matrix = matrices[i];
        r.denominator += matrix.operations.size();
        for (bool ok : matrix.compatible_with_all)
            if (ok) ++r.numerator;
    }
    if (r.denominator == 0) throw EmptyModelError("model declares no operations");
    return r;
}

Ratio compatible_share(const ModelDescriptor& model, const CheckerOptions& options) {
    std::vector<CompatibilityMatrix> matrices;
    matrices.reserve(model.aggregates.size());
    for (const auto& agg : model.aggregates) matrices.push_back(build_matrix(agg, options));
    return compatible_share(model, matrices);
}

namespace {

/// Varies field f of `base` to every other domain value and reports whether
/// any written value of the effect changes with it.
bool blind_effect_reads_state(const AggregateDescriptor& agg, const OperationDescriptor& op) {
    const StateSpace& space = agg.state_space;
    std::vector<int> written = written_fields(space, op.effect);
    std::vector<std::uint64_t> valuations;
    std::uint64_t pn = op.param_space_size();
    for (std::uint64_t i = 0; i < std::min<std::uint64_t>(pn, 8); ++i)
        valuations.push_back(i * (pn / std::min<std::uint64_t>(pn, 8)));

    ParamValues params;
    State base = space.initial, varied, out_a, out_b, probe;
    for (auto pi : valuations) {
        op.params_at(pi, params);
        for (std::size_t f = 0; f < space.fields.size(); ++f) {
            std::uint64_t dom_n = domain_size(space.fields[f].domain);
            std::uint64_t stride = 1;
            for (std::size_t g = f + 1; g < space.fields.size(); ++g)
                stride *= domain_size(space.fields[g].domain);
            for (std::uint64_t v = 0; v < dom_n; ++v) {
                space.state_at(v * stride, probe);
                varied = base;
                varied[f] = probe[f];
                if (varied[f] == base[f]) continue;
                if (!op_applicable(space, op, base, params) ||
                    !op_applicable(space, op, varied, params))
                    continue;
                out_a = base;
                out_b = varied;
                apply_effect(space, op.effect, out_a, params);
                apply_effect(space, op.effect, out_b, params);
                for (int w : written)
                    if (out_a[w] != out_b[w]) return true;
            }
        }
    }
    return false;
}

} // namespace

std::vector<AntiPatternFinding>
detect_anti_patterns(const ModelDescriptor& model,
                     const std::vector<CompatibilityMatrix>& matrices) {
    std::vector<AntiPatternFinding> findings;
    for (std::size_t i = 0; i < model.aggregates.size(); ++i) {
        const AggregateDescriptor& agg = model.aggregates[i];
        const StateSpace& space = agg.state_space;

        // Fields any operation of this aggregate writes.
        std::vector<bool> updated(space.fields.size(), false);
        for (const auto& op : agg.operations)
            for (int f : written_fields(space, op.effect)) updated[f] = true;
        int updated_count = static_cast<int>(std::count(updated.begin(), updated.end(), true));

        for (const auto& op : agg.operations) {
            if (op.update_kind == UpdateKind::StateBased && updated_count > 1)
                findings.push_back(
                    {AntiPatternFinding::Pattern::CoarseStateOverwrite,
                     agg.name,
                     {op.name},
                     "state-based operation on an aggregate with " +
                         std::to_string(updated_count) +
                         " independently updated fields; concurrent versions overwrite each "
                         "other wholesale"});
            if (op.update_kind == UpdateKind::TrueBlind && blind_effect_reads_state(agg, op))
                findings.push_back({AntiPatternFinding::Pattern::ReadModifyWriteAsBlind,
                                    agg.name,
                                    {op.name},
                                    "declared true_blind but the written value depends on the "
                                    "current state (read-modify-write)"});
        }

        const CompatibilityMatrix& matrix = matrices[i];
        for (std::size_t a = 0; a < agg.operations.size(); ++a)
            for (std::size_t b = a; b < agg.operations.size(); ++b) {
                if (agg.operations[a].update_kind != UpdateKind::Incremental ||
                    agg.operations[b].update_kind != UpdateKind::Incremental)
                    continue;
                if (matrix.at(a, b).outcome == CompatibilityVerdict::Outcome::Incompatible)
                    findings.push_back({AntiPatternFinding::Pattern::NonCommutingIncrementPair,
                                        agg.name,
                                        {agg.operations[a].name, agg.operations[b].name},
                                        "both operations are declared incremental yet their "
                                        "effects do not commute"});
            }
    }
    return findings;
}

ToleranceResult check_partial_order_tolerance(const AggregateDescriptor& agg,
                                              const std::string& op_name,
                                              const CompatibilityMatrix& matrix,
                                              std::uint64_t seed, std::uint32_t trials) {
    int op_idx = agg.operation_index(op_name);
    if (op_idx < 0) throw UnknownOperationError("unknown operation '" + op_name + "'");
    const OperationDescriptor& op = agg.operations[op_idx];
    const StateSpace& space = agg.state_space;

    std::vector<int> partners;
    for (std::size_t b = 0; b < agg.operations.size(); ++b)
        if (matrix.at(op_idx, b).outcome == CompatibilityVerdict::Outcome::Compatible)
            partners.push_back(static_cast<int>(b));

    ToleranceResult result;
    if (partners.empty()) return result;

    Rng rng(mix_seed(seed, name_hash(op_name)));
    State start, before, after;
    ParamValues op_params;
    for (std::uint32_t trial = 0; trial < trials; ++trial) {
        space.state_at(rng.below(space.size()), start);
        op.params_at(rng.below(op.param_space_size()), op_params);
        std::size_t len = 1 + rng.below(4);
        std::vector<std::pair<int, ParamValues>> seq;
        for (std::size_t i = 0; i < len; ++i) {
            int b = partners[rng.below(partners.size())];
            ParamValues bp;
            agg.operations[b].params_at(rng.below(agg.operations[b].param_space_size()), bp);
            seq.emplace_back(b, bp);
        }
        // Both paths apply S in the same relative order; only the position
        // of op moves. Trials where any step's applicability differs between
        // the paths lie outside the compatibility relation's domain (the
        // pairwise check quantifies over both-orders-applicable triples), so
        // they are skipped rather than counted as failures.
        std::vector<bool> applied_before, applied_after;
        before = start;
        bool ok_before = op_applicable(space, op, before, op_params);
        if (ok_before) apply_effect(space, op.effect, before, op_params);
        for (const auto& [b, bp] : seq) {
            bool ok = op_applicable(space, agg.operations[b], before, bp);
            applied_before.push_back(ok);
            if (ok) apply_effect(space, agg.operations[b].effect, before, bp);
        }
        after = start;
        for (const auto& [b, bp] : seq) {
            bool ok = op_applicable(space, agg.operations[b], after, bp);
            applied_after.push_back(ok);
            if (ok) apply_effect(space, agg.operations[b].effect, after, bp);
        }
        bool ok_after = op_applicable(space, op, after, op_params);
        if (ok_after) apply_effect(space, op.effect, after, op_params);
        if (ok_before != ok_after || applied_before != applied_after) continue;
        if (before != after) {
            result.pass = false;
            result.start_state = start;
            result.op_params = op_params;
            for (const auto& [b, bp] : seq)
                result.sequence.emplace_back(agg.operations[b].name, bp);
            return result;
        }
    }
    return result;
}

} // namespace eclat
