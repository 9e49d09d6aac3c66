#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eclat/model.hpp"

namespace eclat {

/// Counterexample to compatibility: from `state`, running a(params_a) then
/// b(params_b) and the reverse either produces different states or one order
/// is applicable while the other is not (result empty).
struct Witness {
    State state;
    ParamValues params_a;
    ParamValues params_b;
    std::optional<State> result_ab;
    std::optional<State> result_ba;
};

struct Coverage {
    bool exhaustive = true;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

struct CompatibilityVerdict {
    enum class Outcome { Compatible, Incompatible, ProbablyCompatible };
    Outcome outcome = Outcome::Compatible;
    std::optional<Witness> witness; // present iff Incompatible
    Coverage coverage;
};

const char* to_string(CompatibilityVerdict::Outcome o);

struct CheckerOptions {
    std::uint64_t exhaustive_cap = 1'000'000; // |states| x |params_a| x |params_b|
    std::uint64_t samples = 10'000;
    std::uint64_t seed = 0;
};

/// Both-order execution check over the declared state space. Triples where
/// one order is applicable and the other is not count as incompatible
/// (order-dependent applicability); triples where neither order applies are
/// vacuous. Exhaustive up to options.exhaustive_cap combinations, seeded
/// uniform sampling beyond.
CompatibilityVerdict check_pair(const OperationDescriptor& op_a, const OperationDescriptor& op_b,
                                const StateSpace& space, const CheckerOptions& options = {});

/// Guard variant used by the CLI: throws DomainMismatchError when the two
/// operations do not belong to the same aggregate of `model`.
CompatibilityVerdict check_pair_in_model(const ModelDescriptor& model, const std::string& op_a,
                                         const std::string& op_b,
                                         const CheckerOptions& options = {});

struct CompatibilityMatrix {
    std::vector<std::string> operations;
    std::vector<std::vector<CompatibilityVerdict>> verdicts; // symmetric, incl. diagonal
    std::vector<bool> compatible_with_all;

    const CompatibilityVerdict& at(std::size_t a, std::size_t b) const { return verdicts[a][b]; }
};

/// Checks every unordered pair (including each op against itself with
/// independently drawn parameters). Deterministic given options.
CompatibilityMatrix build_matrix(const AggregateDescriptor& agg,
                                 const CheckerOptions& options = {});

struct Ratio {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 0;

    /// One-decimal percent rendering ("95.5"); integer math, round half up.
    std::string percent() const;
};

/// Share of operations compatible with every operation of their aggregate
/// (including themselves). ProbablyCompatible counts as not compatible.
/// Throws EmptyModelError when the model declares no operations.
Ratio compatible_share(const ModelDescriptor& model,
                       const std::vector<CompatibilityMatrix>& matrices);
Ratio compatible_share(const ModelDescriptor& model, const CheckerOptions& options = {});

struct AntiPatternFinding {
    enum class Pattern { CoarseStateOverwrite, ReadModifyWriteAsBlind, NonCommutingIncrementPair };
    Pattern pattern;
    std::string aggregate;
    std::vector<std::string> operations;
    std::string explanation;
};

const char* to_string(AntiPatternFinding::Pattern p);

/// The three compatibility anti-patterns:
///   CoarseStateOverwrite     state-based op on an aggregate with more than
///                            one independently updated field
///   ReadModifyWriteAsBlind   op declared true_blind whose written value
///                            depends on a current field value
///   NonCommutingIncrementPair two ops declared incremental with an
///                            incompatible verdict
std::vector<AntiPatternFinding>
detect_anti_patterns(const ModelDescriptor& model,
                     const std::vector<CompatibilityMatrix>& matrices);

struct ToleranceResult {
    bool pass = true;
    // Failing case: op applied before vs. after the sequence diverged.
    State start_state;
    ParamValues op_params;
    std::vector<std::pair<std::string, ParamValues>> sequence;
};

/// Audit that an operation tolerates partial execution order: samples random
/// sequences S of operations pairwise-compatible with `op` (per `matrix`)
/// and random start states, then asserts apply(op;S) == apply(S;op).
/// Pairwise compatibility implies this by induction, so a failure exposes a
/// defective effect registration (or a doctored matrix).
ToleranceResult check_partial_order_tolerance(const AggregateDescriptor& agg,
                                              const std::string& op_name,
                                              const CompatibilityMatrix& matrix,
                                              std::uint64_t seed, std::uint32_t trials);

} // namespace eclat
