#pragma once

#include <string>
#include <vector>

#include "eclat/model.hpp"

namespace eclat {

/// One structural finding. Findings are reports, not failures: a model with
/// findings still loads, but analysis results on it may be misleading.
struct Finding {
    enum class Kind {
        KindEffectMismatch,      // declared update_kind does not match the effect's behavior
        InitialStateViolation,   // an invariant predicate fails on the initial state
        InvariantUnsatisfiable,  // reserved for future structural checks
    };
    Kind kind;
    std::string aggregate;
    std::string operation; // empty for aggregate-level findings
    std::string message;
};

const char* to_string(Finding::Kind k);

/// Structural validation: update-kind/effect shape agreement (checked both
/// by action class and by executing effects over sampled states) and
/// initial-state invariant checks. Empty result means the model is
/// analyzable as declared.
std::vector<Finding> validate_model(const ModelDescriptor& model);

} // namespace eclat
