#pragma once

#include <string>
#include <vector>

#include "eclat/compatibility.hpp"
#include "eclat/model.hpp"

namespace eclat {

struct Classification {
    std::string aggregate;
    AggregateClass cls;
    bool trivial = false;
    std::string rationale;
    bool declared_mismatch = false; // declared_class present and different
};

struct ClassificationReport {
    std::vector<Classification> aggregates;
    std::uint64_t trivial_count = 0;
    std::uint64_t total_count = 0;
};

/// Deterministic first-match classification:
///   1. Immutable            zero operations, no projection, and not open to
///                           out-of-model writes (writers != "any")
///   2. Derived              projection_of set
///   3. SingleWriter         exactly one declared logical writer
///   4. StateOpaque          zero operations but writers "any" (anemic data
///                           mutated through whole-state persistence)
///   5. FullyCompatible      every pair in the matrix compatible
///   6. PartiallyCompatible  compatible and incompatible pairs mixed, or
///                           mixed update kinds
///   7. StateOpaque          everything else (dominated by order-sensitive ops)
/// A declared_class that disagrees is reported as a mismatch; the computed
/// class wins.
Classification classify_aggregate(const AggregateDescriptor& agg,
                                  const CompatibilityMatrix& matrix);

ClassificationReport classify_model(const ModelDescriptor& model,
                                    const std::vector<CompatibilityMatrix>& matrices);

/// Share of trivial aggregates. Throws EmptyModelError on an aggregate-less
/// model (unreachable through parse_model, which requires one).
Ratio trivial_share(const ModelDescriptor& model,
                    const std::vector<CompatibilityMatrix>& matrices);

} // namespace eclat
