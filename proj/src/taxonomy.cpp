#include "eclat/taxonomy.hpp"

namespace eclat {

Classification classify_aggregate(const AggregateDescriptor& agg,
                                  const CompatibilityMatrix& matrix) {
    Classification out;
    out.aggregate = agg.name;

    auto decide = [&] {
        if (agg.operations.empty() && !agg.projection_of && !agg.writers.any) {
            out.rationale = "no update operations and no open writer set: nothing can change "
                            "this aggregate after creation";
            return AggregateClass::Immutable;
        }
        if (agg.projection_of) {
            out.rationale = "pure projection of '" + agg.projection_of->source_aggregate +
                            "'; holds no independent writes";
            return AggregateClass::Derived;
        }
        if (agg.writers.single()) {
            out.rationale = "single logical writer '" + agg.writers.ids[0] +
                            "' excludes concurrent updates";
            return AggregateClass::SingleWriter;
        }
        if (agg.operations.empty()) {
            out.rationale = "no declared operations but open to out-of-model writes; updates "
                            "arrive as whole-state overwrites";
            return AggregateClass::StateOpaque;
        }

        std::size_t n = agg.operations.size();
        std::size_t compatible = 0, incompatible = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a; b < n; ++b) {
                auto o = matrix.at(a, b).outcome;
                if (o == CompatibilityVerdict::Outcome::Compatible) ++compatible;
                else ++incompatible;
            }
        bool mixed_kinds = false;
        for (const auto& op : agg.operations)
            mixed_kinds = mixed_kinds || op.update_kind != agg.operations[0].update_kind;

        if (incompatible == 0) {
            out.rationale = "all " + std::to_string(n * (n + 1) / 2) +
                            " operation pairs commute on the declared state space";
            return AggregateClass::FullyCompatible;
        }
        if ((compatible > 0 && incompatible > 0) || mixed_kinds) {
            out.rationale = std::to_string(compatible) + " compatible and " +
                            std::to_string(incompatible) +
                            " incompatible operation pairs coexist";
            return AggregateClass::PartiallyCompatible;
        }
        out.rationale = "every operation pair is order-sensitive; concurrent updates conflict "
                        "on the whole state";
        return AggregateClass::StateOpaque;
    };

    out.cls = decide();
    out.trivial = is_trivial(out.cls);
    out.declared_mismatch = agg.declared_class && *agg.declared_class != out.cls;
    if (out.declared_mismatch)
        out.rationale += "; declared as " + std::string(to_string(*agg.declared_class)) +
                         " but analysis disagrees";
    return out;
}

ClassificationReport classify_model(const ModelDescriptor& model,
                                    const std::vector<CompatibilityMatrix>& matrices) {
    ClassificationReport report;
    for (std::size_t i = 0; i < model.aggregates.size(); ++i) {
        report.aggregates.push_back(classify_aggregate(model.aggregates[i], matrices[i]));
        if (report.aggregates.back().trivial) ++report.trivial_count;
    }
    report.total_count = model.aggregates.size();
    return report;
}

Ratio trivial_share(const ModelDescriptor& model,
                    const std::vector<CompatibilityMatrix>& matrices) {
    if (model.aggregates.empty()) throw EmptyModelError("model has no aggregates");
    ClassificationReport report = classify_model(model, matrices);
    return Ratio{report.trivial_count, report.total_count};
}

} // namespace eclat
