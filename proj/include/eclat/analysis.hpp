#pragma once

#include <string>
#include <vector>

#include "eclat/canon.hpp"
#include "eclat/compatibility.hpp"
#include "eclat/taxonomy.hpp"
#include "eclat/validate.hpp"

namespace eclat {

/// Full static-analysis result for one model: validation findings,
/// per-aggregate compatibility matrices, classification, the two safety
/// shares, and anti-pattern findings.
struct AnalyzeReport {
    std::string model;
    std::string bounded_context;
    std::vector<Finding> findings;
    std::vector<CompatibilityMatrix> matrices;
    ClassificationReport classification;
    Ratio compatible;
    Ratio trivial;
    std::vector<AntiPatternFinding> anti_patterns;

    bool clean() const; // no findings, no anti-patterns, every verdict Compatible
};

AnalyzeReport analyze(const ModelDescriptor& model, const CheckerOptions& options = {});

json witness_to_json(const Witness& w, const AggregateDescriptor& agg,
                     const OperationDescriptor& op_a, const OperationDescriptor& op_b);

json analyze_report_to_json(const AnalyzeReport& report, const ModelDescriptor& model);

/// Human-readable rendering (one-decimal percents; counts stay exact).
std::string analyze_report_table(const AnalyzeReport& report);

} // namespace eclat
