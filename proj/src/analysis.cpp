#include "eclat/analysis.hpp"

#include <sstream>

namespace eclat {

bool AnalyzeReport::clean() const {
    if (!findings.empty() || !anti_patterns.empty()) return false;
    for (const auto& m : matrices)
        for (const auto& row : m.verdicts)
            for (const auto& v : row)
                if (v.outcome != CompatibilityVerdict::Outcome::Compatible) return false;
    return true;
}

AnalyzeReport analyze(const ModelDescriptor& model, const CheckerOptions& options) {
    AnalyzeReport report;
    report.model = model.name;
    report.bounded_context = model.bounded_context;
    report.findings = validate_model(model);
    for (const auto& agg : model.aggregates)
        report.matrices.push_back(build_matrix(agg, options));
    report.classification = classify_model(model, report.matrices);
    report.compatible = compatible_share(model, report.matrices);
    report.trivial = trivial_share(model, report.matrices);
    report.anti_patterns = detect_anti_patterns(model, report.matrices);
    return report;
}

json witness_to_json(const Witness& w, const AggregateDescriptor& agg,
                     const OperationDescriptor& op_a, const OperationDescriptor& op_b) {
    json out{{"state", state_to_json(agg.state_space, w.state)},
             {"params_a", params_to_json(op_a, w.params_a)},
             {"params_b", params_to_json(op_b, w.params_b)}};
    out["result_ab"] =
        w.result_ab ? state_to_json(agg.state_space, *w.result_ab) : json(nullptr);
    out["result_ba"] =
        w.result_ba ? state_to_json(agg.state_space, *w.result_ba) : json(nullptr);
    return out;
}

json analyze_report_to_json(const AnalyzeReport& report, const ModelDescriptor& model) {
    json classification = json::array();
    for (const auto& c : report.classification.aggregates) {
        json entry{{"aggregate", c.aggregate},
                   {"class", to_string(c.cls)},
                   {"trivial", c.trivial},
                   {"rationale", c.rationale}};
        if (c.declared_mismatch) entry["declared_mismatch"] = true;
        classification.push_back(entry);
    }

    json matrices = json::array();
    for (std::size_t i = 0; i < model.aggregates.size(); ++i) {
        const AggregateDescriptor& agg = model.aggregates[i];
        const CompatibilityMatrix& m = report.matrices[i];
        json verdicts = json::array();
        for (std::size_t a = 0; a < m.operations.size(); ++a)
            for (std::size_t b = a; b < m.operations.size(); ++b) {
                const CompatibilityVerdict& v = m.at(a, b);
                json entry{{"a", m.operations[a]},
                           {"b", m.operations[b]},
                           {"outcome", to_string(v.outcome)}};
                entry["coverage"] =
                    v.coverage.exhaustive
                        ? json{{"exhaustive", true}}
                        : json{{"exhaustive", false},
                               {"samples", v.coverage.samples},
                               {"seed", v.coverage.seed}};
                if (v.witness)
                    entry["witness"] = witness_to_json(*v.witness, agg, agg.operations[a],
                                                       agg.operations[b]);
                verdicts.push_back(entry);
            }
        json flags = json::object();
        for (std::size_t a = 0; a < m.operations.size(); ++a)
            flags[m.operations[a]] = static_cast<bool>(m.compatible_with_all[a]);
        matrices.push_back(json{{"aggregate", agg.name},
                                {"operations", m.operations},
                                {"verdicts", verdicts},
                                {"compatible_with_all", flags}});
    }

    json findings = json::array();
    for (const auto& f : report.findings)
        findings.push_back(json{{"kind", to_string(f.kind)},
                                {"aggregate", f.aggregate},
                                {"operation", f.operation},
                                {"message", f.message}});
    json anti = json::array();
    for (const auto& a : report.anti_patterns)
        anti.push_back(json{{"pattern", to_string(a.pattern)},
                            {"aggregate", a.aggregate},
                            {"operations", a.operations},
                            {"explanation", a.explanation}});

    auto ratio = [](const Ratio& r) {
        return json{{"numerator", r.numerator},
                    {"denominator", r.denominator},
                    {"percent", r.percent()}};
    };
    return json{{"schema", kReportSchema},
                {"kind", "analyze"},
                {"model", report.model},
                {"bounded_context", report.bounded_context},
                {"compatible_share", ratio(report.compatible)},
                {"trivial_share", ratio(report.trivial)},
                {"classification", classification},
                {"matrices", matrices},
                {"findings", findings},
                {"anti_patterns", anti}};
}

std::string analyze_report_table(const AnalyzeReport& report) {
    std::ostringstream out;
    out << "model: " << report.model << " (bounded context: " << report.bounded_context << ")\n";
    out << "compatible operations: " << report.compatible.numerator << "/"
        << report.compatible.denominator << " (" << report.compatible.percent() << "%)\n";
    out << "trivial aggregates:    " << report.trivial.numerator << "/"
        << report.trivial.denominator << " (" << report.trivial.percent() << "%)\n\n";

    std::size_t name_w = 9;
    for (const auto& c : report.classification.aggregates)
        name_w = std::max(name_w, c.aggregate.size());
    out << "  " << std::string(name_w - 9, ' ') << "aggregate  class                trivial  "
        << "rationale\n";
    for (const auto& c : report.classification.aggregates) {
        std::string cls = to_string(c.cls);
        cls.resize(20, ' ');
        out << "  " << std::string(name_w - c.aggregate.size(), ' ') << c.aggregate << "  " << cls
            << " " << (c.trivial ? "yes    " : "no     ") << "  " << c.rationale << "\n";
    }
    if (!report.anti_patterns.empty()) {
        out << "\nanti-patterns:\n";
        for (const auto& a : report.anti_patterns) {
            out << "  " << to_string(a.pattern) << " @ " << a.aggregate << "(";
            for (std::size_t i = 0; i < a.operations.size(); ++i)
                out << (i ? ", " : "") << a.operations[i];
            out << "): " << a.explanation << "\n";
        }
    }
    if (!report.findings.empty()) {
        out << "\nvalidation findings:\n";
        for (const auto& f : report.findings) {
            out << "  " << to_string(f.kind) << " @ " << f.aggregate;
            if (!f.operation.empty()) out << "." << f.operation;
            out << ": " << f.message << "\n";
        }
    }
    return out.str();
}

} // namespace eclat
