// eclat: analyze declared domain models for operation compatibility and
// aggregate triviality, and replay them through a deterministic adversarial
// replication simulator.
//
// Exit codes form a contract scripts can gate on:
//   0  clean / safe
//   1  findings (anti-patterns, incompatible verdicts, divergence, lost updates)
//   2  usage, input, or schema errors

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "eclat/analysis.hpp"
#include "eclat/corpus.hpp"
#include "eclat/parse.hpp"
#include "eclat/simulator.hpp"

namespace {

using namespace eclat;

struct GlobalFlags {
    std::string json_path;
    bool quiet = false;
    std::optional<std::uint64_t> seed;
};

void write_json(const std::string& path, const json& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << doc.dump(2) << '\n';
}

std::optional<std::uint64_t> env_seed() {
    const char* env = std::getenv("ECLAT_SEED");
    if (!env || !*env) return std::nullopt;
    return std::strtoull(env, nullptr, 10);
}

int cmd_analyze(const std::string& ref, const GlobalFlags& flags, bool fail_on_findings) {
    ModelDescriptor model = resolve_model_ref(ref);
    CheckerOptions options;
    if (flags.seed) options.seed = *flags.seed;
    AnalyzeReport report = analyze(model, options);
    if (!flags.json_path.empty()) write_json(flags.json_path, analyze_report_to_json(report, model));
    if (flags.quiet) {
        std::cout << "compatible " << report.compatible.numerator << "/"
                  << report.compatible.denominator << " (" << report.compatible.percent()
                  << "%) trivial " << report.trivial.numerator << "/"
                  << report.trivial.denominator << " (" << report.trivial.percent() << "%)\n";
    } else {
        std::cout << analyze_report_table(report);
    }
    if (fail_on_findings && !report.clean()) return 1;
    return 0;
}

int cmd_simulate(const std::string& ref, const GlobalFlags& flags, bool digest_only,
                 const std::string& journal_path) {
    Scenario scenario;
    constexpr const char* kPrefix = "corpus:";
    if (ref.rfind(kPrefix, 0) == 0) {
        scenario = load_corpus_scenario(ref.substr(7));
    } else {
        std::ifstream in(ref);
        if (!in) throw ScenarioError("cannot open scenario file '" + ref + "'");
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        scenario = parse_scenario_text(text, resolve_model_ref);
    }
    if (auto seed = flags.seed ? flags.seed : env_seed()) scenario.cfg.seed = *seed;
    scenario.cfg.capture_journal = !journal_path.empty();

    SimReport report = run_scenario(scenario);
    if (!flags.json_path.empty()) write_json(flags.json_path, report_to_json(report));
    if (!journal_path.empty()) {
        std::ofstream out(journal_path, std::ios::binary);
        if (!out) throw Error("cannot write '" + journal_path + "'");
        out << report.journal_ndjson;
    }
    if (digest_only) {
        std::cout << "converged=" << (report.converged ? "true" : "false")
                  << " lost=" << report.lost_updates.size() << " digest=" << report.digest
                  << "\n";
    } else if (!flags.quiet) {
        WindowStats ws = inconsistency_windows(report);
        std::cout << "scenario: " << report.scenario << " (model " << report.model << ", seed "
                  << report.seed << ")\n";
        std::cout << "converged: " << (report.converged ? "true" : "false")
                  << "  digest: " << report.digest << "\n";
        std::cout << "submitted " << report.submitted << ", delivered " << report.delivered
                  << ", duplicates " << report.duplicates << ", rejected local "
                  << report.rejected_submits << " / remote " << report.rejected_remote << "\n";
        std::cout << "inconsistency window ticks: min " << ws.min << " median " << ws.median
                  << " max " << ws.max << "\n";
        if (report.lost_updates.empty()) {
            std::cout << "lost updates: none\n";
        } else {
            std::cout << "lost updates:\n";
            for (const auto& f : report.lost_updates)
                std::cout << "  " << to_string(f.op_id) << " " << f.op_name << " ["
                          << to_string(f.reason) << "] " << f.evidence << "\n";
        }
    } else {
        std::cout << "converged=" << (report.converged ? "true" : "false")
                  << " lost=" << report.lost_updates.size() << "\n";
    }
    return report.converged && report.lost_updates.empty() ? 0 : 1;
}

int cmd_check(const std::string& ref, const std::string& op_a, const std::string& op_b,
              const GlobalFlags& flags) {
    ModelDescriptor model = resolve_model_ref(ref);
    CheckerOptions options;
    if (flags.seed) options.seed = *flags.seed;
    CompatibilityVerdict verdict = check_pair_in_model(model, op_a, op_b, options);
    json out{{"schema", kReportSchema},
             {"kind", "check"},
             {"model", model.name},
             {"pair", json::array({op_a, op_b})},
             {"outcome", to_string(verdict.outcome)}};
    out["coverage"] = verdict.coverage.exhaustive
                          ? json{{"exhaustive", true}}
                          : json{{"exhaustive", false},
                                 {"samples", verdict.coverage.samples},
                                 {"seed", verdict.coverage.seed}};

    std::cout << op_a << " vs " << op_b << ": " << to_string(verdict.outcome)
              << (verdict.coverage.exhaustive
                      ? " (exhaustive)"
                      : " (sampled n=" + std::to_string(verdict.coverage.samples) +
                            ", seed=" + std::to_string(verdict.coverage.seed) + ")")
              << "\n";
    if (verdict.witness) {
        // locate the aggregate/ops to render the witness
        for (const auto& agg : model.aggregates) {
            int ia = agg.operation_index(op_a);
            int ib = agg.operation_index(op_b);
            if (ia < 0 || ib < 0) continue;
            json w = witness_to_json(*verdict.witness, agg, agg.operations[ia],
                                     agg.operations[ib]);
            out["witness"] = w;
            if (!flags.quiet) {
                std::cout << "witness state:     " << w["state"].dump() << "\n";
                std::cout << "params " << op_a << ": " << w["params_a"].dump() << "\n";
                std::cout << "params " << op_b << ": " << w["params_b"].dump() << "\n";
                std::cout << "result a-then-b:   " << w["result_ab"].dump() << "\n";
                std::cout << "result b-then-a:   " << w["result_ba"].dump() << "\n";
            }
            break;
        }
    }
    if (!flags.json_path.empty()) write_json(flags.json_path, out);
    return verdict.outcome == CompatibilityVerdict::Outcome::Incompatible ? 1 : 0;
}

int cmd_corpus_list() {
    for (const auto& e : corpus_entries()) {
        std::cout << "model    " << e.id;
        if (e.expected)
            std::cout << "  [compatible " << e.expected->compatible_num << "/"
                      << e.expected->compatible_den << ", trivial " << e.expected->trivial_num
                      << "/" << e.expected->trivial_den << "]";
        std::cout << "\n         " << e.provenance << "\n";
    }
    for (const auto& s : corpus_scenarios())
        std::cout << "scenario " << s.id << "\n         " << s.note << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"safety analysis and adversarial simulation for eventually consistent "
                 "domain models"};
    app.require_subcommand(1);

    GlobalFlags flags;
    std::uint64_t seed_arg = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--json", flags.json_path, "write the full JSON report to this path");
        cmd->add_flag("--quiet", flags.quiet, "one-line summary only");
        cmd->add_option("--seed", seed_arg, "seed override (also: ECLAT_SEED)")
            ->each([&](const std::string&) { flags.seed = seed_arg; });
    };

    std::string model_ref, scenario_ref;
    bool fail_on_findings = false, digest_only = false;
    std::string journal_path;
    std::vector<std::string> pair;

    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "static safety analysis of a model (path or corpus:<id>)");
    analyze_cmd->add_option("model", model_ref, "model document path or corpus:<id>")->required();
    analyze_cmd->add_flag("--fail-on-findings", fail_on_findings,
                          "exit 1 on any anti-pattern, finding, or non-compatible verdict");
    add_common(analyze_cmd);

    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "run a scenario (path or corpus:<id>) to quiescence");
    simulate_cmd->add_option("scenario", scenario_ref, "scenario document path or corpus:<id>")
        ->required();
    simulate_cmd->add_flag("--digest-only", digest_only,
                           "print one line: converged=<bool> lost=<n> digest=<hex>");
    simulate_cmd->add_option("--journal", journal_path,
                             "write newline-delimited JSON journals to this path");
    add_common(simulate_cmd);

    CLI::App* check_cmd = app.add_subcommand("check", "check one operation pair");
    check_cmd->add_option("model", model_ref, "model document path or corpus:<id>")->required();
    check_cmd->add_option("--pair", pair, "two operation names")->expected(2)->required();
    add_common(check_cmd);

    CLI::App* corpus_cmd = app.add_subcommand("corpus", "bundled models and scenarios");
    CLI::App* corpus_list = corpus_cmd->add_subcommand("list", "list corpus entries");
    CLI::App* corpus_exp = corpus_cmd->add_subcommand("export", "write corpus documents to disk");
    std::string export_dir = "corpus";
    corpus_exp->add_option("--dir", export_dir, "target directory (default ./corpus)");
    corpus_cmd->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze_cmd) return cmd_analyze(model_ref, flags, fail_on_findings);
        if (*simulate_cmd) return cmd_simulate(scenario_ref, flags, digest_only, journal_path);
        if (*check_cmd) return cmd_check(model_ref, pair[0], pair[1], flags);
        if (*corpus_list) return cmd_corpus_list();
        if (*corpus_exp) {
            for (const auto& path : corpus_export(export_dir)) std::cout << path << "\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
