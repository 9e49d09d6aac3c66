#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eclat/simulator.hpp"

namespace eclat {

/// Published effectiveness counts a corpus model must reproduce.
struct ExpectedMetrics {
    std::uint64_t compatible_num = 0, compatible_den = 0;
    std::uint64_t trivial_num = 0, trivial_den = 0;
};

struct CorpusEntry {
    std::string id;
    std::string document; // eclat-model/1 JSON
    std::string provenance;
    std::optional<ExpectedMetrics> expected;
};

const std::vector<CorpusEntry>& corpus_entries();
std::vector<std::string> corpus_model_ids();

/// Parses and validates a bundled model. Throws UnknownCorpusIdError.
ModelDescriptor load_corpus_model(const std::string& id);
const CorpusEntry& corpus_entry(const std::string& id);

struct CorpusScenario {
    std::string id;
    std::string document; // eclat-scenario/1 JSON
    std::string note;
};

const std::vector<CorpusScenario>& corpus_scenarios();
std::vector<std::string> corpus_scenario_ids();
Scenario load_corpus_scenario(const std::string& id);

/// Resolves "corpus:<id>" to a bundled model, anything else to a file path.
ModelDescriptor resolve_model_ref(const std::string& ref);

/// Writes every bundled model and scenario into dir as pretty-printed JSON.
/// Returns the written paths.
std::vector<std::string> corpus_export(const std::string& dir);

// --- serial oracle -----------------------------------------------------------

struct OracleStep {
    std::string aggregate;
    std::string op;
    ParamValues params;
};

struct OracleResult {
    std::vector<State> states;          // per aggregate, final
    std::vector<std::size_t> skipped;   // steps whose precondition failed
};

/// Single-replica sequential application of `steps` in the given order
/// (indexes into steps). Steps whose precondition fails are skipped and
/// reported, mirroring engine behavior. Ground truth for convergence checks:
/// for all-compatible models the result is order-independent.
OracleResult serial_oracle(const ModelDescriptor& model, const std::vector<OracleStep>& steps,
                           const std::vector<std::size_t>& order);

/// Per-aggregate canonical digests of an oracle result, comparable with
/// SimReport::aggregate_digests.
std::vector<std::string> oracle_digests(const ModelDescriptor& model, const OracleResult& result);

} // namespace eclat
