#include "eclat/corpus.hpp"

#include <filesystem>
#include <fstream>

#include "eclat/effects.hpp"
#include "eclat/parse.hpp"
#include "corpus_data.hpp"

namespace eclat {

namespace {

std::string kReconstruction =
    "authored reconstruction; the studied system's model is unpublished, so this document is "
    "constrained to match the published counts exactly";

} // namespace

const std::vector<CorpusEntry>& corpus_entries() {
    static const std::vector<CorpusEntry> entries = {
        {"taskboard-naive", corpus_data::kTaskboardNaive,
         "motivating task-conflict scenario, naive variant: coarse state-based task writes; " +
             kReconstruction,
         std::nullopt},
        {"taskboard-safe", corpus_data::kTaskboardSafe,
         "motivating task-conflict scenario, lattice redesign: status joins upward, comment "
         "deletes tombstone; " +
             kReconstruction,
         std::nullopt},
        {"moodbarometer-baseline", corpus_data::kMoodBarometerBaseline,
         "anemic baseline model: two coarse state-based save operations; " + kReconstruction,
         ExpectedMetrics{0, 2, 1, 4}},
        {"moodbarometer-redesign-a", corpus_data::kMoodBarometerRedesignA,
         "first redesign: explicit immutable configuration aggregate, keyed vote inserts, "
         "lattice lifecycle; " +
             kReconstruction,
         ExpectedMetrics{4, 4, 2, 5}},
        {"moodbarometer-redesign-b", corpus_data::kMoodBarometerRedesignB,
         "second redesign: one blind register write left in (the editable question); " +
             kReconstruction,
         ExpectedMetrics{2, 3, 3, 5}},
        {"backlog", corpus_data::kBacklog,
         "backlog management / grooming / asynchronous planning poker; the sole incompatible "
         "operation is the collaborative story-description edit; " +
             kReconstruction,
         ExpectedMetrics{21, 22, 3, 8}},
    };
    return entries;
}

std::vector<std::string> corpus_model_ids() {
    std::vector<std::string> ids;
    for (const auto& e : corpus_entries()) ids.push_back(e.id);
    return ids;
}

const CorpusEntry& corpus_entry(const std::string& id) {
    for (const auto& e : corpus_entries())
        if (e.id == id) return e;
    throw UnknownCorpusIdError("unknown corpus model '" + id + "'");
}

ModelDescriptor load_corpus_model(const std::string& id) {
    return parse_model(corpus_entry(id).document);
}

const std::vector<CorpusScenario>& corpus_scenarios() {
    static const std::vector<CorpusScenario> scenarios = {
        {"taskboard-lww-conflict", corpus_data::kLwwConflict,
         "two concurrent task writers under whole-state last-writer-wins; the start-work intent "
         "is overwritten"},
        {"taskboard-superset-resurrection", corpus_data::kSupersetResurrection,
         "comment-set union merge; a deleted comment re-appears in the converged state"},
        {"taskboard-safe-storm", corpus_data::kTaskboardSafeStorm,
         "randomized adversarial run over the lattice redesign; converges with no lost updates"},
        {"moodbarometer-redesign-a-storm", corpus_data::kRedesignAStorm,
         "randomized adversarial run over the compatible barometer redesign"},
        {"backlog-poker-session", corpus_data::kBacklogPokerSession,
         "randomized grooming/poker session over the backlog model's compatible operations"},
        {"backlog-concurrent-edit", corpus_data::kBacklogConcurrentEdit,
         "the declared-incompatible story edit raced from two replicas; replicas diverge"},
    };
    return scenarios;
}

std::vector<std::string> corpus_scenario_ids() {
    std::vector<std::string> ids;
    for (const auto& s : corpus_scenarios()) ids.push_back(s.id);
    return ids;
}

ModelDescriptor resolve_model_ref(const std::string& ref) {
    constexpr const char* kPrefix = "corpus:";
    if (ref.rfind(kPrefix, 0) == 0) return load_corpus_model(ref.substr(7));
    return parse_model_file(ref);
}

Scenario load_corpus_scenario(const std::string& id) {
    for (const auto& s : corpus_scenarios())
        if (s.id == id) return parse_scenario_text(s.document, resolve_model_ref);
    throw UnknownCorpusIdError("unknown corpus scenario '" + id + "'");
}

std::vector<std::string> corpus_export(const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(fs::path(dir) / "models");
    fs::create_directories(fs::path(dir) / "scenarios");
    std::vector<std::string> written;
    auto write = [&written](const fs::path& path, const std::string& text) {
        std::ofstream out(path);
        if (!out) throw Error("cannot write '" + path.string() + "'");
        out << json::parse(text).dump(2) << '\n';
        written.push_back(path.string());
    };
    for (const auto& e : corpus_entries())
        write(fs::path(dir) / "models" / (e.id + ".json"), e.document);
    for (const auto& s : corpus_scenarios())
        write(fs::path(dir) / "scenarios" / (s.id + ".json"), s.document);
    return written;
}

OracleResult serial_oracle(const ModelDescriptor& model, const std::vector<OracleStep>& steps,
                           const std::vector<std::size_t>& order) {
    OracleResult result;
    for (const auto& agg : model.aggregates) result.states.push_back(agg.state_space.initial);

    auto refresh = [&](int source) {
        for (std::size_t d = 0; d < model.aggregates.size(); ++d) {
            const AggregateDescriptor& derived = model.aggregates[d];
            if (!derived.projection_of) continue;
            if (derived.projection_of->source_aggregate_index != source) continue;
            result.states[d] = apply_projection(*derived.projection_of, derived,
                                                model.aggregates[source], result.states[source]);
        }
    };
    for (std::size_t i = 0; i < model.aggregates.size(); ++i) refresh(static_cast<int>(i));

    for (std::size_t idx : order) {
        const OracleStep& step = steps.at(idx);
        int agg = model.aggregate_index(step.aggregate);
        if (agg < 0) throw UnknownOperationError("oracle step names unknown aggregate");
        int op = model.aggregates[agg].operation_index(step.op);
        if (op < 0) throw UnknownOperationError("oracle step names unknown operation");
        const AggregateDescriptor& desc = model.aggregates[agg];
        if (!op_applicable(desc.state_space, desc.operations[op], result.states[agg],
                           step.params)) {
            result.skipped.push_back(idx);
            continue;
        }
        apply_effect(desc.state_space, desc.operations[op].effect, result.states[agg],
                     step.params);
        refresh(agg);
    }
    return result;
}

std::vector<std::string> oracle_digests(const ModelDescriptor& model,
                                        const OracleResult& result) {
    std::vector<std::string> digests;
    for (std::size_t a = 0; a < model.aggregates.size(); ++a)
        digests.push_back(state_digest(model.aggregates[a].state_space, result.states[a]));
    return digests;
}

} // namespace eclat
