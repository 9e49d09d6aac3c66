#include <doctest.h>

#include <filesystem>

#include "eclat/analysis.hpp"
#include "eclat/corpus.hpp"
#include "eclat/rng.hpp"

using namespace eclat;

TEST_CASE("every corpus entry with published counts reproduces them exactly") {
    for (const auto& entry : corpus_entries()) {
        if (!entry.expected) continue;
        CAPTURE(entry.id);
        AnalyzeReport report = analyze(load_corpus_model(entry.id));
        CHECK(report.compatible.numerator == entry.expected->compatible_num);
        CHECK(report.compatible.denominator == entry.expected->compatible_den);
        CHECK(report.trivial.numerator == entry.expected->trivial_num);
        CHECK(report.trivial.denominator == entry.expected->trivial_den);
    }
}

TEST_CASE("corpus shapes match the studied systems") {
    ModelDescriptor backlog = load_corpus_model("backlog");
    CHECK(backlog.aggregates.size() == 8);
    CHECK(backlog.total_operations() == 22);
    // the sole incompatible operation is the collaborative story edit
    AnalyzeReport report = analyze(backlog);
    for (std::size_t i = 0; i < backlog.aggregates.size(); ++i)
        for (std::size_t o = 0; o < backlog.aggregates[i].operations.size(); ++o) {
            bool expected = backlog.aggregates[i].operations[o].name != "editStoryDescription";
            CHECK(static_cast<bool>(report.matrices[i].compatible_with_all[o]) == expected);
        }

    ModelDescriptor baseline = load_corpus_model("moodbarometer-baseline");
    int state_based = 0;
    for (const auto& agg : baseline.aggregates)
        for (const auto& op : agg.operations)
            if (op.update_kind == UpdateKind::StateBased) ++state_based;
    CHECK(state_based == 2); // anemic shape: two coarse state-based writes

    ModelDescriptor redesign = load_corpus_model("moodbarometer-redesign-a");
    CHECK(redesign.aggregates.size() == 5);
    int config = redesign.aggregate_index("BarometerConfiguration");
    REQUIRE(config >= 0);
    CHECK(redesign.aggregates[config].operations.empty()); // explicit immutable configuration
}

TEST_CASE("unknown corpus ids are rejected") {
    CHECK_THROWS_AS(load_corpus_model("no-such-model"), UnknownCorpusIdError);
    CHECK_THROWS_AS(load_corpus_scenario("no-such-scenario"), UnknownCorpusIdError);
}

TEST_CASE("serial oracle") {
    ModelDescriptor m = load_corpus_model("taskboard-safe");

    SUBCASE("an empty multiset leaves the initial state") {
        OracleResult r = serial_oracle(m, {}, {});
        for (std::size_t a = 0; a < m.aggregates.size(); ++a) {
            // derived aggregates are refreshed from their sources
            if (m.aggregates[a].projection_of) continue;
            CHECK(r.states[a] == m.aggregates[a].state_space.initial);
        }
    }

    SUBCASE("all-compatible multisets are order independent") {
        std::vector<OracleStep> steps = {
            {"Task", "startWork", {}},
            {"Task", "addComment", ParamValues{Int{0}}},
            {"Task", "blockTask", {}},
            {"Task", "deleteComment", ParamValues{Int{0}}},
            {"Task", "addComment", ParamValues{Int{2}}},
        };
        Rng rng(7);
        std::vector<std::size_t> order{0, 1, 2, 3, 4};
        OracleResult base = serial_oracle(m, steps, order);
        CHECK(base.skipped.empty());
        for (int round = 0; round < 30; ++round) {
            for (std::size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[rng.below(i)]);
            OracleResult shuffled = serial_oracle(m, steps, order);
            CHECK(oracle_digests(m, shuffled) == oracle_digests(m, base));
        }
    }

    SUBCASE("the naive concurrent pair is order dependent") {
        ModelDescriptor naive = load_corpus_model("taskboard-naive");
        std::vector<OracleStep> steps = {
            {"Task", "updateTask", ParamValues{Int{1}, Int{0}}}, // InProgress, none
            {"Task", "updateTask", ParamValues{Int{2}, Int{3}}}, // Blocked, c_blocker
        };
        OracleResult ab = serial_oracle(naive, steps, {0, 1});
        OracleResult ba = serial_oracle(naive, steps, {1, 0});
        CHECK(oracle_digests(naive, ab) != oracle_digests(naive, ba));
    }
}

TEST_CASE("corpus export writes every bundled document") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "eclat-corpus-test";
    fs::remove_all(dir);
    auto written = corpus_export(dir.string());
    CHECK(written.size() == corpus_entries().size() + corpus_scenarios().size());
    for (const auto& path : written) CHECK(fs::exists(path));
    // exported models load back
    ModelDescriptor m = resolve_model_ref((dir / "models" / "backlog.json").string());
    CHECK(m.name == "backlog");
    fs::remove_all(dir);
}
