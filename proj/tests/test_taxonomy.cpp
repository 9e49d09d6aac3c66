#include <doctest.h>

#include "eclat/corpus.hpp"
#include "eclat/parse.hpp"
#include "eclat/taxonomy.hpp"
#include "fixtures.hpp"

using namespace eclat;

namespace {

ClassificationReport classify(const ModelDescriptor& m) {
    std::vector<CompatibilityMatrix> matrices;
    for (const auto& agg : m.aggregates) matrices.push_back(build_matrix(agg));
    return classify_model(m, matrices);
}

AggregateClass class_of(const ClassificationReport& report, const std::string& name) {
    for (const auto& c : report.aggregates)
        if (c.aggregate == name) return c.cls;
    FAIL("aggregate not found: ", name);
    return AggregateClass::StateOpaque;
}

} // namespace

TEST_CASE("a zero-operation configuration aggregate is Immutable") {
    ModelDescriptor m = load_corpus_model("moodbarometer-redesign-a");
    ClassificationReport report = classify(m);
    CHECK(class_of(report, "BarometerConfiguration") == AggregateClass::Immutable);
}

TEST_CASE("a projection with zero ops is Derived") {
    ModelDescriptor m = load_corpus_model("moodbarometer-redesign-a");
    ClassificationReport report = classify(m);
    CHECK(class_of(report, "MoodSummary") == AggregateClass::Derived);
}

TEST_CASE("a counter whose increments all commute is FullyCompatible") {
    ModelDescriptor m = parse_model(fixtures::kCounter);
    ClassificationReport report = classify(m);
    CHECK(class_of(report, "Counter") == AggregateClass::FullyCompatible);
    CHECK_FALSE(report.aggregates[0].trivial);
}

TEST_CASE("a single declared writer makes an aggregate trivial even with operations") {
    ModelDescriptor m = load_corpus_model("backlog");
    ClassificationReport report = classify(m);
    CHECK(class_of(report, "SprintCalendar") == AggregateClass::SingleWriter);
    for (const auto& c : report.aggregates)
        if (c.aggregate == "SprintCalendar") CHECK(c.trivial);
}

TEST_CASE("an op-less aggregate open to any writer is not Immutable") {
    ModelDescriptor m = load_corpus_model("moodbarometer-baseline");
    ClassificationReport report = classify(m);
    CHECK(class_of(report, "VoteRecords") == AggregateClass::StateOpaque);
    CHECK(class_of(report, "TeamRoster") == AggregateClass::Immutable);
}

TEST_CASE("mixed compatible and incompatible pairs classify PartiallyCompatible") {
    ModelDescriptor m = load_corpus_model("backlog");
    ClassificationReport report = classify(m);
    CHECK(class_of(report, "UserStory") == AggregateClass::PartiallyCompatible);
}

TEST_CASE("classification is total: every aggregate of every corpus model gets one class") {
    for (const auto& id : corpus_model_ids()) {
        ModelDescriptor m = load_corpus_model(id);
        ClassificationReport report = classify(m);
        CHECK(report.aggregates.size() == m.aggregates.size());
        CHECK(report.total_count == m.aggregates.size());
        CHECK(report.trivial_count <= report.total_count);
    }
}

TEST_CASE("trivial is exactly the first three classes") {
    CHECK(is_trivial(AggregateClass::Immutable));
    CHECK(is_trivial(AggregateClass::Derived));
    CHECK(is_trivial(AggregateClass::SingleWriter));
    CHECK_FALSE(is_trivial(AggregateClass::FullyCompatible));
    CHECK_FALSE(is_trivial(AggregateClass::PartiallyCompatible));
    CHECK_FALSE(is_trivial(AggregateClass::StateOpaque));
}

TEST_CASE("a declared class that disagrees with analysis becomes a mismatch finding") {
    json doc = json::parse(fixtures::kCounter);
    doc["aggregates"][0]["declared_class"] = "Immutable";
    ModelDescriptor m = parse_model_json(doc);
    ClassificationReport report = classify(m);
    CHECK(report.aggregates[0].cls == AggregateClass::FullyCompatible);
    CHECK(report.aggregates[0].declared_mismatch);
}

TEST_CASE("adding an operation never moves an aggregate into Immutable/Derived") {
    // immutable roster gains an operation -> no longer trivial-by-immutability
    json doc = json::parse(R"({"schema":"eclat-model/1","name":"roster","bounded_context":"demo",
      "aggregates":[{"name":"Roster","writers":[],
        "state_space":{"fields":[{"name":"members","domain":{"kind":"set","symbols":["a","b"]}}],
                       "initial":{"members":[]}}}]})");
    ModelDescriptor before = parse_model_json(doc);
    CHECK(classify(before).aggregates[0].cls == AggregateClass::Immutable);

    doc["aggregates"][0]["operations"] = json::array(
        {json{{"name", "join"},
              {"update_kind", "incremental"},
              {"params", json::array({json{{"name", "who"},
                                           {"domain", {{"kind", "enum"},
                                                       {"symbols", json::array({"a", "b"})}}}}})},
              {"effect", json::array({json{{"fn", "insert_keyed"},
                                           {"field", "members"},
                                           {"element", {{"param", "who"}}}}})}}});
    ModelDescriptor after = parse_model_json(doc);
    AggregateClass cls = classify(after).aggregates[0].cls;
    CHECK(cls != AggregateClass::Immutable);
    CHECK(cls != AggregateClass::Derived);
}

TEST_CASE("trivial_share reproduces the corpus counts") {
    auto share = [](const char* id) {
        ModelDescriptor m = load_corpus_model(id);
        std::vector<CompatibilityMatrix> matrices;
        for (const auto& agg : m.aggregates) matrices.push_back(build_matrix(agg));
        return trivial_share(m, matrices);
    };
    Ratio baseline = share("moodbarometer-baseline");
    CHECK(baseline.numerator == 1);
    CHECK(baseline.denominator == 4);
    CHECK(baseline.percent() == "25.0");
    Ratio backlog = share("backlog");
    CHECK(backlog.numerator == 3);
    CHECK(backlog.denominator == 8);
    CHECK(backlog.percent() == "37.5");
    Ratio single = share("taskboard-safe");
    CHECK(single.denominator == 2);
}

TEST_CASE("a one-aggregate immutable model is 100% trivial") {
    json doc = json::parse(R"({"schema":"eclat-model/1","name":"frozen","bounded_context":"demo",
      "aggregates":[{"name":"Frozen","writers":[],
        "state_space":{"fields":[{"name":"x","domain":{"kind":"int","min":0,"max":1}}],
                       "initial":{"x":0}}}]})");
    ModelDescriptor m = parse_model_json(doc);
    std::vector<CompatibilityMatrix> matrices{build_matrix(m.aggregates[0])};
    Ratio r = trivial_share(m, matrices);
    CHECK(r.numerator == 1);
    CHECK(r.denominator == 1);
    CHECK(r.percent() == "100.0");
}
