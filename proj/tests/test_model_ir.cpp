#include <doctest.h>

#include <set>

#include "eclat/corpus.hpp"
#include "eclat/parse.hpp"
#include "eclat/validate.hpp"
#include "fixtures.hpp"

using namespace eclat;

TEST_CASE("parse resolves the bundled baseline to 4 aggregates / 2 operations") {
    ModelDescriptor m = load_corpus_model("moodbarometer-baseline");
    CHECK(m.aggregates.size() == 4);
    CHECK(m.total_operations() == 2);
    CHECK(m.bounded_context == "team-mood-barometer");
}

TEST_CASE("parse rejects a model without aggregates") {
    CHECK_THROWS_AS(parse_model(R"({"schema":"eclat-model/1","name":"x",
                                    "bounded_context":"y","aggregates":[]})"),
                    DomainError);
}

TEST_CASE("parse rejects a projection that also declares operations") {
    json doc = json::parse(fixtures::kCounter);
    doc["aggregates"].push_back(
        json{{"name", "Mirror"},
             {"writers", json::array()},
             {"state_space",
              {{"fields", json::array({json{{"name", "n"},
                                            {"domain", {{"kind", "int"}, {"min", 0}, {"max", 3}}}}})},
               {"initial", {{"n", 0}}}}},
             {"projection_of",
              {{"aggregate", "Counter"}, {"projection", "map_size"}, {"source_field", "value"},
               {"target_field", "n"}}},
             {"operations",
              json::array(
                  {json{{"name", "tweak"},
                        {"update_kind", "incremental"},
                        {"effect", json::array({json{{"fn", "add_delta"},
                                                     {"field", "n"},
                                                     {"delta", {{"value", 1}}}}})}}})}});
    CHECK_THROWS_AS(parse_model_json(doc), ReferenceError);
}

TEST_CASE("parse reports malformed JSON as a syntax error") {
    CHECK_THROWS_AS(parse_model("{not json"), SyntaxError);
    CHECK_THROWS_AS(parse_model(R"({"schema":"eclat-model/9","name":"x",
                                    "bounded_context":"y","aggregates":[]})"),
                    SyntaxError);
}

TEST_CASE("parse rejects dangling references and oversized domains") {
    // unknown field in an effect
    json doc = json::parse(fixtures::kCounter);
    doc["aggregates"][0]["operations"][0]["effect"][0]["field"] = "missing";
    CHECK_THROWS_AS(parse_model_json(doc), ReferenceError);

    // set over the element cap
    json big = json::parse(fixtures::kCounter);
    json symbols = json::array();
    for (int i = 0; i < 9; ++i) symbols.push_back("s" + std::to_string(i));
    big["aggregates"][0]["state_space"]["fields"].push_back(
        json{{"name", "tags"}, {"domain", {{"kind", "set"}, {"symbols", symbols}}}});
    CHECK_THROWS_AS(parse_model_json(big), DomainError);
}

TEST_CASE("a declared order that is not a semilattice rejects join operations") {
    CHECK_THROWS_AS(parse_model(fixtures::kNonLattice), NotALatticeError);
}

TEST_CASE("enumerate_states yields every state once, in a deterministic order") {
    ModelDescriptor m = parse_model(fixtures::kCounter);
    const StateSpace& space = m.aggregates[0].state_space;
    CHECK(space.size() == 21);

    SUBCASE("single int field [0..3] enumerates 0,1,2,3") {
        StateSpace small;
        small.fields.push_back({"v", IntRangeDomain{0, 3}});
        small.initial = {Int{0}};
        std::vector<Int> seen;
        small.for_each_state([&](const State& s) { seen.push_back(std::get<Int>(s[0])); });
        CHECK(seen == std::vector<Int>{0, 1, 2, 3});
    }

    SUBCASE("two fields of sizes 3 and 5 yield 15 distinct states") {
        StateSpace two;
        two.fields.push_back({"a", IntRangeDomain{0, 2}});
        two.fields.push_back({"b", IntRangeDomain{0, 4}});
        two.initial = {Int{0}, Int{0}};
        CHECK(two.size() == 15);
        std::set<std::pair<Int, Int>> seen;
        two.for_each_state([&](const State& s) {
            seen.insert({std::get<Int>(s[0]), std::get<Int>(s[1])});
        });
        CHECK(seen.size() == 15);
    }

    SUBCASE("a space beyond the cap reports CapExceeded") {
        StateSpace big;
        big.fields.push_back({"a", IntRangeDomain{0, 999}});
        big.fields.push_back({"b", IntRangeDomain{0, 1999}});
        big.initial = {Int{0}, Int{0}};
        big.enumeration_cap = 1'000'000;
        CHECK_THROWS_AS(big.for_each_state([](const State&) {}), CapExceededError);
    }
}

TEST_CASE("parse -> serialize -> parse is identity on every bundled model") {
    for (const auto& id : corpus_model_ids()) {
        ModelDescriptor first = load_corpus_model(id);
        ModelDescriptor second = parse_model_json(serialize_model(first));
        CAPTURE(id);
        CHECK(models_equal(first, second));
        CHECK(serialize_model(first) == serialize_model(second));
    }
}

TEST_CASE("parse -> serialize -> parse is identity on the fixture models") {
    for (const char* doc : {fixtures::kCounter, fixtures::kRegisters, fixtures::kLifecycle,
                            fixtures::kBadIncremental, fixtures::kBlindAdd,
                            fixtures::kBadInvariant, fixtures::kBigSpace,
                            fixtures::kClashingIncrements}) {
        ModelDescriptor first = parse_model(std::string(doc));
        CHECK(models_equal(first, parse_model_json(serialize_model(first))));
    }
}

TEST_CASE("validate flags update-kind/effect mismatches") {
    SUBCASE("incremental op that overwrites untouched state") {
        auto findings = validate_model(parse_model(fixtures::kBadIncremental));
        REQUIRE(findings.size() == 1);
        CHECK(findings[0].kind == Finding::Kind::KindEffectMismatch);
        CHECK(findings[0].operation == "overwrite");
    }
    SUBCASE("true-blind op that reads the current value") {
        auto findings = validate_model(parse_model(fixtures::kBlindAdd));
        REQUIRE(findings.size() == 1);
        CHECK(findings[0].kind == Finding::Kind::KindEffectMismatch);
        CHECK(findings[0].operation == "bump");
    }
}

TEST_CASE("validate flags an initial state that violates an invariant") {
    auto findings = validate_model(parse_model(fixtures::kBadInvariant));
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].kind == Finding::Kind::InitialStateViolation);
    CHECK(findings[0].aggregate == "Quota");
}

TEST_CASE("every bundled corpus model validates clean") {
    for (const auto& id : corpus_model_ids()) {
        CAPTURE(id);
        CHECK(validate_model(load_corpus_model(id)).empty());
    }
}
