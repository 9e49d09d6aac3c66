#include <doctest.h>

#include "eclat/corpus.hpp"
#include "eclat/parse.hpp"
#include "eclat/replication.hpp"
#include "eclat/rng.hpp"
#include "fixtures.hpp"

using namespace eclat;

namespace {

VersionVector vv(std::initializer_list<std::pair<ReplicaId, std::uint64_t>> entries) {
    VersionVector out;
    for (auto [r, n] : entries) out.set(r, n);
    return out;
}

} // namespace

TEST_CASE("version vector merge is componentwise max, identity and idempotent") {
    VersionVector a = vv({{0, 2}});
    VersionVector b = vv({{0, 1}, {1, 3}});
    VersionVector merged = vv_merge(a, b);
    CHECK(merged.get(0) == 2);
    CHECK(merged.get(1) == 3);
    CHECK(vv_merge(a, VersionVector{}) == a);
    CHECK(vv_merge(a, a) == a);
}

TEST_CASE("version vector comparison") {
    CHECK(vv_compare(vv({{0, 1}}), vv({{0, 2}})) == VvOrder::Before);
    CHECK(vv_compare(vv({{0, 2}}), vv({{0, 1}})) == VvOrder::After);
    CHECK(vv_compare(vv({{0, 1}}), vv({{1, 1}})) == VvOrder::Concurrent);
    VersionVector v = vv({{0, 3}, {2, 1}});
    CHECK(vv_compare(v, v) == VvOrder::Equal);
}

TEST_CASE("submit applies locally, journals, and returns a broadcastable instance") {
    ModelDescriptor m = load_corpus_model("moodbarometer-redesign-a");
    Replica replica(m, 0);
    ParamValues params{Int{0}, Int{2}}; // m1, high
    OperationInstance inst = replica.submit("MoodVotes", "placeVote", params, 1);
    CHECK(inst.id.origin == 0);
    CHECK(inst.id.seq == 1);
    CHECK(replica.vv().get(0) == 1);
    CHECK(inst.origin_vv.get(0) == 0); // snapshot before the apply
    int votes = m.aggregate_index("MoodVotes");
    CHECK(std::get<MapSlots>(replica.aggregate_state(votes)[0]).has(0));

    // two submits preserve journal order and bump the clock
    replica.submit("MoodVotes", "placeVote", ParamValues{Int{1}, Int{0}}, 2);
    CHECK(replica.vv().get(0) == 2);
    REQUIRE(replica.journal().size() == 2);
    CHECK(replica.journal()[0].seq < replica.journal()[1].seq);

    // derived summary tracks the projection
    int summary = m.aggregate_index("MoodSummary");
    CHECK(std::get<Int>(replica.aggregate_state(summary)[0]) == 2);
}

TEST_CASE("submit rejects and journals a failing precondition (never a silent drop)") {
    ModelDescriptor m = parse_model(fixtures::kLifecycle);
    Replica replica(m, 0);
    replica.submit("Barometer", "goLive", {}, 1);
    CHECK_THROWS_AS(replica.submit("Barometer", "changeConfiguration", ParamValues{Int{5}}, 2),
                    PreconditionFailedError);
    REQUIRE(replica.journal().size() == 2);
    CHECK(replica.journal()[1].outcome == JournalEvent::Outcome::RejectedPrecondition);
    CHECK_THROWS_AS(replica.submit("Barometer", "noSuchOp", {}, 3), UnknownOperationError);
}

TEST_CASE("redelivery of an applied instance is a duplicate and changes nothing") {
    ModelDescriptor m = load_corpus_model("taskboard-safe");
    Replica origin(m, 0), other(m, 1);
    OperationInstance inst = origin.submit("Task", "addComment", ParamValues{Int{0}}, 1);
    CHECK(other.deliver(inst, DeliveryPolicy::Causal, MergePolicy::None, 2) ==
          DeliverOutcome::Applied);
    std::string digest = other.digest();
    CHECK(other.deliver(inst, DeliveryPolicy::Causal, MergePolicy::None, 3) ==
          DeliverOutcome::Duplicate);
    CHECK(other.digest() == digest);
}

TEST_CASE("causal delivery buffers an instance until its origin vector is dominated") {
    ModelDescriptor m = load_corpus_model("taskboard-safe");
    Replica origin(m, 0), other(m, 1);
    OperationInstance first = origin.submit("Task", "addComment", ParamValues{Int{0}}, 1);
    OperationInstance second = origin.submit("Task", "deleteComment", ParamValues{Int{0}}, 2);
    CHECK(other.deliver(second, DeliveryPolicy::Causal, MergePolicy::None, 3) ==
          DeliverOutcome::Buffered);
    CHECK(other.buffered_count() == 1);
    CHECK(other.deliver(first, DeliveryPolicy::Causal, MergePolicy::None, 4) ==
          DeliverOutcome::Applied);
    CHECK(other.buffered_count() == 0); // gap filled, buffer drained
    CHECK(other.has_applied(second.id));
    // |applied| equals the vector sum under causal delivery
    CHECK(other.vv().sum() == 2);
}

TEST_CASE("concurrent compatible adds converge regardless of delivery order") {
    ModelDescriptor m = load_corpus_model("taskboard-safe");
    Replica a(m, 0), b(m, 1);
    OperationInstance ia = a.submit("Task", "addComment", ParamValues{Int{0}}, 1);
    OperationInstance ib = b.submit("Task", "addComment", ParamValues{Int{1}}, 1);
    a.deliver(ib, DeliveryPolicy::Causal, MergePolicy::None, 2);
    b.deliver(ia, DeliveryPolicy::Causal, MergePolicy::None, 2);
    std::vector<Replica> replicas;
    replicas.push_back(std::move(a));
    replicas.push_back(std::move(b));
    CHECK(converged(replicas).converged);
}

TEST_CASE("a remote precondition failure is recorded, not retried, and surfaces in the journal") {
    ModelDescriptor m = parse_model(fixtures::kLifecycle);
    Replica a(m, 0), b(m, 1);
    // b reconfigures while a goes live; a's replica re-executes the
    // reconfiguration on its divergent (Live) state and rejects it
    OperationInstance live = a.submit("Barometer", "goLive", {}, 1);
    OperationInstance conf = b.submit("Barometer", "changeConfiguration", ParamValues{Int{5}}, 1);
    CHECK(a.deliver(conf, DeliveryPolicy::Causal, MergePolicy::None, 2) ==
          DeliverOutcome::Rejected);
    bool journaled = false;
    for (const auto& ev : a.journal())
        journaled = journaled || (!ev.local &&
                                  ev.outcome == JournalEvent::Outcome::RejectedPrecondition);
    CHECK(journaled);
    // the rejection is an adjudication: redelivery is a duplicate
    CHECK(a.deliver(conf, DeliveryPolicy::Causal, MergePolicy::None, 3) ==
          DeliverOutcome::Duplicate);
    b.deliver(live, DeliveryPolicy::Causal, MergePolicy::None, 2);
}

TEST_CASE("last-writer-wins keeps the later version wholesale") {
    ModelDescriptor m = load_corpus_model("taskboard-naive");
    const StateSpace& space = m.aggregates[0].state_space;
    State in_progress = space.initial;
    in_progress[0] = Int{1}; // InProgress
    State blocked_with_comment = space.initial;
    blocked_with_comment[0] = Int{2}; // Blocked
    SetBits comments;
    comments.insert(2); // c_blocker
    blocked_with_comment[1] = comments;

    VersionedState a{in_progress, 5, 0};
    VersionedState b{blocked_with_comment, 7, 1};
    SUBCASE("later timestamp wins; the other intent is gone") {
        VersionedState merged = lww_merge(a, b);
        CHECK(merged.state == blocked_with_comment);
        CHECK(lww_merge(b, a).state == blocked_with_comment);
    }
    SUBCASE("equal timestamps break the tie by writer id") {
        VersionedState a5{in_progress, 5, 0};
        VersionedState b5{blocked_with_comment, 5, 1};
        CHECK(lww_merge(a5, b5).state == blocked_with_comment);
    }
    SUBCASE("merging a version with itself is the identity") {
        CHECK(lww_merge(a, a).state == a.state);
    }
}

TEST_CASE("superset merge unions sets; deletions resurrect") {
    ModelDescriptor m = load_corpus_model("taskboard-naive");
    const StateSpace& space = m.aggregates[0].state_space;
    State deleted = space.initial; // comments {}
    State added = space.initial;
    SetBits both;
    both.insert(0); // c_scope (the survivor of the delete on the other side)
    both.insert(1); // c_design
    added[1] = both;

    VersionedState a{deleted, 3, 0};
    VersionedState b{added, 3, 1};
    VersionedState merged = superset_merge(space, a, b);
    CHECK(std::get<SetBits>(merged.state[1]).bits == both.bits); // c_scope re-appears
    CHECK(superset_merge(space, b, b).state == b.state);
    VersionedState empty{space.initial, 0, 0};
    CHECK(std::get<SetBits>(superset_merge(space, b, empty).state[1]).bits == both.bits);
}

TEST_CASE("lattice join takes the least upper bound of the declared chain") {
    ModelDescriptor m = load_corpus_model("taskboard-safe");
    const auto& dom = std::get<EnumDomain>(m.aggregates[0].state_space.fields[0].domain);
    // Todo < InProgress < Blocked
    CHECK(lattice_join(dom, 1, 2) == 2);
    CHECK(lattice_join(dom, 2, 1) == 2);
    SUBCASE("idempotent, commutative, associative over the whole enumeration") {
        for (Int x = 0; x < 3; ++x) {
            CHECK(lattice_join(dom, x, x) == x);
            for (Int y = 0; y < 3; ++y) {
                CHECK(lattice_join(dom, x, y) == lattice_join(dom, y, x));
                for (Int z = 0; z < 3; ++z)
                    CHECK(lattice_join(dom, x, lattice_join(dom, y, z)) ==
                          lattice_join(dom, lattice_join(dom, x, y), z));
            }
        }
    }
}

TEST_CASE("convergence detection") {
    ModelDescriptor m = load_corpus_model("taskboard-safe");
    SUBCASE("a single replica is trivially converged") {
        std::vector<Replica> one;
        one.emplace_back(m, 0);
        CHECK(converged(one).converged);
    }
    SUBCASE("an undelivered instance keeps replicas apart") {
        std::vector<Replica> two;
        two.emplace_back(m, 0);
        two.emplace_back(m, 1);
        two[0].submit("Task", "addComment", ParamValues{Int{0}}, 1);
        CHECK_FALSE(converged(two).converged);
    }
}

TEST_CASE("dedup idempotence: any trace with duplicates inserted ends in the same state") {
    ModelDescriptor m = load_corpus_model("taskboard-safe");
    Rng rng(99);
    for (int round = 0; round < 20; ++round) {
        // one origin issues a few ops; a second replica receives the trace
        Replica origin(m, 0);
        std::vector<OperationInstance> trace;
        for (int i = 0; i < 6; ++i) {
            int pick = static_cast<int>(rng.below(4));
            const char* ops[] = {"startWork", "blockTask", "addComment", "deleteComment"};
            ParamValues params;
            if (pick >= 2) params.push_back(Int{static_cast<Int>(rng.below(3))});
            trace.push_back(origin.submit("Task", ops[pick], params,
                                          static_cast<std::uint64_t>(i + 1)));
        }
        Replica plain(m, 1), noisy(m, 2);
        for (const auto& inst : trace)
            plain.deliver(inst, DeliveryPolicy::Causal, MergePolicy::None, 10);
        for (const auto& inst : trace) {
            noisy.deliver(inst, DeliveryPolicy::Causal, MergePolicy::None, 10);
            if (rng.chance(0.5))
                noisy.deliver(inst, DeliveryPolicy::Causal, MergePolicy::None, 11);
        }
        CHECK(plain.aggregate_state(0) == noisy.aggregate_state(0));
    }
}
