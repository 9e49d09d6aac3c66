#include "eclat/simulator.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "eclat/effects.hpp"
#include "eclat/rng.hpp"

namespace eclat {

const char* to_string(LostUpdateFinding::Reason r) {
    switch (r) {
    case LostUpdateFinding::Reason::MergeOverwrite: return "MergeOverwrite";
    case LostUpdateFinding::Reason::RejectedRemote: return "RejectedRemote";
    case LostUpdateFinding::Reason::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

struct Event {
    std::uint64_t tick;
    std::uint64_t order; // insertion order breaks tick ties deterministically
    enum class Kind { Submit, Deliver } kind;
    // Submit
    std::size_t submit_index = 0;
    // Deliver
    ReplicaId dest = 0;
    std::size_t instance = 0;

    bool operator>(const Event& other) const {
        return std::tie(tick, order) > std::tie(other.tick, other.order);
    }
};

bool partitioned(const NetworkSpec& net, ReplicaId a, ReplicaId b, std::uint64_t tick) {
    for (const auto& p : net.partitions) {
        if (tick < p.from || tick >= p.to) continue;
        int ga = -1, gb = -1;
        for (std::size_t g = 0; g < p.groups.size(); ++g)
            for (ReplicaId r : p.groups[g]) {
                if (r == a) ga = static_cast<int>(g);
                if (r == b) gb = static_cast<int>(g);
            }
        if (ga != gb) return true;
    }
    return false;
}

/// Earliest tick >= `tick` at which a and b can talk again.
std::uint64_t partition_clears(const NetworkSpec& net, ReplicaId a, ReplicaId b,
                               std::uint64_t tick) {
    std::uint64_t t = tick;
    while (partitioned(net, a, b, t)) {
        std::uint64_t next = t + 1;
        for (const auto& p : net.partitions)
            if (t >= p.from && t < p.to) next = std::max(next, p.to);
        t = next;
    }
    return t;
}

struct GeneratedSubmit {
    std::uint64_t at;
    ReplicaId replica;
    std::uint32_t aggregate;
    std::uint32_t op;
    ParamValues params;
};

std::vector<GeneratedSubmit> build_workload(const Scenario& scenario) {
    const ScenarioConfig& cfg = scenario.cfg;
    const ModelDescriptor& model = scenario.model;
    std::vector<GeneratedSubmit> out;

    for (const auto& s : cfg.script) {
        if (s.replica >= cfg.replicas)
            throw ScenarioError("scripted submit targets replica " + std::to_string(s.replica) +
                                " but the scenario has " + std::to_string(cfg.replicas));
        int agg = model.aggregate_index(s.aggregate);
        if (agg < 0) throw ScenarioError("scripted submit names unknown aggregate '" +
                                         s.aggregate + "'");
        int op = model.aggregates[agg].operation_index(s.op);
        if (op < 0)
            throw ScenarioError("scripted submit names unknown operation '" + s.op + "'");
        out.push_back({s.at, s.replica, static_cast<std::uint32_t>(agg),
                       static_cast<std::uint32_t>(op), s.params});
    }

    if (cfg.random && cfg.random->ops_per_replica > 0) {
        const RandomWorkload& rw = *cfg.random;
        if (rw.mix.empty()) throw ScenarioError("randomized workload has an empty mix");
        Rng rng(mix_seed(cfg.workload_seed.value_or(cfg.seed), 0x776f726bull)); // "work"
        std::uint32_t total_weight = 0;
        for (const auto& m : rw.mix) total_weight += m.weight;
        for (ReplicaId r = 0; r < cfg.replicas; ++r) {
            std::vector<std::uint32_t> used(rw.mix.size(), 0);
            for (std::uint32_t i = 0; i < rw.ops_per_replica; ++i) {
                // draw a mix entry honoring per-replica caps
                std::size_t pick = rw.mix.size();
                for (int attempt = 0; attempt < 16 && pick == rw.mix.size(); ++attempt) {
                    std::uint32_t w = static_cast<std::uint32_t>(rng.below(total_weight));
                    std::size_t candidate = 0;
                    for (std::size_t m = 0; m < rw.mix.size(); ++m) {
                        if (w < rw.mix[m].weight) {
                            candidate = m;
                            break;
                        }
                        w -= rw.mix[m].weight;
                    }
                    if (rw.mix[candidate].max_per_replica < 0 ||
                        used[candidate] <
                            static_cast<std::uint32_t>(rw.mix[candidate].max_per_replica))
                        pick = candidate;
                }
                if (pick == rw.mix.size()) continue; // every candidate capped out
                ++used[pick];
                const MixEntry& mix = rw.mix[pick];
                const OperationDescriptor& op =
                    model.aggregates[mix.aggregate].operations[mix.op];
                GeneratedSubmit g;
                g.at = rw.start_tick + rng.below(std::max<std::uint64_t>(rw.window, 1));
                g.replica = r;
                g.aggregate = mix.aggregate;
                g.op = mix.op;
                g.params.resize(op.params.size());
                for (std::size_t p = 0; p < op.params.size(); ++p) {
                    const ParamGen& gen = mix.params[p];
                    switch (gen.kind) {
                    case ParamGen::Kind::Choice:
                        g.params[p] = Int{gen.choices[rng.below(gen.choices.size())]};
                        break;
                    case ParamGen::Kind::Range:
                        g.params[p] = Int{static_cast<Int>(
                            rng.range(static_cast<std::uint64_t>(gen.lo),
                                      static_cast<std::uint64_t>(gen.hi)))};
                        break;
                    case ParamGen::Kind::ReplicaSymbol:
                        g.params[p] = Int{gen.choices[r % gen.choices.size()]};
                        break;
                    }
                }
                out.push_back(std::move(g));
            }
        }
    }

    std::stable_sort(out.begin(), out.end(),
                     [](const GeneratedSubmit& a, const GeneratedSubmit& b) {
                         return std::tie(a.at, a.replica) < std::tie(b.at, b.replica);
                     });
    return out;
}

} // namespace

std::vector<LostUpdateFinding> detect_lost_updates(const std::vector<Replica>& replicas,
                                                   const std::vector<OperationInstance>& instances,
                                                   MergePolicy merge) {
    std::vector<LostUpdateFinding> findings;
    const ModelDescriptor& model = replicas.front().model();

    // Remote rejections straight from the engine logs.
    std::map<OpId, std::vector<ReplicaId>> rejected_at;
    for (const auto& replica : replicas)
        for (const auto& ev : replica.journal())
            if (!ev.local && (ev.outcome == JournalEvent::Outcome::RejectedPrecondition ||
                              ev.outcome == JournalEvent::Outcome::RejectedInvariant))
                rejected_at[ev.op_id].push_back(replica.id());

    // caus(i): the instance's causal stamp including itself.
    auto causal_stamp = [](const OperationInstance& inst) {
        VersionVector vv = inst.origin_vv;
        vv.set(inst.id.origin, inst.id.seq);
        return vv;
    };

    for (const auto& inst : instances) {
        const AggregateDescriptor& agg = model.aggregates[inst.aggregate];
        const OperationDescriptor& op = agg.operations[inst.op];

        if (auto it = rejected_at.find(inst.id); it != rejected_at.end()) {
            std::string where;
            for (ReplicaId r : it->second) where += (where.empty() ? "" : ",") + replica_name(r);
            LostUpdateFinding f;
            f.op_id = inst.id;
            f.op_name = inst.op_name;
            f.aggregate = inst.aggregate_name;
            f.reason = LostUpdateFinding::Reason::RejectedRemote;
            f.evidence = "re-execution rejected at " + where;
            findings.push_back(f);
            continue;
        }
        if (!op.intent) continue;

        bool visible_everywhere = true;
        for (const auto& replica : replicas)
            if (!eval_predicate(agg.state_space, *op.intent,
                                replica.aggregate_state(inst.aggregate), inst.params))
                visible_everywhere = false;
        if (visible_everywhere) continue;

        // Legitimate supersession: a declared masking op applied anywhere,
        // causally after or concurrent with this instance.
        bool masked = false;
        VersionVector mine = causal_stamp(inst);
        for (const auto& other : instances) {
            if (other.id == inst.id || other.aggregate != inst.aggregate) continue;
            bool listed = false;
            for (const auto& name : op.superseded_by) listed = listed || name == other.op_name;
            if (!listed) continue;
            if (!vv_leq(causal_stamp(other), mine)) masked = true;
        }
        if (masked) continue;

        LostUpdateFinding f;
        f.op_id = inst.id;
        f.op_name = inst.op_name;
        f.aggregate = inst.aggregate_name;
        f.reason = merge != MergePolicy::None ? LostUpdateFinding::Reason::MergeOverwrite
                                              : LostUpdateFinding::Reason::Unknown;
        f.evidence =
            "intent no longer visible; final " + inst.aggregate_name + " = " +
            state_to_json(agg.state_space, replicas.front().aggregate_state(inst.aggregate))
                .dump();
        findings.push_back(f);
    }
    return findings;
}

SimReport run_scenario(const Scenario& scenario) {
    const ScenarioConfig& cfg = scenario.cfg;
    if (cfg.replicas < 1) throw ScenarioError("scenario needs at least one replica");
    for (const auto& p : cfg.network.partitions) {
        std::vector<bool> seen(cfg.replicas, false);
        for (const auto& g : p.groups)
            for (ReplicaId r : g) {
                if (r >= cfg.replicas || seen[r])
                    throw ScenarioError("partition groups must partition the replica set");
                seen[r] = true;
            }
        for (bool s : seen)
            if (!s) throw ScenarioError("partition groups must cover every replica");
        if (p.from >= p.to) throw ScenarioError("partition interval is empty");
    }
    if (cfg.network.duplicate_probability < 0.0 || cfg.network.duplicate_probability > 1.0)
        throw ScenarioError("duplicate_probability outside [0,1]");
    if (cfg.network.delay_min > cfg.network.delay_max)
        throw ScenarioError("network delay range inverted");

    std::vector<GeneratedSubmit> workload = build_workload(scenario);

    std::vector<Replica> replicas;
    replicas.reserve(cfg.replicas);
    for (ReplicaId r = 0; r < cfg.replicas; ++r) replicas.emplace_back(scenario.model, r);

    std::priority_queue<Event, std::vector<Event>, std::greater<Event>> queue;
    std::uint64_t order = 0;
    for (std::size_t i = 0; i < workload.size(); ++i)
        queue.push(Event{workload[i].at, order++, Event::Kind::Submit, i, 0, 0});

    Rng net_rng(mix_seed(cfg.seed, 0x6e657477ull)); // "netw"
    std::vector<OperationInstance> instances;
    std::map<std::pair<ReplicaId, ReplicaId>, std::uint64_t> channel_clock;

    SimReport report;
    report.scenario = cfg.name;
    report.model = scenario.model.name;
    report.seed = cfg.seed;

    auto schedule_delivery = [&](std::size_t inst_idx, ReplicaId origin, std::uint64_t now) {
        for (ReplicaId dest = 0; dest < cfg.replicas; ++dest) {
            if (dest == origin) continue;
            std::uint64_t delay = net_rng.range(cfg.network.delay_min, cfg.network.delay_max);
            std::uint64_t at = now + std::max<std::uint64_t>(delay, 1);
            if (!cfg.network.reorder) {
                auto& clock = channel_clock[{origin, dest}];
                at = std::max(at, clock + 1);
                clock = at;
            }
            queue.push(Event{at, order++, Event::Kind::Deliver, 0, dest, inst_idx});
            if (net_rng.chance(cfg.network.duplicate_probability)) {
                std::uint64_t extra = net_rng.range(1, cfg.network.delay_max + 1);
                queue.push(Event{at + extra, order++, Event::Kind::Deliver, 0, dest, inst_idx});
            }
        }
    };

    std::uint64_t now = 0;
    while (!queue.empty()) {
        Event ev = queue.top();
        queue.pop();
        now = std::max(now, ev.tick);
        if (ev.kind == Event::Kind::Submit) {
            const GeneratedSubmit& g = workload[ev.submit_index];
            const AggregateDescriptor& agg = scenario.model.aggregates[g.aggregate];
            try {
                OperationInstance inst = replicas[g.replica].submit(
                    agg.name, agg.operations[g.op].name, g.params, ev.tick);
                instances.push_back(inst);
                ++report.submitted;
                schedule_delivery(instances.size() - 1, g.replica, ev.tick);
            } catch (const PreconditionFailedError&) {
                ++report.rejected_submits; // journaled by the replica
            }
        } else {
            const OperationInstance& inst = instances[ev.instance];
            if (partitioned(cfg.network, inst.id.origin, ev.dest, ev.tick)) {
                std::uint64_t resume = partition_clears(cfg.network, inst.id.origin, ev.dest,
                                                        ev.tick);
                queue.push(Event{resume, order++, Event::Kind::Deliver, 0, ev.dest, ev.instance});
                continue;
            }
            replicas[ev.dest].deliver(inst, cfg.delivery, cfg.merge, ev.tick);
        }
    }

    // Quiescence: retransmit until every instance is adjudicated everywhere.
    std::uint64_t guard = (instances.size() + 1) * (cfg.replicas + 1) * 4 + 16;
    for (std::uint64_t round = 0; round < guard; ++round) {
        bool missing = false;
        bool progressed = false;
        std::uint64_t earliest_heal = ~0ull;
        ++now;
        for (std::size_t i = 0; i < instances.size(); ++i) {
            const OperationInstance& inst = instances[i];
            for (ReplicaId dest = 0; dest < cfg.replicas; ++dest) {
                if (dest == inst.id.origin || replicas[dest].has_applied(inst.id)) continue;
                missing = true;
                if (partitioned(cfg.network, inst.id.origin, dest, now)) {
                    earliest_heal = std::min(
                        earliest_heal, partition_clears(cfg.network, inst.id.origin, dest, now));
                    continue;
                }
                auto outcome = replicas[dest].deliver(inst, cfg.delivery, cfg.merge, now);
                if (outcome != DeliverOutcome::Buffered) progressed = true;
            }
        }
        if (!missing) break;
        // Everything left is waiting out a partition; skip to where it heals.
        if (!progressed && earliest_heal != ~0ull) now = std::max(now, earliest_heal - 1);
        if (round + 1 == guard)
            throw ScenarioError("quiescence did not complete; is a partition unbounded?");
    }

    ConvergenceResult conv = converged(replicas);
    report.converged = conv.converged;
    report.aggregate_digests = conv.digests;
    {
        std::string all;
        for (const auto& r : replicas) all += r.digest();
        report.digest = to_hex(fnv1a64(all));
    }

    report.lost_updates = detect_lost_updates(replicas, instances, cfg.merge);

    // Tallies and windows from the journals.
    std::map<OpId, InstanceWindow> windows;
    json rejected = json::array();
    for (const auto& replica : replicas) {
        for (const auto& ev : replica.journal()) {
            switch (ev.outcome) {
            case JournalEvent::Outcome::Applied: {
                auto& w = windows[ev.op_id];
                w.op_id = ev.op_id;
                if (ev.local) {
                    w.origin_tick = ev.tick;
                    if (w.last_apply_tick < ev.tick) w.last_apply_tick = ev.tick;
                } else {
                    ++report.delivered;
                    w.last_apply_tick = std::max(w.last_apply_tick, ev.tick);
                }
                break;
            }
            case JournalEvent::Outcome::Duplicate: ++report.duplicates; break;
            case JournalEvent::Outcome::RejectedPrecondition:
            case JournalEvent::Outcome::RejectedInvariant:
                if (!ev.local) ++report.rejected_remote;
                rejected.push_back(json{{"replica", replica_name(replica.id())},
                                        {"op_id", to_string(ev.op_id)},
                                        {"op", ev.op_name},
                                        {"local", ev.local},
                                        {"outcome", to_string(ev.outcome)}});
                break;
            }
        }
    }
    for (const auto& [id, w] : windows) report.windows.push_back(w);
    report.rejected_details = rejected;

    json states = json::object();
    for (const auto& replica : replicas) {
        json per = json::object();
        for (std::size_t a = 0; a < scenario.model.aggregates.size(); ++a)
            per[scenario.model.aggregates[a].name] =
                state_to_json(scenario.model.aggregates[a].state_space,
                              replica.aggregate_state(a));
        states[replica_name(replica.id())] = per;
    }
    report.final_states = states;
    if (cfg.capture_journal)
        report.journal_ndjson = journals_to_ndjson(replicas, scenario.model);
    return report;
}

WindowStats inconsistency_windows(const SimReport& report) {
    WindowStats stats;
    std::vector<std::uint64_t> widths;
    for (const auto& w : report.windows) widths.push_back(w.width());
    if (widths.empty()) return stats;
    std::sort(widths.begin(), widths.end());
    stats.count = widths.size();
    stats.min = widths.front();
    stats.max = widths.back();
    stats.median = widths[(widths.size() - 1) / 2];
    return stats;
}

json report_to_json(const SimReport& report) {
    WindowStats ws = inconsistency_windows(report);
    json lost = json::array();
    for (const auto& f : report.lost_updates)
        lost.push_back(json{{"op_id", to_string(f.op_id)},
                            {"op", f.op_name},
                            {"aggregate", f.aggregate},
                            {"reason", to_string(f.reason)},
                            {"evidence", f.evidence}});
    json windows = json::array();
    for (const auto& w : report.windows)
        windows.push_back(json{{"op_id", to_string(w.op_id)},
                               {"origin_tick", w.origin_tick},
                               {"last_apply_tick", w.last_apply_tick},
                               {"width", w.width()}});
    return json{{"schema", kReportSchema},
                {"kind", "simulate"},
                {"scenario", report.scenario},
                {"model", report.model},
                {"seed", report.seed},
                {"converged", report.converged},
                {"digest", report.digest},
                {"aggregate_digests", report.aggregate_digests},
                {"lost_updates", lost},
                {"counts",
                 {{"submitted", report.submitted},
                  {"rejected_submits", report.rejected_submits},
                  {"delivered", report.delivered},
                  {"rejected_remote", report.rejected_remote},
                  {"duplicates", report.duplicates}}},
                {"inconsistency_windows",
                 {{"min", ws.min}, {"median", ws.median}, {"max", ws.max}, {"count", ws.count},
                  {"per_instance", windows}}},
                {"rejected_applies", report.rejected_details},
                {"final_states", report.final_states}};
}

std::string journals_to_ndjson(const std::vector<Replica>& replicas,
                               const ModelDescriptor& model) {
    std::string out;
    for (const auto& replica : replicas) {
        for (const auto& ev : replica.journal()) {
            json vv = json::object();
            for (std::size_t r = 0; r < ev.vv_after.counters.size(); ++r)
                if (ev.vv_after.counters[r])
                    vv[replica_name(static_cast<ReplicaId>(r))] = ev.vv_after.counters[r];
            json params = json::object();
            int agg = model.aggregate_index(ev.aggregate);
            if (agg >= 0) {
                int op = model.aggregates[agg].operation_index(ev.op_name);
                if (op >= 0)
                    params = params_to_json(model.aggregates[agg].operations[op], ev.params);
            }
            out += json{{"seq", ev.seq},
                        {"replica", replica_name(replica.id())},
                        {"op_id", to_string(ev.op_id)},
                        {"op_name", ev.op_name},
                        {"params", params},
                        {"vv", vv},
                        {"outcome", to_string(ev.outcome)}}
                       .dump();
            out += '\n';
        }
    }
    return out;
}

// --- scenario parsing --------------------------------------------------------

namespace {

ParamGen parse_param_gen(const json& j, const ScalarDomain& domain, const std::string& where) {
    ParamGen gen;
    if (!j.is_object() || j.size() != 1)
        throw ScenarioError(where + ": param generator must be a single-key object");
    const std::string key = j.begin().key();
    const json& body = j.begin().value();
    auto symbol_indexes = [&](const json& arr) {
        const auto* e = std::get_if<EnumDomain>(&domain);
        if (!e) throw ScenarioError(where + ": symbol generator on a non-enum parameter");
        std::vector<Int> out;
        for (const auto& s : arr) {
            int idx = e->index_of(s.get<std::string>());
            if (idx < 0)
                throw ScenarioError(where + ": unknown symbol '" + s.get<std::string>() + "'");
            out.push_back(idx);
        }
        if (out.empty()) throw ScenarioError(where + ": empty symbol list");
        return out;
    };
    if (key == "choice") {
        gen.kind = ParamGen::Kind::Choice;
        if (const auto* e = std::get_if<EnumDomain>(&domain)) {
            (void)e;
            gen.choices = symbol_indexes(body);
        } else {
            for (const auto& v : body) gen.choices.push_back(v.get<Int>());
            if (gen.choices.empty()) throw ScenarioError(where + ": empty choice list");
        }
    } else if (key == "range") {
        gen.kind = ParamGen::Kind::Range;
        if (!std::get_if<IntRangeDomain>(&domain))
            throw ScenarioError(where + ": range generator on a non-int parameter");
        gen.lo = body.at(0).get<Int>();
        gen.hi = body.at(1).get<Int>();
        if (gen.lo > gen.hi) throw ScenarioError(where + ": range inverted");
    } else if (key == "replica_symbol") {
        gen.kind = ParamGen::Kind::ReplicaSymbol;
        gen.choices = symbol_indexes(body);
    } else {
        throw ScenarioError(where + ": unknown param generator '" + key + "'");
    }
    return gen;
}

} // namespace

Scenario parse_scenario(const json& doc,
                        const std::function<ModelDescriptor(const std::string&)>& resolve_model) {
    if (!doc.is_object()) throw ScenarioError("scenario document must be a JSON object");
    if (!doc.contains("schema") || doc.at("schema") != kScenarioSchema)
        throw ScenarioError("scenario document must declare schema '" +
                            std::string(kScenarioSchema) + "'");
    Scenario scenario;
    ScenarioConfig& cfg = scenario.cfg;
    cfg.name = doc.value("name", "scenario");
    scenario.model = resolve_model(doc.at("model").get<std::string>());
    const ModelDescriptor& model = scenario.model;

    cfg.replicas = doc.value("replicas", 1u);
    cfg.seed = doc.value("seed", 0ull);
    if (doc.contains("workload_seed")) cfg.workload_seed = doc.at("workload_seed").get<std::uint64_t>();
    cfg.delivery = delivery_policy_from(doc.value("delivery_policy", "causal"));
    cfg.merge = merge_policy_from(doc.value("merge_policy", "none"));

    if (doc.contains("network")) {
        const json& net = doc.at("network");
        if (net.contains("delay")) {
            cfg.network.delay_min = net.at("delay").at(0).get<std::uint64_t>();
            cfg.network.delay_max = net.at("delay").at(1).get<std::uint64_t>();
        }
        cfg.network.reorder = net.value("reorder", false);
        cfg.network.duplicate_probability = net.value("duplicate_probability", 0.0);
        if (net.contains("partitions")) {
            for (const auto& p : net.at("partitions")) {
                PartitionSpec spec;
                spec.from = p.at("from").get<std::uint64_t>();
                spec.to = p.at("to").get<std::uint64_t>();
                for (const auto& g : p.at("groups")) {
                    std::vector<ReplicaId> group;
                    for (const auto& r : g) group.push_back(r.get<ReplicaId>());
                    spec.groups.push_back(group);
                }
                cfg.network.partitions.push_back(spec);
            }
        }
    }

    const json& workload = doc.contains("workload") ? doc.at("workload") : json::object();
    if (workload.contains("script")) {
        for (const auto& s : workload.at("script")) {
            ScriptedSubmit sub;
            sub.at = s.at("at").get<std::uint64_t>();
            sub.replica = s.at("replica").get<ReplicaId>();
            sub.aggregate = s.at("aggregate").get<std::string>();
            sub.op = s.at("op").get<std::string>();
            int agg = model.aggregate_index(sub.aggregate);
            if (agg < 0) throw ScenarioError("script names unknown aggregate '" + sub.aggregate + "'");
            int op = model.aggregates[agg].operation_index(sub.op);
            if (op < 0)
                throw ScenarioError("script names unknown operation '" + sub.op + "'");
            try {
                sub.params = params_from_json(model.aggregates[agg].operations[op],
                                              s.value("params", json::object()));
            } catch (const Error& e) {
                throw ScenarioError(std::string("script params: ") + e.what());
            }
            cfg.script.push_back(std::move(sub));
        }
    }
    if (workload.contains("random")) {
        const json& r = workload.at("random");
        RandomWorkload rw;
        rw.ops_per_replica = r.value("ops_per_replica", 0u);
        rw.start_tick = r.value("start", 1ull);
        rw.window = r.value("window", 10ull);
        for (const auto& m : r.at("mix")) {
            MixEntry entry;
            std::string agg_name = m.at("aggregate").get<std::string>();
            std::string op_name = m.at("op").get<std::string>();
            int agg = model.aggregate_index(agg_name);
            if (agg < 0) throw ScenarioError("mix names unknown aggregate '" + agg_name + "'");
            int op = model.aggregates[agg].operation_index(op_name);
            if (op < 0) throw ScenarioError("mix names unknown operation '" + op_name + "'");
            entry.aggregate = static_cast<std::uint32_t>(agg);
            entry.op = static_cast<std::uint32_t>(op);
            entry.weight = m.value("weight", 1u);
            entry.max_per_replica = m.value("max_per_replica", -1);
            const OperationDescriptor& desc = model.aggregates[agg].operations[op];
            const json& pgen = m.value("params", json::object());
            for (const auto& p : desc.params) {
                if (!pgen.contains(p.name))
                    throw ScenarioError("mix entry for '" + op_name +
                                        "' missing generator for parameter '" + p.name + "'");
                entry.params.push_back(parse_param_gen(pgen.at(p.name), p.domain,
                                                       "mix '" + op_name + "." + p.name + "'"));
            }
            rw.mix.push_back(std::move(entry));
        }
        cfg.random = rw;
    }
    return scenario;
}

Scenario parse_scenario_text(
    const std::string& text,
    const std::function<ModelDescriptor(const std::string&)>& resolve_model) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ScenarioError(std::string("JSON parse error: ") + e.what());
    }
    return parse_scenario(doc, resolve_model);
}

} // namespace eclat
