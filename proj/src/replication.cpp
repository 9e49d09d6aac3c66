#include "eclat/replication.hpp"

#include <algorithm>

#include "eclat/canon.hpp"
#include "eclat/effects.hpp"

namespace eclat {

std::string replica_name(ReplicaId id) { return "r" + std::to_string(id); }

void VersionVector::set(ReplicaId r, std::uint64_t v) {
    if (r >= counters.size()) counters.resize(r + 1, 0);
    counters[r] = v;
}

std::uint64_t VersionVector::sum() const {
    std::uint64_t s = 0;
    for (auto c : counters) s += c;
    return s;
}

VersionVector vv_merge(const VersionVector& a, const VersionVector& b) {
    VersionVector out;
    out.counters.resize(std::max(a.counters.size(), b.counters.size()), 0);
    for (std::size_t i = 0; i < out.counters.size(); ++i)
        out.counters[i] = std::max(a.get(static_cast<ReplicaId>(i)),
                                   b.get(static_cast<ReplicaId>(i)));
    return out;
}

bool vv_leq(const VersionVector& a, const VersionVector& b) {
    std::size_t n = std::max(a.counters.size(), b.counters.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a.get(static_cast<ReplicaId>(i)) > b.get(static_cast<ReplicaId>(i))) return false;
    return true;
}

VvOrder vv_compare(const VersionVector& a, const VersionVector& b) {
    bool ab = vv_leq(a, b);
    bool ba = vv_leq(b, a);
    if (ab && ba) return VvOrder::Equal;
    if (ab) return VvOrder::Before;
    if (ba) return VvOrder::After;
    return VvOrder::Concurrent;
}

std::string to_string(const OpId& id) {
    return replica_name(id.origin) + "#" + std::to_string(id.seq);
}

DeliveryPolicy delivery_policy_from(const std::string& s) {
    if (s == "causal") return DeliveryPolicy::Causal;
    if (s == "fifo") return DeliveryPolicy::Fifo;
    if (s == "none") return DeliveryPolicy::None;
    throw ScenarioError("unknown delivery policy '" + s + "'");
}

MergePolicy merge_policy_from(const std::string& s) {
    if (s == "none") return MergePolicy::None;
    if (s == "lww") return MergePolicy::Lww;
    if (s == "superset") return MergePolicy::Superset;
    throw ScenarioError("unknown merge policy '" + s + "'");
}

const char* to_string(DeliveryPolicy p) {
    switch (p) {
    case DeliveryPolicy::Causal: return "causal";
    case DeliveryPolicy::Fifo: return "fifo";
    case DeliveryPolicy::None: return "none";
    }
    return "?";
}

const char* to_string(MergePolicy p) {
    switch (p) {
    case MergePolicy::None: return "none";
    case MergePolicy::Lww: return "lww";
    case MergePolicy::Superset: return "superset";
    }
    return "?";
}

const char* to_string(JournalEvent::Outcome o) {
    switch (o) {
    case JournalEvent::Outcome::Applied: return "applied";
    case JournalEvent::Outcome::RejectedPrecondition: return "rejected_precondition";
    case JournalEvent::Outcome::RejectedInvariant: return "rejected_invariant";
    case JournalEvent::Outcome::Duplicate: return "duplicate";
    }
    return "?";
}

VersionedState lww_merge(const VersionedState& a, const VersionedState& b) {
    if (std::pair(b.ts, b.writer) > std::pair(a.ts, a.writer)) return b;
    return a;
}

VersionedState superset_merge(const StateSpace& space, const VersionedState& a,
                              const VersionedState& b) {
    const VersionedState& newer = std::pair(b.ts, b.writer) > std::pair(a.ts, a.writer) ? b : a;
    VersionedState out;
    out.ts = newer.ts;
    out.writer = newer.writer;
    out.state = newer.state;
    for (std::size_t f = 0; f < space.fields.size(); ++f) {
        if (std::get_if<SetDomain>(&space.fields[f].domain)) {
            out.state[f] = SetBits{std::get<SetBits>(a.state[f]).bits |
                                   std::get<SetBits>(b.state[f]).bits};
        } else if (std::get_if<MapDomain>(&space.fields[f].domain)) {
            // key-wise union; on a key conflict the newer version's entry wins
            MapSlots merged = std::get<MapSlots>(newer.state[f]);
            const MapSlots& other =
                std::get<MapSlots>((&newer == &a ? b : a).state[f]);
            for (std::size_t k = 0; k < MapSlots::kMaxKeys; ++k)
                if (merged.slot[k] == MapSlots::kAbsent) merged.slot[k] = other.slot[k];
            out.state[f] = merged;
        }
        // scalar fields: the newer version already provides them
    }
    return out;
}

Int lattice_join(const EnumDomain& domain, Int a, Int b) {
    if (!domain.order || !domain.order->is_semilattice)
        throw NotALatticeError("enum has no join-semilattice order");
    return domain.order->join[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

Replica::Replica(const ModelDescriptor& model, ReplicaId id) : model_(&model), id_(id) {
    for (const auto& agg : model.aggregates) {
        states_.push_back(agg.state_space.initial);
        cells_.push_back(VersionedState{agg.state_space.initial, 0, id});
    }
    // Derived aggregates reflect their sources from the start.
    for (std::uint32_t i = 0; i < model.aggregates.size(); ++i) refresh_projections(i);
}

bool Replica::invariants_hold(std::uint32_t aggregate, const State& s) const {
    static const ParamValues kNoParams;
    const AggregateDescriptor& agg = model_->aggregates[aggregate];
    for (const auto& inv : agg.invariants)
        if (!eval_predicate(agg.state_space, inv.predicate, s, kNoParams)) return false;
    return true;
}

void Replica::refresh_projections(std::uint32_t source_aggregate) {
    for (std::size_t d = 0; d < model_->aggregates.size(); ++d) {
        const AggregateDescriptor& derived = model_->aggregates[d];
        if (!derived.projection_of) continue;
        if (derived.projection_of->source_aggregate_index !=
            static_cast<int>(source_aggregate))
            continue;
        states_[d] = apply_projection(*derived.projection_of, derived,
                                      model_->aggregates[source_aggregate],
                                      states_[source_aggregate]);
    }
}

OperationInstance Replica::submit(const std::string& aggregate, const std::string& op,
                                  const ParamValues& params, std::uint64_t tick) {
    int agg_idx = model_->aggregate_index(aggregate);
    if (agg_idx < 0) throw UnknownOperationError("unknown aggregate '" + aggregate + "'");
    const AggregateDescriptor& agg = model_->aggregates[agg_idx];
    int op_idx = agg.operation_index(op);
    if (op_idx < 0)
        throw UnknownOperationError("aggregate '" + aggregate + "' has no operation '" + op +
                                    "'");
    const OperationDescriptor& desc = agg.operations[op_idx];

    auto journal_reject = [&](JournalEvent::Outcome outcome) {
        JournalEvent ev;
        ev.seq = ++journal_seq_;
        ev.tick = tick;
        ev.local = true;
        ev.op_id = OpId{id_, vv_.get(id_) + 1};
        ev.op_name = op;
        ev.aggregate = aggregate;
        ev.params = params;
        ev.vv_after = vv_;
        ev.outcome = outcome;
        journal_.push_back(ev);
    };

    if (!op_applicable(agg.state_space, desc, states_[agg_idx], params)) {
        journal_reject(JournalEvent::Outcome::RejectedPrecondition);
        throw PreconditionFailedError("precondition of '" + op + "' fails at " +
                                      replica_name(id_));
    }
    State next = states_[agg_idx];
    apply_effect(agg.state_space, desc.effect, next, params);
    if (!invariants_hold(static_cast<std::uint32_t>(agg_idx), next)) {
        journal_reject(JournalEvent::Outcome::RejectedInvariant);
        throw PreconditionFailedError("invariant of '" + aggregate + "' fails after '" + op +
                                      "' at " + replica_name(id_));
    }

    OperationInstance inst;
    inst.id = OpId{id_, vv_.get(id_) + 1};
    inst.aggregate = static_cast<std::uint32_t>(agg_idx);
    inst.op = static_cast<std::uint32_t>(op_idx);
    inst.aggregate_name = aggregate;
    inst.op_name = op;
    inst.params = params;
    inst.origin_vv = vv_; // snapshot before the local apply
    last_wall_ts_ = std::max(tick, last_wall_ts_ + 1); // monotone per replica
    inst.wall_ts = last_wall_ts_;

    states_[agg_idx] = std::move(next);
    cells_[agg_idx] = VersionedState{states_[agg_idx], inst.wall_ts, id_};
    vv_.set(id_, inst.id.seq);
    applied_.insert(inst.id);
    refresh_projections(static_cast<std::uint32_t>(agg_idx));
    inst.origin_state = states_[agg_idx];

    JournalEvent ev;
    ev.seq = ++journal_seq_;
    ev.tick = tick;
    ev.local = true;
    ev.op_id = inst.id;
    ev.op_name = op;
    ev.aggregate = aggregate;
    ev.params = params;
    ev.vv_after = vv_;
    ev.outcome = JournalEvent::Outcome::Applied;
    journal_.push_back(ev);
    return inst;
}

DeliverOutcome Replica::apply_remote(const OperationInstance& inst, MergePolicy merge,
                                     std::uint64_t tick) {
    const AggregateDescriptor& agg = model_->aggregates[inst.aggregate];
    const OperationDescriptor& desc = agg.operations[inst.op];

    JournalEvent ev;
    ev.seq = ++journal_seq_;
    ev.tick = tick;
    ev.local = false;
    ev.op_id = inst.id;
    ev.op_name = inst.op_name;
    ev.aggregate = inst.aggregate_name;
    ev.params = inst.params;
    ev.outcome = JournalEvent::Outcome::Applied;

    if (merge != MergePolicy::None) {
        // State-based propagation: merge the origin's shipped version into
        // the local one instead of re-executing the operation.
        VersionedState incoming{inst.origin_state, inst.wall_ts, inst.id.origin};
        cells_[inst.aggregate] =
            merge == MergePolicy::Lww
                ? lww_merge(cells_[inst.aggregate], incoming)
                : superset_merge(agg.state_space, cells_[inst.aggregate], incoming);
        states_[inst.aggregate] = cells_[inst.aggregate].state;
    } else {
        // Re-execute the operation's effect on the (possibly divergent)
        // local state.
        if (!op_applicable(agg.state_space, desc, states_[inst.aggregate], inst.params)) {
            ev.outcome = JournalEvent::Outcome::RejectedPrecondition;
            ev.vv_after = vv_;
            journal_.push_back(ev);
            vv_.set(inst.id.origin, std::max(vv_.get(inst.id.origin), inst.id.seq));
            applied_.insert(inst.id); // adjudicated; do not retry
            return DeliverOutcome::Rejected;
        }
        State next = states_[inst.aggregate];
        apply_effect(agg.state_space, desc.effect, next, inst.params);
        if (!invariants_hold(inst.aggregate, next)) {
            ev.outcome = JournalEvent::Outcome::RejectedInvariant;
            ev.vv_after = vv_;
            journal_.push_back(ev);
            vv_.set(inst.id.origin, std::max(vv_.get(inst.id.origin), inst.id.seq));
            applied_.insert(inst.id);
            return DeliverOutcome::Rejected;
        }
        states_[inst.aggregate] = std::move(next);
    }

    vv_.set(inst.id.origin, std::max(vv_.get(inst.id.origin), inst.id.seq));
    applied_.insert(inst.id);
    refresh_projections(inst.aggregate);
    ev.vv_after = vv_;
    journal_.push_back(ev);
    return DeliverOutcome::Applied;
}

DeliverOutcome Replica::deliver(const OperationInstance& inst, DeliveryPolicy policy,
                                MergePolicy merge, std::uint64_t tick) {
    if (inst.aggregate >= model_->aggregates.size() ||
        inst.op >= model_->aggregates[inst.aggregate].operations.size())
        throw UnknownOperationError("instance " + to_string(inst.id) +
                                    " references an unknown operation");
    if (applied_.count(inst.id)) {
        JournalEvent ev;
        ev.seq = ++journal_seq_;
        ev.tick = tick;
        ev.local = false;
        ev.op_id = inst.id;
        ev.op_name = inst.op_name;
        ev.aggregate = inst.aggregate_name;
        ev.params = inst.params;
        ev.vv_after = vv_;
        ev.outcome = JournalEvent::Outcome::Duplicate;
        journal_.push_back(ev);
        return DeliverOutcome::Duplicate;
    }

    bool ready = true;
    if (policy == DeliveryPolicy::Causal) ready = vv_leq(inst.origin_vv, vv_);
    else if (policy == DeliveryPolicy::Fifo) ready = vv_.get(inst.id.origin) == inst.id.seq - 1;

    if (!ready) {
        buffered_.push_back(inst);
        return DeliverOutcome::Buffered;
    }
    DeliverOutcome outcome = apply_remote(inst, merge, tick);
    if (policy != DeliveryPolicy::None) drain_buffer(policy, merge, tick);
    return outcome;
}

void Replica::drain_buffer(DeliveryPolicy policy, MergePolicy merge, std::uint64_t tick) {
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (std::size_t i = 0; i < buffered_.size(); ++i) {
            const OperationInstance& inst = buffered_[i];
            if (applied_.count(inst.id)) {
                buffered_.erase(buffered_.begin() + static_cast<std::ptrdiff_t>(i));
                progressed = true;
                break;
            }
            bool ready = policy == DeliveryPolicy::Fifo
                             ? vv_.get(inst.id.origin) == inst.id.seq - 1
                             : vv_leq(inst.origin_vv, vv_);
            if (!ready) continue;
            OperationInstance taken = inst;
            buffered_.erase(buffered_.begin() + static_cast<std::ptrdiff_t>(i));
            apply_remote(taken, merge, tick);
            progressed = true;
            break;
        }
    }
}

std::string Replica::digest() const {
    std::string all;
    for (std::size_t i = 0; i < model_->aggregates.size(); ++i) {
        all += model_->aggregates[i].name;
        all += '=';
        all += state_digest(model_->aggregates[i].state_space, states_[i]);
        all += ';';
    }
    return to_hex(fnv1a64(all));
}

ConvergenceResult converged(const std::vector<Replica>& replicas) {
    ConvergenceResult out;
    if (replicas.empty()) return out;
    const ModelDescriptor& model = replicas[0].model();
    for (std::size_t a = 0; a < model.aggregates.size(); ++a) {
        out.digests.push_back(
            state_digest(model.aggregates[a].state_space, replicas[0].aggregate_state(a)));
        for (std::size_t r = 1; r < replicas.size(); ++r)
            if (replicas[r].aggregate_state(a) != replicas[0].aggregate_state(a))
                out.converged = false;
    }
    return out;
}

} // namespace eclat
