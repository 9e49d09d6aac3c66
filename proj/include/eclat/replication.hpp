#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "eclat/model.hpp"

namespace eclat {

/// Small integer replica identity; rendered as "r<id>".
using ReplicaId = std::uint32_t;
std::string replica_name(ReplicaId id);

/// Per-replica event counters. Absent entries count as zero; the vector
/// grows on demand.
struct VersionVector {
    std::vector<std::uint64_t> counters;

    std::uint64_t get(ReplicaId r) const { return r < counters.size() ? counters[r] : 0; }
    void set(ReplicaId r, std::uint64_t v);
    std::uint64_t sum() const;

    bool operator==(const VersionVector&) const = default;
};

enum class VvOrder { Before, After, Equal, Concurrent };

VersionVector vv_merge(const VersionVector& a, const VersionVector& b);
VvOrder vv_compare(const VersionVector& a, const VersionVector& b);

/// True when a <= b pointwise (a happened-before-or-equals b).
bool vv_leq(const VersionVector& a, const VersionVector& b);

struct OpId {
    ReplicaId origin = 0;
    std::uint64_t seq = 0;

    auto operator<=>(const OpId&) const = default;
};

std::string to_string(const OpId& id);

/// An intent record propagated between replicas. origin_vv is the origin's
/// vector before the local apply, so origin_vv[origin] + 1 == id.seq.
/// origin_state snapshots the origin's post-apply aggregate state; it feeds
/// the state-based merge demonstrators (lww/superset) and is ignored by
/// operation re-execution.
struct OperationInstance {
    OpId id;
    std::uint32_t aggregate = 0; // index into the model
    std::uint32_t op = 0;        // index into the aggregate's operations
    std::string aggregate_name;
    std::string op_name;
    ParamValues params;
    VersionVector origin_vv;
    std::uint64_t wall_ts = 0; // per-replica logical clock; only LWW reads it
    State origin_state;
};

enum class DeliveryPolicy { Causal, Fifo, None };
enum class MergePolicy { None, Lww, Superset };

DeliveryPolicy delivery_policy_from(const std::string& s);
MergePolicy merge_policy_from(const std::string& s);
const char* to_string(DeliveryPolicy p);
const char* to_string(MergePolicy p);

enum class DeliverOutcome { Applied, Buffered, Duplicate, Rejected };

struct JournalEvent {
    std::uint64_t seq = 0; // per-replica, monotone
    std::uint64_t tick = 0;
    bool local = false; // local submit vs. remote delivery
    OpId op_id;
    std::string op_name;
    std::string aggregate;
    ParamValues params;
    VersionVector vv_after;
    enum class Outcome { Applied, RejectedPrecondition, RejectedInvariant, Duplicate } outcome =
        Outcome::Applied;
};

const char* to_string(JournalEvent::Outcome o);

/// Versioned whole-state cell used by the naive merge functions.
struct VersionedState {
    State state;
    std::uint64_t ts = 0;
    ReplicaId writer = 0;
};

/// Last-writer-wins merge: the version with the greater (ts, writer) pair
/// wins wholesale. Shipped deliberately as an anomaly demonstrator.
VersionedState lww_merge(const VersionedState& a, const VersionedState& b);

/// Union merge: set fields unite, map fields unite key-wise, scalar fields
/// fall back to last-writer-wins. Convergent, but deletions resurrect.
VersionedState superset_merge(const StateSpace& space, const VersionedState& a,
                              const VersionedState& b);

/// Least upper bound of two values of an ordered enum field.
/// The order is validated as a join-semilattice at model load.
Int lattice_join(const EnumDomain& domain, Int a, Int b);

/// One replica of a model: aggregate states, version vector, dedup set,
/// journal and causal buffer. Single-owner mutable; instances are immutable
/// and safe to share.
class Replica {
  public:
    Replica(const ModelDescriptor& model, ReplicaId id);

    ReplicaId id() const { return id_; }
    const VersionVector& vv() const { return vv_; }
    const State& aggregate_state(std::size_t index) const { return states_[index]; }
    const std::vector<JournalEvent>& journal() const { return journal_; }
    std::size_t buffered_count() const { return buffered_.size(); }
    bool has_applied(const OpId& id) const { return applied_.count(id) != 0; }

    /// Local apply + journal; returns the instance to broadcast. Throws
    /// UnknownOperationError / PreconditionFailedError (rejected updates are
    /// journaled before throwing — never silently dropped).
    OperationInstance submit(const std::string& aggregate, const std::string& op,
                             const ParamValues& params, std::uint64_t tick);

    /// Remote delivery under a policy. Duplicate if already applied; under
    /// Causal, buffered until origin_vv <= local vv; Rejected (journaled)
    /// when the re-executed precondition or an invariant fails here.
    DeliverOutcome deliver(const OperationInstance& inst, DeliveryPolicy policy,
                           MergePolicy merge, std::uint64_t tick);

    /// Canonical digest over every aggregate state.
    std::string digest() const;

    const ModelDescriptor& model() const { return *model_; }

  private:
    DeliverOutcome apply_remote(const OperationInstance& inst, MergePolicy merge,
                                std::uint64_t tick);
    void refresh_projections(std::uint32_t source_aggregate);
    bool invariants_hold(std::uint32_t aggregate, const State& s) const;
    void drain_buffer(DeliveryPolicy policy, MergePolicy merge, std::uint64_t tick);

    const ModelDescriptor* model_;
    ReplicaId id_;
    std::vector<State> states_;
    std::vector<VersionedState> cells_; // (ts, writer) per aggregate for merge demos
    VersionVector vv_;
    std::set<OpId> applied_;
    std::vector<OperationInstance> buffered_;
    std::vector<JournalEvent> journal_;
    std::uint64_t journal_seq_ = 0;
    std::uint64_t last_wall_ts_ = 0;
};

/// True iff all replicas' per-aggregate states are pairwise equal; also
/// returns the per-aggregate digests of the first replica for reporting.
struct ConvergenceResult {
    bool converged = true;
    std::vector<std::string> digests; // per aggregate, replica 0
};

ConvergenceResult converged(const std::vector<Replica>& replicas);

} // namespace eclat
