#pragma once

// Independent re-implementation of the pairwise compatibility relation: a
// straight double loop over every (state, params_a, params_b), fresh state
// decoding each time, no scratch reuse, no early exit. Test oracle only —
// it must never call into the checker it audits.

#include "eclat/effects.hpp"
#include "eclat/model.hpp"

enum class NaiveOutcome { Compatible, Incompatible };

inline NaiveOutcome naive_check(const eclat::AggregateDescriptor& agg, std::size_t a,
                                std::size_t b) {
    using namespace eclat;
    const OperationDescriptor& op_a = agg.operations[a];
    const OperationDescriptor& op_b = agg.operations[b];
    const StateSpace& space = agg.state_space;
    bool incompatible = false;
    for (std::uint64_t si = 0; si < space.size(); ++si) {
        for (std::uint64_t ai = 0; ai < op_a.param_space_size(); ++ai) {
            for (std::uint64_t bi = 0; bi < op_b.param_space_size(); ++bi) {
                if (a == b && ai == bi) continue;
                State start;
                space.state_at(si, start);
                ParamValues pa, pb;
                op_a.params_at(ai, pa);
                op_b.params_at(bi, pb);

                bool ok_ab = false, ok_ba = false;
                State ab, ba;
                if (op_applicable(space, op_a, start, pa)) {
                    ab = start;
                    apply_effect(space, op_a.effect, ab, pa);
                    if (op_applicable(space, op_b, ab, pb)) {
                        apply_effect(space, op_b.effect, ab, pb);
                        ok_ab = true;
                    }
                }
                if (op_applicable(space, op_b, start, pb)) {
                    ba = start;
                    apply_effect(space, op_b.effect, ba, pb);
                    if (op_applicable(space, op_a, ba, pa)) {
                        apply_effect(space, op_a.effect, ba, pa);
                        ok_ba = true;
                    }
                }
                if (ok_ab != ok_ba) incompatible = true;
                if (ok_ab && ok_ba && !(ab == ba)) incompatible = true;
            }
        }
    }
    return incompatible ? NaiveOutcome::Incompatible : NaiveOutcome::Compatible;
}
