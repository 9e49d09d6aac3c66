#pragma once

#include "eclat/model.hpp"

namespace eclat {

/// Resolve a ValueRef against a parameter valuation.
const Value& resolve_ref(const ValueRef& ref, const ParamValues& params);

/// True when every action in the effect can run on `state` (add_delta stays
/// in range, insert_keyed key absent). Declared preconditions are separate;
/// see op_applicable.
bool effect_applicable(const StateSpace& space, const Effect& effect, const State& state,
                       const ParamValues& params);

/// Applies the effect in place. Caller must have checked applicability.
void apply_effect(const StateSpace& space, const Effect& effect, State& state,
                  const ParamValues& params);

bool eval_predicate(const StateSpace& space, const Predicate& pred, const State& state,
                    const ParamValues& params);

/// Declared precondition (if any) plus effect applicability.
bool op_applicable(const StateSpace& space, const OperationDescriptor& op, const State& state,
                   const ParamValues& params);

/// Field indexes an effect may write (replace_state contributes every field
/// whose assignment is not KeepCurrent). Sorted, unique.
std::vector<int> written_fields(const StateSpace& space, const Effect& effect);

/// Action classes used by the update-kind validator: delta actions express
/// changes relative to current values, blind actions write param-determined
/// registers, opaque actions may read and replace the whole state.
enum class ActionClass { Delta, Blind, Opaque };
ActionClass action_class(const EffectAction& action);

} // namespace eclat
