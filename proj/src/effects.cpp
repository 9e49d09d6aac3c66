#include "eclat/effects.hpp"

#include <algorithm>

namespace eclat {

const Value& resolve_ref(const ValueRef& ref, const ParamValues& params) {
    if (ref.kind == ValueRef::Kind::Param) return params[ref.param];
    return ref.literal;
}

namespace {

Int ref_int(const ValueRef& ref, const ParamValues& params) {
    return std::get<Int>(resolve_ref(ref, params));
}

/// Symbol-indexed resolution: applies the parse-time remap. -1 means the
/// parameter's symbol has no counterpart in the target universe.
Int ref_symbol(const ValueRef& ref, const ParamValues& params) {
    Int raw = ref_int(ref, params);
    if (ref.kind == ValueRef::Kind::Param && !ref.remap.empty())
        return ref.remap[static_cast<std::size_t>(raw)];
    return raw;
}

/// True when a symbol-position reference resolves to "no counterpart".
bool unmappable(const ValueRef& ref, const ParamValues& params) {
    if (ref.kind != ValueRef::Kind::Param || ref.remap.empty()) return false;
    return ref.remap[static_cast<std::size_t>(ref_int(ref, params))] < 0;
}

bool action_applicable(const StateSpace& space, const EffectAction& action, const State& state,
                       const ParamValues& params) {
    if (const auto* add = std::get_if<ActionAddDelta>(&action)) {
        const auto& dom = std::get<IntRangeDomain>(space.fields[add->field].domain);
        Int next = std::get<Int>(state[add->field]) + ref_int(add->delta, params);
        return next >= dom.lo && next <= dom.hi;
    }
    if (const auto* ins = std::get_if<ActionInsertKeyed>(&action)) {
        if (unmappable(ins->key, params) || unmappable(ins->value, params)) return false;
        return !std::get<MapSlots>(state[ins->field])
                    .has(static_cast<unsigned>(ref_symbol(ins->key, params)));
    }
    if (const auto* set = std::get_if<ActionSetRegister>(&action)) {
        if (set->key && unmappable(*set->key, params)) return false;
        return !unmappable(set->value, params);
    }
    if (const auto* ins = std::get_if<ActionInsertElement>(&action))
        return !unmappable(ins->element, params);
    if (const auto* rem = std::get_if<ActionRemoveElement>(&action))
        return !unmappable(rem->element, params);
    if (const auto* tomb = std::get_if<ActionTombstoneDelete>(&action))
        return !unmappable(tomb->element, params);
    if (const auto* join = std::get_if<ActionLatticeJoin>(&action))
        return !unmappable(join->value, params);
    return true; // replace_state is total
}

void apply_action(const StateSpace& space, const EffectAction& action, State& state,
                  const ParamValues& params) {
    if (const auto* add = std::get_if<ActionAddDelta>(&action)) {
        std::get<Int>(state[add->field]) += ref_int(add->delta, params);
        return;
    }
    if (const auto* set = std::get_if<ActionSetRegister>(&action)) {
        if (set->key) {
            auto& slots = std::get<MapSlots>(state[set->field]);
            slots.slot[ref_symbol(*set->key, params)] =
                static_cast<std::int32_t>(ref_symbol(set->value, params));
        } else {
            state[set->field] = Int{ref_symbol(set->value, params)};
        }
        return;
    }
    if (const auto* ins = std::get_if<ActionInsertElement>(&action)) {
        std::get<SetBits>(state[ins->field]).insert(
            static_cast<unsigned>(ref_symbol(ins->element, params)));
        return;
    }
    if (const auto* ik = std::get_if<ActionInsertKeyed>(&action)) {
        auto& slots = std::get<MapSlots>(state[ik->field]);
        slots.slot[ref_symbol(ik->key, params)] =
            static_cast<std::int32_t>(ref_symbol(ik->value, params));
        return;
    }
    if (const auto* rem = std::get_if<ActionRemoveElement>(&action)) {
        std::get<SetBits>(state[rem->field]).erase(
            static_cast<unsigned>(ref_symbol(rem->element, params)));
        return;
    }
    if (const auto* tomb = std::get_if<ActionTombstoneDelete>(&action)) {
        std::get<SetBits>(state[tomb->field]).insert(
            static_cast<unsigned>(ref_symbol(tomb->element, params)));
        return;
    }
    if (const auto* join = std::get_if<ActionLatticeJoin>(&action)) {
        const auto& dom = std::get<EnumDomain>(space.fields[join->field].domain);
        const EnumOrder& order = *dom.order;
        auto cur = static_cast<std::uint16_t>(std::get<Int>(state[join->field]));
        auto val = static_cast<std::uint16_t>(ref_symbol(join->value, params));
        state[join->field] = Int{order.join[cur][val]};
        return;
    }
    const auto& repl = std::get<ActionReplaceState>(action);
    State next = state;
    for (std::size_t f = 0; f < repl.assigns.size(); ++f) {
        const ReplaceAssign& as = repl.assigns[f];
        switch (as.kind) {
        case ReplaceAssign::Kind::KeepCurrent: break;
        case ReplaceAssign::Kind::FromRef:
            if (std::get_if<Int>(&next[f]))
                next[f] = Int{ref_symbol(as.ref, params)};
            else
                next[f] = resolve_ref(as.ref, params);
            break;
        case ReplaceAssign::Kind::SingletonOf: {
            Int elem = ref_symbol(as.ref, params);
            SetBits set;
            if (elem >= 0) set.insert(static_cast<unsigned>(elem));
            next[f] = set;
            break;
        }
        }
    }
    state = std::move(next);
}

} // namespace

bool effect_applicable(const StateSpace& space, const Effect& effect, const State& state,
                       const ParamValues& params) {
    // Applicability is judged against the starting state; actions in one
    // effect touch disjoint fields (enforced at parse time).
    for (const auto& action : effect.actions)
        if (!action_applicable(space, action, state, params)) return false;
    return true;
}

void apply_effect(const StateSpace& space, const Effect& effect, State& state,
                  const ParamValues& params) {
    for (const auto& action : effect.actions) apply_action(space, action, state, params);
}

bool op_applicable(const StateSpace& space, const OperationDescriptor& op, const State& state,
                   const ParamValues& params) {
    if (op.precondition && !eval_predicate(space, *op.precondition, state, params)) return false;
    return effect_applicable(space, op.effect, state, params);
}

namespace {

bool scalar_leq(const FieldDomain& dom, Int a, Int b) {
    if (const auto* e = std::get_if<EnumDomain>(&dom)) {
        if (e->order) return e->order->leq(static_cast<unsigned>(a), static_cast<unsigned>(b));
        return a <= b; // unordered enums compare by declaration index
    }
    return a <= b;
}

} // namespace

bool eval_predicate(const StateSpace& space, const Predicate& pred, const State& state,
                    const ParamValues& params) {
    using K = Predicate::Kind;
    switch (pred.kind) {
    case K::All:
        for (const auto& c : pred.children)
            if (!eval_predicate(space, c, state, params)) return false;
        return true;
    case K::Any:
        for (const auto& c : pred.children)
            if (eval_predicate(space, c, state, params)) return true;
        return false;
    case K::Not: return !eval_predicate(space, pred.children[0], state, params);
    case K::Eq:
        if (unmappable(pred.a, params)) return false;
        return std::get<Int>(state[pred.field]) == ref_symbol(pred.a, params);
    case K::Ne:
        if (unmappable(pred.a, params)) return true;
        return std::get<Int>(state[pred.field]) != ref_symbol(pred.a, params);
    case K::Le:
        if (unmappable(pred.a, params)) return false;
        return scalar_leq(space.fields[pred.field].domain, std::get<Int>(state[pred.field]),
                          ref_symbol(pred.a, params));
    case K::Lt:
        if (unmappable(pred.a, params)) return false;
        return std::get<Int>(state[pred.field]) != ref_symbol(pred.a, params) &&
               scalar_leq(space.fields[pred.field].domain, std::get<Int>(state[pred.field]),
                          ref_symbol(pred.a, params));
    case K::Ge:
        if (unmappable(pred.a, params)) return false;
        return scalar_leq(space.fields[pred.field].domain, ref_symbol(pred.a, params),
                          std::get<Int>(state[pred.field]));
    case K::Gt:
        if (unmappable(pred.a, params)) return false;
        return std::get<Int>(state[pred.field]) != ref_symbol(pred.a, params) &&
               scalar_leq(space.fields[pred.field].domain, ref_symbol(pred.a, params),
                          std::get<Int>(state[pred.field]));
    case K::Contains: {
        if (unmappable(pred.a, params)) return false;
        Int idx = ref_symbol(pred.a, params);
        if (const auto* set = std::get_if<SetBits>(&state[pred.field]))
            return set->contains(static_cast<unsigned>(idx));
        return std::get<MapSlots>(state[pred.field]).has(static_cast<unsigned>(idx));
    }
    case K::KeyAbsent: {
        if (unmappable(pred.a, params)) return false;
        return !std::get<MapSlots>(state[pred.field])
                    .has(static_cast<unsigned>(ref_symbol(pred.a, params)));
    }
    case K::EntryEq: {
        if (unmappable(pred.a, params) || unmappable(pred.b, params)) return false;
        const auto& slots = std::get<MapSlots>(state[pred.field]);
        auto key = static_cast<unsigned>(ref_symbol(pred.a, params));
        if (!slots.has(key)) return false;
        return slots.slot[key] == static_cast<std::int32_t>(ref_symbol(pred.b, params));
    }
    case K::ParamIs: return resolve_ref(pred.a, params) == pred.b.literal;
    }
    return false;
}

std::vector<int> written_fields(const StateSpace& space, const Effect& effect) {
    (void)space;
    std::vector<int> out;
    auto push = [&out](int f) { out.push_back(f); };
    for (const auto& action : effect.actions) {
        std::visit(
            [&](const auto& a) {
                using T = std::decay_t<decltype(a)>;
                if constexpr (std::is_same_v<T, ActionReplaceState>) {
                    for (std::size_t f = 0; f < a.assigns.size(); ++f)
                        if (a.assigns[f].kind != ReplaceAssign::Kind::KeepCurrent)
                            push(static_cast<int>(f));
                } else {
                    push(a.field);
                }
            },
            action);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ActionClass action_class(const EffectAction& action) {
    return std::visit(
        [](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, ActionAddDelta> ||
                          std::is_same_v<T, ActionInsertElement> ||
                          std::is_same_v<T, ActionInsertKeyed> ||
                          std::is_same_v<T, ActionRemoveElement> ||
                          std::is_same_v<T, ActionTombstoneDelete> ||
                          std::is_same_v<T, ActionLatticeJoin>)
                return ActionClass::Delta;
            else if constexpr (std::is_same_v<T, ActionSetRegister>)
                return ActionClass::Blind;
            else
                return ActionClass::Opaque;
        },
        action);
}

} // namespace eclat
