#include "eclat/parse.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "eclat/effects.hpp"

namespace eclat {

namespace {

const std::regex kIdent("^[A-Za-z_][A-Za-z0-9_.-]*$");

void require_ident(const std::string& s, const std::string& what) {
    if (!std::regex_match(s, kIdent))
        throw SyntaxError(what + ": '" + s + "' is not a valid identifier");
}

const json& member(const json& j, const char* key, const std::string& context) {
    if (!j.is_object()) throw SyntaxError(context + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SyntaxError(context + ": missing key '" + key + "'");
    return *it;
}

std::string str_member(const json& j, const char* key, const std::string& context) {
    const json& v = member(j, key, context);
    if (!v.is_string()) throw SyntaxError(context + ": key '" + key + "' must be a string");
    return v.get<std::string>();
}

std::vector<std::string> symbol_list(const json& j, const std::string& context,
                                     std::size_t cap) {
    if (!j.is_array() || j.empty())
        throw DomainError(context + ": expected a non-empty symbol array");
    if (j.size() > cap)
        throw DomainError(context + ": " + std::to_string(j.size()) +
                          " symbols exceed the cap of " + std::to_string(cap));
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& s : j) {
        if (!s.is_string()) throw SyntaxError(context + ": symbols must be strings");
        require_ident(s.get<std::string>(), context);
        if (!seen.insert(s.get<std::string>()).second)
            throw DomainError(context + ": duplicate symbol '" + s.get<std::string>() + "'");
        out.push_back(s.get<std::string>());
    }
    return out;
}

EnumDomain parse_enum_domain(const json& j, const std::string& context) {
    EnumDomain dom;
    dom.symbols = symbol_list(member(j, "symbols", context), context, 16);
    if (j.contains("order")) {
        const json& o = j.at("order");
        if (o.is_string() && o.get<std::string>() == "chain") {
            dom.order = make_enum_order(dom.symbols.size(), true, {});
        } else if (o.is_object() && o.contains("pairs")) {
            std::vector<std::pair<std::uint16_t, std::uint16_t>> pairs;
            for (const auto& p : o.at("pairs")) {
                if (!p.is_array() || p.size() != 2)
                    throw SyntaxError(context + ": order pairs must be [below, above]");
                int a = dom.index_of(p[0].get<std::string>());
                int b = dom.index_of(p[1].get<std::string>());
                if (a < 0 || b < 0)
                    throw ReferenceError(context + ": order pair names unknown symbol");
                pairs.emplace_back(static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b));
            }
            dom.order = make_enum_order(dom.symbols.size(), false, pairs);
        } else {
            throw SyntaxError(context + ": order must be \"chain\" or {\"pairs\": [...]}");
        }
    }
    return dom;
}

IntRangeDomain parse_int_domain(const json& j, const std::string& context) {
    const json& lo = member(j, "min", context);
    const json& hi = member(j, "max", context);
    if (!lo.is_number_integer() || !hi.is_number_integer())
        throw SyntaxError(context + ": min/max must be integers");
    IntRangeDomain dom{lo.get<Int>(), hi.get<Int>()};
    if (dom.lo > dom.hi) throw DomainError(context + ": min exceeds max");
    constexpr Int kBound = 1'000'000'000;
    if (dom.lo < -kBound || dom.hi > kBound)
        throw DomainError(context + ": range bounds exceed +/-1e9");
    return dom;
}

ScalarDomain parse_scalar_domain(const json& j, const std::string& context) {
    std::string kind = str_member(j, "kind", context);
    if (kind == "int") return parse_int_domain(j, context);
    if (kind == "enum") return parse_enum_domain(j, context);
    throw SyntaxError(context + ": parameter/map-value domains must be 'int' or 'enum'");
}

FieldDomain parse_field_domain(const json& j, const std::string& context) {
    std::string kind = str_member(j, "kind", context);
    if (kind == "int") return parse_int_domain(j, context);
    if (kind == "enum") return parse_enum_domain(j, context);
    if (kind == "set") {
        SetDomain dom;
        dom.symbols = symbol_list(member(j, "symbols", context), context, kMaxSmallElems);
        return dom;
    }
    if (kind == "map") {
        MapDomain dom;
        dom.keys = symbol_list(member(j, "keys", context), context, MapSlots::kMaxKeys);
        dom.values = parse_scalar_domain(member(j, "values", context), context + ".values");
        if (const auto* r = std::get_if<IntRangeDomain>(&dom.values)) {
            if (r->lo < std::numeric_limits<std::int32_t>::min() + 1 ||
                r->hi > std::numeric_limits<std::int32_t>::max())
                throw DomainError(context + ": map int values must fit 32 bits");
        }
        return dom;
    }
    throw SyntaxError(context + ": unknown domain kind '" + kind + "'");
}

// --- symbol universes -------------------------------------------------------

/// Names of the symbol universe a position expects, or nullptr for ints.
const std::vector<std::string>* target_symbols(const FieldDomain& dom, bool key_position) {
    if (const auto* e = std::get_if<EnumDomain>(&dom)) return &e->symbols;
    if (const auto* s = std::get_if<SetDomain>(&dom)) return &s->symbols;
    if (const auto* m = std::get_if<MapDomain>(&dom)) {
        if (key_position) return &m->keys;
        if (const auto* e = std::get_if<EnumDomain>(&m->values)) return &e->symbols;
        return nullptr; // int-valued map
    }
    return nullptr;
}

struct OpContext {
    const StateSpace* space;
    const std::vector<ParamSpec>* params;
    std::string where;

    int param_index(const std::string& name) const {
        for (std::size_t i = 0; i < params->size(); ++i)
            if ((*params)[i].name == name) return static_cast<int>(i);
        return -1;
    }
};

/// Parses {"param": name} or {"value": literal} against a target universe.
/// `symbols` null means an integer position.
ValueRef parse_value_ref(const json& j, const OpContext& ctx,
                         const std::vector<std::string>* symbols, bool allow_unmapped) {
    if (!j.is_object()) throw SyntaxError(ctx.where + ": expected {\"param\":..} or {\"value\":..}");
    if (j.contains("param")) {
        std::string pname = j.at("param").get<std::string>();
        int idx = ctx.param_index(pname);
        if (idx < 0) throw ReferenceError(ctx.where + ": unknown parameter '" + pname + "'");
        ValueRef ref = ValueRef::of_param(idx);
        const ScalarDomain& pdom = (*ctx.params)[idx].domain;
        if (symbols) {
            const auto* e = std::get_if<EnumDomain>(&pdom);
            if (!e)
                throw DomainError(ctx.where + ": parameter '" + pname +
                                  "' must be an enum to address symbols");
            ref.remap.reserve(e->symbols.size());
            bool missing = false;
            for (const auto& sym : e->symbols) {
                std::int16_t t = -1;
                for (std::size_t s = 0; s < symbols->size(); ++s)
                    if ((*symbols)[s] == sym) t = static_cast<std::int16_t>(s);
                missing = missing || t < 0;
                ref.remap.push_back(t);
            }
            if (missing && !allow_unmapped)
                throw ReferenceError(ctx.where + ": parameter '" + pname +
                                     "' has symbols outside the target universe");
        } else if (!std::get_if<IntRangeDomain>(&pdom)) {
            throw DomainError(ctx.where + ": parameter '" + pname + "' must be an integer");
        }
        return ref;
    }
    if (j.contains("value")) {
        const json& v = j.at("value");
        if (symbols) {
            if (!v.is_string()) throw SyntaxError(ctx.where + ": literal must be a symbol");
            for (std::size_t s = 0; s < symbols->size(); ++s)
                if ((*symbols)[s] == v.get<std::string>())
                    return ValueRef::of_literal(Int{static_cast<Int>(s)});
            throw ReferenceError(ctx.where + ": unknown symbol '" + v.get<std::string>() + "'");
        }
        if (!v.is_number_integer()) throw SyntaxError(ctx.where + ": literal must be an integer");
        return ValueRef::of_literal(Int{v.get<Int>()});
    }
    throw SyntaxError(ctx.where + ": expected {\"param\":..} or {\"value\":..}");
}

int field_ref(const json& j, const OpContext& ctx) {
    if (!j.is_string()) throw SyntaxError(ctx.where + ": field reference must be a string");
    int idx = ctx.space->field_index(j.get<std::string>());
    if (idx < 0)
        throw ReferenceError(ctx.where + ": unknown field '" + j.get<std::string>() + "'");
    return idx;
}

// --- predicates -------------------------------------------------------------

Predicate parse_predicate(const json& j, const OpContext& ctx);

Predicate parse_field_cmp(Predicate::Kind kind, const json& j, const OpContext& ctx) {
    Predicate p;
    p.kind = kind;
    p.field = field_ref(member(j, "field", ctx.where), ctx);
    const FieldDomain& dom = ctx.space->fields[p.field].domain;
    if (std::get_if<SetDomain>(&dom) || std::get_if<MapDomain>(&dom))
        throw DomainError(ctx.where + ": scalar comparison on non-scalar field");
    if (kind == Predicate::Kind::Le || kind == Predicate::Kind::Lt ||
        kind == Predicate::Kind::Ge || kind == Predicate::Kind::Gt) {
        if (const auto* e = std::get_if<EnumDomain>(&dom))
            if (!e->order)
                throw DomainError(ctx.where + ": ordered comparison on unordered enum field");
    }
    p.a = parse_value_ref(member(j, "value", ctx.where), ctx, target_symbols(dom, false), true);
    return p;
}

Predicate parse_predicate(const json& j, const OpContext& ctx) {
    if (!j.is_object() || j.size() != 1)
        throw SyntaxError(ctx.where + ": predicate must be a single-key object");
    const std::string key = j.begin().key();
    const json& body = j.begin().value();
    Predicate p;
    if (key == "all" || key == "any") {
        p.kind = key == "all" ? Predicate::Kind::All : Predicate::Kind::Any;
        if (!body.is_array()) throw SyntaxError(ctx.where + ": '" + key + "' expects an array");
        for (const auto& c : body) p.children.push_back(parse_predicate(c, ctx));
        return p;
    }
    if (key == "not") {
        p.kind = Predicate::Kind::Not;
        p.children.push_back(parse_predicate(body, ctx));
        return p;
    }
    if (key == "eq") return parse_field_cmp(Predicate::Kind::Eq, body, ctx);
    if (key == "ne") return parse_field_cmp(Predicate::Kind::Ne, body, ctx);
    if (key == "le") return parse_field_cmp(Predicate::Kind::Le, body, ctx);
    if (key == "lt") return parse_field_cmp(Predicate::Kind::Lt, body, ctx);
    if (key == "ge") return parse_field_cmp(Predicate::Kind::Ge, body, ctx);
    if (key == "gt") return parse_field_cmp(Predicate::Kind::Gt, body, ctx);
    if (key == "contains" || key == "key_absent") {
        p.kind = key == "contains" ? Predicate::Kind::Contains : Predicate::Kind::KeyAbsent;
        p.field = field_ref(member(body, "field", ctx.where), ctx);
        const FieldDomain& dom = ctx.space->fields[p.field].domain;
        const json* elem = body.contains("element") ? &body.at("element") : nullptr;
        if (!elem && body.contains("key")) elem = &body.at("key");
        if (!elem) throw SyntaxError(ctx.where + ": '" + key + "' needs 'element' or 'key'");
        if (p.kind == Predicate::Kind::KeyAbsent && !std::get_if<MapDomain>(&dom))
            throw DomainError(ctx.where + ": key_absent requires a map field");
        if (!std::get_if<MapDomain>(&dom) && !std::get_if<SetDomain>(&dom))
            throw DomainError(ctx.where + ": '" + key + "' requires a set or map field");
        p.a = parse_value_ref(*elem, ctx, target_symbols(dom, true), true);
        return p;
    }
    if (key == "entry_eq") {
        p.kind = Predicate::Kind::EntryEq;
        p.field = field_ref(member(body, "field", ctx.where), ctx);
        const FieldDomain& dom = ctx.space->fields[p.field].domain;
        if (!std::get_if<MapDomain>(&dom))
            throw DomainError(ctx.where + ": entry_eq requires a map field");
        p.a = parse_value_ref(member(body, "key", ctx.where), ctx, target_symbols(dom, true), true);
        p.b = parse_value_ref(member(body, "value", ctx.where), ctx, target_symbols(dom, false),
                              true);
        return p;
    }
    if (key == "param_is") {
        p.kind = Predicate::Kind::ParamIs;
        std::string pname = str_member(body, "param", ctx.where);
        int idx = ctx.param_index(pname);
        if (idx < 0) throw ReferenceError(ctx.where + ": unknown parameter '" + pname + "'");
        p.a = ValueRef::of_param(idx);
        const ScalarDomain& pdom = (*ctx.params)[idx].domain;
        Value lit = scalar_from_json(pdom, member(body, "value", ctx.where), ctx.where);
        p.b = ValueRef::of_literal(lit);
        return p;
    }
    throw SyntaxError(ctx.where + ": unknown predicate '" + key + "'");
}

// --- effects ----------------------------------------------------------------

EffectAction parse_action(const json& j, const OpContext& ctx) {
    std::string fn = str_member(j, "fn", ctx.where);
    auto target_field = [&](std::initializer_list<const char*> kinds) {
        int f = field_ref(member(j, "field", ctx.where), ctx);
        const FieldDomain& dom = ctx.space->fields[f].domain;
        bool ok = false;
        for (const char* k : kinds) {
            std::string kind = k;
            ok = ok || (kind == "int" && std::get_if<IntRangeDomain>(&dom)) ||
                 (kind == "enum" && std::get_if<EnumDomain>(&dom)) ||
                 (kind == "set" && std::get_if<SetDomain>(&dom)) ||
                 (kind == "map" && std::get_if<MapDomain>(&dom));
        }
        if (!ok)
            throw DomainError(ctx.where + ": '" + fn + "' cannot target field '" +
                              ctx.space->fields[f].name + "'");
        return f;
    };
    if (fn == "add_delta") {
        ActionAddDelta a;
        a.field = target_field({"int"});
        a.delta = parse_value_ref(member(j, "delta", ctx.where), ctx, nullptr, false);
        return a;
    }
    if (fn == "set_register") {
        ActionSetRegister a;
        a.field = target_field({"int", "enum", "map"});
        const FieldDomain& dom = ctx.space->fields[a.field].domain;
        if (std::get_if<MapDomain>(&dom)) {
            a.key = parse_value_ref(member(j, "key", ctx.where), ctx, target_symbols(dom, true),
                                    false);
            a.value = parse_value_ref(member(j, "value", ctx.where), ctx,
                                      target_symbols(dom, false), false);
        } else {
            a.value = parse_value_ref(member(j, "value", ctx.where), ctx,
                                      target_symbols(dom, false), false);
        }
        return a;
    }
    if (fn == "insert_keyed") {
        int f = field_ref(member(j, "field", ctx.where), ctx);
        const FieldDomain& dom = ctx.space->fields[f].domain;
        if (std::get_if<SetDomain>(&dom)) {
            ActionInsertElement a;
            a.field = f;
            a.element = parse_value_ref(member(j, "element", ctx.where), ctx,
                                        target_symbols(dom, false), false);
            return a;
        }
        if (std::get_if<MapDomain>(&dom)) {
            ActionInsertKeyed a;
            a.field = f;
            a.key =
                parse_value_ref(member(j, "key", ctx.where), ctx, target_symbols(dom, true), false);
            a.value = parse_value_ref(member(j, "value", ctx.where), ctx,
                                      target_symbols(dom, false), false);
            return a;
        }
        throw DomainError(ctx.where + ": insert_keyed requires a set or map field");
    }
    if (fn == "remove_element") {
        ActionRemoveElement a;
        a.field = target_field({"set"});
        a.element = parse_value_ref(member(j, "element", ctx.where), ctx,
                                    target_symbols(ctx.space->fields[a.field].domain, false),
                                    false);
        return a;
    }
    if (fn == "tombstone_delete") {
        ActionTombstoneDelete a;
        a.field = target_field({"set"});
        a.element = parse_value_ref(member(j, "element", ctx.where), ctx,
                                    target_symbols(ctx.space->fields[a.field].domain, false),
                                    false);
        return a;
    }
    if (fn == "lattice_join_field") {
        ActionLatticeJoin a;
        a.field = target_field({"enum"});
        const auto& e = std::get<EnumDomain>(ctx.space->fields[a.field].domain);
        if (!e.order || !e.order->is_semilattice)
            throw NotALatticeError(ctx.where + ": field '" + ctx.space->fields[a.field].name +
                                   "' has no join-semilattice order");
        a.value =
            parse_value_ref(member(j, "value", ctx.where), ctx,
                            target_symbols(ctx.space->fields[a.field].domain, false), false);
        return a;
    }
    if (fn == "replace_state") {
        ActionReplaceState a;
        a.assigns.resize(ctx.space->fields.size());
        const json& assigns = member(j, "assignments", ctx.where);
        if (!assigns.is_object())
            throw SyntaxError(ctx.where + ": replace_state assignments must be an object");
        for (const auto& [fname, spec] : assigns.items()) {
            int f = ctx.space->field_index(fname);
            if (f < 0) throw ReferenceError(ctx.where + ": unknown field '" + fname + "'");
            ReplaceAssign& as = a.assigns[f];
            const FieldDomain& dom = ctx.space->fields[f].domain;
            if (spec.is_string() && spec.get<std::string>() == "current") {
                as.kind = ReplaceAssign::Kind::KeepCurrent;
            } else if (spec.is_object() && spec.contains("singleton")) {
                if (!std::get_if<SetDomain>(&dom))
                    throw DomainError(ctx.where + ": singleton assignment on non-set field '" +
                                      fname + "'");
                as.kind = ReplaceAssign::Kind::SingletonOf;
                as.ref = parse_value_ref(spec.at("singleton"), ctx, target_symbols(dom, false),
                                         true); // unmatched symbols mean "empty set"
                if (as.ref.kind != ValueRef::Kind::Param)
                    throw SyntaxError(ctx.where + ": singleton assignment requires a param");
            } else {
                if (std::get_if<SetDomain>(&dom) || std::get_if<MapDomain>(&dom))
                    throw DomainError(ctx.where +
                                      ": replace_state cannot assign collection field '" + fname +
                                      "' directly; use \"current\" or {\"singleton\":..}");
                as.kind = ReplaceAssign::Kind::FromRef;
                as.ref = parse_value_ref(spec, ctx, target_symbols(dom, false), false);
            }
        }
        return a;
    }
    throw ReferenceError(ctx.where + ": unknown effect '" + fn + "'");
}

Effect parse_effect(const json& j, const OpContext& ctx) {
    if (!j.is_array() || j.empty())
        throw SyntaxError(ctx.where + ": effect must be a non-empty action array");
    Effect effect;
    for (const auto& a : j) effect.actions.push_back(parse_action(a, ctx));
    // Actions of one effect must write disjoint fields so applicability can
    // be judged against the starting state.
    std::set<int> seen;
    for (const auto& action : effect.actions) {
        Effect one;
        one.actions.push_back(action);
        for (int f : written_fields(*ctx.space, one))
            if (!seen.insert(f).second)
                throw DomainError(ctx.where + ": effect actions write field '" +
                                  ctx.space->fields[f].name + "' more than once");
    }
    return effect;
}

// --- aggregates -------------------------------------------------------------

OperationDescriptor parse_operation(const json& j, const StateSpace& space,
                                    const std::string& agg_name) {
    OperationDescriptor op;
    op.name = str_member(j, "name", "operation of '" + agg_name + "'");
    require_ident(op.name, "operation name");
    std::string where = "operation '" + agg_name + "." + op.name + "'";
    std::string kind = str_member(j, "update_kind", where);
    if (kind == "incremental") op.update_kind = UpdateKind::Incremental;
    else if (kind == "true_blind") op.update_kind = UpdateKind::TrueBlind;
    else if (kind == "state_based") op.update_kind = UpdateKind::StateBased;
    else throw SyntaxError(where + ": unknown update_kind '" + kind + "'");

    if (j.contains("params")) {
        if (!j.at("params").is_array()) throw SyntaxError(where + ": params must be an array");
        for (const auto& p : j.at("params")) {
            ParamSpec spec;
            spec.name = str_member(p, "name", where);
            require_ident(spec.name, where + " param name");
            for (const auto& existing : op.params)
                if (existing.name == spec.name)
                    throw ReferenceError(where + ": duplicate parameter '" + spec.name + "'");
            spec.domain = parse_scalar_domain(member(p, "domain", where), where + ".params");
            op.params.push_back(std::move(spec));
        }
    }

    OpContext ctx{&space, &op.params, where};
    if (j.contains("precondition"))
        op.precondition = parse_predicate(j.at("precondition"), ctx);
    op.effect = parse_effect(member(j, "effect", where), ctx);
    if (j.contains("intent")) op.intent = parse_predicate(j.at("intent"), ctx);
    if (j.contains("superseded_by")) {
        if (!j.at("superseded_by").is_array())
            throw SyntaxError(where + ": superseded_by must be an array");
        for (const auto& s : j.at("superseded_by")) op.superseded_by.push_back(s.get<std::string>());
    }
    return op;
}

AggregateDescriptor parse_aggregate(const json& j) {
    AggregateDescriptor agg;
    agg.name = str_member(j, "name", "aggregate");
    require_ident(agg.name, "aggregate name");
    std::string where = "aggregate '" + agg.name + "'";

    const json& space_j = member(j, "state_space", where);
    const json& fields_j = member(space_j, "fields", where);
    if (!fields_j.is_array() || fields_j.empty())
        throw SyntaxError(where + ": state_space.fields must be a non-empty array");
    for (const auto& f : fields_j) {
        FieldSpec spec;
        spec.name = str_member(f, "name", where);
        require_ident(spec.name, where + " field name");
        if (agg.state_space.field_index(spec.name) >= 0)
            throw ReferenceError(where + ": duplicate field '" + spec.name + "'");
        spec.domain =
            parse_field_domain(member(f, "domain", where), where + " field '" + spec.name + "'");
        agg.state_space.fields.push_back(std::move(spec));
    }
    if (space_j.contains("enumeration_cap")) {
        const json& cap = space_j.at("enumeration_cap");
        if (!cap.is_number_unsigned() || cap.get<std::uint64_t>() == 0)
            throw SyntaxError(where + ": enumeration_cap must be a positive integer");
        agg.state_space.enumeration_cap = cap.get<std::uint64_t>();
    }
    agg.state_space.size(); // throws DomainError on overflow
    agg.state_space.initial =
        state_from_json(agg.state_space, member(space_j, "initial", where));

    const json& writers = member(j, "writers", where);
    if (writers.is_string() && writers.get<std::string>() == "any") {
        agg.writers.any = true;
    } else if (writers.is_array()) {
        for (const auto& w : writers) agg.writers.ids.push_back(w.get<std::string>());
    } else {
        throw SyntaxError(where + ": writers must be \"any\" or an array of writer ids");
    }

    if (j.contains("operations")) {
        if (!j.at("operations").is_array())
            throw SyntaxError(where + ": operations must be an array");
        for (const auto& o : j.at("operations")) {
            OperationDescriptor op = parse_operation(o, agg.state_space, agg.name);
            if (agg.operation_index(op.name) >= 0)
                throw ReferenceError(where + ": duplicate operation '" + op.name + "'");
            agg.operations.push_back(std::move(op));
        }
    }
    for (const auto& op : agg.operations)
        for (const auto& target : op.superseded_by)
            if (agg.operation_index(target) < 0)
                throw ReferenceError(where + ": operation '" + op.name +
                                     "' superseded_by unknown operation '" + target + "'");

    if (j.contains("declared_class")) {
        std::string c = j.at("declared_class").get<std::string>();
        for (auto cls :
             {AggregateClass::Immutable, AggregateClass::Derived, AggregateClass::SingleWriter,
              AggregateClass::FullyCompatible, AggregateClass::PartiallyCompatible,
              AggregateClass::StateOpaque})
            if (c == to_string(cls)) agg.declared_class = cls;
        if (!agg.declared_class)
            throw SyntaxError(where + ": unknown declared_class '" + c + "'");
    }

    if (j.contains("invariants")) {
        OpContext ctx{&agg.state_space, nullptr, where + " invariant"};
        static const std::vector<ParamSpec> kNoParams;
        ctx.params = &kNoParams;
        for (const auto& inv : j.at("invariants")) {
            NamedPredicate np;
            np.name = str_member(inv, "name", ctx.where);
            np.predicate = parse_predicate(member(inv, "predicate", ctx.where), ctx);
            agg.invariants.push_back(std::move(np));
        }
    }
    return agg;
}

void resolve_projection(const json& j, AggregateDescriptor& agg, ModelDescriptor& model) {
    std::string where = "aggregate '" + agg.name + "' projection_of";
    ProjectionSpec proj;
    proj.source_aggregate = str_member(j, "aggregate", where);
    int src = model.aggregate_index(proj.source_aggregate);
    if (src < 0 || model.aggregates[src].name == agg.name)
        throw ReferenceError(where + ": unknown source aggregate '" + proj.source_aggregate + "'");
    proj.source_aggregate_index = src;
    const StateSpace& source = model.aggregates[src].state_space;

    std::string fn = str_member(j, "projection", where);
    auto src_field = [&](const char* key, bool want_map, bool want_set) {
        std::string name = str_member(j, key, where);
        int f = source.field_index(name);
        if (f < 0) throw ReferenceError(where + ": unknown source field '" + name + "'");
        const FieldDomain& dom = source.fields[f].domain;
        if (want_map && !std::get_if<MapDomain>(&dom))
            throw DomainError(where + ": field '" + name + "' must be a map");
        if (want_set && !std::get_if<SetDomain>(&dom))
            throw DomainError(where + ": field '" + name + "' must be a set");
        return f;
    };
    if (fn == "map_size") {
        proj.fn = ProjectionSpec::Fn::MapSize;
        proj.source_field = src_field("source_field", true, false);
    } else if (fn == "live_count") {
        proj.fn = ProjectionSpec::Fn::LiveCount;
        proj.source_field = src_field("added_field", false, true);
        proj.removed_field = src_field("removed_field", false, true);
    } else if (fn == "keyed_live_count") {
        proj.fn = ProjectionSpec::Fn::KeyedLiveCount;
        proj.source_field = src_field("keyed_field", true, false);
        proj.removed_field = src_field("removed_field", false, true);
    } else {
        throw ReferenceError(where + ": unknown projection '" + fn + "'");
    }

    std::string target = str_member(j, "target_field", where);
    proj.target_field = agg.state_space.field_index(target);
    if (proj.target_field < 0)
        throw ReferenceError(where + ": unknown target field '" + target + "'");
    if (!std::get_if<IntRangeDomain>(&agg.state_space.fields[proj.target_field].domain))
        throw DomainError(where + ": target field must be a bounded int");
    agg.projection_of = proj;
}

} // namespace

ModelDescriptor parse_model_json(const json& doc) {
    if (!doc.is_object()) throw SyntaxError("model document must be a JSON object");
    std::string schema = str_member(doc, "schema", "model document");
    if (schema != kModelSchema)
        throw SyntaxError("unsupported schema '" + schema + "' (expected " +
                          std::string(kModelSchema) + ")");
    ModelDescriptor model;
    model.name = str_member(doc, "name", "model document");
    require_ident(model.name, "model name");
    model.bounded_context = str_member(doc, "bounded_context", "model document");
    require_ident(model.bounded_context, "bounded_context");

    const json& aggs = member(doc, "aggregates", "model document");
    if (!aggs.is_array()) throw SyntaxError("aggregates must be an array");
    if (aggs.empty()) throw DomainError("model declares zero aggregates");
    for (const auto& a : aggs) {
        AggregateDescriptor agg = parse_aggregate(a);
        if (model.aggregate_index(agg.name) >= 0)
            throw ReferenceError("duplicate aggregate '" + agg.name + "'");
        model.aggregates.push_back(std::move(agg));
    }
    // Projections resolve after all aggregates exist.
    for (std::size_t i = 0; i < aggs.size(); ++i) {
        const json& a = aggs.at(i);
        if (!a.contains("projection_of")) continue;
        AggregateDescriptor& agg = model.aggregates[i];
        if (!agg.operations.empty())
            throw ReferenceError("aggregate '" + agg.name +
                                 "' declares projection_of but also operations");
        resolve_projection(a.at("projection_of"), agg, model);
    }
    return model;
}

ModelDescriptor parse_model(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SyntaxError(std::string("JSON parse error: ") + e.what());
    }
    return parse_model_json(doc);
}

ModelDescriptor parse_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SyntaxError("cannot open model file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str());
}

// --- serialization ----------------------------------------------------------

namespace {

json scalar_domain_to_json(const ScalarDomain& d);

json enum_domain_to_json(const EnumDomain& e) {
    json out{{"kind", "enum"}, {"symbols", e.symbols}};
    if (e.order) {
        if (e.order->chain) {
            out["order"] = "chain";
        } else {
            json pairs = json::array();
            for (auto [a, b] : e.order->declared_pairs)
                pairs.push_back(json::array({e.symbols[a], e.symbols[b]}));
            out["order"] = json{{"pairs", pairs}};
        }
    }
    return out;
}

json scalar_domain_to_json(const ScalarDomain& d) {
    if (const auto* r = std::get_if<IntRangeDomain>(&d))
        return json{{"kind", "int"}, {"min", r->lo}, {"max", r->hi}};
    return enum_domain_to_json(std::get<EnumDomain>(d));
}

json field_domain_to_json(const FieldDomain& d) {
    if (const auto* r = std::get_if<IntRangeDomain>(&d))
        return json{{"kind", "int"}, {"min", r->lo}, {"max", r->hi}};
    if (const auto* e = std::get_if<EnumDomain>(&d)) return enum_domain_to_json(*e);
    if (const auto* s = std::get_if<SetDomain>(&d))
        return json{{"kind", "set"}, {"symbols", s->symbols}};
    const auto& m = std::get<MapDomain>(d);
    return json{{"kind", "map"}, {"keys", m.keys}, {"values", scalar_domain_to_json(m.values)}};
}

json ref_to_json(const ValueRef& ref, const OperationDescriptor& op,
                 const std::vector<std::string>* symbols) {
    if (ref.kind == ValueRef::Kind::Param) return json{{"param", op.params[ref.param].name}};
    Int v = std::get<Int>(ref.literal);
    if (symbols) return json{{"value", (*symbols)[static_cast<std::size_t>(v)]}};
    return json{{"value", v}};
}

json predicate_to_json(const Predicate& p, const StateSpace& space,
                       const OperationDescriptor& op) {
    using K = Predicate::Kind;
    auto cmp_body = [&](const char*, const ValueRef& ref) {
        const FieldDomain& dom = space.fields[p.field].domain;
        return json{{"field", space.fields[p.field].name},
                    {"value", ref_to_json(ref, op, target_symbols(dom, false))}};
    };
    switch (p.kind) {
    case K::All:
    case K::Any: {
        json arr = json::array();
        for (const auto& c : p.children) arr.push_back(predicate_to_json(c, space, op));
        return json{{p.kind == K::All ? "all" : "any", arr}};
    }
    case K::Not: return json{{"not", predicate_to_json(p.children[0], space, op)}};
    case K::Eq: return json{{"eq", cmp_body("eq", p.a)}};
    case K::Ne: return json{{"ne", cmp_body("ne", p.a)}};
    case K::Le: return json{{"le", cmp_body("le", p.a)}};
    case K::Lt: return json{{"lt", cmp_body("lt", p.a)}};
    case K::Ge: return json{{"ge", cmp_body("ge", p.a)}};
    case K::Gt: return json{{"gt", cmp_body("gt", p.a)}};
    case K::Contains:
    case K::KeyAbsent: {
        const FieldDomain& dom = space.fields[p.field].domain;
        json body{{"field", space.fields[p.field].name},
                  {"element", ref_to_json(p.a, op, target_symbols(dom, true))}};
        return json{{p.kind == K::Contains ? "contains" : "key_absent", body}};
    }
    case K::EntryEq: {
        const FieldDomain& dom = space.fields[p.field].domain;
        return json{{"entry_eq",
                     {{"field", space.fields[p.field].name},
                      {"key", ref_to_json(p.a, op, target_symbols(dom, true))},
                      {"value", ref_to_json(p.b, op, target_symbols(dom, false))}}}};
    }
    case K::ParamIs: {
        const ParamSpec& spec = op.params[p.a.param];
        return json{{"param_is",
                     {{"param", spec.name},
                      {"value", scalar_to_json(spec.domain, p.b.literal)}}}};
    }
    }
    return {};
}

json action_to_json(const EffectAction& action, const StateSpace& space,
                    const OperationDescriptor& op) {
    if (const auto* a = std::get_if<ActionAddDelta>(&action))
        return json{{"fn", "add_delta"},
                    {"field", space.fields[a->field].name},
                    {"delta", ref_to_json(a->delta, op, nullptr)}};
    if (const auto* a = std::get_if<ActionSetRegister>(&action)) {
        const FieldDomain& dom = space.fields[a->field].domain;
        json out{{"fn", "set_register"}, {"field", space.fields[a->field].name}};
        if (a->key) out["key"] = ref_to_json(*a->key, op, target_symbols(dom, true));
        out["value"] = ref_to_json(a->value, op, target_symbols(dom, false));
        return out;
    }
    if (const auto* a = std::get_if<ActionInsertElement>(&action)) {
        const FieldDomain& dom = space.fields[a->field].domain;
        return json{{"fn", "insert_keyed"},
                    {"field", space.fields[a->field].name},
                    {"element", ref_to_json(a->element, op, target_symbols(dom, false))}};
    }
    if (const auto* a = std::get_if<ActionInsertKeyed>(&action)) {
        const FieldDomain& dom = space.fields[a->field].domain;
        return json{{"fn", "insert_keyed"},
                    {"field", space.fields[a->field].name},
                    {"key", ref_to_json(a->key, op, target_symbols(dom, true))},
                    {"value", ref_to_json(a->value, op, target_symbols(dom, false))}};
    }
    if (const auto* a = std::get_if<ActionRemoveElement>(&action)) {
        const FieldDomain& dom = space.fields[a->field].domain;
        return json{{"fn", "remove_element"},
                    {"field", space.fields[a->field].name},
                    {"element", ref_to_json(a->element, op, target_symbols(dom, false))}};
    }
    if (const auto* a = std::get_if<ActionTombstoneDelete>(&action)) {
        const FieldDomain& dom = space.fields[a->field].domain;
        return json{{"fn", "tombstone_delete"},
                    {"field", space.fields[a->field].name},
                    {"element", ref_to_json(a->element, op, target_symbols(dom, false))}};
    }
    if (const auto* a = std::get_if<ActionLatticeJoin>(&action)) {
        const FieldDomain& dom = space.fields[a->field].domain;
        return json{{"fn", "lattice_join_field"},
                    {"field", space.fields[a->field].name},
                    {"value", ref_to_json(a->value, op, target_symbols(dom, false))}};
    }
    const auto& repl = std::get<ActionReplaceState>(action);
    json assigns = json::object();
    for (std::size_t f = 0; f < repl.assigns.size(); ++f) {
        const ReplaceAssign& as = repl.assigns[f];
        const std::string& fname = space.fields[f].name;
        const FieldDomain& dom = space.fields[f].domain;
        switch (as.kind) {
        case ReplaceAssign::Kind::KeepCurrent: assigns[fname] = "current"; break;
        case ReplaceAssign::Kind::FromRef:
            assigns[fname] = ref_to_json(as.ref, op, target_symbols(dom, false));
            break;
        case ReplaceAssign::Kind::SingletonOf:
            assigns[fname] = json{{"singleton", json{{"param", op.params[as.ref.param].name}}}};
            break;
        }
    }
    return json{{"fn", "replace_state"}, {"assignments", assigns}};
}

} // namespace

json serialize_model(const ModelDescriptor& model) {
    json out{{"schema", kModelSchema},
             {"name", model.name},
             {"bounded_context", model.bounded_context}};
    json aggs = json::array();
    for (const auto& agg : model.aggregates) {
        json a{{"name", agg.name}};
        json fields = json::array();
        for (const auto& f : agg.state_space.fields)
            fields.push_back(json{{"name", f.name}, {"domain", field_domain_to_json(f.domain)}});
        a["state_space"] = json{{"fields", fields},
                                {"initial", state_to_json(agg.state_space, agg.state_space.initial)}};
        if (agg.state_space.enumeration_cap != 1'000'000)
            a["state_space"]["enumeration_cap"] = agg.state_space.enumeration_cap;
        a["writers"] = agg.writers.any ? json("any") : json(agg.writers.ids);
        if (agg.projection_of) {
            const ProjectionSpec& p = *agg.projection_of;
            const StateSpace& src = model.aggregates[p.source_aggregate_index].state_space;
            json pj{{"aggregate", p.source_aggregate},
                    {"target_field", agg.state_space.fields[p.target_field].name}};
            switch (p.fn) {
            case ProjectionSpec::Fn::MapSize:
                pj["projection"] = "map_size";
                pj["source_field"] = src.fields[p.source_field].name;
                break;
            case ProjectionSpec::Fn::LiveCount:
                pj["projection"] = "live_count";
                pj["added_field"] = src.fields[p.source_field].name;
                pj["removed_field"] = src.fields[p.removed_field].name;
                break;
            case ProjectionSpec::Fn::KeyedLiveCount:
                pj["projection"] = "keyed_live_count";
                pj["keyed_field"] = src.fields[p.source_field].name;
                pj["removed_field"] = src.fields[p.removed_field].name;
                break;
            }
            a["projection_of"] = pj;
        }
        if (agg.declared_class) a["declared_class"] = to_string(*agg.declared_class);
        if (!agg.invariants.empty()) {
            json invs = json::array();
            static const OperationDescriptor kNoOp;
            for (const auto& inv : agg.invariants)
                invs.push_back(json{
                    {"name", inv.name},
                    {"predicate", predicate_to_json(inv.predicate, agg.state_space, kNoOp)}});
            a["invariants"] = invs;
        }
        if (!agg.operations.empty()) {
            json ops = json::array();
            for (const auto& op : agg.operations) {
                json o{{"name", op.name}, {"update_kind", to_string(op.update_kind)}};
                if (!op.params.empty()) {
                    json ps = json::array();
                    for (const auto& p : op.params)
                        ps.push_back(
                            json{{"name", p.name}, {"domain", scalar_domain_to_json(p.domain)}});
                    o["params"] = ps;
                }
                if (op.precondition)
                    o["precondition"] = predicate_to_json(*op.precondition, agg.state_space, op);
                json actions = json::array();
                for (const auto& action : op.effect.actions)
                    actions.push_back(action_to_json(action, agg.state_space, op));
                o["effect"] = actions;
                if (op.intent) o["intent"] = predicate_to_json(*op.intent, agg.state_space, op);
                if (!op.superseded_by.empty()) o["superseded_by"] = op.superseded_by;
                ops.push_back(o);
            }
            a["operations"] = ops;
        }
        aggs.push_back(a);
    }
    out["aggregates"] = aggs;
    return out;
}

bool models_equal(const ModelDescriptor& a, const ModelDescriptor& b) {
    return serialize_model(a) == serialize_model(b);
}

} // namespace eclat
