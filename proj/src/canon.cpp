#include "eclat/canon.hpp"

#include <cstdio>

namespace eclat {

json scalar_to_json(const ScalarDomain& d, const Value& v) {
    if (std::get_if<IntRangeDomain>(&d)) return std::get<Int>(v);
    const auto& e = std::get<EnumDomain>(d);
    return e.symbols[static_cast<std::size_t>(std::get<Int>(v))];
}

Value scalar_from_json(const ScalarDomain& d, const json& j, const std::string& context) {
    if (const auto* r = std::get_if<IntRangeDomain>(&d)) {
        if (!j.is_number_integer())
            throw SyntaxError(context + ": expected an integer");
        Int v = j.get<Int>();
        if (v < r->lo || v > r->hi)
            throw DomainError(context + ": " + std::to_string(v) + " outside [" +
                              std::to_string(r->lo) + ".." + std::to_string(r->hi) + "]");
        return v;
    }
    const auto& e = std::get<EnumDomain>(d);
    if (!j.is_string()) throw SyntaxError(context + ": expected an enum symbol");
    int idx = e.index_of(j.get<std::string>());
    if (idx < 0) throw ReferenceError(context + ": unknown symbol '" + j.get<std::string>() + "'");
    return Int{idx};
}

json state_to_json(const StateSpace& space, const State& state) {
    json out = json::object();
    for (std::size_t f = 0; f < space.fields.size(); ++f) {
        const auto& spec = space.fields[f];
        if (const auto* e = std::get_if<EnumDomain>(&spec.domain)) {
            out[spec.name] = e->symbols[static_cast<std::size_t>(std::get<Int>(state[f]))];
        } else if (std::get_if<IntRangeDomain>(&spec.domain)) {
            out[spec.name] = std::get<Int>(state[f]);
        } else if (const auto* s = std::get_if<SetDomain>(&spec.domain)) {
            json arr = json::array();
            const auto& bits = std::get<SetBits>(state[f]);
            for (std::size_t i = 0; i < s->symbols.size(); ++i)
                if (bits.contains(static_cast<unsigned>(i))) arr.push_back(s->symbols[i]);
            out[spec.name] = arr;
        } else {
            const auto& m = std::get<MapDomain>(spec.domain);
            const auto& slots = std::get<MapSlots>(state[f]);
            json obj = json::object();
            for (std::size_t k = 0; k < m.keys.size(); ++k) {
                if (!slots.has(static_cast<unsigned>(k))) continue;
                obj[m.keys[k]] = scalar_to_json(m.values, Int{slots.slot[k]});
            }
            out[spec.name] = obj;
        }
    }
    return out;
}

State state_from_json(const StateSpace& space, const json& j) {
    if (!j.is_object()) throw SyntaxError("state valuation must be an object");
    State out(space.fields.size());
    for (const auto& [key, _] : j.items())
        if (space.field_index(key) < 0)
            throw ReferenceError("state valuation names unknown field '" + key + "'");
    for (std::size_t f = 0; f < space.fields.size(); ++f) {
        const auto& spec = space.fields[f];
        if (!j.contains(spec.name))
            throw SyntaxError("state valuation missing field '" + spec.name + "'");
        const json& cell = j.at(spec.name);
        if (const auto* e = std::get_if<EnumDomain>(&spec.domain)) {
            out[f] = scalar_from_json(ScalarDomain{*e}, cell, "field '" + spec.name + "'");
        } else if (const auto* r = std::get_if<IntRangeDomain>(&spec.domain)) {
            out[f] = scalar_from_json(ScalarDomain{*r}, cell, "field '" + spec.name + "'");
        } else if (const auto* s = std::get_if<SetDomain>(&spec.domain)) {
            if (!cell.is_array())
                throw SyntaxError("field '" + spec.name + "': expected an array");
            SetBits bits;
            for (const auto& el : cell) {
                int idx = s->index_of(el.get<std::string>());
                if (idx < 0)
                    throw ReferenceError("field '" + spec.name + "': unknown element '" +
                                         el.get<std::string>() + "'");
                bits.insert(static_cast<unsigned>(idx));
            }
            out[f] = bits;
        } else {
            const auto& m = std::get<MapDomain>(spec.domain);
            if (!cell.is_object())
                throw SyntaxError("field '" + spec.name + "': expected an object");
            MapSlots slots;
            for (const auto& [key, val] : cell.items()) {
                int k = m.key_index(key);
                if (k < 0)
                    throw ReferenceError("field '" + spec.name + "': unknown key '" + key + "'");
                Value v = scalar_from_json(m.values, val, "field '" + spec.name + "." + key + "'");
                slots.slot[k] = static_cast<std::int32_t>(std::get<Int>(v));
            }
            out[f] = slots;
        }
    }
    return out;
}

json params_to_json(const OperationDescriptor& op, const ParamValues& params) {
    json out = json::object();
    for (std::size_t p = 0; p < op.params.size(); ++p)
        out[op.params[p].name] = scalar_to_json(op.params[p].domain, params[p]);
    return out;
}

ParamValues params_from_json(const OperationDescriptor& op, const json& j) {
    if (!j.is_object()) throw SyntaxError("params must be an object");
    for (const auto& [key, _] : j.items()) {
        bool known = false;
        for (const auto& p : op.params) known = known || p.name == key;
        if (!known)
            throw ReferenceError("operation '" + op.name + "' has no parameter '" + key + "'");
    }
    ParamValues out(op.params.size());
    for (std::size_t p = 0; p < op.params.size(); ++p) {
        if (!j.contains(op.params[p].name))
            throw SyntaxError("missing parameter '" + op.params[p].name + "' for operation '" +
                              op.name + "'");
        out[p] = scalar_from_json(op.params[p].domain, j.at(op.params[p].name),
                                  "parameter '" + op.params[p].name + "'");
    }
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string to_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string state_digest(const StateSpace& space, const State& state) {
    return to_hex(fnv1a64(state_to_json(space, state).dump()));
}

} // namespace eclat
