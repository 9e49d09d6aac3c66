#include "eclat/domain.hpp"

#include <algorithm>

namespace eclat {

namespace {

int find_symbol(const std::vector<std::string>& symbols, const std::string& sym) {
    for (std::size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i] == sym) return static_cast<int>(i);
    return -1;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw DomainError("state-space size overflows 64 bits");
    return r;
}

} // namespace

int EnumDomain::index_of(const std::string& sym) const { return find_symbol(symbols, sym); }
int SetDomain::index_of(const std::string& sym) const { return find_symbol(symbols, sym); }
int MapDomain::key_index(const std::string& key) const { return find_symbol(keys, key); }

std::uint64_t MapDomain::value_size() const { return scalar_size(values); }

std::uint64_t MapDomain::size() const {
    std::uint64_t per_key = value_size() + 1; // absent or one of the values
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < keys.size(); ++i) total = checked_mul(total, per_key);
    return total;
}

std::uint64_t scalar_size(const ScalarDomain& d) {
    return std::visit([](const auto& dd) { return dd.size(); }, d);
}

std::uint64_t domain_size(const FieldDomain& d) {
    return std::visit([](const auto& dd) { return dd.size(); }, d);
}

Value scalar_at(const ScalarDomain& d, std::uint64_t i) {
    if (const auto* r = std::get_if<IntRangeDomain>(&d)) return Int{r->lo + static_cast<Int>(i)};
    return Int{static_cast<Int>(i)}; // enum: symbol index
}

bool value_in_domain(const FieldDomain& d, const Value& v) {
    if (const auto* r = std::get_if<IntRangeDomain>(&d)) {
        const Int* n = std::get_if<Int>(&v);
        return n && *n >= r->lo && *n <= r->hi;
    }
    if (const auto* e = std::get_if<EnumDomain>(&d)) {
        const Int* n = std::get_if<Int>(&v);
        return n && *n >= 0 && *n < static_cast<Int>(e->symbols.size());
    }
    if (const auto* s = std::get_if<SetDomain>(&d)) {
        const SetBits* b = std::get_if<SetBits>(&v);
        return b && (b->bits >> s->symbols.size()) == 0;
    }
    const auto& m = std::get<MapDomain>(d);
    const MapSlots* slots = std::get_if<MapSlots>(&v);
    if (!slots) return false;
    std::uint64_t vs = m.value_size();
    for (std::size_t k = 0; k < MapSlots::kMaxKeys; ++k) {
        std::int32_t cell = slots->slot[k];
        if (cell == MapSlots::kAbsent) continue;
        if (k >= m.keys.size()) return false;
        if (const auto* r = std::get_if<IntRangeDomain>(&m.values)) {
            if (cell < r->lo || cell > r->hi) return false;
        } else if (cell < 0 || static_cast<std::uint64_t>(cell) >= vs) {
            return false;
        }
    }
    return true;
}

int StateSpace::field_index(const std::string& name) const {
    for (std::size_t i = 0; i < fields.size(); ++i)
        if (fields[i].name == name) return static_cast<int>(i);
    return -1;
}

std::uint64_t StateSpace::size() const {
    std::uint64_t total = 1;
    for (const auto& f : fields) total = checked_mul(total, domain_size(f.domain));
    return total;
}

namespace {

Value value_at(const FieldDomain& d, std::uint64_t i) {
    if (const auto* r = std::get_if<IntRangeDomain>(&d)) return Int{r->lo + static_cast<Int>(i)};
    if (std::get_if<EnumDomain>(&d)) return Int{static_cast<Int>(i)};
    if (std::get_if<SetDomain>(&d)) return SetBits{static_cast<std::uint32_t>(i)};
    const auto& m = std::get<MapDomain>(d);
    std::uint64_t per_key = m.value_size() + 1;
    MapSlots slots;
    for (std::size_t k = 0; k < m.keys.size(); ++k) {
        std::uint64_t digit = i % per_key;
        i /= per_key;
        if (digit == 0) continue; // absent
        Value v = scalar_at(m.values, digit - 1);
        slots.slot[k] = static_cast<std::int32_t>(std::get<Int>(v));
    }
    return slots;
}

} // namespace

void StateSpace::state_at(std::uint64_t i, State& out) const {
    out.resize(fields.size());
    // First field is most significant: peel digits from the last field up.
    for (std::size_t f = fields.size(); f-- > 0;) {
        std::uint64_t n = domain_size(fields[f].domain);
        out[f] = value_at(fields[f].domain, i % n);
        i /= n;
    }
}

EnumOrder make_enum_order(std::size_t n, bool chain,
                          const std::vector<std::pair<std::uint16_t, std::uint16_t>>& pairs) {
    EnumOrder order;
    order.chain = chain;
    order.declared_pairs = pairs;
    order.leq_bits.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) order.leq_bits[a] |= (1u << a); // reflexive
    if (chain) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a; b < n; ++b) order.leq_bits[a] |= (1u << b);
    } else {
        for (auto [a, b] : pairs) order.leq_bits[a] |= (1u << b);
        // transitive closure
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (a != b && order.leq(a, b)) {
                        std::uint32_t grown = order.leq_bits[a] | order.leq_bits[b];
                        if (grown != order.leq_bits[a]) {
                            order.leq_bits[a] = grown;
                            changed = true;
                        }
                    }
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (a != b && order.leq(a, b) && order.leq(b, a))
                    throw DomainError("declared enum order is not antisymmetric");
    }
    // Least upper bounds where they exist.
    order.join.assign(n, std::vector<std::uint16_t>(n, 0));
    order.is_semilattice = true;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            int lub = -1;
            for (std::size_t c = 0; c < n; ++c) {
                if (!order.leq(a, c) || !order.leq(b, c)) continue;
                if (lub < 0 || order.leq(c, static_cast<unsigned>(lub))) lub = static_cast<int>(c);
            }
            if (lub >= 0) {
                // verify minimality (lub must be below every upper bound)
                for (std::size_t c = 0; c < n; ++c)
                    if (order.leq(a, c) && order.leq(b, c) &&
                        !order.leq(static_cast<unsigned>(lub), c))
                        lub = -1;
            }
            if (lub < 0) {
                order.is_semilattice = false;
                order.join[a][b] = 0;
            } else {
                order.join[a][b] = static_cast<std::uint16_t>(lub);
            }
        }
    return order;
}

} // namespace eclat
