#include "netalg/order.hpp"

#include <numeric>

namespace netalg {

namespace {
std::vector<std::uint32_t> iota_priority(std::size_t arity) {
    std::vector<std::uint32_t> p(arity);
    std::iota(p.begin(), p.end(), 0u);
    return p;
}
} // namespace

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::uint32_t> priority) : kind_(kind) {
    std::vector<bool> seen(priority.size(), false);
    identity_ = true;
    for (std::size_t i = 0; i < priority.size(); ++i) {
        if (priority[i] >= priority.size() || seen[priority[i]])
            throw MalformedInputError("MonomialOrder: priority is not a permutation");
        seen[priority[i]] = true;
        if (priority[i] != i) identity_ = false;
    }
    priority_ = std::make_shared<const std::vector<std::uint32_t>>(std::move(priority));
}

MonomialOrder MonomialOrder::lex(std::size_t arity) { return {OrderKind::Lex, iota_priority(arity)}; }
MonomialOrder MonomialOrder::grevlex(std::size_t arity) {
    return {OrderKind::GrevLex, iota_priority(arity)};
}
MonomialOrder MonomialOrder::lex(std::vector<std::uint32_t> priority) {
    return {OrderKind::Lex, std::move(priority)};
}
MonomialOrder MonomialOrder::grevlex(std::vector<std::uint32_t> priority) {
    return {OrderKind::GrevLex, std::move(priority)};
}

std::strong_ordering MonomialOrder::compare(const Monomial &a, const Monomial &b) const {
    const std::size_t n = arity();
    if (a.arity() != n || b.arity() != n)
        throw MalformedInputError("mono_compare: arity mismatch");
    if (kind_ == OrderKind::Lex) {
        if (identity_) {
            for (std::size_t i = 0; i < n; ++i)
                if (a.exps[i] != b.exps[i]) return a.exps[i] <=> b.exps[i];
            return std::strong_ordering::equal;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint32_t v = (*priority_)[i];
            if (a.exps[v] != b.exps[v]) return a.exps[v] <=> b.exps[v];
        }
        return std::strong_ordering::equal;
    }
    // GrevLex: total degree first, ties by smaller exponent in the least
    // significant position where they differ.
    const std::uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    if (identity_) {
        for (std::size_t i = n; i-- > 0;)
            if (a.exps[i] != b.exps[i]) return b.exps[i] <=> a.exps[i];
        return std::strong_ordering::equal;
    }
    for (std::size_t i = n; i-- > 0;) {
        const std::uint32_t v = (*priority_)[i];
        if (a.exps[v] != b.exps[v]) return b.exps[v] <=> a.exps[v];
    }
    return std::strong_ordering::equal;
}

std::strong_ordering mono_compare(const Monomial &a, const Monomial &b, const MonomialOrder &order) {
    return order.compare(a, b);
}

} // namespace netalg
