#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

#include "netalg/monomial.hpp"

namespace netalg {

enum class OrderKind { Lex, GrevLex };

// Total multiplicative monomial order: Lex or GrevLex over a variable
// priority (a permutation of the ring indices, highest first).
class MonomialOrder {
  public:
    MonomialOrder() = default;

    static MonomialOrder lex(std::size_t arity);
    static MonomialOrder grevlex(std::size_t arity);
    static MonomialOrder lex(std::vector<std::uint32_t> priority);
    static MonomialOrder grevlex(std::vector<std::uint32_t> priority);

    OrderKind kind() const { return kind_; }
    std::size_t arity() const { return priority_ ? priority_->size() : 0; }
    const std::vector<std::uint32_t> &priority() const { return *priority_; }

    std::strong_ordering compare(const Monomial &a, const Monomial &b) const;
    bool less(const Monomial &a, const Monomial &b) const {
        return compare(a, b) == std::strong_ordering::less;
    }

    bool operator==(const MonomialOrder &o) const {
        return kind_ == o.kind_ &&
               (priority_ == o.priority_ || (priority_ && o.priority_ && *priority_ == *o.priority_));
    }

  private:
    MonomialOrder(OrderKind kind, std::vector<std::uint32_t> priority);

    OrderKind kind_ = OrderKind::Lex;
    std::shared_ptr<const std::vector<std::uint32_t>> priority_;
    bool identity_ = true; // priority is 0,1,2,...
};

// The spec's mono_compare: checks arities, then delegates to the order.
std::strong_ordering mono_compare(const Monomial &a, const Monomial &b, const MonomialOrder &order);

} // namespace netalg
