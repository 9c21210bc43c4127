#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "netalg/order.hpp"
#include "netalg/ring.hpp"

namespace netalg {

using Rational = mpq_class;

struct Term {
    Rational coeff;
    Monomial mono;
};

// Counts reduction work across Groebner-scale computations; charge() throws
// ResourceExhaustedError once the limit is exceeded.
struct StepBudget {
    std::uint64_t limit = 10'000'000;
    std::uint64_t used = 0;

    void charge(std::uint64_t n = 1) {
        used += n;
        if (used > limit)
            throw ResourceExhaustedError("step budget of " + std::to_string(limit) + " exhausted");
    }
};

// Sparse multivariate polynomial over Q. Terms are sorted strictly descending
// in the polynomial's active order; no zero coefficients, no duplicate
// monomials; the zero polynomial has an empty term list.
class Polynomial {
  public:
    Polynomial() = default; // null value; only assignment is valid on it

    static Polynomial zero(RingPtr ring, MonomialOrder order);
    static Polynomial constant(RingPtr ring, MonomialOrder order, Rational c);
    static Polynomial variable(RingPtr ring, MonomialOrder order, std::size_t var,
                               std::uint32_t exp = 1);
    // Normalizes: sorts, merges duplicates, drops zeros.
    static Polynomial from_terms(RingPtr ring, MonomialOrder order, std::vector<Term> terms);

    bool is_null() const { return ring_ == nullptr; }
    const RingPtr &ring() const { return ring_; }
    const MonomialOrder &order() const { return order_; }
    const std::vector<Term> &terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    // Constant value of a constant polynomial (0 for the zero polynomial).
    Rational constant_value() const;

    const Term &leading_term() const;
    const Monomial &leading_monomial() const { return leading_term().mono; }
    const Rational &leading_coeff() const { return leading_term().coeff; }
    std::uint64_t total_degree() const;
    std::uint64_t support_mask() const;

    Polynomial operator+(const Polynomial &q) const;
    Polynomial operator-(const Polynomial &q) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial &q) const;
    Polynomial mul_term(const Rational &c, const Monomial &m) const;
    Polynomial mul_scalar(const Rational &c) const;

    // Explicit re-sort under a different order (same ring).
    Polynomial reordered(MonomialOrder order) const;
    // Rebuild in another ring; var_map[i] is the target index of source var i.
    Polynomial mapped(RingPtr target, std::span<const std::size_t> var_map,
                      MonomialOrder target_order) const;

    Rational evaluate(std::span<const Rational> point) const;

    // Leading coefficient scaled to 1.
    Polynomial monic() const;
    // Integer-coprime coefficients, positive leading coefficient.
    Polynomial primitive() const;
    // The c > 0 with *this == (sign of lead) * c * primitive().
    Rational content() const;

    std::string to_string() const;

    bool operator==(const Polynomial &q) const;
    // Deterministic total order on canonical forms, for sorting/dedup.
    static int compare_canonical(const Polynomial &a, const Polynomial &b);

  private:
    Polynomial(RingPtr ring, MonomialOrder order, std::vector<Term> terms)
        : ring_(std::move(ring)), order_(std::move(order)), terms_(std::move(terms)) {}

    void check_compatible(const Polynomial &q, const char *op) const;

    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

struct DivModResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

// Multivariate division of f by an ordered divisor list; deterministic.
DivModResult poly_divmod(const Polynomial &f, std::span<const Polynomial> divisors,
                         StepBudget *budget = nullptr);
// Remainder only (no quotient bookkeeping).
Polynomial normal_form(const Polynomial &f, std::span<const Polynomial> divisors,
                       StepBudget *budget = nullptr);

} // namespace netalg
