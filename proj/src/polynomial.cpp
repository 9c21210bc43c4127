#include "netalg/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace netalg {

Polynomial Polynomial::zero(RingPtr ring, MonomialOrder order) {
    return {std::move(ring), std::move(order), {}};
}

Polynomial Polynomial::constant(RingPtr ring, MonomialOrder order, Rational c) {
    std::vector<Term> t;
    if (c != 0) t.push_back({std::move(c), Monomial::one(ring->arity())});
    return {std::move(ring), std::move(order), std::move(t)};
}

Polynomial Polynomial::variable(RingPtr ring, MonomialOrder order, std::size_t var,
                                std::uint32_t exp) {
    if (var >= ring->arity()) throw MalformedInputError("Polynomial::variable: index out of range");
    if (exp == 0) return constant(std::move(ring), std::move(order), 1);
    std::vector<Term> t{{Rational(1), Monomial::var(ring->arity(), var, exp)}};
    return {std::move(ring), std::move(order), std::move(t)};
}

Polynomial Polynomial::from_terms(RingPtr ring, MonomialOrder order, std::vector<Term> terms) {
    for (const auto &t : terms)
        if (t.mono.arity() != ring->arity())
            throw MalformedInputError("Polynomial::from_terms: monomial arity mismatch");
    std::sort(terms.begin(), terms.end(), [&](const Term &a, const Term &b) {
        return order.compare(a.mono, b.mono) == std::strong_ordering::greater;
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto &t : terms) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    return {std::move(ring), std::move(order), std::move(out)};
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

Rational Polynomial::constant_value() const {
    if (!is_constant()) throw PreconditionError("constant_value: polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

const Term &Polynomial::leading_term() const {
    if (terms_.empty()) throw PreconditionError("leading_term: zero polynomial");
    return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto &t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

std::uint64_t Polynomial::support_mask() const {
    std::uint64_t m = 0;
    for (const auto &t : terms_) m |= t.mono.support_mask();
    return m;
}

void Polynomial::check_compatible(const Polynomial &q, const char *op) const {
    if (ring_ != q.ring_) throw MalformedInputError(std::string(op) + ": ring mismatch");
    if (!(order_ == q.order_)) throw MalformedInputError(std::string(op) + ": order mismatch");
}

Polynomial Polynomial::operator+(const Polynomial &q) const {
    check_compatible(q, "poly_add");
    std::vector<Term> out;
    out.reserve(terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < q.terms_.size()) {
        const auto c = order_.compare(terms_[i].mono, q.terms_[j].mono);
        if (c == std::strong_ordering::greater) {
            out.push_back(terms_[i++]);
        } else if (c == std::strong_ordering::less) {
            out.push_back(q.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + q.terms_[j].coeff;
            if (s != 0) out.push_back({std::move(s), terms_[i].mono});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < q.terms_.size(); ++j) out.push_back(q.terms_[j]);
    return {ring_, order_, std::move(out)};
}

Polynomial Polynomial::operator-() const {
    std::vector<Term> out = terms_;
    for (auto &t : out) t.coeff = -t.coeff;
    return {ring_, order_, std::move(out)};
}

Polynomial Polynomial::operator-(const Polynomial &q) const { return *this + (-q); }

Polynomial Polynomial::mul_term(const Rational &c, const Monomial &m) const {
    if (c == 0) return zero(ring_, order_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto &t : terms_) out.push_back({t.coeff * c, t.mono * m});
    return {ring_, order_, std::move(out)};
}

Polynomial Polynomial::mul_scalar(const Rational &c) const {
    return mul_term(c, Monomial::one(ring_->arity()));
}

Polynomial Polynomial::operator*(const Polynomial &q) const {
    check_compatible(q, "poly_mul");
    if (is_zero() || q.is_zero()) return zero(ring_, order_);
    if (q.terms_.size() == 1) return mul_term(q.terms_[0].coeff, q.terms_[0].mono);
    if (terms_.size() == 1) return q.mul_term(terms_[0].coeff, terms_[0].mono);
    // Accumulate by repeated merge of term-scaled copies of the shorter factor.
    const Polynomial &a = terms_.size() <= q.terms_.size() ? *this : q;
    const Polynomial &b = terms_.size() <= q.terms_.size() ? q : *this;
    std::vector<Term> all;
    all.reserve(a.terms_.size() * b.terms_.size());
    for (const auto &ta : a.terms_)
        for (const auto &tb : b.terms_) all.push_back({ta.coeff * tb.coeff, ta.mono * tb.mono});
    return from_terms(ring_, order_, std::move(all));
}

Polynomial Polynomial::reordered(MonomialOrder order) const {
    if (order.arity() != ring_->arity())
        throw MalformedInputError("reordered: order arity mismatch");
    return from_terms(ring_, std::move(order), terms_);
}

Polynomial Polynomial::mapped(RingPtr target, std::span<const std::size_t> var_map,
                              MonomialOrder target_order) const {
    if (var_map.size() != ring_->arity()) throw MalformedInputError("mapped: var_map size mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto &t : terms_) {
        Monomial m = Monomial::one(target->arity());
        for (std::size_t i = 0; i < var_map.size(); ++i) {
            if (t.mono.exps[i] == 0) continue;
            if (var_map[i] >= target->arity())
                throw MalformedInputError("mapped: target index out of range");
            m.exps[var_map[i]] += t.mono.exps[i];
        }
        out.push_back({t.coeff, std::move(m)});
    }
    return from_terms(std::move(target), std::move(target_order), std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != ring_->arity()) throw MalformedInputError("evaluate: point arity mismatch");
    Rational acc(0);
    for (const auto &t : terms_) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (std::uint32_t e = 0; e < t.mono.exps[i]; ++e) v *= point[i];
        }
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    const Rational inv = 1 / leading_coeff();
    return mul_scalar(inv);
}

Rational Polynomial::content() const {
    if (is_zero()) return Rational(0);
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto &t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return *this;
    Rational c = content();
    if (sgn(leading_coeff()) < 0) c = -c;
    return mul_scalar(1 / c);
}

bool Polynomial::operator==(const Polynomial &q) const {
    if (ring_ != q.ring_) return false;
    if (terms_.size() != q.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != q.terms_[i].mono || terms_[i].coeff != q.terms_[i].coeff) return false;
    return true;
}

int Polynomial::compare_canonical(const Polynomial &a, const Polynomial &b) {
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.terms_[i].mono != b.terms_[i].mono) {
            const auto c = a.order_.compare(a.terms_[i].mono, b.terms_[i].mono);
            return c == std::strong_ordering::less ? -1 : 1;
        }
        const int c = cmp(a.terms_[i].coeff, b.terms_[i].coeff);
        if (c != 0) return c;
    }
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &t : terms_) {
        const bool neg = sgn(t.coeff) < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        Rational mag = abs(t.coeff);
        std::string vars;
        for (std::size_t i = 0; i < t.mono.exps.size(); ++i) {
            if (t.mono.exps[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += ring_->name(i);
            if (t.mono.exps[i] > 1) vars += "^" + std::to_string(t.mono.exps[i]);
        }
        if (vars.empty()) {
            os << mag.get_str();
        } else if (mag == 1) {
            os << vars;
        } else {
            os << mag.get_str() << "*" << vars;
        }
    }
    return os.str();
}

namespace {

// Shared worker: remainder always, quotients optionally.
DivModResult divmod_impl(const Polynomial &f, std::span<const Polynomial> divisors,
                         StepBudget *budget, bool want_quotients) {
    const auto &ring = f.ring();
    const auto &order = f.order();
    for (const auto &d : divisors) {
        if (d.is_null() || d.ring() != ring || !(d.order() == order))
            throw MalformedInputError("poly_divmod: divisor ring/order mismatch");
        if (d.is_zero()) throw MalformedInputError("poly_divmod: zero divisor");
    }
    DivModResult res;
    if (want_quotients)
        res.quotients.assign(divisors.size(), Polynomial::zero(ring, order));
    std::vector<Term> rem;
    Polynomial p = f;
    while (!p.is_zero()) {
        const Term &lt = p.leading_term();
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            const Polynomial &d = divisors[i];
            if (!d.leading_monomial().divides(lt.mono)) continue;
            const Rational c = lt.coeff / d.leading_coeff();
            const Monomial m = lt.mono.divide_exact(d.leading_monomial());
            if (want_quotients)
                res.quotients[i] = res.quotients[i] +
                                   Polynomial::from_terms(ring, order, {{c, m}});
            p = p - d.mul_term(c, m);
            if (budget) budget->charge();
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.push_back(lt);
            p = p - Polynomial::from_terms(ring, order, {lt});
        }
    }
    res.remainder = Polynomial::from_terms(ring, order, std::move(rem));
    return res;
}

} // namespace

DivModResult poly_divmod(const Polynomial &f, std::span<const Polynomial> divisors,
                         StepBudget *budget) {
    return divmod_impl(f, divisors, budget, true);
}

Polynomial normal_form(const Polynomial &f, std::span<const Polynomial> divisors,
                       StepBudget *budget) {
    return divmod_impl(f, divisors, budget, false).remainder;
}

} // namespace netalg
