#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "netalg/errors.hpp"

namespace netalg {

// Dense exponent vector; the owning ring is implied by context.
struct Monomial {
    std::vector<std::uint32_t> exps;

    static Monomial one(std::size_t arity) { return Monomial{std::vector<std::uint32_t>(arity, 0)}; }

    static Monomial var(std::size_t arity, std::size_t i, std::uint32_t e = 1) {
        Monomial m = one(arity);
        m.exps[i] = e;
        return m;
    }

    std::size_t arity() const { return exps.size(); }

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (auto e : exps) d += e;
        return d;
    }

    bool is_one() const {
        return std::all_of(exps.begin(), exps.end(), [](std::uint32_t e) { return e == 0; });
    }

    bool divides(const Monomial &m) const {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > m.exps[i]) return false;
        return true;
    }

    bool coprime(const Monomial &m) const {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0 && m.exps[i] > 0) return false;
        return true;
    }

    Monomial operator*(const Monomial &m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += m.exps[i];
        return r;
    }

    // Caller guarantees m.divides(*this).
    Monomial divide_exact(const Monomial &m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] -= m.exps[i];
        return r;
    }

    static Monomial lcm(const Monomial &a, const Monomial &b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
        return r;
    }

    // Bitmask of variables with positive exponent (arity <= 64 in practice).
    std::uint64_t support_mask() const {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) m |= (std::uint64_t{1} << i);
        return m;
    }

    bool operator==(const Monomial &) const = default;
};

} // namespace netalg
