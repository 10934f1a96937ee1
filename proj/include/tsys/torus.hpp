#pragma once

#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsys/cartan.hpp"
#include "tsys/errors.hpp"

namespace tsys {

/// Laurent polynomial in t^{1/2} with integer coefficients.  Keys are
/// doubled half-powers: the pair (k, c) stands for c * t^{k/2}.  Terms are
/// kept sorted by power with no zero values, so equality is structural.
class TCoeff {
public:
    using Term = std::pair<std::int32_t, std::int64_t>;

    TCoeff() = default;

    static TCoeff integer(std::int64_t v) {
        TCoeff c;
        if (v != 0) c.terms_.push_back({0, v});
        return c;
    }
    static TCoeff one() { return integer(1); }
    /// c * t^{k/2} with k the doubled half-power.
    static TCoeff half_power(std::int32_t k, std::int64_t c = 1) {
        TCoeff r;
        if (c != 0) r.terms_.push_back({k, c});
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }
    /// True when only the power t^0 occurs (plain integer).
    bool is_integer() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
    }
    std::int64_t integer_value() const {
        assert(is_integer());
        return terms_.empty() ? 0 : terms_[0].second;
    }
    /// Sum of all coefficients: the value at t = 1.
    std::int64_t value_at_one() const {
        std::int64_t s = 0;
        for (const auto& [k, c] : terms_) s += c;
        return s;
    }

    const std::vector<Term>& terms() const { return terms_; }

    TCoeff& operator+=(const TCoeff& o) {
        std::vector<Term> merged;
        merged.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            if (terms_[i].first < o.terms_[j].first) {
                merged.push_back(terms_[i++]);
            } else if (terms_[i].first > o.terms_[j].first) {
                merged.push_back(o.terms_[j++]);
            } else {
                const std::int64_t c = terms_[i].second + o.terms_[j].second;
                if (c != 0) merged.push_back({terms_[i].first, c});
                ++i, ++j;
            }
        }
        for (; i < terms_.size(); ++i) merged.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) merged.push_back(o.terms_[j]);
        terms_ = std::move(merged);
        return *this;
    }
    TCoeff operator+(const TCoeff& o) const {
        TCoeff r = *this;
        r += o;
        return r;
    }
    TCoeff operator-() const {
        TCoeff r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }
    TCoeff operator-(const TCoeff& o) const { return *this + (-o); }
    TCoeff operator*(const TCoeff& o) const {
        TCoeff r;
        for (const auto& [ka, ca] : terms_) {
            TCoeff part;
            part.terms_.reserve(o.terms_.size());
            for (const auto& [kb, cb] : o.terms_) part.terms_.push_back({ka + kb, ca * cb});
            r += part;
        }
        return r;
    }
    /// Multiply by t^{k/2}.
    TCoeff shifted(std::int32_t k) const {
        TCoeff r = *this;
        for (auto& [p, c] : r.terms_) p += k;
        return r;
    }
    /// Sum of the lowest and highest doubled powers when the coefficient is
    /// palindromic around their midpoint, nullopt otherwise.  Shifting by the
    /// negative of this value is the unique way to make it bar-symmetric.
    std::optional<std::int32_t> palindrome_center2() const {
        if (terms_.empty()) return 0;
        const std::int32_t span = terms_.front().first + terms_.back().first;
        const std::size_t count = terms_.size();
        for (std::size_t i = 0; i < count; ++i) {
            const auto& [ka, ca] = terms_[i];
            const auto& [kb, cb] = terms_[count - 1 - i];
            if (ka + kb != span || ca != cb) return std::nullopt;
        }
        return span;
    }

    /// The substitution t -> t^{-1}.
    TCoeff bar() const {
        TCoeff r;
        r.terms_.reserve(terms_.size());
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.push_back({-it->first, it->second});
        return r;
    }
    bool bar_symmetric() const { return *this == bar(); }
    /// All integer entries nonnegative.
    bool nonnegative() const {
        for (const auto& [k, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    /// Exact quotient num / den in Z[t^{+-1/2}], or nullopt when inexact.
    /// Long division from the top power.  When the quotient exists its term
    /// powers lie in [bottom(num)-bottom(den), top(num)-top(den)], so a shift
    /// below that floor proves inexactness; the top power drops strictly each
    /// step, which bounds the loop either way.
    static std::optional<TCoeff> divide_exact(const TCoeff& num, const TCoeff& den) {
        if (den.is_zero()) return std::nullopt;
        if (num.is_zero()) return TCoeff();
        const std::int32_t min_shift = num.terms_.front().first - den.terms_.front().first;
        TCoeff rem = num;
        TCoeff quot;
        while (!rem.is_zero()) {
            const Term rl = rem.terms_.back();
            const Term dl = den.terms_.back();
            const std::int32_t shift = rl.first - dl.first;
            if (shift < min_shift) return std::nullopt;
            if (rl.second % dl.second != 0) return std::nullopt;
            TCoeff qterm = half_power(shift, rl.second / dl.second);
            quot += qterm;
            rem += -(den * qterm);
        }
        return quot;
    }

    bool operator==(const TCoeff& o) const { return terms_ == o.terms_; }

private:
    std::vector<Term> terms_;
};

/// Exponent vector of a bar-invariant commutative monomial over the
/// variables X_{a,b}, enumerated per GammaTable.  Two monomials are equal
/// iff their exponent vectors are; the implicit t^{alpha/2} rescaling never
/// needs to be stored.  Ordering is lexicographic, which is total and
/// compatible with addition.
using Monomial = std::vector<std::int32_t>;

inline Monomial unit_monomial(int var_count) { return Monomial(var_count, 0); }
inline Monomial generator_monomial(const GammaTable& g, int a, int b) {
    Monomial m = unit_monomial(g.var_count());
    m[g.var_index(a, b)] = 1;
    return m;
}
inline Monomial monomial_sum(const Monomial& e, const Monomial& f) {
    Monomial r = e;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += f[i];
    return r;
}
inline Monomial monomial_neg(const Monomial& e) {
    Monomial r = e;
    for (auto& v : r) v = -v;
    return r;
}

/// m_e * m_f = t^{Lambda(e,f)/2} m_{e+f}; returns the doubled phase (the
/// pairing value itself) together with the exponent sum.
inline std::pair<std::int64_t, Monomial> monomial_mul(const Monomial& e, const Monomial& f,
                                                      const GammaTable& g) {
    return {g.pair(e, f), monomial_sum(e, f)};
}

/// Finitely supported map Monomial -> TCoeff, the universal value type.
/// Zero coefficients are pruned eagerly after every operation.
class Element {
public:
    using TermMap = std::map<Monomial, TCoeff>;

    Element() = default;

    static Element zero() { return Element(); }
    static Element monomial(Monomial m, TCoeff c = TCoeff::one()) {
        Element e;
        if (!c.is_zero()) e.terms_.emplace(std::move(m), std::move(c));
        return e;
    }
    static Element one(int var_count) { return monomial(unit_monomial(var_count)); }
    static Element generator(const GammaTable& g, int a, int b) {
        return monomial(generator_monomial(g, a, b));
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const TCoeff* coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? nullptr : &it->second;
    }

    Element& operator+=(const Element& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Element operator+(const Element& o) const {
        Element r = *this;
        r += o;
        return r;
    }
    Element operator-() const {
        Element r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    Element operator-(const Element& o) const { return *this + (-o); }

    /// Left scalar by a central coefficient c(t).
    Element scaled(const TCoeff& c) const {
        Element r;
        if (c.is_zero()) return r;
        for (const auto& [m, k] : terms_) {
            TCoeff v = k * c;
            if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
        }
        return r;
    }
    /// Multiply by t^{k/2}.
    Element t_shifted(std::int32_t k) const {
        Element r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.shifted(k));
        return r;
    }

    bool operator==(const Element& o) const { return terms_ == o.terms_; }

    void add_term(const Monomial& m, const TCoeff& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Leading term in the fixed lexicographic order (the greatest monomial).
    const std::pair<const Monomial, TCoeff>& leading() const {
        assert(!terms_.empty());
        return *std::prev(terms_.end());
    }

private:
    TermMap terms_;
};

/// Bilinear extension of monomial_mul, phases folded into coefficients.
inline Element elem_mul(const Element& p, const Element& q, const GammaTable& g) {
    Element r;
    const bool classical = g.is_zero();
    for (const auto& [fm, fc] : q.terms()) {
        // pair(e, f) = e . w with w depending on f only
        std::vector<std::int64_t> w;
        if (!classical) {
            const int v = g.var_count();
            w.assign(v, 0);
            for (int j = 0; j < v; ++j) {
                if (fm[j] == 0) continue;
                for (int i = 0; i < v; ++i) w[i] += g.lambda(i, j) * fm[j];
            }
        }
        for (const auto& [em, ec] : p.terms()) {
            std::int64_t phase2 = 0;
            if (!classical) {
                for (std::size_t i = 0; i < w.size(); ++i)
                    if (em[i] != 0) phase2 += em[i] * w[i];
            }
            TCoeff c = (ec * fc).shifted(static_cast<std::int32_t>(phase2));
            r.add_term(monomial_sum(em, fm), c);
        }
    }
    return r;
}

/// Bar involution: fixes commutative monomials, conjugates coefficients.
inline Element bar(const Element& p) {
    Element r;
    for (const auto& [m, c] : p.terms()) r.add_term(m, c.bar());
    return r;
}

inline bool is_bar_invariant(const Element& p) {
    for (const auto& [m, c] : p.terms())
        if (!c.bar_symmetric()) return false;
    return true;
}

/// Every coefficient entry a nonnegative integer.
inline bool is_nonnegative(const Element& p) {
    for (const auto& [m, c] : p.terms())
        if (!c.nonnegative()) return false;
    return true;
}

/// Exact left quotient: the unique Q with D * Q = N, found by peeling
/// leading terms in the lexicographic order.  Monomials are invertible, so
/// each step has a candidate; failure of the coefficient quotient or of the
/// iteration cap signals that N is not left-divisible by D.
inline Element left_divide_exact(const Element& den, const Element& num, const GammaTable& g) {
    if (den.is_zero()) throw DivisionError("division by zero element");
    Element rem = num;
    Element quot;
    const auto& dl = den.leading();
    const Monomial dmono_neg = monomial_neg(dl.first);
    const std::size_t cap = 64 * (num.term_count() + den.term_count());
    std::size_t iter = 0;
    while (!rem.is_zero()) {
        if (++iter > cap)
            throw DivisionError("left division iteration cap exceeded (cap=" + std::to_string(cap) + ")");
        const Monomial rmono = rem.leading().first;
        const TCoeff rcoeff = rem.leading().second;
        const Monomial qmono = monomial_sum(rmono, dmono_neg);
        // D * (c m_q) lands on lead(D)+q with coefficient dl.c * c * t^{pair(lead(D),q)/2}
        const std::int64_t phase2 = g.pair(dl.first, qmono);
        auto qc = TCoeff::divide_exact(rcoeff, dl.second.shifted(static_cast<std::int32_t>(phase2)));
        if (!qc.has_value())
            throw DivisionError("coefficient quotient inexact during left division");
        quot.add_term(qmono, *qc);
        Element sub = elem_mul(den, Element::monomial(qmono, *qc), g);
        rem += -sub;
        assert(rem.is_zero() || rem.leading().first < rmono);
    }
    return quot;
}

/// Specialization t -> 1: each coefficient collapses to its integer value.
inline Element specialize_t_one(const Element& p) {
    Element r;
    for (const auto& [m, c] : p.terms()) r.add_term(m, TCoeff::integer(c.value_at_one()));
    return r;
}

}  // namespace tsys
