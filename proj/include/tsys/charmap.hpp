#pragma once

#include <cassert>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tsys/errors.hpp"

namespace tsys {

/// Monomial in the variables Y_{i,q^s}, i in [1..n], s an integer; stored as
/// a finitely supported exponent map with no zero entries.  Only integer
/// powers of q occur, so q itself is never evaluated.
class YMonomial {
public:
    using Key = std::pair<int, int>;  // (i, s)

    YMonomial() = default;

    static YMonomial unit() { return YMonomial(); }
    static YMonomial variable(int i, int s, std::int64_t e = 1) {
        YMonomial m;
        if (e != 0) m.exps_[{i, s}] = e;
        return m;
    }

    bool is_unit() const { return exps_.empty(); }
    std::int64_t exponent(int i, int s) const {
        auto it = exps_.find({i, s});
        return it == exps_.end() ? 0 : it->second;
    }
    const std::map<Key, std::int64_t>& exponents() const { return exps_; }

    YMonomial operator*(const YMonomial& o) const {
        YMonomial r = *this;
        for (const auto& [k, e] : o.exps_) {
            auto [it, inserted] = r.exps_.try_emplace(k, e);
            if (!inserted) {
                it->second += e;
                if (it->second == 0) r.exps_.erase(it);
            }
        }
        return r;
    }
    YMonomial inverse() const {
        YMonomial r = *this;
        for (auto& [k, e] : r.exps_) e = -e;
        return r;
    }
    YMonomial pow(std::int64_t k) const {
        YMonomial r;
        if (k == 0) return r;
        for (const auto& [key, e] : exps_) r.exps_[key] = e * k;
        return r;
    }

    bool operator==(const YMonomial& o) const { return exps_ == o.exps_; }
    bool operator<(const YMonomial& o) const { return exps_ < o.exps_; }

private:
    std::map<Key, std::int64_t> exps_;
};

/// True iff every exponent is nonnegative.
inline bool is_dominant(const YMonomial& m) {
    for (const auto& [k, e] : m.exponents())
        if (e < 0) return false;
    return true;
}

/// Highest monomial of a Kirillov-Reshetikhin module:
/// X_{i,alpha}^beta = Y_{i,q^alpha} Y_{i,q^{alpha+2}} ... (beta factors),
/// the unit monomial when beta <= 0.
inline YMonomial kr_monomial(int i, int alpha, int beta) {
    YMonomial m;
    for (int r = 0; r < beta; ++r) m = m * YMonomial::variable(i, alpha + 2 * r);
    return m;
}

/// A_{i,q^s} for simply laced type A (r_i = 1):
/// Y_{i,q^{s-1}} Y_{i,q^{s+1}} * prod over neighbours Y_{j,q^s}^{-1}.
inline YMonomial a_monomial(int i, int s, int n) {
    assert(i >= 1 && i <= n);
    YMonomial m = YMonomial::variable(i, s - 1) * YMonomial::variable(i, s + 1);
    if (i - 1 >= 1) m = m * YMonomial::variable(i - 1, s, -1);
    if (i + 1 <= n) m = m * YMonomial::variable(i + 1, s, -1);
    return m;
}

/// Weight in fundamental-weight coordinates: omega(m) = sum u_{i,a}(m) omega_i.
inline std::vector<std::int64_t> weight(const YMonomial& m, int n) {
    std::vector<std::int64_t> w(n, 0);
    for (const auto& [key, e] : m.exponents()) {
        assert(key.first >= 1 && key.first <= n);
        w[key.first - 1] += e;
    }
    return w;
}

/// Doubled pairing of omega(m) with the dual Weyl vector: dividing by any
/// A_{i,s} lowers it by exactly 2, so it counts A-steps and totally refines
/// the Nakajima order on the monomials of a single character.
inline std::int64_t dominance_height2(const YMonomial& m, int n) {
    std::int64_t h = 0;
    const std::vector<std::int64_t> w = weight(m, n);
    for (int j = 1; j <= n; ++j) h += w[j - 1] * j * (n + 1 - j);
    return h;
}

/// Highest monomial M_{[i,j]}^m = X_{i,i}^m X_{j,j+2m}^{l+1-m} of the
/// evaluation module alpha(i,j)^m; indices 0 and n+1 contribute unit factors.
inline YMonomial eval_highest(int i, int j, int m, int n, int ell) {
    assert(0 <= i && i <= j && j <= n + 1);
    assert(0 <= m && m <= ell + 1);
    YMonomial r;
    if (i >= 1 && i <= n) r = r * kr_monomial(i, i, m);
    if (j >= 1 && j <= n) r = r * kr_monomial(j, j + 2 * m, ell + 1 - m);
    return r;
}

/// Highest monomial of beta(m,p)^i = L(X_{i,i+2m}^{p-m+1}); the unit for the
/// extended indices i in {0, n+1} and for the empty ladder p = m - 1.
inline YMonomial kr_beta_highest(int m, int p, int i, int n, int ell) {
    assert(0 <= i && i <= n + 1);
    assert(0 <= m && m - 1 <= p && p <= ell);
    (void)ell;
    if (i == 0 || i == n + 1) return YMonomial::unit();
    return kr_monomial(i, i + 2 * m, p - m + 1);
}

/// The 2m+1 dominant monomials M_1 .. M_{2m+1} appearing in the product of
/// the two left-hand evaluation characters:
///   M_1    = M_{[i,j]}^m M_{[i+1,j+1]}^m
///   M_2    = M_1 (A_{i+1,i+2m} A_{i+2,i+1+2m} ... A_{j,j+2m-1})^{-1}
///   M_{2r} = M_2 prod_{2<=p<=r} (A_{i,i+2m-2p+3} A_{i+1,i+2m-2p+2})^{-1}
///   M_{2r+1} = M_{2r} A_{i,i+2m-2r+1}^{-1}      (1 <= r <= m)
/// The enumeration degenerates for i = 0 (the A_{0,s} steps are vacuous and
/// the count drops below 2m+1), so the first column is excluded here.
inline std::vector<YMonomial> thm41_dominant_family(int i, int j, int m, int n, int ell) {
    assert(1 <= i && i < j && j <= n);
    assert(1 <= m && m <= ell);
    std::vector<YMonomial> fam(2 * m + 1);
    YMonomial m1 = eval_highest(i, j, m, n, ell) * eval_highest(i + 1, j + 1, m, n, ell);
    YMonomial m2 = m1;
    for (int s = i + 1; s <= j; ++s) m2 = m2 * a_monomial(s, s + 2 * m - 1, n).inverse();
    fam[0] = m1;
    fam[1] = m2;
    YMonomial even = m2;
    for (int r = 1; r <= m; ++r) {
        if (r >= 2) {
            even = even * a_monomial(i, i + 2 * m - 2 * r + 3, n).inverse() *
                   a_monomial(i + 1, i + 2 * m - 2 * r + 2, n).inverse();
            fam[2 * r - 1] = even;
        }
        fam[2 * r] = even * a_monomial(i, i + 2 * m - 2 * r + 1, n).inverse();
    }
    for (std::size_t r = 0; r < fam.size(); ++r) {
        if (!is_dominant(fam[r]))
            throw DominanceError("thm41 monomial M_" + std::to_string(r + 1) +
                                 " is not dominant (i=" + std::to_string(i) + ",j=" +
                                 std::to_string(j) + ",m=" + std::to_string(m) + ")");
    }
    return fam;
}

/// Piecewise assignment of the lattice point T_{k,m}(u) to the highest
/// monomial of its module.  Every case whose window contains the reduced u
/// (including across the periodic seam) is evaluated, and all applicable
/// cases must agree.
inline YMonomial lattice_highest(int k, int m, int u, int n, int ell) {
    assert(0 <= k && k <= n + 1);
    assert(0 <= m && m <= ell + 1);
    assert(((k + m + u) % 2 + 2) % 2 == 0);
    const int period = 2 * (n + ell + 2);
    // reduce into [k+m-2, k+m-2+period)
    const int base = k + m - 2;
    int ur = u - base;
    ur = ((ur % period) + period) % period;
    ur += base;

    bool have = false;
    YMonomial value;
    std::string first_case;
    auto consider = [&](const YMonomial& v, const std::string& which) {
        if (!have) {
            value = v;
            first_case = which;
            have = true;
        } else if (!(value == v)) {
            throw OverlapError("lattice assignment cases disagree at (k=" + std::to_string(k) +
                               ",m=" + std::to_string(m) + ",u=" + std::to_string(u) + "): " +
                               first_case + " vs " + which);
        }
    };
    auto probe = [&](int uu, const std::string& tag) {
        if (0 <= uu + 2 - k - m && uu + 2 - k - m <= 2 * (n + 1 - k)) {
            consider(eval_highest((uu + 2 - k - m) / 2, (uu + 2 + k - m) / 2, m, n, ell), "alpha-in" + tag);
        }
        if (m <= uu - 2 * n + k && uu - 2 * n + k <= 2 * ell - m + 2) {
            consider(kr_beta_highest((uu - 2 * n + k - m) / 2, (uu - 2 * n - 2 + k + m) / 2,
                                     n + 1 - k, n, ell),
                     "beta-in" + tag);
        }
        if (0 <= uu - 2 * n - 2 * ell - 2 + m + k && uu - 2 * n - 2 * ell - 2 + m + k <= 2 * k) {
            consider(eval_highest((uu - 2 * n - 2 * ell + k + m - 2) / 2, (uu - k - 2 * ell + m) / 2,
                                  ell + 1 - m, n, ell),
                     "alpha-out" + tag);
        }
        if (-m <= uu - 2 * ell - 2 * n - k - 2 && uu - 2 * ell - 2 * n - k - 2 <= m) {
            consider(kr_beta_highest((uu - 2 - 2 * n - k + m - 2 * ell) / 2,
                                     (uu - 2 * n - 2 - k - m) / 2, k, n, ell),
                     "beta-out" + tag);
        }
    };
    probe(ur, "");
    probe(ur + period, "+T");  // seam with the next period
    if (!have)
        throw WindowError("no lattice assignment case applies at (k=" + std::to_string(k) + ",m=" +
                          std::to_string(m) + ",u=" + std::to_string(u) + ")");
    return value;
}

/// The truncated images of the seed variables over (k,m) in [1..n] x [0..l]
/// are algebraically independent: each is a nonempty ladder on a single row
/// and the (row, lowest shift) signatures are pairwise distinct, so the
/// exponent vectors are triangular.
inline bool independence_check(int n, int ell) {
    std::map<std::pair<int, int>, int> seen;
    for (int k = 1; k <= n; ++k) {
        for (int m = 0; m <= ell; ++m) {
            const YMonomial mono = kr_monomial(k, k + 2 * m, ell + 1 - m);
            if (mono.is_unit()) return false;
            int min_s = 0;
            bool first = true;
            for (const auto& [key, e] : mono.exponents()) {
                if (key.first != k || e <= 0) return false;
                if (first || key.second < min_s) min_s = key.second;
                first = false;
            }
            if (!seen.emplace(std::pair{k, min_s}, 1).second) return false;
        }
    }
    return true;
}

}  // namespace tsys
