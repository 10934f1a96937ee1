#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "tsys/errors.hpp"

namespace tsys {

/// Truncated power-series expansion of the inverse quantized Cartan matrix
/// of type A_n.  C(z) is tridiagonal with z + z^{-1} on the diagonal and -1
/// off it; writing C(z) = z^{-1} ((1 + z^2) I - z A) with A the path-graph
/// adjacency matrix gives C^{-1}(z) = z ((1 + z^2) I - z A)^{-1}, whose
/// matrix coefficients satisfy N_0 = I, N_1 = A, N_k = A N_{k-1} - N_{k-2}.
/// The coefficient of z^p in entry (a, c) is then N_{p-1}[a][c].
class CartanSeries {
public:
    CartanSeries(int n, int p_max) : n_(n), p_max_(p_max) {
        assert(n >= 1 && p_max >= 0);
        // mats_[k] holds N_k, row-major n x n; needed up to k = p_max - 1.
        const int count = p_max_ > 0 ? p_max_ : 0;
        mats_.resize(count, std::vector<std::int64_t>(n_ * n_, 0));
        if (count >= 1) {
            for (int a = 0; a < n_; ++a) mats_[0][a * n_ + a] = 1;
        }
        if (count >= 2) {
            for (int a = 0; a < n_; ++a) {
                if (a + 1 < n_) mats_[1][a * n_ + a + 1] = 1;
                if (a - 1 >= 0) mats_[1][a * n_ + a - 1] = 1;
            }
        }
        for (int k = 2; k < count; ++k) {
            for (int a = 0; a < n_; ++a) {
                for (int c = 0; c < n_; ++c) {
                    std::int64_t v = -mats_[k - 2][a * n_ + c];
                    if (a + 1 < n_) v += mats_[k - 1][(a + 1) * n_ + c];
                    if (a - 1 >= 0) v += mats_[k - 1][(a - 1) * n_ + c];
                    mats_[k][a * n_ + c] = v;
                }
            }
        }
    }

    int rank() const { return n_; }
    int order() const { return p_max_; }

    /// Coefficient of z^p in entry (a, c), 1-based indices.  Arguments
    /// p <= 0 contribute nothing; p beyond the truncation order is an error.
    std::int64_t coeff(int a, int c, int p) const {
        assert(a >= 1 && a <= n_ && c >= 1 && c <= n_);
        if (p <= 0) return 0;
        if (p > p_max_)
            throw TruncationError("cartan series coefficient p=" + std::to_string(p) +
                                  " exceeds truncation order " + std::to_string(p_max_));
        return mats_[p - 1][(a - 1) * n_ + (c - 1)];
    }

private:
    int n_;
    int p_max_;
    std::vector<std::vector<std::int64_t>> mats_;
};

inline CartanSeries build_cartan_series(int n, int p_max) { return CartanSeries(n, p_max); }

/// Truncation order that covers every argument the pairing below can request
/// for a given system shape.
inline int default_series_order(int n, int ell) { return 4 * (n + ell + 2); }

/// gamma(a,b; c,d): sum of series coefficients along the descending ladder
/// from 2l - 2b + c - a + 1 down to 2d - 2b + c - a + 1 in steps of 2
/// (l - d + 1 terms, negative arguments dropping out).
inline std::int64_t gamma(int a, int b, int c, int d, int n, int ell, const CartanSeries& series) {
    assert(a >= 1 && a <= n && c >= 1 && c <= n);
    assert(b >= 0 && b <= ell && d >= 0 && d <= ell);
    (void)n;
    const int hi = 2 * ell - 2 * b + c - a + 1;
    const int lo = 2 * d - 2 * b + c - a + 1;
    std::int64_t sum = 0;
    for (int p = hi; p >= lo; p -= 2) sum += series.coeff(a, c, p);
    return sum;
}

/// Antisymmetrized pairing: Lambda((a,b),(c,d)) = gamma(a,b;c,d) - gamma(c,d;a,b).
inline std::int64_t lambda_pair(int a, int b, int c, int d, int n, int ell,
                                const CartanSeries& series) {
    return gamma(a, b, c, d, n, ell, series) - gamma(c, d, a, b, n, ell, series);
}

/// Exponent of the coefficient quasi-commutation F_r * F_{r'} =
/// t^{e} F_{r'} * F_r for r < r': the single-row ladder sum.  Empty
/// descending ranges give 0.
inline std::int64_t coefficient_exponent_ft(int r, int rp, int n, int ell,
                                            const CartanSeries& series) {
    assert(1 <= r && r < rp && rp <= n);
    (void)n;
    const int hi = 2 * ell + rp - r + 1;
    const int lo = 2 * ell + r - rp + 3;
    std::int64_t sum = 0;
    for (int p = hi; p >= lo; p -= 2) sum += series.coeff(r, rp, p);
    return sum;
}

/// Precomputed Lambda values over the variable set {X_{a,b} : a in [1..n],
/// b in [0..l]}, with X_{a,0} the coefficient F_a.  Variables are enumerated
/// sorted by (b, a); the pairing extends bilinearly to exponent vectors.
/// Immutable after construction.
class GammaTable {
public:
    GammaTable(int n, int ell, const CartanSeries& series) : n_(n), ell_(ell), zero_(false) {
        build(&series);
    }

    /// Classical table: Lambda identically zero (t = 1 mode).
    static GammaTable zero(int n, int ell) { return GammaTable(n, ell); }

    int rank() const { return n_; }
    int levels() const { return ell_; }
    int var_count() const { return n_ * (ell_ + 1); }
    bool is_zero() const { return zero_; }

    /// Index of variable X_{a,b} in the (b, a)-sorted enumeration.
    int var_index(int a, int b) const {
        assert(a >= 1 && a <= n_ && b >= 0 && b <= ell_);
        return b * n_ + (a - 1);
    }
    int var_a(int idx) const { return idx % n_ + 1; }
    int var_b(int idx) const { return idx / n_; }

    std::int64_t lambda(int i, int j) const { return lam_[i * var_count() + j]; }

    /// Bilinear extension to exponent vectors of length var_count().
    std::int64_t pair(const std::vector<std::int32_t>& e, const std::vector<std::int32_t>& f) const {
        if (zero_) return 0;
        const int v = var_count();
        std::int64_t total = 0;
        for (int j = 0; j < v; ++j) {
            if (f[j] == 0) continue;
            std::int64_t dot = 0;
            for (int i = 0; i < v; ++i) {
                if (e[i] != 0) dot += static_cast<std::int64_t>(e[i]) * lam_[i * v + j];
            }
            total += dot * f[j];
        }
        return total;
    }

private:
    GammaTable(int n, int ell) : n_(n), ell_(ell), zero_(true) { build(nullptr); }

    void build(const CartanSeries* series) {
        const int v = var_count();
        lam_.assign(v * v, 0);
        if (!series) return;
        for (int i = 0; i < v; ++i) {
            for (int j = 0; j < v; ++j) {
                lam_[i * v + j] = lambda_pair(var_a(i), var_b(i), var_a(j), var_b(j), n_, ell_, *series);
            }
        }
    }

    int n_;
    int ell_;
    bool zero_;
    std::vector<std::int64_t> lam_;
};

/// Standard quantum table for a system shape, at the default truncation.
inline GammaTable make_gamma_table(int n, int ell) {
    CartanSeries series = build_cartan_series(n, default_series_order(n, ell));
    return GammaTable(n, ell, series);
}

}  // namespace tsys
