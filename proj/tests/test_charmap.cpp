#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "tsys/charmap.hpp"

using tsys::YMonomial;

TEST_CASE("kr monomial ladders") {
    CHECK(tsys::kr_monomial(1, 4, 1) == YMonomial::variable(1, 4));
    CHECK(tsys::kr_monomial(1, 4, 0).is_unit());
    CHECK(tsys::kr_monomial(1, 4, -2).is_unit());
    CHECK(tsys::kr_monomial(1, 1, 2) == (YMonomial::variable(1, 1) * YMonomial::variable(1, 3)));
}

TEST_CASE("a monomials and their weights") {
    // rank one: no neighbours
    CHECK(tsys::a_monomial(1, 2, 1) == (YMonomial::variable(1, 1) * YMonomial::variable(1, 3)));
    // rank two: the neighbour row enters inverted
    YMonomial a12 = tsys::a_monomial(1, 2, 2);
    CHECK(a12.exponent(1, 1) == 1);
    CHECK(a12.exponent(1, 3) == 1);
    CHECK(a12.exponent(2, 2) == -1);
    // weight of A_{i,s} is the simple root: 2 at i, -1 at the neighbours
    for (int n = 1; n <= 5; ++n) {
        for (int i = 1; i <= n; ++i) {
            auto w = tsys::weight(tsys::a_monomial(i, 7, n), n);
            for (int j = 1; j <= n; ++j) {
                std::int64_t expect = j == i ? 2 : (std::abs(j - i) == 1 ? -1 : 0);
                CHECK(w[j - 1] == expect);
            }
        }
    }
}

TEST_CASE("weight is a monoid morphism") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> row(1, 4), shift(-5, 5), expo(-3, 3);
    for (int it = 0; it < 200; ++it) {
        YMonomial a, b;
        for (int k = 0; k < 3; ++k) {
            a = a * YMonomial::variable(row(rng), shift(rng), expo(rng));
            b = b * YMonomial::variable(row(rng), shift(rng), expo(rng));
        }
        auto wa = tsys::weight(a, 4), wb = tsys::weight(b, 4), wab = tsys::weight(a * b, 4);
        for (int j = 0; j < 4; ++j) CHECK(wab[j] == wa[j] + wb[j]);
    }
}

TEST_CASE("dominance") {
    CHECK(tsys::is_dominant(YMonomial::unit()));
    CHECK(tsys::is_dominant(tsys::kr_monomial(2, 2, 3)));
    CHECK(!tsys::is_dominant(tsys::a_monomial(1, 4, 2).inverse() * tsys::kr_monomial(1, 1, 2)));
}

TEST_CASE("evaluation-module highest monomials") {
    const int n = 3, ell = 2;
    // boundary indices contribute unit factors
    CHECK(tsys::eval_highest(0, 2, 1, n, ell) == tsys::kr_monomial(2, 4, 2));
    CHECK(tsys::eval_highest(2, n + 1, 1, n, ell) == tsys::kr_monomial(2, 2, 1));
    // m = 0 leaves only the second ladder
    CHECK(tsys::eval_highest(1, 2, 0, n, ell) == tsys::kr_monomial(2, 2, ell + 1));
    // alpha(i,i)^m is the full column F_i regardless of m
    for (int i = 1; i <= n; ++i) {
        YMonomial fi = tsys::kr_monomial(i, i, ell + 1);
        for (int m = 0; m <= ell + 1; ++m) CHECK(tsys::eval_highest(i, i, m, n, ell) == fi);
        // ... and so are the degenerate alpha and beta forms
        CHECK(tsys::kr_beta_highest(0, ell, i, n, ell) == fi);
        for (int j = i; j <= n + 1; ++j) CHECK(tsys::eval_highest(i, j, ell + 1, n, ell) == fi);
        for (int j = 0; j <= i; ++j) CHECK(tsys::eval_highest(j, i, 0, n, ell) == fi);
    }
}

TEST_CASE("kr and evaluation families agree on their overlap") {
    const int n = 4, ell = 3;
    for (int i = 0; i <= n + 1; ++i) {
        for (int m = 0; m <= ell; ++m) {
            // alpha(i, n+1)^{m+1} = beta(0, m)^i
            CHECK(tsys::eval_highest(i, n + 1, m + 1, n, ell) == tsys::kr_beta_highest(0, m, i, n, ell));
            // alpha(0, i)^m = beta(m, l)^i
            CHECK(tsys::eval_highest(0, i, m, n, ell) == tsys::kr_beta_highest(m, ell, i, n, ell));
        }
    }
    CHECK(tsys::kr_beta_highest(1, 1, 2, 3, 2) == YMonomial::variable(2, 4));
    CHECK(tsys::kr_beta_highest(1, 2, 0, 3, 2).is_unit());
    CHECK(tsys::kr_beta_highest(1, 2, 4, 3, 2).is_unit());
}

TEST_CASE("thm41 family: frozen rank-two case") {
    // (n,l) = (2,1), (i,j,m) = (1,2,1)
    auto fam = tsys::thm41_dominant_family(1, 2, 1, 2, 1);
    REQUIRE(fam.size() == 3);
    CHECK(fam[0] == (YMonomial::variable(1, 1) * YMonomial::variable(2, 2) * YMonomial::variable(2, 4)));
    CHECK(fam[1] == (YMonomial::variable(1, 1) * YMonomial::variable(1, 3)));
    CHECK(fam[2] == YMonomial::variable(2, 2));
}

TEST_CASE("thm41 family: cardinality, dominance, distinctness, head products") {
    for (int n = 2; n <= 5; ++n) {
        for (int ell = 1; ell <= 4; ++ell) {
            for (int i = 1; i < n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    for (int m = 1; m <= ell; ++m) {
                        INFO("n=" << n << " l=" << ell << " i=" << i << " j=" << j << " m=" << m);
                        auto fam = tsys::thm41_dominant_family(i, j, m, n, ell);
                        REQUIRE(fam.size() == static_cast<std::size_t>(2 * m + 1));
                        std::set<YMonomial> uniq(fam.begin(), fam.end());
                        CHECK(uniq.size() == fam.size());
                        for (const auto& mm : fam) CHECK(tsys::is_dominant(mm));
                        // odd sublist heads the first right-hand product
                        CHECK(fam[0] == (tsys::eval_highest(i, j + 1, m, n, ell) *
                                         tsys::eval_highest(i + 1, j, m, n, ell)));
                        // even sublist heads the second
                        CHECK(fam[1] == (tsys::eval_highest(i, j, m + 1, n, ell) *
                                         tsys::eval_highest(i + 1, j + 1, m - 1, n, ell)));
                        // sublist sizes m+1 and m
                        int odd = 0, even = 0;
                        for (std::size_t r = 0; r < fam.size(); ++r) ((r % 2 == 0) ? odd : even)++;
                        CHECK(odd == m + 1);
                        CHECK(even == m);
                    }
                }
            }
        }
    }
}

TEST_CASE("lattice assignment: seeds and boundary pattern") {
    for (int n = 1; n <= 4; ++n) {
        for (int ell = 1; ell <= 3; ++ell) {
            // seeds carry the truncated seed monomials
            for (int k = 1; k <= n; ++k)
                for (int m = 0; m <= ell; ++m)
                    CHECK(tsys::lattice_highest(k, m, k + m - 2, n, ell) ==
                          tsys::kr_monomial(k, k + 2 * m, ell + 1 - m));
            // the k = 0 row carries F_{(u-m+2)/2} with F_r = X_{r,r}^{l+1}
            for (int m = 1; m <= ell; ++m) {
                for (int w = -2; w <= 2 * n; w += 2) {
                    const int u = w + m;
                    const int r = (w + 2) / 2;
                    YMonomial expect =
                        (r >= 1 && r <= n) ? tsys::kr_monomial(r, r, ell + 1) : YMonomial::unit();
                    CHECK(tsys::lattice_highest(0, m, u, n, ell) == expect);
                }
            }
        }
    }
}

TEST_CASE("lattice assignment: periodicity, seams and half-period symmetry") {
    for (int n = 1; n <= 4; ++n) {
        for (int ell = 1; ell <= 3; ++ell) {
            const int period = 2 * (n + ell + 2);
            for (int k = 0; k <= n + 1; ++k) {
                for (int m = 0; m <= ell + 1; ++m) {
                    const int base = k + m - 2;
                    for (int u = base; u < base + period; u += 2) {
                        INFO("n=" << n << " l=" << ell << " k=" << k << " m=" << m << " u=" << u);
                        // no OverlapError anywhere, and the reduction is periodic
                        YMonomial v = tsys::lattice_highest(k, m, u, n, ell);
                        CHECK(v == tsys::lattice_highest(k, m, u + period, n, ell));
                        CHECK(v == tsys::lattice_highest(k, m, u - period, n, ell));
                        // monomial-level half-periodicity
                        CHECK(v == tsys::lattice_highest(n + 1 - k, ell + 1 - m, u + n + ell + 2, n, ell));
                    }
                }
            }
        }
    }
}

TEST_CASE("independence of the seed images") {
    CHECK(tsys::independence_check(1, 1));
    CHECK(tsys::independence_check(2, 1));
    CHECK(tsys::independence_check(1, 5));
    for (int n = 1; n <= 6; ++n)
        for (int ell = 1; ell <= 6; ++ell) CHECK(tsys::independence_check(n, ell));
}

TEST_CASE("dominance height strictly drops along A-steps") {
    for (int n = 1; n <= 5; ++n) {
        for (int i = 1; i <= n; ++i) {
            YMonomial base = tsys::kr_monomial(1, 1, 2) * tsys::kr_monomial(n, n, 1);
            const std::int64_t h0 = tsys::dominance_height2(base, n);
            const std::int64_t h1 = tsys::dominance_height2(base * tsys::a_monomial(i, 4, n).inverse(), n);
            CHECK(h0 - h1 == 2);
        }
    }
}
