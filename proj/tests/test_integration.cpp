#include <catch2/catch_amalgamated.hpp>

#include "tsys/charmap.hpp"
#include "tsys/tsystem.hpp"

using tsys::Element;
using tsys::GammaTable;
using tsys::OrbitTable;
using tsys::SystemConfig;
using tsys::YMonomial;

namespace {

// Image of a torus exponent vector under X_{a,b} -> X_{a,a+2b}^{l+1-b}
// (with the b = 0 column landing on the full ladders F_a).
YMonomial y_image(const GammaTable& g, const tsys::Monomial& m, int ell) {
    YMonomial out;
    for (int i = 0; i < g.var_count(); ++i) {
        if (m[i] == 0) continue;
        const int a = g.var_a(i), b = g.var_b(i);
        out = out * tsys::kr_monomial(a, a + 2 * b, ell + 1 - b).pow(m[i]);
    }
    return out;
}

// Highest monomial of a computed value in the Nakajima order, found via the
// height that counts A-steps; the maximum must be unique.
YMonomial true_highest(const GammaTable& g, const Element& e, int n, int ell) {
    bool first = true;
    YMonomial best;
    std::int64_t best_h = 0;
    int ties = 0;
    for (const auto& [m, c] : e.terms()) {
        YMonomial y = y_image(g, m, ell);
        const std::int64_t h = tsys::dominance_height2(y, n);
        if (first || h > best_h) {
            best = y;
            best_h = h;
            ties = 1;
            first = false;
        } else if (h == best_h) {
            ++ties;
        }
    }
    REQUIRE(ties == 1);
    return best;
}

}  // namespace

TEST_CASE("computed orbit values realize the assigned highest monomials") {
    for (auto [n, ell] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}, {4, 1}, {1, 4}}) {
        SystemConfig c{n, ell, true, false};
        GammaTable g = tsys::make_system_gamma(c);
        OrbitTable orbit = tsys::evolve(c, g);
        for (const auto& [key, val] : orbit.values) {
            INFO("n=" << n << " l=" << ell << " at " << tsys::cell_name(key));
            CHECK(true_highest(g, val, n, ell) == tsys::lattice_highest(key.a, key.b, key.u, n, ell));
        }
        CHECK(orbit.fallback_cells.empty());
    }
}

TEST_CASE("boundary rows of the lattice assignment match the spiral pattern") {
    for (auto [n, ell] : {std::pair{2, 2}, {3, 1}, {1, 3}}) {
        SystemConfig c{n, ell, true, false};
        const int period = c.period();
        auto expect_f = [&](int r) {
            return (r >= 1 && r <= n) ? tsys::kr_monomial(r, r, ell + 1) : YMonomial::unit();
        };
        auto row_matches = [&](tsys::Side side, int a_row, int b_row, int idx) {
            const int parity = a_row + b_row;
            for (int u = -period; u <= period; ++u) {
                if ((((parity + u) % 2) + 2) % 2 != 0) continue;
                const int r = tsys::boundary_f_index(n, ell, side, idx, u);
                INFO("n=" << n << " l=" << ell << " side cell (" << a_row << "," << b_row << ","
                          << u << ")");
                CHECK(tsys::lattice_highest(a_row, b_row, u, n, ell) == expect_f(r));
            }
        };
        for (int m = 1; m <= ell; ++m) {
            row_matches(tsys::Side::AMin, 0, m, m);
            row_matches(tsys::Side::AMax, n + 1, m, m);
        }
        for (int k = 1; k <= n; ++k) {
            row_matches(tsys::Side::BMin, k, 0, k);
            row_matches(tsys::Side::BMax, k, ell + 1, k);
        }
    }
}

TEST_CASE("seed independence holds on every swept shape") {
    for (int n = 1; n <= 7; ++n)
        for (int ell = 1; n + ell <= 8; ++ell) CHECK(tsys::independence_check(n, ell));
}

TEST_CASE("every evolution step re-verifies through multiplication") {
    // the division that produced T_{a,b}(u) is checked by the independent
    // product route: T(u-2) * T(u) must equal the phase-shifted numerator
    for (auto [n, ell] : {std::pair{2, 2}, {3, 2}, {1, 4}, {4, 1}}) {
        for (bool quantum : {false, true}) {
            SystemConfig c{n, ell, quantum, false};
            GammaTable g = tsys::make_system_gamma(c);
            OrbitTable orbit = tsys::evolve(c, g);
            for (const auto& [key, ph] : orbit.phases) {
                const int a = key.a, b = key.b, u = key.u - 1;
                Element p1 = tsys::elem_mul(orbit.cell_value(g, a - 1, b, u),
                                            orbit.cell_value(g, a + 1, b, u), g);
                Element p2 = tsys::elem_mul(orbit.cell_value(g, a, b + 1, u),
                                            orbit.cell_value(g, a, b - 1, u), g);
                Element num = p1.t_shifted(static_cast<std::int32_t>(ph.first)) +
                              p2.t_shifted(static_cast<std::int32_t>(ph.second));
                INFO("n=" << n << " l=" << ell << " quantum=" << quantum << " at "
                          << tsys::cell_name(key));
                CHECK(tsys::elem_mul(orbit.value(a, b, u - 1), orbit.value(a, b, u + 1), g) == num);
            }
        }
    }
}

TEST_CASE("spiral quantum values are multiplicity-free") {
    // every computed value is a sum of distinct commutative monomials with
    // coefficient exactly 1, as for characters of thin modules
    for (int n = 1; n <= 5; ++n) {
        for (int ell = 1; n + ell <= 6; ++ell) {
            SystemConfig c{n, ell, true, false};
            GammaTable g = tsys::make_system_gamma(c);
            OrbitTable orbit = tsys::evolve(c, g);
            for (const auto& [key, val] : orbit.values) {
                INFO("n=" << n << " l=" << ell << " at " << tsys::cell_name(key));
                for (const auto& [m, cf] : val.terms()) CHECK(cf.is_one());
            }
        }
    }
}
