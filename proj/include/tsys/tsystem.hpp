#pragma once

#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tsys/cartan.hpp"
#include "tsys/errors.hpp"
#include "tsys/torus.hpp"

namespace tsys {

/// Shape and mode of one lattice system.
struct SystemConfig {
    int n = 1;
    int ell = 1;
    bool quantum = true;
    bool unit_boundary = false;

    int period() const { return 2 * (n + ell + 2); }
    int half_period() const { return n + ell + 2; }
    /// Latest seed slice plus two full periods; enough for every check.
    int default_u_max() const { return n + ell - 2 + 2 * period(); }
};

inline GammaTable make_system_gamma(const SystemConfig& config) {
    return config.quantum ? make_gamma_table(config.n, config.ell)
                          : GammaTable::zero(config.n, config.ell);
}

enum class Side { AMin, AMax, BMin, BMax };  // a = 0, a = n+1, b = 0, b = l+1

/// Index r of the spiral boundary coefficient F_r at the given cell, with
/// r in {0, n+1} meaning the unit.  Reduces the window coordinate into one
/// period and asserts the seam where both case windows meet.
inline int boundary_f_index(int n, int ell, Side side, int index, int u) {
    const int t_period = 2 * (n + ell + 2);
    int w = 0, lo = 0, seam = 0, off = 0;
    switch (side) {
        case Side::AMax:
            assert(index >= 1 && index <= ell);
            w = u + index, lo = -n - 3, seam = n - 1, off = n + 3;
            break;
        case Side::AMin:
            assert(index >= 1 && index <= ell);
            w = u - index, lo = -2, seam = 2 * n, off = 2;
            break;
        case Side::BMax:
            assert(index >= 1 && index <= n);
            w = u - index, lo = ell - 1, seam = 2 * n + ell + 1, off = 1 - ell;
            break;
        case Side::BMin:
            assert(index >= 1 && index <= n);
            w = u + index, lo = -2, seam = 2 * n, off = 2;
            break;
    }
    w = lo + ((((w - lo) % t_period) + t_period) % t_period);
    if ((w - lo) % 2 != 0)
        throw WindowError("boundary parity violation at side index " + std::to_string(index) +
                          ", u=" + std::to_string(u));
    if (w <= seam) {
        const int r = (w + off) / 2;
        if (r < 0 || r > n + 1)
            throw WindowError("boundary coefficient index " + std::to_string(r) + " out of range");
        if (w == seam && r != n + 1)
            throw WindowError("boundary case windows disagree at their seam");
        return r;
    }
    return 0;
}

/// Value of a boundary cell: a coefficient monomial F_r or the unit.
inline Element boundary_value(const SystemConfig& config, const GammaTable& g, Side side, int index,
                              int u) {
    const int r = boundary_f_index(config.n, config.ell, side, index, u);
    if (config.unit_boundary || r == 0 || r == config.n + 1) return Element::one(g.var_count());
    return Element::generator(g, r, 0);
}

inline Monomial boundary_lead(const SystemConfig& config, const GammaTable& g, Side side, int index,
                              int u) {
    const int r = boundary_f_index(config.n, config.ell, side, index, u);
    if (config.unit_boundary || r == 0 || r == config.n + 1) return unit_monomial(g.var_count());
    return generator_monomial(g, r, 0);
}

/// Seed value X_{a,b} at u = a + b - 2.
inline Element initial_value([[maybe_unused]] const SystemConfig& config, const GammaTable& g,
                             int a, int b) {
    assert(a >= 1 && a <= config.n && b >= 1 && b <= config.ell);
    return Element::generator(g, a, b);
}

/// Distinguished half-integer powers (doubled) for one interior step
///   T_{a,b}(u-1) * T_{a,b}(u+1) = t^alpha P_a + t^beta P_b,
/// chosen so that the putative leading commutative monomial of the left
/// quotient in each term carries coefficient exactly 1 and hence stays
/// bar-invariant: alpha = -sigma/2 where
/// m_{glead}^{-1} * m_e * m_f = t^{sigma/2} (commutative monomial).
inline std::pair<std::int64_t, std::int64_t> determine_phases(
    const Monomial& e, const Monomial& f, const Monomial& e2, const Monomial& f2,
    const Monomial& glead, const GammaTable& g) {
    const std::int64_t alpha2 = -(g.pair(e, f) + g.pair(e, glead) + g.pair(f, glead));
    const std::int64_t beta2 = -(g.pair(e2, f2) + g.pair(e2, glead) + g.pair(f2, glead));
    return {alpha2, beta2};
}

struct CellKey {
    int a, b, u;
    auto operator<=>(const CellKey&) const = default;
};

inline std::string cell_name(const CellKey& c) {
    std::ostringstream os;
    os << "T_{" << c.a << "," << c.b << "}(" << c.u << ")";
    return os.str();
}

/// Computed interior values over one evolution window, together with the
/// per-step phases and the tracked leading monomials.  Boundary cells are
/// produced on demand and always consist of a single monomial.
struct OrbitTable {
    SystemConfig config;
    int u_max = 0;
    std::map<CellKey, Element> values;
    std::map<CellKey, Monomial> leads;
    std::map<CellKey, std::pair<std::int64_t, std::int64_t>> phases;  // doubled (alpha, beta)
    std::vector<CellKey> fallback_cells;

    bool has(int a, int b, int u) const { return values.count({a, b, u}) > 0; }
    const Element& value(int a, int b, int u) const { return values.at({a, b, u}); }

    /// Interior or boundary cell value.
    Element cell_value(const GammaTable& g, int a, int b, int u) const {
        if (a == 0) return boundary_value(config, g, Side::AMin, b, u);
        if (a == config.n + 1) return boundary_value(config, g, Side::AMax, b, u);
        if (b == 0) return boundary_value(config, g, Side::BMin, a, u);
        if (b == config.ell + 1) return boundary_value(config, g, Side::BMax, a, u);
        return value(a, b, u);
    }
    Monomial cell_lead(const GammaTable& g, int a, int b, int u) const {
        if (a == 0) return boundary_lead(config, g, Side::AMin, b, u);
        if (a == config.n + 1) return boundary_lead(config, g, Side::AMax, b, u);
        if (b == 0) return boundary_lead(config, g, Side::BMin, a, u);
        if (b == config.ell + 1) return boundary_lead(config, g, Side::BMax, a, u);
        return leads.at({a, b, u});
    }
};

namespace detail {

/// One interior step: returns the quotient for given doubled phases, or
/// nothing when division fails or the result is not bar-invariant.
inline std::optional<Element> try_step(const Element& den, const Element& p1, const Element& p2,
                                       std::int64_t alpha2, std::int64_t beta2, bool quantum,
                                       const GammaTable& g) {
    Element num = p1.t_shifted(static_cast<std::int32_t>(alpha2)) +
                  p2.t_shifted(static_cast<std::int32_t>(beta2));
    try {
        Element q = left_divide_exact(den, num, g);
        if (!is_bar_invariant(q)) return std::nullopt;
        if (!quantum) {
            for (const auto& [m, c] : q.terms())
                if (!c.is_integer()) return std::nullopt;
        }
        return q;
    } catch (const DivisionError&) {
        return std::nullopt;
    }
}

}  // namespace detail

/// Evolve the system up to and including slice u_max.  Interior values are
/// produced in increasing u from the seeds T_{a,b}(a+b-2) = X_{a,b}; each
/// step divides on the left by T_{a,b}(u-1).  The deterministic phases from
/// the tracked leading monomials are verified; on failure a bounded search
/// over half-integer pairs runs and must find exactly one admissible pair.
inline OrbitTable evolve(const SystemConfig& config, const GammaTable& g, int u_max = -1) {
    if (u_max < 0) u_max = config.default_u_max();
    OrbitTable orbit;
    orbit.config = config;
    orbit.u_max = u_max;
    for (int u = 0; u <= u_max; ++u) {
        for (int a = 1; a <= config.n; ++a) {
            for (int b = 1; b <= config.ell; ++b) {
                if (((a + b + u) % 2 + 2) % 2 != 0) continue;
                const CellKey key{a, b, u};
                if (u == a + b - 2) {
                    orbit.values.emplace(key, initial_value(config, g, a, b));
                    orbit.leads.emplace(key, generator_monomial(g, a, b));
                    continue;
                }
                if (u < a + b - 2) continue;

                const Element west = orbit.cell_value(g, a - 1, b, u - 1);
                const Element east = orbit.cell_value(g, a + 1, b, u - 1);
                const Element north = orbit.cell_value(g, a, b + 1, u - 1);
                const Element south = orbit.cell_value(g, a, b - 1, u - 1);
                const Element& den = orbit.value(a, b, u - 2);

                const Monomial e = orbit.cell_lead(g, a - 1, b, u - 1);
                const Monomial f = orbit.cell_lead(g, a + 1, b, u - 1);
                const Monomial e2 = orbit.cell_lead(g, a, b + 1, u - 1);
                const Monomial f2 = orbit.cell_lead(g, a, b - 1, u - 1);
                const Monomial& glead = orbit.leads.at({a, b, u - 2});

                const Element p1 = elem_mul(west, east, g);
                const Element p2 = elem_mul(north, south, g);
                auto [alpha2, beta2] = determine_phases(e, f, e2, f2, glead, g);

                std::optional<Element> q =
                    detail::try_step(den, p1, p2, alpha2, beta2, config.quantum, g);
                if (!q.has_value()) {
                    // Bounded fallback over half-integer pairs in
                    // [-period, period].  A central t-shift moves both powers
                    // together, so exact divisibility depends only on the
                    // difference alpha - beta; scan it, then pick the diagonal
                    // shift that centers every quotient coefficient.
                    const std::int64_t span = 2 * config.period();
                    std::optional<std::pair<std::int64_t, std::int64_t>> found;
                    for (std::int64_t d = -2 * span; d <= 2 * span; ++d) {
                        Element base_num = p1.t_shifted(static_cast<std::int32_t>(d)) + p2;
                        Element q0;
                        try {
                            q0 = left_divide_exact(den, base_num, g);
                        } catch (const DivisionError&) {
                            continue;
                        }
                        std::optional<std::int32_t> shift;
                        bool consistent = true;
                        for (const auto& [m, cf] : q0.terms()) {
                            auto center = cf.palindrome_center2();
                            if (!center.has_value()) {
                                consistent = false;
                                break;
                            }
                            if (!shift.has_value()) shift = -*center;
                            else if (*shift != -*center) {
                                consistent = false;
                                break;
                            }
                        }
                        if (!consistent || !shift.has_value()) continue;
                        const std::int64_t va = d + *shift, vb = *shift;
                        if (va < -span || va > span || vb < -span || vb > span) continue;
                        auto cand = detail::try_step(den, p1, p2, va, vb, config.quantum, g);
                        if (!cand.has_value()) continue;
                        if (found.has_value())
                            throw DivisionError("phase fallback is ambiguous at " +
                                                cell_name({a, b, u}));
                        found = {va, vb};
                        q = std::move(cand);
                    }
                    if (!q.has_value())
                        throw DivisionError("no admissible phases at " + cell_name({a, b, u}));
                    alpha2 = found->first;
                    beta2 = found->second;
                    orbit.fallback_cells.push_back({a, b, u});
                }

                orbit.values.emplace(key, std::move(*q));
                orbit.phases.emplace(key, std::pair{alpha2, beta2});
                Monomial lead = monomial_sum(e, f);
                for (std::size_t i = 0; i < lead.size(); ++i) lead[i] -= glead[i];
                orbit.leads.emplace(key, std::move(lead));
            }
        }
    }
    return orbit;
}

/// Structured pass/fail result of a verification pass.
struct CheckReport {
    bool ok = true;
    int cells_checked = 0;
    std::vector<std::string> failures;

    void fail(const std::string& what) {
        ok = false;
        if (failures.size() < 32) failures.push_back(what);
    }
};

/// T_{a,b}(u) = T_{n+1-a, l+1-b}(u + n + l + 2) on every stored pair, plus
/// the same identity across the boundary sides, plus full periodicity.
inline CheckReport check_half_periodicity(const OrbitTable& orbit, const GammaTable& g) {
    CheckReport rep;
    const SystemConfig& c = orbit.config;
    const int h = c.half_period();
    const int t_period = c.period();
    for (const auto& [key, val] : orbit.values) {
        const CellKey partner{c.n + 1 - key.a, c.ell + 1 - key.b, key.u + h};
        if (orbit.has(partner.a, partner.b, partner.u)) {
            ++rep.cells_checked;
            if (!(val == orbit.value(partner.a, partner.b, partner.u)))
                rep.fail("half-periodicity fails: " + cell_name(key) + " vs " + cell_name(partner));
        }
        const CellKey full{key.a, key.b, key.u + t_period};
        if (orbit.has(full.a, full.b, full.u)) {
            ++rep.cells_checked;
            if (!(val == orbit.value(full.a, full.b, full.u)))
                rep.fail("full periodicity fails: " + cell_name(key) + " vs " + cell_name(full));
        }
    }
    // boundary sides over one period
    for (int m = 1; m <= c.ell; ++m) {
        for (int u = -t_period; u <= t_period; ++u) {
            if (((0 + m + u) % 2 + 2) % 2 != 0) continue;
            ++rep.cells_checked;
            Element lo = boundary_value(c, g, Side::AMin, m, u);
            Element hi = boundary_value(c, g, Side::AMax, c.ell + 1 - m, u + h);
            if (!(lo == hi)) rep.fail("boundary half-periodicity fails at a=0, m=" + std::to_string(m));
            if (!(lo == boundary_value(c, g, Side::AMin, m, u + t_period)))
                rep.fail("boundary periodicity fails at a=0, m=" + std::to_string(m));
        }
    }
    for (int k = 1; k <= c.n; ++k) {
        for (int u = -t_period; u <= t_period; ++u) {
            if (((k + 0 + u) % 2 + 2) % 2 != 0) continue;
            ++rep.cells_checked;
            Element lo = boundary_value(c, g, Side::BMin, k, u);
            Element hi = boundary_value(c, g, Side::BMax, c.n + 1 - k, u + h);
            if (!(lo == hi)) rep.fail("boundary half-periodicity fails at b=0, k=" + std::to_string(k));
            if (!(lo == boundary_value(c, g, Side::BMin, k, u + t_period)))
                rep.fail("boundary periodicity fails at b=0, k=" + std::to_string(k));
        }
    }
    return rep;
}

/// Flags any negative integer entry in any stored coefficient.
inline CheckReport check_positivity(const OrbitTable& orbit) {
    CheckReport rep;
    for (const auto& [key, val] : orbit.values) {
        ++rep.cells_checked;
        if (!is_nonnegative(val)) rep.fail("negative coefficient entry at " + cell_name(key));
    }
    return rep;
}

/// Every stored value bar-invariant; integer coefficients in classical mode.
inline CheckReport check_bar_invariance(const OrbitTable& orbit) {
    CheckReport rep;
    for (const auto& [key, val] : orbit.values) {
        ++rep.cells_checked;
        if (!is_bar_invariant(val)) rep.fail("value not bar-invariant at " + cell_name(key));
        if (!orbit.config.quantum) {
            for (const auto& [m, c] : val.terms())
                if (!c.is_integer()) rep.fail("non-integer classical coefficient at " + cell_name(key));
        }
    }
    return rep;
}

}  // namespace tsys
