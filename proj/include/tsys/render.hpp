#pragma once

// Canonical text rendering.  Terms are printed leading monomial first and
// coefficients with ascending t-powers, so output is byte-stable.

#include <sstream>
#include <string>

#include "tsys/charmap.hpp"
#include "tsys/torus.hpp"

namespace tsys {

inline std::string var_name(const GammaTable& g, int idx) {
    const int a = g.var_a(idx), b = g.var_b(idx);
    if (b == 0) return "F_" + std::to_string(a);
    return "X_{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

/// t^{k/2} for a doubled half-power k; empty string for k = 0.
inline std::string t_power_str(std::int64_t k) {
    if (k == 0) return "";
    if (k % 2 == 0) {
        const std::int64_t e = k / 2;
        if (e == 1) return "t";
        return "t^{" + std::to_string(e) + "}";
    }
    return "t^{" + std::to_string(k) + "/2}";
}

inline std::string render_coeff(const TCoeff& c) {
    if (c.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : c.terms()) {
        std::int64_t mag = v < 0 ? -v : v;
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        first = false;
        const std::string tp = t_power_str(k);
        if (mag != 1 || tp.empty()) os << mag;
        if (mag != 1 && !tp.empty()) os << " ";
        os << tp;
    }
    return os.str();
}

inline std::string render_monomial(const GammaTable& g, const Monomial& m) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (any) os << " ";
        any = true;
        os << var_name(g, static_cast<int>(i));
        if (m[i] != 1) os << "^{" << m[i] << "}";
    }
    return any ? os.str() : "1";
}

inline std::string render_element(const GammaTable& g, const Element& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // leading (lex-greatest) monomial first
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        const auto& [m, c] = *it;
        const bool unit = m == unit_monomial(static_cast<int>(m.size()));
        if (c.is_one()) {
            os << render_monomial(g, m);
        } else if (c.terms().size() == 1 && c.terms()[0].second > 0) {
            os << render_coeff(c);
            if (!unit) os << " " << render_monomial(g, m);
        } else {
            os << "(" << render_coeff(c) << ")";
            if (!unit) os << " " << render_monomial(g, m);
        }
    }
    return os.str();
}

inline std::string render_y_monomial(const YMonomial& m) {
    if (m.is_unit()) return "1";
    std::ostringstream os;
    bool any = false;
    for (const auto& [key, e] : m.exponents()) {
        if (any) os << " ";
        any = true;
        os << "Y_{" << key.first << "," << key.second << "}";
        if (e != 1) os << "^{" << e << "}";
    }
    return os.str();
}

}  // namespace tsys
