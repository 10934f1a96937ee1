#pragma once

// JSON encodings: elements, orbits, the series table and Y-monomials.
// Element schema: {"vars": ["X_1_0", ...],
//                  "terms": [{"exp": [..], "coeff": {"<2*half-power>": c}}]}
// with terms ordered leading monomial first.

#include <string>

#include <json.hpp>

#include "tsys/cartan.hpp"
#include "tsys/charmap.hpp"
#include "tsys/torus.hpp"
#include "tsys/tsystem.hpp"

namespace tsys {

inline std::string var_token(const GammaTable& g, int idx) {
    return "X_" + std::to_string(g.var_a(idx)) + "_" + std::to_string(g.var_b(idx));
}

inline nlohmann::json element_to_json(const GammaTable& g, const Element& e) {
    nlohmann::json vars = nlohmann::json::array();
    for (int i = 0; i < g.var_count(); ++i) vars.push_back(var_token(g, i));
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        nlohmann::json term;
        term["exp"] = it->first;
        nlohmann::json coeff = nlohmann::json::object();
        for (const auto& [k, v] : it->second.terms()) coeff[std::to_string(k)] = v;
        term["coeff"] = std::move(coeff);
        terms.push_back(std::move(term));
    }
    return nlohmann::json{{"vars", std::move(vars)}, {"terms", std::move(terms)}};
}

inline Element element_from_json(const nlohmann::json& j) {
    Element e;
    for (const auto& term : j.at("terms")) {
        Monomial m = term.at("exp").get<Monomial>();
        TCoeff c;
        for (const auto& [k, v] : term.at("coeff").items())
            c += TCoeff::half_power(static_cast<std::int32_t>(std::stol(k)), v.get<std::int64_t>());
        e.add_term(m, c);
    }
    return e;
}

inline nlohmann::json orbit_to_json(const GammaTable& g, const OrbitTable& orbit) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& [key, val] : orbit.values) {
        nlohmann::json cell{{"a", key.a}, {"b", key.b}, {"u", key.u}};
        cell["value"] = element_to_json(g, val);
        auto ph = orbit.phases.find(key);
        if (ph != orbit.phases.end()) {
            cell["alpha2"] = ph->second.first;  // doubled half-integers
            cell["beta2"] = ph->second.second;
        }
        cells.push_back(std::move(cell));
    }
    return nlohmann::json{{"n", orbit.config.n},
                          {"ell", orbit.config.ell},
                          {"quantum", orbit.config.quantum},
                          {"boundary", orbit.config.unit_boundary ? "unit" : "spiral"},
                          {"u_max", orbit.u_max},
                          {"cells", std::move(cells)}};
}

inline OrbitTable orbit_from_json(const nlohmann::json& j) {
    OrbitTable orbit;
    orbit.config.n = j.at("n").get<int>();
    orbit.config.ell = j.at("ell").get<int>();
    orbit.config.quantum = j.at("quantum").get<bool>();
    orbit.config.unit_boundary = j.at("boundary").get<std::string>() == "unit";
    orbit.u_max = j.at("u_max").get<int>();
    for (const auto& cell : j.at("cells")) {
        CellKey key{cell.at("a").get<int>(), cell.at("b").get<int>(), cell.at("u").get<int>()};
        orbit.values.emplace(key, element_from_json(cell.at("value")));
        if (cell.contains("alpha2"))
            orbit.phases.emplace(key, std::pair{cell.at("alpha2").get<std::int64_t>(),
                                                cell.at("beta2").get<std::int64_t>()});
    }
    return orbit;
}

/// {"a": {"c": {"p": coeff}}}, zero coefficients omitted.
inline nlohmann::json cartan_to_json(const CartanSeries& s) {
    nlohmann::json root = nlohmann::json::object();
    for (int a = 1; a <= s.rank(); ++a) {
        nlohmann::json row = nlohmann::json::object();
        for (int c = 1; c <= s.rank(); ++c) {
            nlohmann::json entry = nlohmann::json::object();
            for (int p = 1; p <= s.order(); ++p) {
                const std::int64_t v = s.coeff(a, c, p);
                if (v != 0) entry[std::to_string(p)] = v;
            }
            row[std::to_string(c)] = std::move(entry);
        }
        root[std::to_string(a)] = std::move(row);
    }
    return root;
}

/// YMonomial as {"terms": {"i,s": exp}}.
inline nlohmann::json y_monomial_to_json(const YMonomial& m) {
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [key, e] : m.exponents())
        terms[std::to_string(key.first) + "," + std::to_string(key.second)] = e;
    return nlohmann::json{{"terms", std::move(terms)}};
}

}  // namespace tsys
