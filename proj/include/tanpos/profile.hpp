#pragma once

// An intersection profile: enough data about a smooth projective variety X
// to evaluate every top-degree product on P(T_X).

#include "tanpos/poly.hpp"
#include "tanpos/rational.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace tanpos {

struct BaseProfile {
    std::string label;
    int dim = 0;
    std::vector<std::string> basis;
    /// Degree-`dim` monomials in the basis -> intersection numbers.
    /// Monomials absent from the map intersect to zero.
    std::map<Exponents, Rational> top_form;
    /// chern[j-1] = c_j(T_X), homogeneous of degree j.
    std::vector<Poly> chern;

    std::size_t nvars() const { return basis.size(); }

    std::size_t symbol_index(const std::string& name) const {
        auto it = std::find(basis.begin(), basis.end(), name);
        if (it == basis.end()) throw Error("unknown symbol '" + name + "' for profile " + label);
        return static_cast<std::size_t>(it - basis.begin());
    }

    bool has_symbol(const std::string& name) const {
        return std::find(basis.begin(), basis.end(), name) != basis.end();
    }

    Poly symbol(const std::string& name) const { return Poly::variable(nvars(), symbol_index(name)); }

    /// Integral over X of the degree-`dim` part of `p`.
    Rational integrate(const Poly& p) const {
        Rational total = 0;
        for (const auto& [e, c] : p.terms()) {
            if (total_degree(e) != dim) continue;
            auto it = top_form.find(e);
            if (it != top_form.end()) total += c * it->second;
        }
        return total;
    }

    const Poly& c(int j) const { return chern.at(static_cast<std::size_t>(j - 1)); }

    /// K_X = -c_1(T_X).
    Poly canonical() const { return -c(1); }

    /// Throws Error describing the first violated invariant.
    void validate() const {
        if (dim < 1) throw Error("profile " + label + ": dimension must be positive");
        if (basis.empty()) throw Error("profile " + label + ": empty basis");
        for (const auto& [e, v] : top_form) {
            if (e.size() != nvars()) throw Error("profile " + label + ": top_form exponent length mismatch");
            if (total_degree(e) != dim) throw Error("profile " + label + ": top_form entry of wrong degree");
            if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
                throw Error("profile " + label + ": negative exponent");
        }
        if (chern.size() != static_cast<std::size_t>(dim))
            throw Error("profile " + label + ": expected " + std::to_string(dim) + " Chern classes");
        for (int j = 1; j <= dim; ++j) {
            const Poly& cj = c(j);
            if (cj.nvars() != nvars()) throw Error("profile " + label + ": Chern class arity mismatch");
            if (!cj.is_zero() && cj.homogeneous_degree() != j)
                throw Error("profile " + label + ": c_" + std::to_string(j) + " is not homogeneous of degree " +
                            std::to_string(j));
        }
    }
};

// JSON form:
// {"label": ..., "dim": n, "basis": [...],
//  "top_form": [{"exponents": [...], "value": "p/q"}, ...],
//  "chern": [[{"exponents": [...], "value": "p/q"}, ...], ...]}

inline nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"value", to_string(c)}});
    return terms;
}

inline Poly poly_from_json(const nlohmann::json& j, std::size_t nvars) {
    Poly p(nvars);
    for (const auto& t : j) p.add_term(t.at("exponents").get<Exponents>(), parse_rational(t.at("value").get<std::string>()));
    return p;
}

inline nlohmann::json to_json(const BaseProfile& p) {
    nlohmann::json top = nlohmann::json::array();
    for (const auto& [e, v] : p.top_form) top.push_back({{"exponents", e}, {"value", to_string(v)}});
    nlohmann::json chern = nlohmann::json::array();
    for (const auto& c : p.chern) chern.push_back(poly_to_json(c));
    return {{"label", p.label}, {"dim", p.dim}, {"basis", p.basis}, {"top_form", top}, {"chern", chern}};
}

inline BaseProfile profile_from_json(const nlohmann::json& j) {
    BaseProfile p;
    try {
        p.label = j.at("label").get<std::string>();
        p.dim = j.at("dim").get<int>();
        p.basis = j.at("basis").get<std::vector<std::string>>();
        for (const auto& t : j.at("top_form")) {
            Rational v = parse_rational(t.at("value").get<std::string>());
            if (v != 0) p.top_form[t.at("exponents").get<Exponents>()] += v;
        }
        for (const auto& c : j.at("chern")) p.chern.push_back(poly_from_json(c, p.basis.size()));
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed profile document: ") + e.what());
    }
    p.validate();
    return p;
}

}  // namespace tanpos
