#pragma once

// Del Pezzo threefolds of Picard rank one: -K = 2H, d = H^3 in 1..5.

#include "tanpos/chow.hpp"
#include "tanpos/expr.hpp"
#include "tanpos/hypersurface.hpp"
#include "tanpos/profile.hpp"
#include "tanpos/pt_class.hpp"
#include "tanpos/rational.hpp"
#include "tanpos/surface.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tanpos {

struct ThreefoldSpec {
    int d = 0;
    int b3 = 0;
    int k = 0;  // degree of the evaluation map of the family of lines
    int r = 0;  // lines in a general member of |H|
};

struct B3Default {
    int value;
    bool literature_only;  // not derived or quoted in this project's sources
};

/// Third Betti numbers used when none is given: 42 and 20 for d = 1, 2;
/// 10 for the cubic (from c_3 = -6 = 4 - b_3); 4 and 0 for d = 4, 5.
inline B3Default default_b3(int d) {
    switch (d) {
        case 1: return {42, false};
        case 2: return {20, false};
        case 3: return {10, false};
        case 4: return {4, true};
        case 5: return {0, true};
        default: throw Error("no default b_3 for del Pezzo threefold of degree " + std::to_string(d));
    }
}

inline std::string threefold_label(int d, int b3) {
    return "dp3-d" + std::to_string(d) + "-b" + std::to_string(b3);
}

/// Basis {H}; H^3 = d, c_1 = 2H, H.c_2 = 12, c_3 = 4 - b_3.
inline BaseProfile threefold_profile(int d, int b3) {
    if (d < 1) throw Error("threefold degree must be positive");
    if (b3 < 0) throw Error("b_3 must be non-negative");
    BaseProfile p;
    p.label = threefold_label(d, b3);
    p.dim = 3;
    p.basis = {"H"};
    p.top_form[{3}] = d;
    p.chern = {Poly::monomial({1}, 2), Poly::monomial({2}, Rational(12, d)), Poly::monomial({3}, Rational(4 - b3, d))};
    return p;
}

inline BaseProfile threefold_profile(int d) { return threefold_profile(d, default_b3(d).value); }

struct ThreefoldNumbers {
    Rational z5, z4h, z3h2;
};

inline ThreefoldNumbers threefold_numbers(const BaseProfile& p) {
    const PTClass z = PTClass::zeta(p);
    const PTClass h = PTClass::pullback(p, "H");
    return {eval_top(p, z.power(5)), eval_top(p, z.power(4) * h), eval_top(p, z.power(3) * h * h)};
}

/// k z + (r/d - k) pi^*H
inline PTClass vmrt_class_threefold(const BaseProfile& p, int k, int r) {
    if (k <= 0 || r <= 0) throw Error("vmrt_class_threefold: k and r must be positive");
    const Rational d = p.integrate(Poly::monomial({3}));
    if (d <= 0) throw Error("vmrt_class_threefold: profile degree must be positive");
    const Rational h_coeff = Rational(r) / d - k;
    // e_* c_1 of the relative tangent bundle is (k - r/d) H.
    return dual_vmrt_generic(p, k, Poly::monomial({1}, -h_coeff));
}

inline PTClass vmrt_class_threefold(int d, int k, int r) { return vmrt_class_threefold(threefold_profile(d), k, r); }

struct VmrtRow {
    int d = 0;
    int k = 0;
    int r = 0;
    bool r_exact = true;        // false: r is a lower bound
    Rational h_coeff;           // exact, or a lower bound when !r_exact
    std::optional<PTClass> cls; // present only for exact rows
    std::string note;
};

namespace detail {
inline int evaluation_degree(int d) {
    switch (d) {
        case 1: return 60;
        case 2: return 12;
        case 3: return 6;
        case 4: return 4;
        case 5: return 3;
        default: throw Error("no line family data for degree " + std::to_string(d));
    }
}
}  // namespace detail

/// Rows d = 1..5. r is the number of (-1)-curves on a general hyperplane
/// section (a del Pezzo surface of degree d); for d = 1 this is only a lower bound.
inline std::vector<VmrtRow> vmrt_table() {
    std::vector<VmrtRow> rows;
    for (int d = 1; d <= 5; ++d) {
        VmrtRow row;
        row.d = d;
        row.k = detail::evaluation_degree(d);
        row.r = static_cast<int>(minus_one_curves(surface_lattice(d)).size());
        row.r_exact = d != 1;
        row.h_coeff = Rational(row.r, d) - row.k;
        if (row.r_exact) {
            row.cls = vmrt_class_threefold(d, row.k, row.r);
            row.note = "r = number of (-1)-curves on a degree-" + std::to_string(d) + " del Pezzo surface";
        } else {
            row.note = "r >= 240 (every (-1)-curve of a hyperplane section is a line); class known up to m >= " +
                       to_string(row.h_coeff);
        }
        if (default_b3(d).literature_only) row.note += "; profile b_3 is a literature default";
        rows.push_back(std::move(row));
    }
    return rows;
}

/// For k z + m pi^*H with k > 0: true iff m >= 0, i.e. the non-bigness
/// criterion for T_X applies.
inline bool not_big_certificate(const PTClass& cls) {
    if (cls.nvars() != 1 || cls.degree() != 1) throw Error("not_big_certificate: expected a class k z + m H");
    const Rational k = cls.coefficient(1, {0});
    const Rational m = cls.coefficient(0, {1});
    if (k <= 0) throw Error("not_big_certificate: z-coefficient must be positive");
    return m >= 0;
}

inline bool not_big_certificate(const VmrtRow& row) {
    if (row.cls) return not_big_certificate(*row.cls);
    return row.h_coeff >= 0;  // lower bound already non-negative
}

/// z (z+H) (z+3H)^2 (z+4H) on (d, b_3) = (1, 42).
inline Rational certificate_degree1() {
    const BaseProfile p = threefold_profile(1, 42);
    const PTClass z = PTClass::zeta(p);
    const PTClass h = PTClass::pullback(p, "H");
    return eval_product(p, {z, z + h, z + 3 * h, z + 3 * h, z + 4 * h});
}

/// z^2 (z+2H)^3 on (d, b_3) = (2, 20).
inline Rational certificate_degree2_modnef() {
    const BaseProfile p = threefold_profile(2, 20);
    const PTClass z = PTClass::zeta(p);
    const PTClass h = PTClass::pullback(p, "H");
    const PTClass f = z + 2 * h;
    return eval_product(p, {z, z, f, f, f});
}

/// (z^2 (z+2H)^3, z (z+H)(z+4/3 H)(z+3/2 H)^2) on (d, b_3) = (2, 20).
inline std::pair<Rational, Rational> certificate_degree2() {
    const BaseProfile p = threefold_profile(2, 20);
    const PTClass z = PTClass::zeta(p);
    const PTClass h = PTClass::pullback(p, "H");
    const PTClass g = z + Rational(3, 2) * h;
    return {certificate_degree2_modnef(), eval_product(p, {z, z + h, z + Rational(4, 3) * h, g, g})};
}

struct K3QuarticData {
    BaseProfile profile;
    PTClass bitangent_class;  // 6z + 8H
    PTClass normalized;       // z + 4/3 H
    Rational z3, z2h, zh2;
};

inline K3QuarticData k3_quartic_data() {
    K3QuarticData data{hypersurface_profile({2, 4}), {}, {}, 0, 0, 0};
    const BaseProfile& p = data.profile;
    const PTClass z = PTClass::zeta(p);
    const PTClass h = PTClass::pullback(p, "H");
    data.bitangent_class = 6 * z + 8 * h;
    data.normalized = Rational(1, 6) * data.bitangent_class;
    data.z3 = eval_top(p, z.power(3));
    data.z2h = eval_top(p, z * z * h);
    data.zh2 = eval_top(p, z * h * h);
    return data;
}

/// Class text of a table row: "3z - H", or "60z + mH, m >= 180" for bounds.
inline std::string vmrt_row_text(const VmrtRow& row) {
    if (row.cls) return to_string(*row.cls, threefold_profile(row.d));
    return std::to_string(row.k) + "z + mH, m >= " + to_string(row.h_coeff);
}

inline nlohmann::json vmrt_table_json(const std::vector<VmrtRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json j = {{"d", row.d},
                            {"k", row.k},
                            {"r", row.r},
                            {"r_exact", row.r_exact},
                            {"class", vmrt_row_text(row)},
                            {"not_big_certificate", not_big_certificate(row)},
                            {"note", row.note}};
        if (row.r_exact)
            j["h_coefficient"] = to_string(row.h_coeff);
        else
            j["h_coefficient_min"] = to_string(row.h_coeff);
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace tanpos
