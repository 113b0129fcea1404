#pragma once

// Claim registry: every checked number is a JSON record naming the operation
// that recomputes it and the exact value it must produce.

#include "tanpos/catalog.hpp"
#include "tanpos/chow.hpp"
#include "tanpos/expr.hpp"
#include "tanpos/hypersurface.hpp"
#include "tanpos/schur.hpp"
#include "tanpos/surface.hpp"
#include "tanpos/threefold.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace tanpos {

using nlohmann::json;

struct ClassValue {
    PTClass cls;
};

using Computed = std::variant<Rational, bool, ClassValue>;

struct Expected {
    enum class Kind { Rational, Integer, Boolean, Class, Interval };
    Kind kind = Kind::Rational;
    Rational number;                 // Rational, Integer
    bool flag = false;               // Boolean
    std::string class_text;          // Class
    std::optional<Rational> lower;   // Interval
    std::optional<Rational> upper;
    bool lower_inclusive = true;
    bool upper_inclusive = true;
};

struct Claim {
    std::string id;
    std::string module;
    std::string description;
    std::string anchor;
    std::string provenance;  // PAPER | TRIVIAL | DERIVED
    std::string op;
    json args;
    Expected expected;
};

enum class Status { Pass, Fail, Skipped };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

struct ClaimResult {
    std::string id;
    std::string module;
    Status status = Status::Skipped;
    std::string computed;
    std::string expected;
    std::string diagnostic;
    double elapsed_ms = 0;
};

struct Report {
    std::vector<ClaimResult> claims;
    int pass = 0, fail = 0, skipped = 0;
};

// ---------------------------------------------------------------- parsing

inline Expected expected_from_json(const json& j) {
    Expected e;
    const std::string type = j.at("type").get<std::string>();
    if (type == "rational") {
        e.kind = Expected::Kind::Rational;
        e.number = parse_rational(j.at("value").get<std::string>());
    } else if (type == "integer") {
        e.kind = Expected::Kind::Integer;
        e.number = j.at("value").get<long long>();
    } else if (type == "boolean") {
        e.kind = Expected::Kind::Boolean;
        e.flag = j.at("value").get<bool>();
    } else if (type == "class") {
        e.kind = Expected::Kind::Class;
        e.class_text = j.at("value").get<std::string>();
    } else if (type == "interval") {
        e.kind = Expected::Kind::Interval;
        if (j.contains("min")) e.lower = parse_rational(j.at("min").get<std::string>());
        if (j.contains("max")) e.upper = parse_rational(j.at("max").get<std::string>());
        e.lower_inclusive = j.value("min_inclusive", true);
        e.upper_inclusive = j.value("max_inclusive", true);
        if (!e.lower && !e.upper) throw Error("interval needs min or max");
    } else {
        throw Error("unknown expected type '" + type + "'");
    }
    return e;
}

inline std::string describe(const Expected& e) {
    switch (e.kind) {
        case Expected::Kind::Rational:
        case Expected::Kind::Integer: return to_string(e.number);
        case Expected::Kind::Boolean: return e.flag ? "true" : "false";
        case Expected::Kind::Class: return e.class_text;
        case Expected::Kind::Interval: {
            std::string lo = e.lower ? (e.lower_inclusive ? "[" : "(") + to_string(*e.lower) : "(-inf";
            std::string hi = e.upper ? to_string(*e.upper) + (e.upper_inclusive ? "]" : ")") : "+inf)";
            return lo + ", " + hi;
        }
    }
    return "?";
}

inline std::vector<Claim> parse_registry(const json& doc) {
    static const std::set<std::string> provenances{"PAPER", "TRIVIAL", "DERIVED"};
    std::vector<Claim> claims;
    std::set<std::string> seen;
    for (const auto& j : doc.at("claims")) {
        Claim c;
        try {
            c.id = j.at("id").get<std::string>();
            c.module = j.at("module").get<std::string>();
            c.description = j.value("description", "");
            c.anchor = j.value("anchor", "");
            c.provenance = j.at("provenance").get<std::string>();
            c.op = j.at("op").get<std::string>();
            c.args = j.value("args", json::object());
            c.expected = expected_from_json(j.at("expected"));
        } catch (const json::exception& e) {
            throw Error("registry entry " + (c.id.empty() ? std::string("<no id>") : c.id) + ": " + e.what());
        }
        if (!seen.insert(c.id).second) throw Error("duplicate claim id " + c.id);
        if (!provenances.count(c.provenance)) throw Error("claim " + c.id + ": bad provenance " + c.provenance);
        claims.push_back(std::move(c));
    }
    return claims;
}

inline std::vector<Claim> load_registry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open registry " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error("registry " + path + " is not valid JSON: " + e.what());
    }
    return parse_registry(doc);
}

// ------------------------------------------------------------- operations

namespace detail {

inline int arg_int(const json& a, const char* key) {
    if (!a.contains(key)) throw Error(std::string("missing argument '") + key + "'");
    return a.at(key).get<int>();
}

inline std::string arg_str(const json& a, const char* key) {
    if (!a.contains(key)) throw Error(std::string("missing argument '") + key + "'");
    return a.at(key).get<std::string>();
}

inline Poly base_poly(const BaseProfile& p, const std::string& text) {
    PTClass c = parse_expr(p, text);
    Poly out(p.nvars());
    for (const auto& [k, v] : c.terms()) {
        if (k.first != 0) throw Error("expression '" + text + "' must not involve z");
        out.add_term(k.second, v);
    }
    return out;
}

inline PicardLattice lattice_arg(const json& a) { return surface_lattice(arg_int(a, "degree")); }

template <class T>
bool all_equal(const std::vector<T>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

}  // namespace detail

using OpFn = std::function<Computed(const json&)>;

/// Operation name -> evaluator. Names match the library functions they call.
inline const std::map<std::string, OpFn>& operation_table() {
    using namespace detail;
    static const std::map<std::string, OpFn> table = {
        // chow-engine
        {"segre_omega",
         [](const json& a) -> Computed {
             const BaseProfile p = find_profile(arg_str(a, "profile"));
             const int j = arg_int(a, "j");
             if (j < 0 || j > p.dim) throw Error("segre index out of range");
             if (a.value("check", "") == "inversion") {
                 const auto s = segre_omega(p);
                 const auto c = chern_omega(p);
                 Poly prod(p.nvars());
                 for (int i = 0; i <= j; ++i) prod += s[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(j - i)];
                 return prod == (j == 0 ? Poly::constant(p.nvars(), 1) : Poly(p.nvars()));
             }
             const Poly times = base_poly(p, a.value("times", std::string("1")));
             return p.integrate(segre_omega(p)[static_cast<std::size_t>(j)] * times);
         }},
        {"eval_top",
         [](const json& a) -> Computed {
             const BaseProfile p = find_profile(arg_str(a, "profile"));
             return eval_top(p, parse_expr(p, arg_str(a, "expr")));
         }},
        {"eval_product",
         [](const json& a) -> Computed {
             const BaseProfile p = find_profile(arg_str(a, "profile"));
             std::vector<PTClass> factors;
             for (const auto& f : a.at("factors")) factors.push_back(parse_expr(p, f.get<std::string>()));
             return eval_product(p, factors);
         }},
        {"restrict_to_section",
         [](const json& a) -> Computed {
             const auto split = a.at("splitting").get<std::vector<int>>();
             return restrict_to_section(split, arg_int(a, "quotient_index"), parse_rational(arg_str(a, "eps")));
         }},
        {"dual_vmrt_generic",
         [](const json& a) -> Computed {
             const BaseProfile p = find_profile(arg_str(a, "profile"));
             return ClassValue{dual_vmrt_generic(p, arg_int(a, "deg_e"), base_poly(p, arg_str(a, "pushforward_c1")))};
         }},
        // hypersurfaces
        {"hypersurface_profile",
         [](const json& a) -> Computed {
             const BaseProfile p = hypersurface_profile({arg_int(a, "n"), arg_int(a, "d")});
             const int j = arg_int(a, "chern");
             return p.integrate(p.c(j) * base_poly(p, a.value("times", std::string("1"))));
         }},
        {"segre_closed_form",
         [](const json& a) -> Computed {
             return segre_closed_form({arg_int(a, "n"), arg_int(a, "d")}, arg_int(a, "l"));
         }},
        {"cubic_mnef_number", [](const json& a) -> Computed { return cubic_mnef_number(arg_int(a, "n")); }},
        {"sum_positive_part", [](const json& a) -> Computed { return sum_positive_part(arg_int(a, "n")); }},
        {"sum_negative_part", [](const json& a) -> Computed { return sum_negative_part(arg_int(a, "n")); }},
        {"comb_identity_A",
         [](const json& a) -> Computed {
             const auto r = comb_identity_A(arg_int(a, "k"), arg_int(a, "n"));
             const std::string field = a.value("field", std::string("brute"));
             if (field == "brute") return r.brute_sum;
             if (!r.closed_form) throw Error("no closed form for this k");
             if (field == "closed") return *r.closed_form;
             if (field == "agree") return r.brute_sum == *r.closed_form;
             throw Error("unknown field " + field);
         }},
        {"recursion_check_A",
         [](const json& a) -> Computed { return recursion_check_A(arg_int(a, "k"), arg_int(a, "n")); }},
        // delpezzo-surfaces
        {"surface_lattice",
         [](const json& a) -> Computed {
             const PicardLattice lat = lattice_arg(a);
             const std::string field = arg_str(a, "field");
             if (field == "rank") return Rational(lat.rank());
             if (field == "K2") return Rational(lat.dot(lat.canonical(), lat.canonical()));
             throw Error("unknown field " + field);
         }},
        {"minus_one_curves",
         [](const json& a) -> Computed { return Rational(minus_one_curves(lattice_arg(a)).size()); }},
        {"conic_classes",
         [](const json& a) -> Computed {
             const PicardLattice lat = lattice_arg(a);
             const auto conics = conic_classes(lat);
             const std::string property = a.value("property", std::string("count"));
             if (property == "count") return Rational(conics.size());
             if (property == "pairwise_dot_one") {
                 for (std::size_t i = 0; i < conics.size(); ++i)
                     for (std::size_t j = i + 1; j < conics.size(); ++j)
                         if (lat.dot(conics[i], conics[j]) != 1) return false;
                 return true;
             }
             if (property == "minus_k_minus_line") {
                 auto lines = minus_one_curves(lat);
                 std::vector<CurveClass> image;
                 for (const auto& l : lines) image.push_back(-1 * lat.canonical() - l);
                 std::sort(image.begin(), image.end());
                 return image == conics;
             }
             throw Error("unknown property " + property);
         }},
        {"degenerate_members",
         [](const json& a) -> Computed {
             const PicardLattice lat = lattice_arg(a);
             if (lat.degree() < 3) throw Error("degenerate_members claims cover degree >= 3");
             const std::string property = a.value("property", std::string("count"));
             if (property == "count") {
                 std::vector<std::size_t> counts;
                 for (const auto& f : conic_classes(lat)) counts.push_back(degenerate_members(lat, f).size());
                 if (counts.empty() || !all_equal(counts)) throw Error("pencils disagree on degenerate member count");
                 return Rational(counts.front());
             }
             if (property == "pair_covers_all_lines") {
                 // Degree 4: both pencils of every pair together contain all 16 lines.
                 const auto lines = minus_one_curves(lat);
                 for (const auto& [c, c2] : degree4_pencil_pairs()) {
                     std::set<CurveClass> covered;
                     for (const auto& f : {c, c2})
                         for (const auto& [l1, l2] : degenerate_members(lat, f)) {
                             covered.insert(l1);
                             covered.insert(l2);
                         }
                     if (covered.size() != lines.size()) return false;
                 }
                 return true;
             }
             throw Error("unknown property " + property);
         }},
        {"conic_vmrt_class",
         [](const json& a) -> Computed {
             const PicardLattice lat = lattice_arg(a);
             const std::string combine = arg_str(a, "combine");
             if (combine == "first") return ClassValue{conic_vmrt_class(lat, conic_classes(lat).front())};
             if (combine == "pair_sum") {
                 std::vector<PTClass> sums;
                 for (const auto& [c, c2] : degree4_pencil_pairs())
                     sums.push_back(conic_vmrt_class(lat, c) + conic_vmrt_class(lat, c2));
                 if (sums.empty() || !all_equal(sums)) throw Error("pencil pairs disagree");
                 return ClassValue{sums.front()};
             }
             if (combine == "sum") {
                 PTClass total(surface_profile(lat));
                 for (const auto& f : conic_classes(lat)) total += conic_vmrt_class(lat, f);
                 return ClassValue{total};
             }
             throw Error("unknown combine mode " + combine);
         }},
        {"cubic_surface_certificate",
         [](const json& a) -> Computed {
             const std::string field = arg_str(a, "field");
             if (field == "lattice_agrees") {
                 const auto cert = cubic_surface_certificate();
                 for (const auto& f : conic_classes(surface_lattice(3)))
                     if (cubic_certificate_on_lattice(f) != std::pair{cert.a, cert.b}) return false;
                 return true;
             }
             const auto cert = cubic_surface_certificate();
             if (field == "a") return cert.a;
             if (field == "b") return cert.b;
             if (field == "budget") return cert.budget;
             if (field == "boundary") return cert.a - Rational(1, 4) * cert.b;
             throw Error("unknown field " + field);
         }},
        {"degree4_pairing", [](const json&) -> Computed { return degree4_pairing(); }},
        {"degree5_sum", [](const json&) -> Computed { return degree5_sum(); }},
        {"chi_sym_tangent_surface",
         [](const json& a) -> Computed {
             if (a.value("coefficient", std::string()) == "m3") return chi_sym_leading_coefficient(arg_int(a, "degree"));
             return chi_sym_tangent_surface(arg_int(a, "degree"), arg_int(a, "m"));
         }},
        {"noether_check", [](const json& a) -> Computed { return noether_check(arg_int(a, "degree")); }},
        // delpezzo-threefolds
        {"threefold_profile",
         [](const json& a) -> Computed {
             const auto t = threefold_numbers(threefold_profile(arg_int(a, "d"), arg_int(a, "b3")));
             const std::string field = arg_str(a, "field");
             if (field == "z5") return t.z5;
             if (field == "z4h") return t.z4h;
             if (field == "z3h2") return t.z3h2;
             throw Error("unknown field " + field);
         }},
        {"vmrt_class_threefold",
         [](const json& a) -> Computed {
             return ClassValue{vmrt_class_threefold(arg_int(a, "d"), arg_int(a, "k"), arg_int(a, "r"))};
         }},
        {"vmrt_table",
         [](const json& a) -> Computed {
             const int d = arg_int(a, "d");
             for (const auto& row : vmrt_table()) {
                 if (row.d != d) continue;
                 if (a.value("field", std::string()) == "k") return Rational(row.k);
                 if (row.cls) return ClassValue{*row.cls};
                 return row.h_coeff;  // lower bound of the H-coefficient
             }
             throw Error("no table row for d = " + std::to_string(d));
         }},
        {"not_big_certificate",
         [](const json& a) -> Computed {
             const int d = arg_int(a, "d");
             for (const auto& row : vmrt_table())
                 if (row.d == d) return not_big_certificate(row);
             throw Error("no table row for d = " + std::to_string(d));
         }},
        {"certificate_degree1", [](const json&) -> Computed { return certificate_degree1(); }},
        {"certificate_degree2",
         [](const json& a) -> Computed {
             const auto c = certificate_degree2();
             return arg_int(a, "index") == 0 ? c.first : c.second;
         }},
        {"certificate_degree2_modnef", [](const json&) -> Computed { return certificate_degree2_modnef(); }},
        {"k3_quartic_data",
         [](const json& a) -> Computed {
             const auto k3 = k3_quartic_data();
             const std::string field = arg_str(a, "field");
             if (field == "class") return ClassValue{k3.bitangent_class};
             if (field == "normalized") return ClassValue{k3.normalized};
             if (field == "z3") return k3.z3;
             if (field == "z2h") return k3.z2h;
             if (field == "zh2") return k3.zh2;
             throw Error("unknown field " + field);
         }},
        // schur-bott
        {"schur_dim",
         [](const json& a) -> Computed {
             return Rational(schur_dim(Partition(a.at("partition").get<std::vector<int>>()), arg_int(a, "N")));
         }},
        {"plethysm_rectangle_check",
         [](const json& a) -> Computed { return plethysm_rectangle_check(arg_int(a, "n"), arg_int(a, "k")); }},
        {"euler_char_forms",
         [](const json& a) -> Computed {
             return euler_char_forms(arg_int(a, "n"), arg_int(a, "p"), arg_int(a, "k"));
         }},
        {"bott_vanishing",
         [](const json& a) -> Computed { return bott_vanishing(arg_int(a, "n"), arg_int(a, "r"), arg_int(a, "j")); }},
        {"bridge_identity_check",
         [](const json& a) -> Computed {
             return bridge_identity_check(arg_int(a, "n"), arg_int(a, "d"), arg_int(a, "k"));
         }},
        // verify-cli
        {"parse_expr",
         [](const json& a) -> Computed {
             const BaseProfile p = find_profile(arg_str(a, "profile"));
             return eval_top(p, parse_expr(p, arg_str(a, "expr")));
         }},
    };
    return table;
}

/// Operations of the computational modules, each of which must be exercised
/// by the registry or listed in docs/uncovered_ops.txt.
inline const std::vector<std::string>& module_operations() {
    static const std::vector<std::string> ops = {
        "segre_omega", "eval_top", "eval_product", "restrict_to_section", "dual_vmrt_generic",
        "hypersurface_profile", "segre_closed_form", "cubic_mnef_number", "sum_positive_part",
        "sum_negative_part", "comb_identity_A", "recursion_check_A",
        "surface_lattice", "minus_one_curves", "conic_classes", "degenerate_members", "conic_vmrt_class",
        "cubic_surface_certificate", "degree4_pairing", "degree5_sum", "chi_sym_tangent_surface", "noether_check",
        "threefold_profile", "vmrt_class_threefold", "vmrt_table", "not_big_certificate", "certificate_degree1",
        "certificate_degree2", "certificate_degree2_modnef", "k3_quartic_data",
        "schur_dim", "plethysm_rectangle_check", "euler_char_forms", "bott_vanishing", "bridge_identity_check",
    };
    return ops;
}

// ----------------------------------------------------------------- runner

inline std::string describe(const Computed& c) {
    if (const auto* q = std::get_if<Rational>(&c)) return to_string(*q);
    if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
    const auto& cls = std::get<ClassValue>(c).cls;
    return to_string(cls, find_profile(cls.profile_label()));
}

/// Exact comparison; intervals test membership.
inline bool matches(const Computed& c, const Expected& e) {
    using K = Expected::Kind;
    switch (e.kind) {
        case K::Rational:
        case K::Integer: {
            const auto* q = std::get_if<Rational>(&c);
            return q && *q == e.number;
        }
        case K::Boolean: {
            const auto* b = std::get_if<bool>(&c);
            return b && *b == e.flag;
        }
        case K::Class: {
            const auto* v = std::get_if<ClassValue>(&c);
            if (!v) return false;
            return parse_expr(find_profile(v->cls.profile_label()), e.class_text) == v->cls;
        }
        case K::Interval: {
            const auto* q = std::get_if<Rational>(&c);
            if (!q) return false;
            const bool above = !e.lower || (e.lower_inclusive ? *q >= *e.lower : *q > *e.lower);
            const bool below = !e.upper || (e.upper_inclusive ? *q <= *e.upper : *q < *e.upper);
            return above && below;
        }
    }
    return false;
}

inline ClaimResult run_claim(const Claim& claim) {
    ClaimResult r;
    r.id = claim.id;
    r.module = claim.module;
    r.expected = describe(claim.expected);
    const auto start = std::chrono::steady_clock::now();
    const auto& table = operation_table();
    auto it = table.find(claim.op);
    if (it == table.end()) {
        r.status = Status::Fail;
        r.diagnostic = "unknown operation '" + claim.op + "'";
    } else {
        try {
            const Computed c = it->second(claim.args);
            r.computed = describe(c);
            r.status = matches(c, claim.expected) ? Status::Pass : Status::Fail;
        } catch (const std::exception& e) {
            r.status = Status::Fail;
            r.diagnostic = e.what();
        }
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// Runs every claim whose id starts with `prefix`, in registry order.
inline Report run_claims(const std::vector<Claim>& registry, const std::string& prefix = "") {
    Report report;
    for (const auto& claim : registry) {
        if (claim.id.rfind(prefix, 0) != 0) continue;
        ClaimResult r = run_claim(claim);
        switch (r.status) {
            case Status::Pass: ++report.pass; break;
            case Status::Fail: ++report.fail; break;
            case Status::Skipped: ++report.skipped; break;
        }
        report.claims.push_back(std::move(r));
    }
    return report;
}

// ------------------------------------------------------------------- emit

/// Timings are omitted unless asked for, so the default output is byte-stable.
inline std::string emit_json(const Report& report, bool with_timing = false) {
    json claims = json::array();
    for (const auto& r : report.claims) {
        json j = {{"id", r.id},           {"module", r.module},     {"status", to_string(r.status)},
                  {"computed", r.computed}, {"expected", r.expected}};
        if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
        if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
        claims.push_back(std::move(j));
    }
    json doc = {{"claims", claims},
                {"summary", {{"pass", report.pass}, {"fail", report.fail}, {"skipped", report.skipped}}}};
    return doc.dump(2) + "\n";
}

inline std::string emit_markdown(const Report& report) {
    std::vector<std::string> modules;
    for (const auto& r : report.claims)
        if (std::find(modules.begin(), modules.end(), r.module) == modules.end()) modules.push_back(r.module);

    std::ostringstream out;
    out << "# Claim report\n\n";
    out << "pass " << report.pass << ", fail " << report.fail << ", skipped " << report.skipped << "\n";
    for (const auto& m : modules) {
        out << "\n## " << m << "\n\n| claim | expected | computed | status |\n|---|---|---|---|\n";
        for (const auto& r : report.claims) {
            if (r.module != m) continue;
            std::string computed = r.computed.empty() ? r.diagnostic : r.computed;
            out << "| " << r.id << " | " << r.expected << " | " << computed << " | " << to_string(r.status) << " |\n";
        }
    }
    return out.str();
}

/// Markdown layout of the dual VMRT table: one row per degree.
inline std::string emit_vmrt_markdown(const std::vector<VmrtRow>& rows) {
    std::ostringstream out;
    out << "| d | k | r | [C] | T_X not big |\n|---|---|---|---|---|\n";
    for (const auto& row : rows)
        out << "| " << row.d << " | " << row.k << " | " << (row.r_exact ? "" : ">= ") << row.r << " | "
            << vmrt_row_text(row) << " | " << (not_big_certificate(row) ? "yes" : "no") << " |\n";
    return out.str();
}

}  // namespace tanpos
