// Command-line front end: claim verification, ad-hoc evaluation, and table export.

#include "tanpos/catalog.hpp"
#include "tanpos/claims.hpp"
#include "tanpos/expr.hpp"
#include "tanpos/schur.hpp"
#include "tanpos/surface.hpp"
#include "tanpos/threefold.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifndef TANPOS_DEFAULT_REGISTRY
#define TANPOS_DEFAULT_REGISTRY "data/claims.json"
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

tanpos::BaseProfile load_profile(const std::string& label, const std::string& file) {
    if (file.empty()) return tanpos::find_profile(label);
    std::ifstream in(file);
    if (!in) throw tanpos::Error("cannot open profile file " + file);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw tanpos::Error("profile file " + file + " is not valid JSON: " + e.what());
    }
    return tanpos::profile_from_json(doc);
}

nlohmann::json curve_list(const std::vector<tanpos::CurveClass>& curves) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : curves) out.push_back(c.coeffs);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact intersection numbers on projectivised tangent bundles"};
    app.require_subcommand(1);

    std::string registry = TANPOS_DEFAULT_REGISTRY;
    std::string filter;
    std::string format = "json";
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "Recompute every registered claim");
    verify->add_option("--filter", filter, "Only claims whose id starts with this prefix");
    verify->add_option("--format", format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
    verify->add_option("--registry", registry, "Claim registry path");
    verify->add_flag("--timing", timing, "Include per-claim elapsed time in JSON output");

    std::string profile_label, profile_file, expr;
    auto* eval = app.add_subcommand("eval", "Evaluate a top-degree class on P(T_X)");
    eval->add_option("--profile", profile_label, "Profile label");
    eval->add_option("--profile-file", profile_file, "Profile JSON document (overrides --profile)");
    eval->add_option("--expr", expr, "Class expression, e.g. z^2*(z+2*H)^3")->required();

    auto* surface = app.add_subcommand("surface", "Del Pezzo surface lattice data");
    surface->require_subcommand(1);
    int degree = 0;
    bool conics = false;
    auto* curves = surface->add_subcommand("curves", "List (-1)-curves or conic classes as integer vectors");
    curves->add_option("--degree", degree, "Degree 1..7")->required();
    curves->add_flag("--conics", conics, "List conic classes instead of (-1)-curves");

    auto* vmrt = app.add_subcommand("vmrt", "Dual VMRT classes of del Pezzo threefolds");
    vmrt->require_subcommand(1);
    std::string table_format = "json";
    auto* table = vmrt->add_subcommand("table", "Print the table for d = 1..5");
    table->add_option("--format", table_format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));

    auto* schur = app.add_subcommand("schur", "Schur functor dimensions");
    schur->require_subcommand(1);
    std::vector<int> partition;
    int dim = 0;
    auto* schur_dim_cmd = schur->add_subcommand("dim", "dim S_mu(V)");
    schur_dim_cmd->add_option("--partition", partition, "Parts, comma separated")->delimiter(',')->required();
    schur_dim_cmd->add_option("--dim", dim, "dim V")->required();

    std::string show_label;
    auto* profile = app.add_subcommand("profile", "Print a named profile as JSON");
    profile->add_option("--label", show_label, "Profile label")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify) {
            const auto claims = tanpos::load_registry(registry);
            const auto report = tanpos::run_claims(claims, filter);
            std::cout << (format == "markdown" ? tanpos::emit_markdown(report) : tanpos::emit_json(report, timing));
            return report.fail == 0 ? kExitOk : kExitFail;
        }
        if (*eval) {
            if (profile_label.empty() && profile_file.empty()) throw tanpos::Error("eval needs --profile or --profile-file");
            const auto p = load_profile(profile_label, profile_file);
            const auto cls = tanpos::parse_expr(p, expr);
            std::cout << tanpos::to_string(tanpos::eval_top(p, cls)) << "\n";
            return kExitOk;
        }
        if (*curves) {
            const auto lat = tanpos::surface_lattice(degree);
            std::cout << curve_list(conics ? tanpos::conic_classes(lat) : tanpos::minus_one_curves(lat)).dump() << "\n";
            return kExitOk;
        }
        if (*table) {
            const auto rows = tanpos::vmrt_table();
            if (table_format == "markdown")
                std::cout << tanpos::emit_vmrt_markdown(rows);
            else
                std::cout << tanpos::vmrt_table_json(rows).dump(2) << "\n";
            return kExitOk;
        }
        if (*schur_dim_cmd) {
            std::cout << tanpos::schur_dim(tanpos::Partition(partition), dim) << "\n";
            return kExitOk;
        }
        if (*profile) {
            std::cout << tanpos::to_json(tanpos::find_profile(show_label)).dump(2) << "\n";
            return kExitOk;
        }
    } catch (const tanpos::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
