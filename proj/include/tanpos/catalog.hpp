#pragma once

// Named profiles, so classes can be written and evaluated by label.

#include "tanpos/hypersurface.hpp"
#include "tanpos/profile.hpp"
#include "tanpos/surface.hpp"
#include "tanpos/threefold.hpp"

#include <regex>
#include <string>
#include <vector>

namespace tanpos {

/// Accepted labels:
///   cubic-surface          two-symbol cubic surface {H, F}
///   dp-surface-deg<d>      del Pezzo surface on its lattice basis, d = 1..7
///   hyp-n<n>-d<d>          hypersurface of degree d in P^{n+1}
///   dp3-d<d>-b<b3>         del Pezzo threefold with given b_3
///   dp3-degree<d>          del Pezzo threefold with the default b_3
///   k3-quartic             alias of hyp-n2-d4
inline BaseProfile find_profile(const std::string& label) {
    static const std::regex surface(R"(dp-surface-deg(\d+))");
    static const std::regex hyp(R"(hyp-n(\d+)-d(\d+))");
    static const std::regex threefold(R"(dp3-d(\d+)-b(\d+))");
    static const std::regex threefold_default(R"(dp3-degree(\d+))");
    std::smatch m;
    auto num = [&](std::size_t i) {
        if (m[i].length() > 4) throw Error("numeric field too large in profile label " + label);
        return std::stoi(m[i].str());
    };
    if (label == "cubic-surface") return cubic_surface_profile();
    if (label == "k3-quartic") return hypersurface_profile({2, 4});
    if (std::regex_match(label, m, surface)) return surface_profile(surface_lattice(num(1)));
    if (std::regex_match(label, m, hyp)) return hypersurface_profile({num(1), num(2)});
    if (std::regex_match(label, m, threefold)) return threefold_profile(num(1), num(2));
    if (std::regex_match(label, m, threefold_default)) return threefold_profile(num(1));
    throw Error("unknown profile label '" + label + "'");
}

}  // namespace tanpos
