#pragma once

// Del Pezzo surfaces of degree 1..7 as blow-ups of P^2 in 9-d points:
// Picard lattice Z^{1+r} with basis H, E_1..E_r and form diag(1, -1, ..., -1).

#include "tanpos/chow.hpp"
#include "tanpos/profile.hpp"
#include "tanpos/pt_class.hpp"
#include "tanpos/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace tanpos {

struct CurveClass {
    std::vector<int> coeffs;  // coefficients on H, E_1, ..., E_r

    friend CurveClass operator+(const CurveClass& a, const CurveClass& b) {
        CurveClass r = a;
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs.at(i);
        return r;
    }
    friend CurveClass operator-(const CurveClass& a, const CurveClass& b) {
        CurveClass r = a;
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs.at(i);
        return r;
    }
    friend CurveClass operator*(int s, const CurveClass& a) {
        CurveClass r = a;
        for (int& c : r.coeffs) c *= s;
        return r;
    }
    friend bool operator==(const CurveClass&, const CurveClass&) = default;
    friend auto operator<=>(const CurveClass&, const CurveClass&) = default;
};

class PicardLattice {
public:
    explicit PicardLattice(int degree) : degree_(degree) {
        if (degree < 1 || degree > 7) throw Error("del Pezzo degree must lie in 1..7, got " + std::to_string(degree));
    }

    int degree() const { return degree_; }
    int rank() const { return 10 - degree_; }
    int blown_up_points() const { return 9 - degree_; }

    int dot(const CurveClass& a, const CurveClass& b) const {
        check(a);
        check(b);
        int s = a.coeffs[0] * b.coeffs[0];
        for (int i = 1; i < rank(); ++i) s -= a.coeffs[static_cast<std::size_t>(i)] * b.coeffs[static_cast<std::size_t>(i)];
        return s;
    }

    int gram(int i, int j) const {
        if (i != j) return 0;
        return i == 0 ? 1 : -1;
    }

    CurveClass canonical() const {
        CurveClass k{std::vector<int>(static_cast<std::size_t>(rank()), 1)};
        k.coeffs[0] = -3;
        return k;
    }

    CurveClass zero() const { return CurveClass{std::vector<int>(static_cast<std::size_t>(rank()), 0)}; }

    CurveClass basis_vector(int i) const {
        CurveClass c = zero();
        c.coeffs.at(static_cast<std::size_t>(i)) = 1;
        return c;
    }

    /// -K . C
    int anticanonical_degree(const CurveClass& c) const { return -dot(canonical(), c); }

    bool is_minus_one_curve(const CurveClass& c) const { return dot(c, c) == -1 && anticanonical_degree(c) == 1; }
    bool is_conic(const CurveClass& c) const { return dot(c, c) == 0 && anticanonical_degree(c) == 2; }

    /// Simple roots H - E1 - E2 - E3 (when r >= 3) and E_i - E_{i+1}.
    std::vector<CurveClass> simple_roots() const {
        std::vector<CurveClass> roots;
        const int r = blown_up_points();
        if (r >= 3) {
            CurveClass a = basis_vector(0);
            for (int i = 1; i <= 3; ++i) a = a - basis_vector(i);
            roots.push_back(a);
        }
        for (int i = 1; i < r; ++i) roots.push_back(basis_vector(i) - basis_vector(i + 1));
        return roots;
    }

    CurveClass reflect(const CurveClass& c, const CurveClass& root) const {
        return c + dot(c, root) * root;
    }

    void check(const CurveClass& c) const {
        if (c.coeffs.size() != static_cast<std::size_t>(rank()))
            throw Error("curve class of length " + std::to_string(c.coeffs.size()) + " on lattice of rank " +
                        std::to_string(rank()));
    }

private:
    int degree_;
};

inline PicardLattice surface_lattice(int degree) { return PicardLattice(degree); }

namespace detail {

// All classes a H - sum m_i E_i with 0 <= a <= 7, -1 <= m_i <= 4,
// C^2 = self_intersection and -K.C = anticanonical_degree.
inline std::vector<CurveClass> enumerate_classes(const PicardLattice& lat, int self_intersection,
                                                 int anticanonical_degree) {
    constexpr int kMaxA = 7, kMinM = -1, kMaxM = 4;
    const int r = lat.blown_up_points();
    std::vector<CurveClass> found;
    std::vector<int> mult(static_cast<std::size_t>(r), 0);

    // Remaining targets: sum of m over unfilled slots, sum of m^2 over unfilled slots.
    auto search = [&](auto&& self, int pos, int sum_left, int sq_left, int a) -> void {
        const int slots = r - pos;
        if (slots == 0) {
            if (sum_left == 0 && sq_left == 0) {
                CurveClass c{std::vector<int>(static_cast<std::size_t>(r) + 1)};
                c.coeffs[0] = a;
                for (int i = 0; i < r; ++i) c.coeffs[static_cast<std::size_t>(i) + 1] = -mult[static_cast<std::size_t>(i)];
                found.push_back(std::move(c));
            }
            return;
        }
        if (sq_left < 0 || sum_left < kMinM * slots || sum_left > kMaxM * slots) return;
        // Cauchy-Schwarz: sum_left^2 <= slots * sq_left
        if (static_cast<long long>(sum_left) * sum_left > static_cast<long long>(slots) * sq_left) return;
        for (int m = kMinM; m <= kMaxM; ++m) {
            mult[static_cast<std::size_t>(pos)] = m;
            self(self, pos + 1, sum_left - m, sq_left - m * m, a);
        }
    };

    // C^2 = a^2 - sum m^2,  -K.C = 3a - sum m
    for (int a = 0; a <= kMaxA; ++a) search(search, 0, 3 * a - anticanonical_degree, a * a - self_intersection, a);
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace detail

/// Every class with C^2 = -1 and K.C = -1, sorted lexicographically.
inline std::vector<CurveClass> minus_one_curves(const PicardLattice& lat) {
    return detail::enumerate_classes(lat, -1, 1);
}

/// Every conic class (F^2 = 0, -K.F = 2), sorted lexicographically.
/// Degrees 1 and 2 are rejected: conics there leave the search box.
inline std::vector<CurveClass> conic_classes(const PicardLattice& lat) {
    if (lat.degree() < 3) throw Error("conic_classes: degree must be at least 3");
    return detail::enumerate_classes(lat, 0, 2);
}

/// Reducible members l1 + l2 of the pencil |F|; each pair has l1 < l2.
inline std::vector<std::pair<CurveClass, CurveClass>> degenerate_members(const PicardLattice& lat,
                                                                         const CurveClass& fibre) {
    lat.check(fibre);
    if (!lat.is_conic(fibre)) throw Error("degenerate_members: class is not a conic class");
    const auto lines = minus_one_curves(lat);
    std::vector<std::pair<CurveClass, CurveClass>> pairs;
    for (const auto& l : lines) {
        CurveClass other = fibre - l;
        if (l < other && std::binary_search(lines.begin(), lines.end(), other)) pairs.emplace_back(l, other);
    }
    return pairs;
}

inline std::string surface_label(int degree) { return "dp-surface-deg" + std::to_string(degree); }

/// Profile on the full lattice basis: H^2 = 1, E_i^2 = -1, c_1 = -K, c_2 = 12 - d.
inline BaseProfile surface_profile(const PicardLattice& lat) {
    BaseProfile p;
    p.label = surface_label(lat.degree());
    p.dim = 2;
    p.basis.push_back("H");
    for (int i = 1; i <= lat.blown_up_points(); ++i) p.basis.push_back("E" + std::to_string(i));
    const auto nv = p.basis.size();
    for (std::size_t i = 0; i < nv; ++i) {
        Exponents e(nv, 0);
        e[i] = 2;
        p.top_form[e] = lat.gram(static_cast<int>(i), static_cast<int>(i));
    }
    Poly c1(nv);
    const CurveClass k = lat.canonical();
    for (std::size_t i = 0; i < nv; ++i) c1 += Poly::variable(nv, i, -k.coeffs[i]);
    Exponents h2(nv, 0);
    h2[0] = 2;
    p.chern = {c1, Poly::monomial(h2, 12 - lat.degree())};
    return p;
}

inline Poly divisor(const BaseProfile& profile, const CurveClass& c) {
    if (c.coeffs.size() != profile.nvars()) throw Error("curve class does not match profile " + profile.label);
    Poly p(profile.nvars());
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) p += Poly::variable(profile.nvars(), i, c.coeffs[i]);
    return p;
}

/// z + pi^*(K + 2F): total dual VMRT of the conic bundle given by |F|.
inline PTClass conic_vmrt_class(const PicardLattice& lat, const CurveClass& fibre) {
    lat.check(fibre);
    if (!lat.is_conic(fibre)) throw Error("conic_vmrt_class: class is not a conic class");
    const BaseProfile p = surface_profile(lat);
    const CurveClass relative_canonical = lat.canonical() + 2 * fibre;
    return dual_vmrt_generic(p, 1, -divisor(p, relative_canonical));
}

/// Two-symbol model of a cubic surface: H = -K, F a conic fibre.
inline BaseProfile cubic_surface_profile() {
    BaseProfile p;
    p.label = "cubic-surface";
    p.dim = 2;
    p.basis = {"H", "F"};
    p.top_form[{2, 0}] = 3;
    p.top_form[{1, 1}] = 2;
    p.top_form[{0, 2}] = 0;
    p.chern = {Poly::monomial({1, 0}), Poly::monomial({2, 0}, 3)};
    return p;
}

struct CubicCertificate {
    Rational a;       // z . [C] . (z + pi^*H)
    Rational b;       // [C]^2 . (z + pi^*H)
    Rational budget;  // (z - 1/4 sum_i [C_i]) . fibre line
};

inline CubicCertificate cubic_surface_certificate() {
    const BaseProfile p = cubic_surface_profile();
    const PTClass z = PTClass::zeta(p);
    const PTClass nef = z + PTClass::pullback(p, "H");
    const Poly k = p.canonical();
    const PTClass vmrt = dual_vmrt_generic(p, 1, -(k + 2 * p.symbol("F")));

    CubicCertificate cert;
    cert.a = eval_product(p, {z, vmrt, nef});
    cert.b = eval_product(p, {vmrt, vmrt, nef});

    // One conic bundle per line: the 27 pencils of the cubic.
    const PicardLattice lat(3);
    const BaseProfile full = surface_profile(lat);
    PTClass combination = PTClass::zeta(full);
    for (const auto& f : conic_classes(lat)) combination -= Rational(1, 4) * conic_vmrt_class(lat, f);
    cert.budget = fibre_degree(combination);
    return cert;
}

/// (a, b) for one conic pencil computed on the full rank-7 lattice with H = -K.
inline std::pair<Rational, Rational> cubic_certificate_on_lattice(const CurveClass& fibre) {
    const PicardLattice lat(3);
    const BaseProfile p = surface_profile(lat);
    const PTClass z = PTClass::zeta(p);
    const PTClass nef = z - PTClass::pullback(p, p.canonical());
    const PTClass vmrt = conic_vmrt_class(lat, fibre);
    return {eval_product(p, {z, vmrt, nef}), eval_product(p, {vmrt, vmrt, nef})};
}

/// The ten conic classes of a quartic del Pezzo matched as C + C' = -K.
inline std::vector<std::pair<CurveClass, CurveClass>> degree4_pencil_pairs() {
    const PicardLattice lat(4);
    const auto conics = conic_classes(lat);
    const CurveClass minus_k = -1 * lat.canonical();
    std::vector<std::pair<CurveClass, CurveClass>> pairs;
    for (const auto& c : conics) {
        CurveClass partner = minus_k - c;
        if (c < partner && std::binary_search(conics.begin(), conics.end(), partner)) pairs.emplace_back(c, partner);
    }
    return pairs;
}

inline bool degree4_pairing() {
    const PicardLattice lat(4);
    const auto conics = conic_classes(lat);
    const auto pairs = degree4_pencil_pairs();
    if (conics.size() != 10 || pairs.size() != 5) return false;
    const BaseProfile p = surface_profile(lat);
    const PTClass two_z = PTClass::zeta(p, 2);
    for (const auto& [c, c2] : pairs)
        if (conic_vmrt_class(lat, c) + conic_vmrt_class(lat, c2) != two_z) return false;
    return true;
}

inline bool degree5_sum() {
    const PicardLattice lat(5);
    const auto conics = conic_classes(lat);
    if (conics.size() != 5) return false;
    CurveClass total = lat.zero();
    for (const auto& c : conics) total = total + c;
    if (total != -2 * lat.canonical()) return false;

    const BaseProfile p = surface_profile(lat);
    const PTClass pk = PTClass::pullback(p, p.canonical());
    PTClass vmrt_sum(p);
    for (const auto& c : conics) vmrt_sum += conic_vmrt_class(lat, c);
    if (vmrt_sum != PTClass::zeta(p, 5) + pk) return false;
    // z - pi^*(-K/5) = (1/5) sum [C_i]
    return PTClass::zeta(p) + Rational(1, 5) * pk == Rational(1, 5) * vmrt_sum;
}

/// c_1^2 and c_2 of a del Pezzo surface of degree d: P^2 blown up in 9-d
/// points (d = 8 has the same numbers for both models).
inline std::pair<Rational, Rational> surface_chern_numbers(int degree) {
    if (degree < 1 || degree > 9) throw Error("del Pezzo degree must lie in 1..9");
    const int blowups = 9 - degree;
    return {Rational(9 - blowups), Rational(3 + blowups)};
}

/// chi(O_X) = (c_1^2 + c_2) / 12 must equal 1 for a rational surface.
inline bool noether_check(int degree) {
    auto [c1sq, c2] = surface_chern_numbers(degree);
    return c1sq + c2 == 12 && (c1sq + c2) / 12 == 1;
}

/// chi(X, Sym^m T_X) by Hirzebruch-Riemann-Roch on a surface:
/// chi(E) = rk (c_1^2 + c_2)/12 + c_1(E).c_1(X)/2 + ch_2(E),
/// with Sym^m T_X built from the Chern roots a, b of T_X.
inline Rational chi_sym_tangent_surface(int degree, int m) {
    if (m < 0) throw Error("chi_sym_tangent_surface: m must be non-negative");
    auto [c1sq, c2] = surface_chern_numbers(degree);
    // Roots of Sym^m: i a + (m - i) b. Track sum of roots (multiple of a + b)
    // and sum of squares as p a^2 + q ab + r b^2.
    Rational first = 0, p = 0, q = 0, r = 0;
    for (int i = 0; i <= m; ++i) {
        const int j = m - i;
        first += i;  // coefficient of a; symmetric, so also of b
        p += i * i;
        q += 2 * i * j;
        r += j * j;
    }
    if (p != r) throw Error("chi_sym_tangent_surface: root sum not symmetric");
    const Rational rank = m + 1;
    const Rational c1_e_dot_c1 = first * c1sq;              // c_1(E) = first (a + b) = first c_1
    const Rational sum_sq = p * (c1sq - 2 * c2) + q * c2;   // a^2 + b^2 = c_1^2 - 2 c_2, ab = c_2
    return rank * (c1sq + c2) / 12 + c1_e_dot_c1 / 2 + sum_sq / 2;
}

/// Coefficient of m^3 in chi(Sym^m T_X), read off as a third finite difference.
inline Rational chi_sym_leading_coefficient(int degree) {
    Rational diff3 = chi_sym_tangent_surface(degree, 3) - 3 * chi_sym_tangent_surface(degree, 2) +
                     3 * chi_sym_tangent_surface(degree, 1) - chi_sym_tangent_surface(degree, 0);
    return diff3 / 6;
}

}  // namespace tanpos
