#pragma once

// Top-degree intersection numbers on the Grothendieck projectivisation
// pi: P(T_X) -> X (rank-one quotients), with z = c_1(O_{P(T_X)}(1)).
//
// Sign convention (the only place it is fixed):
//
//     pi_*(z^{n-1+j} . pi^*a) = s_j(Omega_X) . a,    s(Omega_X) = 1 / c(Omega_X),
//
// with c_j(Omega_X) = (-1)^j c_j(T_X). Powers z^{<n-1} push forward to zero.
// Reference values this convention must reproduce: z^3 = -6 on a cubic
// surface and z^5 = -78 on a del Pezzo threefold with d = 1, b_3 = 42.

#include "tanpos/poly.hpp"
#include "tanpos/profile.hpp"
#include "tanpos/pt_class.hpp"
#include "tanpos/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tanpos {

/// Segre classes s_0..s_n of Omega_X, s_j homogeneous of degree j.
using SegreVector = std::vector<Poly>;

/// Total Chern class of Omega_X as the list c_0..c_n.
inline std::vector<Poly> chern_omega(const BaseProfile& profile) {
    std::vector<Poly> c;
    c.reserve(static_cast<std::size_t>(profile.dim) + 1);
    c.push_back(Poly::constant(profile.nvars(), 1));
    for (int j = 1; j <= profile.dim; ++j) c.push_back(j % 2 == 0 ? profile.c(j) : -profile.c(j));
    return c;
}

/// Power-series inverse of c(Omega_X), truncated at degree n.
inline SegreVector segre_omega(const BaseProfile& profile) {
    const auto c = chern_omega(profile);
    SegreVector s;
    s.push_back(Poly::constant(profile.nvars(), 1));
    for (int k = 1; k <= profile.dim; ++k) {
        Poly sk(profile.nvars());
        for (int j = 1; j <= k; ++j)
            sk -= c[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(k - j)];
        s.push_back(std::move(sk));
    }
    return s;
}

class DegreeError : public Error {
public:
    DegreeError(int got, int expected)
        : Error("class has degree " + (got == -2 ? std::string("(inhomogeneous)") : std::to_string(got)) +
                ", expected " + std::to_string(expected)),
          got_(got),
          expected_(expected) {}
    int got() const { return got_; }
    int expected() const { return expected_; }

private:
    int got_;
    int expected_;
};

/// Evaluates a class of total degree 2n-1 on P(T_X). The zero class is accepted.
inline Rational eval_top(const BaseProfile& profile, const PTClass& cls, const SegreVector& segre) {
    if (cls.profile_label() != profile.label)
        throw Error("class belongs to profile " + cls.profile_label() + ", not " + profile.label);
    const int n = profile.dim;
    const int deg = cls.degree();
    if (deg != -1 && deg != 2 * n - 1) throw DegreeError(deg, 2 * n - 1);

    Rational total = 0;
    for (const auto& [key, coeff] : cls.terms()) {
        const int j = key.first - (n - 1);
        if (j < 0 || j > n) continue;
        Poly base = segre[static_cast<std::size_t>(j)] * Poly::monomial(key.second, coeff);
        total += profile.integrate(base);
    }
    return total;
}

inline Rational eval_top(const BaseProfile& profile, const PTClass& cls) {
    return eval_top(profile, cls, segre_omega(profile));
}

inline Rational eval_product(const BaseProfile& profile, std::span<const PTClass> factors) {
    if (factors.empty()) throw Error("eval_product: no factors");
    int degree_sum = 0;
    for (const auto& f : factors) {
        int d = f.degree();
        if (d == -2) throw DegreeError(-2, 2 * profile.dim - 1);
        degree_sum += d < 0 ? 0 : d;
    }
    if (degree_sum != 2 * profile.dim - 1) throw DegreeError(degree_sum, 2 * profile.dim - 1);
    PTClass product = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) product = product * factors[i];
    return eval_top(profile, product);
}

inline Rational eval_product(const BaseProfile& profile, std::initializer_list<PTClass> factors) {
    return eval_product(profile, std::span<const PTClass>(factors.begin(), factors.size()));
}

/// Degree of (z + eps pi^*H) on the section of P(T_X|_l) cut out by the
/// quotient T_X|_l -> O(a_q) of a splitting over a line l with H.l = 1.
inline Rational restrict_to_section(std::span<const int> splitting, int quotient_index, const Rational& eps) {
    if (quotient_index < 0 || static_cast<std::size_t>(quotient_index) >= splitting.size())
        throw Error("quotient index " + std::to_string(quotient_index) + " out of range for splitting of rank " +
                    std::to_string(splitting.size()));
    return Rational(splitting[static_cast<std::size_t>(quotient_index)]) + eps;
}

/// deg(e) z - pi^*(e_* c_1): the class of a total dual VMRT.
inline PTClass dual_vmrt_generic(const BaseProfile& profile, int deg_e, const Poly& pushforward_c1) {
    if (deg_e <= 0) throw Error("dual_vmrt_generic: degree of the evaluation map must be positive");
    if (!pushforward_c1.is_zero() && (!pushforward_c1.is_homogeneous() || pushforward_c1.homogeneous_degree() != 1))
        throw Error("dual_vmrt_generic: pushforward of c_1 must be a divisor class");
    return PTClass::zeta(profile, deg_e) - PTClass::pullback(profile, pushforward_c1);
}

/// Intersection with a fibre of pi (a line in P^{n-1}): z.l = 1, pi^*D.l = 0.
inline Rational fibre_degree(const PTClass& cls) {
    int deg = cls.degree();
    if (deg != 1 && deg != -1) throw Error("fibre_degree expects a divisor class");
    Rational z = 0;
    for (const auto& [key, c] : cls.terms())
        if (key.first == 1) z += c;
    return z;
}

}  // namespace tanpos
