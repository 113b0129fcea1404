#pragma once

// Smooth hypersurfaces X of degree d in P^{n+1}: Chern and Segre data in
// powers of the hyperplane class, and the cubic intersection identity.

#include "tanpos/chow.hpp"
#include "tanpos/profile.hpp"
#include "tanpos/pt_class.hpp"
#include "tanpos/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tanpos {

struct HypersurfaceSpec {
    int n = 0;  // dimension of X
    int d = 0;  // degree
};

inline std::string hypersurface_label(const HypersurfaceSpec& s) {
    return "hyp-n" + std::to_string(s.n) + "-d" + std::to_string(s.d);
}

/// c(T_X) = (1+H)^{n+2} / (1+dH) truncated at degree n; H^n = d.
inline BaseProfile hypersurface_profile(const HypersurfaceSpec& s) {
    if (s.n < 1 || s.d < 1) throw Error("hypersurface needs n >= 1 and d >= 1");
    BaseProfile p;
    p.label = hypersurface_label(s);
    p.dim = s.n;
    p.basis = {"H"};
    p.top_form[{s.n}] = s.d;
    for (int j = 1; j <= s.n; ++j) {
        Integer coeff = 0;
        Integer minus_d_power = 1;  // (-d)^{j-i}, accumulated from i = j downwards
        for (int i = j; i >= 0; --i) {
            coeff += binomial(s.n + 2, i) * minus_d_power;
            minus_d_power *= -s.d;
        }
        p.chern.push_back(Poly::monomial({j}, Rational(coeff)));
    }
    return p;
}

/// Coefficient of H^l in s_l(T_X) = (-1)^l s_l(Omega_X).
inline Rational segre_closed_form(const HypersurfaceSpec& s, int l) {
    if (l < 1 || l > s.n) throw Error("segre_closed_form: l must lie in 1.." + std::to_string(s.n));
    Integer v = binomial(s.n + l + 1, l) - Integer(s.d) * binomial(s.n + l, l - 1);
    return Rational(l % 2 == 0 ? v : Integer(-v));
}

/// Factored form C(n+l, l-1) ((n+1)/l - d + 1), signed like segre_closed_form.
inline Rational segre_closed_form_factored(const HypersurfaceSpec& s, int l) {
    if (l < 1 || l > s.n) throw Error("segre_closed_form: l out of range");
    Rational v = Rational(binomial(s.n + l, l - 1)) * (Rational(s.n + 1, l) - s.d + 1);
    return l % 2 == 0 ? v : Rational(-v);
}

/// -9 2^n C(2n, n) / (8 (2n-1)(n+1)).
inline Rational cubic_mnef_closed_form(int n) {
    Integer two_n = Integer(1) << n;
    return Rational(Integer(-9) * two_n * binomial(2 * n, n), Integer(8) * (2 * n - 1) * (n + 1));
}

/// z^2 . (z + pi^*H)^{2n-3} on a smooth cubic n-fold, evaluated by the engine
/// and checked against the closed form. Negative for every n >= 3.
inline Rational cubic_mnef_number(int n) {
    if (n < 3) throw Error("cubic_mnef_number requires n >= 3");
    const BaseProfile p = hypersurface_profile({n, 3});
    const PTClass z = PTClass::zeta(p);
    const PTClass nef = z + PTClass::pullback(p, "H");
    const Rational value = eval_top(p, z * z * nef.power(static_cast<unsigned>(2 * n - 3)));
    if (value != cubic_mnef_closed_form(n))
        throw Error("cubic_mnef_number: engine value " + to_string(value) + " disagrees with closed form " +
                    to_string(cubic_mnef_closed_form(n)));
    return value;
}

/// sum_{i=0}^{n} C(2n-3, i) C(2n-i+1, n-i)
inline Rational sum_positive_part(int n) {
    Integer s = 0;
    for (int i = 0; i <= n; ++i) s += binomial(2 * n - 3, i) * binomial(2 * n - i + 1, n - i);
    return Rational(s);
}

/// sum_{i=0}^{n-1} C(2n-3, i) C(2n-i, n-i-1)
inline Rational sum_negative_part(int n) {
    Integer s = 0;
    for (int i = 0; i <= n - 1; ++i) s += binomial(2 * n - 3, i) * binomial(2 * n - i, n - i - 1);
    return Rational(s);
}

inline Rational sum_positive_closed_form(int n) {
    Integer two_n = Integer(1) << n;
    return Rational(Integer(3) * (27 * n * n + 9 * n - 14) * two_n * binomial(2 * n, n),
                    Integer(64) * (2 * n - 1) * (n + 1));
}

inline Rational sum_negative_closed_form(int n) {
    Integer two_n = Integer(1) << n;
    return Rational(Integer(3) * (3 * n + 2) * (3 * n - 1) * two_n * binomial(2 * n, n),
                    Integer(64) * (2 * n - 1) * (n + 1));
}

/// A(k, n) = sum_{i=0}^{n} i^k / (i! (n-i)!) by direct summation.
inline Rational comb_A_brute(int k, int n) {
    Rational s = 0;
    for (int i = 0; i <= n; ++i) {
        Integer ik = 1;
        for (int t = 0; t < k; ++t) ik *= i;
        s += Rational(ik, factorial(i) * factorial(n - i));
    }
    return s;
}

/// Closed form of A(k, n) for 0 <= k <= 4.
inline std::optional<Rational> comb_A_closed(int k, int n) {
    const Rational base(Integer(1) << n, factorial(n));
    const Rational m = n;
    switch (k) {
        case 0: return base;
        case 1: return m / 2 * base;
        case 2: return m * (m + 1) / 4 * base;
        case 3: return m * m * (m + 3) / 8 * base;
        case 4: return m * (m + 1) * (m * m + 5 * m - 2) / 16 * base;
        default: return std::nullopt;
    }
}

struct CombIdentity {
    Rational brute_sum;
    std::optional<Rational> closed_form;  // absent for k > 4
};

inline CombIdentity comb_identity_A(int k, int n) {
    if (k < 0 || n < 0) throw Error("comb_identity_A: k and n must be non-negative");
    return {comb_A_brute(k, n), comb_A_closed(k, n)};
}

/// A(k, n) == n A(k-1, n) - A(k-1, n-1)
inline bool recursion_check_A(int k, int n) {
    if (k < 1 || n < 1) throw Error("recursion_check_A needs k >= 1 and n >= 1");
    return comb_A_brute(k, n) == n * comb_A_brute(k - 1, n) - comb_A_brute(k - 1, n - 1);
}

}  // namespace tanpos
