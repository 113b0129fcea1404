#pragma once

// Dimensions of Schur functors, Euler characteristics and Bott's formula for
// twisted differential forms on projective space.

#include "tanpos/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace tanpos {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw Error("partition parts must be non-negative");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// (k, ..., k) with `rows` parts.
    static Partition rectangle(int rows, int k) { return Partition(std::vector<int>(static_cast<std::size_t>(rows), k)); }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    int weight() const {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// dim S_mu(V), dim V = N, by the Weyl product over i < j of
/// (mu_i - mu_j + j - i) / (j - i). Zero when mu has more than N rows.
inline Integer schur_dim(const Partition& mu, int dim_v) {
    if (dim_v < 1) throw Error("schur_dim: dimension must be positive");
    if (mu.length() > static_cast<std::size_t>(dim_v)) return 0;
    Rational prod = 1;
    for (int i = 0; i < dim_v; ++i)
        for (int j = i + 1; j < dim_v; ++j)
            prod *= Rational(mu[static_cast<std::size_t>(i)] - mu[static_cast<std::size_t>(j)] + j - i, j - i);
    return numerator(prod);
}

/// dim S_{(k,...,k)}(V) with n-1 rows equals dim Sym^k(wedge^{n-1} V) = C(n+k-1, n-1).
inline bool plethysm_rectangle_check(int n, int k) {
    if (n < 2 || k < 1) throw Error("plethysm_rectangle_check needs n >= 2 and k >= 1");
    const Integer rect = schur_dim(Partition::rectangle(n - 1, k), n);
    const Integer sym = schur_dim(Partition{k}, static_cast<int>(schur_dim(Partition::rectangle(n - 1, 1), n)));
    return rect == binomial(n + k - 1, n - 1) && rect == sym;
}

/// chi(P^n, O(m)) = C(m + n, n) as a polynomial in m.
inline Rational euler_char_line(int n, int m) { return Rational(binomial(m + n, n)); }

/// chi(P^n, Omega^p(k)) via 0 -> Omega^p -> wedge^p O(-1)^{n+1} -> Omega^{p-1} -> 0.
inline Rational euler_char_forms(int n, int p, int k) {
    if (n < 0 || p < 0 || p > n) throw Error("euler_char_forms: need 0 <= p <= n");
    Rational chi = euler_char_line(n, k);
    for (int q = 1; q <= p; ++q) chi = Rational(binomial(n + 1, q)) * euler_char_line(n, k - q) - chi;
    return chi;
}

/// h^q(P^n, Omega^p(k)) by Bott's formula.
inline Integer bott_dimension(int n, int p, int k, int q) {
    if (p < 0 || p > n) throw Error("bott_dimension: p out of range");
    if (q < 0 || q > n) return 0;
    if (q == 0) {
        if (k == 0 && p == 0) return 1;
        if (k > p) return binomial(k + n - p, k) * binomial(k - 1, p);
        return 0;
    }
    if (q == n) return bott_dimension(n, n - p, -k, 0);
    return (k == 0 && p == q) ? Integer(1) : Integer(0);
}

/// H^j(P^n, Omega^r(r + j + 1)) = 0 for 1 <= j <= n - 1.
inline bool bott_vanishing(int n, int r, int j) {
    if (r < 0 || r > n) throw Error("bott_vanishing: need 0 <= r <= n");
    if (j < 1 || j > n - 1) throw Error("bott_vanishing: need 1 <= j <= n - 1");
    return bott_dimension(n, r, r + j + 1, j) == 0;
}

/// c_1(S_mu E) = (|mu| rank(S_mu E) / rank E) c_1(E), as a coefficient of H.
inline Rational schur_c1(const Partition& mu, int rank_e, const Rational& c1_e) {
    return Rational(mu.weight()) * Rational(schur_dim(mu, rank_e)) / rank_e * c1_e;
}

struct BridgeSides {
    Integer lhs_rank, rhs_rank;
    Rational lhs_c1, rhs_c1;  // multiples of H
};

/// Sym^k(T_X(d-3)) versus S_{(k^{n-1})} Omega_X ((n-1)k) on a degree-d
/// hypersurface X of dimension n: ranks and first Chern classes.
inline BridgeSides bridge_sides(int n, int d, int k) {
    const Rational c1_tangent = n + 2 - d;
    const Rational c1_twisted = c1_tangent + Rational(n) * (d - 3);
    const Partition sym{k};
    const Partition rect = Partition::rectangle(n - 1, k);
    BridgeSides s;
    s.lhs_rank = schur_dim(sym, n);
    s.rhs_rank = schur_dim(rect, n);
    s.lhs_c1 = schur_c1(sym, n, c1_twisted);
    s.rhs_c1 = schur_c1(rect, n, -c1_tangent) + Rational(s.rhs_rank) * (n - 1) * k;
    return s;
}

inline bool bridge_identity_check(int n, int d, int k) {
    if (n < 2 || d < 1 || k < 1) throw Error("bridge_identity_check needs n >= 2, d >= 1, k >= 1");
    const BridgeSides s = bridge_sides(n, d, k);
    const Rational slope = Rational(k) * (n - 1) * (d - 2) / n;
    return s.lhs_rank == s.rhs_rank && s.lhs_rank == binomial(n + k - 1, n - 1) && s.lhs_c1 == s.rhs_c1 &&
           s.lhs_c1 == slope * Rational(s.lhs_rank);
}

}  // namespace tanpos
