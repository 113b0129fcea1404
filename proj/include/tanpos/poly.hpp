#pragma once

// Sparse commutative polynomials in a fixed, ordered set of divisor symbols.

#include "tanpos/rational.hpp"

#include <cstddef>
#include <map>
#include <numeric>
#include <vector>

namespace tanpos {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

inline Exponents add_exponents(const Exponents& a, const Exponents& b) {
    Exponents r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

/// Polynomial over Q in `nvars` commuting variables. Zero coefficients are
/// never stored, so structural equality is mathematical equality.
class Poly {
public:
    using Terms = std::map<Exponents, Rational>;

    Poly() = default;
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Rational& c) {
        Poly p(nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }

    static Poly variable(std::size_t nvars, std::size_t index, const Rational& c = 1) {
        Poly p(nvars);
        Exponents e(nvars, 0);
        e.at(index) = 1;
        p.add_term(e, c);
        return p;
    }

    static Poly monomial(const Exponents& e, const Rational& c = 1) {
        Poly p(e.size());
        p.add_term(e, c);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Rational& c) {
        if (e.size() != nvars_) throw Error("exponent vector length does not match polynomial arity");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Degree of a homogeneous polynomial; -1 for zero, throws if mixed.
    int homogeneous_degree() const {
        int deg = -1;
        for (const auto& [e, c] : terms_) {
            int d = total_degree(e);
            if (deg >= 0 && d != deg) throw Error("polynomial is not homogeneous");
            deg = d;
        }
        return deg;
    }

    bool is_homogeneous() const {
        try {
            homogeneous_degree();
            return true;
        } catch (const Error&) {
            return false;
        }
    }

    /// Part of total degree exactly `deg`.
    Poly graded_part(int deg) const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) == deg) r.terms_.emplace(e, c);
        return r;
    }

    Poly& operator+=(const Poly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Poly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_arity(b);
        Poly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(add_exponents(ea, eb), ca * cb);
        return r;
    }

    /// Product truncated above total degree `max_degree`.
    static Poly truncated_product(const Poly& a, const Poly& b, int max_degree) {
        a.check_arity(b);
        Poly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e = add_exponents(ea, eb);
                if (total_degree(e) <= max_degree) r.add_term(e, ca * cb);
            }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void check_arity(const Poly& o) const {
        if (o.nvars_ != nvars_) throw Error("polynomials over different symbol sets");
    }

    std::size_t nvars_ = 0;
    Terms terms_;
};

}  // namespace tanpos
