#pragma once

#include "tanpos/poly.hpp"
#include "tanpos/profile.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tanpos {

/// A polynomial class on P(T_X) in the tautological class z and pullbacks
/// of divisors from X. Tied to one profile by label.
class PTClass {
public:
    using Key = std::pair<int, Exponents>;  // (power of z, base monomial)
    using Terms = std::map<Key, Rational>;

    PTClass() = default;
    PTClass(std::string profile_label, std::size_t nvars) : label_(std::move(profile_label)), nvars_(nvars) {}
    explicit PTClass(const BaseProfile& p) : PTClass(p.label, p.nvars()) {}

    static PTClass zeta(const BaseProfile& p, const Rational& coeff = 1) {
        PTClass r(p);
        r.add_term(1, Exponents(p.nvars(), 0), coeff);
        return r;
    }

    static PTClass constant(const BaseProfile& p, const Rational& c) {
        PTClass r(p);
        r.add_term(0, Exponents(p.nvars(), 0), c);
        return r;
    }

    static PTClass pullback(const BaseProfile& p, const Poly& base) {
        if (base.nvars() != p.nvars()) throw Error("pullback: polynomial arity does not match profile " + p.label);
        PTClass r(p);
        for (const auto& [e, c] : base.terms()) r.add_term(0, e, c);
        return r;
    }

    static PTClass pullback(const BaseProfile& p, const std::string& symbol) {
        return pullback(p, p.symbol(symbol));
    }

    const std::string& profile_label() const { return label_; }
    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(int zeta_power, const Exponents& e, const Rational& c) {
        if (zeta_power < 0) throw Error("negative power of z");
        if (e.size() != nvars_) throw Error("class monomial arity mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(Key{zeta_power, e}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coefficient(int zeta_power, const Exponents& e) const {
        auto it = terms_.find(Key{zeta_power, e});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Common total degree, -1 for the zero class; nullopt-like -2 if mixed.
    int degree() const {
        int deg = -1;
        for (const auto& [k, c] : terms_) {
            int d = k.first + total_degree(k.second);
            if (deg >= 0 && d != deg) return -2;
            deg = d;
        }
        return deg;
    }

    bool is_homogeneous() const { return degree() != -2; }

    /// Coefficient of z^{power} as a polynomial on X.
    Poly zeta_coefficient(int power) const {
        Poly r(nvars_);
        for (const auto& [k, c] : terms_)
            if (k.first == power) r.add_term(k.second, c);
        return r;
    }

    PTClass& operator+=(const PTClass& o) {
        check_compatible(o);
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    PTClass& operator-=(const PTClass& o) {
        check_compatible(o);
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    PTClass& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend PTClass operator+(PTClass a, const PTClass& b) { return a += b; }
    friend PTClass operator-(PTClass a, const PTClass& b) { return a -= b; }
    friend PTClass operator-(PTClass a) { return a *= Rational(-1); }
    friend PTClass operator*(PTClass a, const Rational& s) { return a *= s; }
    friend PTClass operator*(const Rational& s, PTClass a) { return a *= s; }

    friend PTClass operator*(const PTClass& a, const PTClass& b) {
        a.check_compatible(b);
        PTClass r(a.label_, a.nvars_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, add_exponents(ka.second, kb.second), ca * cb);
        return r;
    }

    PTClass power(unsigned e) const {
        PTClass r(label_, nvars_);
        r.add_term(0, Exponents(nvars_, 0), 1);
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const PTClass& a, const PTClass& b) {
        return a.label_ == b.label_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const PTClass& o) const {
        if (o.label_ != label_) throw Error("classes over different profiles: " + label_ + " vs " + o.label_);
        if (o.nvars_ != nvars_) throw Error("classes with different symbol counts");
    }

    std::string label_;
    std::size_t nvars_ = 0;
    Terms terms_;
};

}  // namespace tanpos
