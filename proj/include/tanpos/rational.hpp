#pragma once

// Exact scalars. Everything downstream of this header is integer/rational
// arithmetic; there is no floating point in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tanpos {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                               boost::multiprecision::et_off>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Binomial coefficient; zero whenever k < 0 or k > n >= 0.
/// For negative n the generalized coefficient n(n-1)...(n-k+1)/k! is used,
/// so C(m + n, n) stays a polynomial in m.
inline Integer binomial(long long n, long long k) {
    if (k < 0) return 0;
    if (n >= 0 && k > n) return 0;
    Integer num = 1;
    Integer den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= Integer(n - i);
        den *= Integer(i + 1);
    }
    return num / den;
}

inline Integer factorial(long long n) {
    if (n < 0) throw Error("factorial of negative number");
    Integer r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Rational pow(const Rational& base, unsigned e) {
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

/// "p/q" when q != 1, otherwise "p". Never decimal.
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

namespace detail {
inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}
}  // namespace detail

/// Parses "p", "-p", "p/q", "-p/q". Throws Error on anything else or q == 0.
inline Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den))
        throw Error("malformed rational '" + std::string(text) + "'");
    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    return negative ? Rational(-q) : q;
}

}  // namespace tanpos
