#include "random_profiles.hpp"

#include "tanpos/catalog.hpp"
#include "tanpos/chow.hpp"
#include "tanpos/expr.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tanpos;

TEST(ParseExpr, CertificateOnDegreeTwoThreefold) {
    const auto p = find_profile("dp3-degree2");
    EXPECT_EQ(eval_top(p, parse_expr(p, "z^2*(z+2*H)^3")), -8);
    EXPECT_EQ(eval_top(p, parse_expr(p, "z^2 (z + 2H)^3")), -8);
}

TEST(ParseExpr, RationalLiteral) {
    const auto p = find_profile("dp3-degree2");
    const auto cls = parse_expr(p, "(z+(4/3)*H)");
    EXPECT_EQ(cls.coefficient(0, {1}), Rational(4, 3));
    EXPECT_EQ(cls.coefficient(1, {0}), 1);
    EXPECT_EQ(to_string(cls, p), "z + (4/3)H");
}

TEST(ParseExpr, UnbalancedParenthesis) {
    const auto p = find_profile("dp3-degree2");
    try {
        parse_expr(p, "z*(z+H");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 7u);
        EXPECT_NE(std::string(e.what()).find("offset 7"), std::string::npos);
    }
}

TEST(ParseExpr, Errors) {
    const auto p = find_profile("dp3-degree2");
    EXPECT_THROW(parse_expr(p, "z + F"), ParseError);
    EXPECT_THROW(parse_expr(p, ""), ParseError);
    EXPECT_THROW(parse_expr(p, "z^"), ParseError);
    EXPECT_THROW(parse_expr(p, "z^-1"), ParseError);
    EXPECT_THROW(parse_expr(p, "1/0"), ParseError);
    EXPECT_THROW(parse_expr(p, "z)"), ParseError);
    EXPECT_THROW(parse_expr(p, "z # H"), ParseError);
    // Inhomogeneous input parses but is rejected by evaluation.
    const auto mixed = parse_expr(p, "z^5 + z");
    EXPECT_FALSE(mixed.is_homogeneous());
    EXPECT_THROW(eval_top(p, mixed), DegreeError);
}

TEST(ParseExpr, CanonicalSymbol) {
    const auto cubic = find_profile("cubic-surface");
    EXPECT_EQ(parse_expr(cubic, "K"), -1 * PTClass::pullback(cubic, "H"));
    EXPECT_EQ(eval_top(cubic, parse_expr(cubic, "z*(z+2F+K)*(z-K)")), -1);
    const auto dp4 = find_profile("dp-surface-deg4");
    EXPECT_EQ(parse_expr(dp4, "-K"), parse_expr(dp4, "3H - E1 - E2 - E3 - E4 - E5"));
}

TEST(ParseExpr, CubicSurfaceLedger) {
    const auto p = find_profile("cubic-surface");
    EXPECT_EQ(eval_top(p, parse_expr(p, "z^3")), -6);
    EXPECT_EQ(eval_top(p, parse_expr(p, "z^2 H")), 3);
    EXPECT_EQ(eval_top(p, parse_expr(p, "z*H*F")), 2);
}

TEST(Printer, Forms) {
    const auto p = find_profile("dp3-degree5");
    EXPECT_EQ(to_string(parse_expr(p, "3z - H"), p), "3z - H");
    EXPECT_EQ(to_string(parse_expr(p, "-z^2 + 0*H"), p), "-z^2");
    EXPECT_EQ(to_string(parse_expr(p, "z - z"), p), "0");
    EXPECT_EQ(to_string(parse_expr(p, "-(1/2)"), p), "-1/2");
    EXPECT_EQ(to_string(parse_expr(p, "2 z H^2"), p), "2z*H^2");
}

namespace {

// Random expression tree rendered as text and evaluated directly.
struct Generated {
    std::string text;
    PTClass value;
};

Generated gen(std::mt19937& rng, const BaseProfile& p, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 5);
    switch (pick(rng)) {
        case 0: {
            std::uniform_int_distribution<int> num(0, 9), den(1, 5);
            Rational r(num(rng), den(rng));
            std::string t = denominator(r) == 1 ? to_string(r) : "(" + to_string(r) + ")";
            return {t, PTClass::constant(p, r)};
        }
        case 1: {
            std::uniform_int_distribution<std::size_t> sym(0, p.nvars());
            std::size_t i = sym(rng);
            if (i == p.nvars()) return {"z", PTClass::zeta(p)};
            return {p.basis[i], PTClass::pullback(p, p.basis[i])};
        }
        case 2: {
            auto a = gen(rng, p, depth - 1), b = gen(rng, p, depth - 1);
            return {a.text + " + " + b.text, a.value + b.value};
        }
        case 3: {
            auto a = gen(rng, p, depth - 1), b = gen(rng, p, depth - 1);
            return {"(" + a.text + ") - (" + b.text + ")", a.value - b.value};
        }
        case 4: {
            auto a = gen(rng, p, depth - 1), b = gen(rng, p, depth - 1);
            std::bernoulli_distribution star(0.5);
            return {"(" + a.text + ")" + (star(rng) ? "*" : " ") + "(" + b.text + ")", a.value * b.value};
        }
        default: {
            auto a = gen(rng, p, depth - 1);
            std::uniform_int_distribution<int> e(0, 3);
            int k = e(rng);
            return {"(" + a.text + ")^" + std::to_string(k), a.value.power(static_cast<unsigned>(k))};
        }
    }
}

}  // namespace

TEST(Properties, ParsePrintRoundTrip) {
    std::mt19937 rng(99);
    const std::vector<BaseProfile> profiles{find_profile("cubic-surface"), find_profile("dp-surface-deg6"),
                                            find_profile("dp3-degree2"), find_profile("hyp-n4-d3")};
    for (int trial = 0; trial < 100; ++trial) {
        const auto& p = profiles[static_cast<std::size_t>(trial) % profiles.size()];
        const auto g = gen(rng, p, 4);
        const auto parsed = parse_expr(p, g.text);
        ASSERT_EQ(parsed, g.value) << g.text;
        const auto printed = to_string(parsed, p);
        ASSERT_EQ(parse_expr(p, printed), parsed) << printed;
    }
}

TEST(Properties, PrintParseRandomClasses) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = tanpos::testing::random_profile(rng);
        const auto cls = tanpos::testing::random_class(rng, p, 2 * p.dim - 1);
        ASSERT_EQ(parse_expr(p, to_string(cls, p)), cls) << to_string(cls, p);
    }
}
