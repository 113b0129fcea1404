#include "random_profiles.hpp"

#include "tanpos/catalog.hpp"
#include "tanpos/chow.hpp"
#include "tanpos/profile.hpp"

#include <gtest/gtest.h>

#include <array>
#include <random>
#include <vector>

using namespace tanpos;

namespace {

PTClass z_of(const BaseProfile& p) { return PTClass::zeta(p); }
PTClass h_of(const BaseProfile& p) { return PTClass::pullback(p, "H"); }

}  // namespace

TEST(Segre, CubicSurfaceTopSegreIsMinusSix) {
    const auto p = cubic_surface_profile();
    const auto s = segre_omega(p);
    EXPECT_EQ(p.integrate(s[2]), -6);
}

TEST(Segre, FirstTermsAreOneAndC1) {
    for (const auto& label : {"cubic-surface", "hyp-n4-d3", "dp3-degree1", "dp-surface-deg5"}) {
        const auto p = find_profile(label);
        const auto s = segre_omega(p);
        EXPECT_EQ(s[0], Poly::constant(p.nvars(), 1)) << label;
        EXPECT_EQ(s[1], p.c(1)) << label;
    }
}

TEST(Segre, DelPezzoThreefoldDegreeOne) {
    const auto p = threefold_profile(1, 42);
    EXPECT_EQ(p.integrate(segre_omega(p)[3]), -78);
}

// Mandatory sign-convention pin: both values must hold simultaneously.
TEST(Convention, PinnedByCubicSurfaceAndDegreeOneThreefold) {
    const auto cubic = cubic_surface_profile();
    const auto dp = threefold_profile(1, 42);
    EXPECT_EQ(eval_top(cubic, z_of(cubic).power(3)), -6);
    EXPECT_EQ(eval_top(dp, z_of(dp).power(5)), -78);
}

TEST(EvalTop, CubicSurfaceLedger) {
    const auto p = cubic_surface_profile();
    const auto z = z_of(p);
    const auto h = h_of(p);
    const auto f = PTClass::pullback(p, "F");
    EXPECT_EQ(eval_top(p, z * z * z), -6);
    EXPECT_EQ(eval_top(p, z * z * h), 3);
    EXPECT_EQ(eval_top(p, z * z * f), 2);
    EXPECT_EQ(eval_top(p, z * h * f), 2);
}

TEST(EvalTop, ThreefoldTriple) {
    const auto p = threefold_profile(1, 42);
    const auto z = z_of(p);
    const auto h = h_of(p);
    EXPECT_EQ(eval_top(p, z.power(5)), -78);
    EXPECT_EQ(eval_top(p, z.power(4) * h), -8);
    EXPECT_EQ(eval_top(p, z.power(3) * h * h), 2);
}

TEST(EvalTop, LowZetaPowersVanish) {
    for (const auto& label : {"cubic-surface", "hyp-n3-d3", "dp3-degree2"}) {
        const auto p = find_profile(label);
        // z^{n-2} times a degree-(n+1) base monomial.
        Exponents e(p.nvars(), 0);
        e[0] = p.dim + 1;
        PTClass c(p);
        c.add_term(p.dim - 2, e, 5);
        EXPECT_EQ(eval_top(p, c), 0) << label;
    }
}

TEST(EvalTop, RejectsWrongDegreeWithReport) {
    const auto p = cubic_surface_profile();
    try {
        eval_top(p, z_of(p).power(2));
        FAIL() << "expected DegreeError";
    } catch (const DegreeError& e) {
        EXPECT_EQ(e.got(), 2);
        EXPECT_EQ(e.expected(), 3);
    }
    EXPECT_THROW(eval_top(p, z_of(p).power(3) + z_of(p)), DegreeError);
}

TEST(EvalTop, RejectsForeignProfile) {
    const auto cubic = cubic_surface_profile();
    const auto other = hypersurface_profile({2, 3});
    EXPECT_THROW(eval_top(other, z_of(cubic).power(3)), Error);
}

TEST(EvalProduct, DelPezzoThreefoldCertificates) {
    {
        const auto p = threefold_profile(1, 42);
        const auto z = z_of(p);
        const auto h = h_of(p);
        EXPECT_EQ(eval_product(p, {z, z + h, z + 3 * h, z + 3 * h, z + 4 * h}), -11);
    }
    {
        const auto p = threefold_profile(2, 20);
        const auto z = z_of(p);
        const auto h = h_of(p);
        const auto f = z + 2 * h;
        EXPECT_EQ(eval_product(p, {z, z, f, f, f}), -8);
    }
}

TEST(EvalProduct, RejectsDegreeMismatch) {
    const auto p = threefold_profile(2, 20);
    const auto z = z_of(p);
    EXPECT_THROW(eval_product(p, {z, z}), DegreeError);
}

// Elementary symmetric expansion of prod (z + l_i H), l = {0,1,3,3,4},
// evaluated term by term from the three printed numbers and H^3 = 1.
TEST(EvalProduct, ElementarySymmetricExpansionOracle) {
    const std::array<Rational, 5> lambda{0, 1, 3, 3, 4};
    // e_i by brute force over subsets.
    std::array<Rational, 6> e{};
    for (unsigned mask = 0; mask < 32; ++mask) {
        Rational prod = 1;
        int size = 0;
        for (unsigned i = 0; i < 5; ++i)
            if (mask & (1u << i)) {
                prod *= lambda[i];
                ++size;
            }
        e[static_cast<std::size_t>(size)] += prod;
    }
    const auto p = threefold_profile(1, 42);
    const auto z = z_of(p);
    const auto h = h_of(p);
    Rational expanded = 0;
    for (unsigned i = 0; i <= 5; ++i) expanded += e[i] * eval_top(p, z.power(5 - i) * h.power(i));
    EXPECT_EQ(expanded, -11);
    EXPECT_EQ(expanded, eval_product(p, {z, z + h, z + 3 * h, z + 3 * h, z + 4 * h}));
}

TEST(RestrictToSection, LinesOfSecondType) {
    const std::vector<int> split{2, 1, 1, -1};
    EXPECT_EQ(restrict_to_section(split, 3, 1), 0);
    EXPECT_LT(restrict_to_section(split, 3, Rational(9, 10)), 0);
    EXPECT_EQ(restrict_to_section(std::vector<int>{2, 0}, 1, 0), 0);
    EXPECT_EQ(restrict_to_section(std::vector<int>{2, 1, 0}, 0, 0), 2);
    EXPECT_THROW(restrict_to_section(split, 4, 0), Error);
    EXPECT_THROW(restrict_to_section(split, -1, 0), Error);
}

TEST(DualVmrt, GenericForms) {
    const auto cubic = cubic_surface_profile();
    const Poly kf = cubic.canonical() + 2 * cubic.symbol("F");
    EXPECT_EQ(dual_vmrt_generic(cubic, 1, -kf), z_of(cubic) + PTClass::pullback(cubic, kf));

    const auto dp = threefold_profile(3, 10);
    // k = 6, r = 27, d = 3: pushforward (k - r/d) H = -3H.
    EXPECT_EQ(dual_vmrt_generic(dp, 6, Poly::monomial({1}, -3)), 6 * z_of(dp) + 3 * h_of(dp));
    EXPECT_EQ(dual_vmrt_generic(dp, 1, Poly(1)), z_of(dp));

    EXPECT_THROW(dual_vmrt_generic(dp, 1, Poly::monomial({2}, 1)), Error);
    EXPECT_THROW(dual_vmrt_generic(dp, 1, Poly::monomial({1}, 1) + Poly::constant(1, 1)), Error);
}

TEST(FibreDegree, ReadsZetaCoefficient) {
    const auto p = cubic_surface_profile();
    EXPECT_EQ(fibre_degree(3 * z_of(p) - h_of(p)), 3);
    EXPECT_THROW(fibre_degree(z_of(p) * z_of(p)), Error);
}

TEST(Properties, SegreInversionOnRandomProfiles) {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = tanpos::testing::random_profile(rng);
        const auto s = segre_omega(p);
        const auto c = chern_omega(p);
        for (int k = 0; k <= p.dim; ++k) {
            Poly sum(p.nvars());
            for (int j = 0; j <= k; ++j) sum += s[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k - j)];
            const Poly expected = k == 0 ? Poly::constant(p.nvars(), 1) : Poly(p.nvars());
            ASSERT_EQ(sum, expected) << "trial " << trial << " degree " << k;
        }
    }
}

TEST(Properties, EvalTopIsLinear) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = tanpos::testing::random_profile(rng);
        const int deg = 2 * p.dim - 1;
        const auto a = tanpos::testing::random_class(rng, p, deg);
        const auto b = tanpos::testing::random_class(rng, p, deg);
        const Rational x = tanpos::testing::random_rational(rng);
        const Rational y = tanpos::testing::random_rational(rng);
        ASSERT_EQ(eval_top(p, x * a + y * b), x * eval_top(p, a) + y * eval_top(p, b)) << "trial " << trial;
    }
}

TEST(Properties, ClassRingAxioms) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = tanpos::testing::random_profile(rng);
        const auto a = tanpos::testing::random_class(rng, p, 1);
        const auto b = tanpos::testing::random_class(rng, p, 2);
        const auto c = tanpos::testing::random_class(rng, p, 1);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a + c, c + a);
        EXPECT_EQ(a * (b + b), a * b + a * b);
    }
}

TEST(ProfileJson, RoundTripAndValidation) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = tanpos::testing::random_profile(rng, "r" + std::to_string(trial));
        const auto q = profile_from_json(to_json(p));
        EXPECT_EQ(q.label, p.label);
        EXPECT_EQ(q.top_form, p.top_form);
        EXPECT_EQ(q.chern, p.chern);
    }
    // Values are "p/q" strings.
    const auto j = to_json(threefold_profile(2, 20));
    EXPECT_EQ(j["chern"][1][0]["value"], "6");
    EXPECT_EQ(j["chern"][2][0]["value"], "-8");

    auto bad = to_json(cubic_surface_profile());
    bad["chern"].erase(1);
    EXPECT_THROW(profile_from_json(bad), Error);
    auto inhomogeneous = to_json(cubic_surface_profile());
    inhomogeneous["chern"][0].push_back({{"exponents", {0, 0}}, {"value", "1"}});
    EXPECT_THROW(profile_from_json(inhomogeneous), Error);
    auto decimal = to_json(cubic_surface_profile());
    decimal["top_form"][0]["value"] = "1.5";
    EXPECT_THROW(profile_from_json(decimal), Error);
}

TEST(RationalText, ParseAndFormat) {
    EXPECT_EQ(parse_rational("-49/6"), Rational(-49, 6));
    EXPECT_EQ(parse_rational("8/4"), 2);
    EXPECT_EQ(to_string(Rational(8, 4)), "2");
    EXPECT_EQ(to_string(Rational(-4, 6)), "-2/3");
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("0.5"), Error);
    EXPECT_THROW(parse_rational(""), Error);
}
