#include "tanpos/chow.hpp"
#include "tanpos/expr.hpp"
#include "tanpos/hypersurface.hpp"
#include "tanpos/threefold.hpp"

#include <gtest/gtest.h>

#include <array>

using namespace tanpos;

namespace {

// prod_i (z + l_i H) expanded with elementary symmetric functions and the
// numbers z^{5-i} H^i of the profile.
Rational expand_product(const BaseProfile& p, const std::array<Rational, 5>& lambda) {
    std::array<Rational, 6> e{};
    for (unsigned mask = 0; mask < 32; ++mask) {
        Rational prod = 1;
        std::size_t size = 0;
        for (unsigned i = 0; i < 5; ++i)
            if (mask & (1u << i)) {
                prod *= lambda[i];
                ++size;
            }
        e[size] += prod;
    }
    const auto n = threefold_numbers(p);
    const Rational d = p.integrate(Poly::monomial({3}));
    // z^2 H^3 = d; z H^4 = H^5 = 0.
    const std::array<Rational, 6> mono{n.z5, n.z4h, n.z3h2, d, 0, 0};
    Rational total = 0;
    for (std::size_t i = 0; i < 6; ++i) total += e[i] * mono[i];
    return total;
}

}  // namespace

TEST(ThreefoldProfile, PrintedTriples) {
    const auto a = threefold_numbers(threefold_profile(1, 42));
    EXPECT_EQ(a.z5, -78);
    EXPECT_EQ(a.z4h, -8);
    EXPECT_EQ(a.z3h2, 2);
    const auto b = threefold_numbers(threefold_profile(2, 20));
    EXPECT_EQ(b.z5, -48);
    EXPECT_EQ(b.z4h, -4);
    EXPECT_EQ(b.z3h2, 4);
    const auto c = threefold_numbers(threefold_profile(3, 10));
    EXPECT_EQ(c.z5, -30);
    EXPECT_EQ(c.z4h, 0);
    EXPECT_EQ(c.z3h2, 6);
}

TEST(ThreefoldProfile, ChernData) {
    const auto p = threefold_profile(2, 20);
    EXPECT_EQ(p.integrate(p.symbol("H") * p.c(2)), 12);
    EXPECT_EQ(p.integrate(p.c(3)), -16);
    EXPECT_EQ(p.c(1), 2 * p.symbol("H"));
    EXPECT_THROW(threefold_profile(0, 2), Error);
    EXPECT_THROW(threefold_profile(2, -2), Error);
}

TEST(ThreefoldProfile, TripleIdentityOnGrid) {
    for (int d = 1; d <= 6; ++d)
        for (int b3 = 0; b3 <= 60; b3 += 1) {
            const auto n = threefold_numbers(threefold_profile(d, b3));
            ASSERT_EQ(n.z5, 8 * d - 44 - b3) << d << "," << b3;
            ASSERT_EQ(n.z4h, 4 * d - 12) << d << "," << b3;
            ASSERT_EQ(n.z3h2, 2 * d) << d << "," << b3;
        }
}

TEST(ThreefoldProfile, CubicDerivedBetti) {
    // c_3 of the cubic threefold from the hypersurface route fixes b_3.
    const auto hyp = hypersurface_profile({3, 3});
    EXPECT_EQ(4 - hyp.integrate(hyp.c(3)), 10);
    EXPECT_EQ(default_b3(3).value, 10);
    EXPECT_FALSE(default_b3(3).literature_only);
    EXPECT_TRUE(default_b3(4).literature_only);
    EXPECT_TRUE(default_b3(5).literature_only);
    EXPECT_THROW(default_b3(6), Error);
}

TEST(ThreefoldProfile, CubicRouteConsistency) {
    const auto a = threefold_profile(3, 10);
    const auto b = hypersurface_profile({3, 3});
    for (int i = 0; i <= 5; ++i) {
        PTClass ca(a), cb(b);
        ca.add_term(i, {5 - i}, 1);
        cb.add_term(i, {5 - i}, 1);
        EXPECT_EQ(eval_top(a, ca), eval_top(b, cb)) << "z^" << i;
    }
}

TEST(VmrtClass, PrintedRows) {
    const auto p5 = threefold_profile(5);
    const auto z5 = PTClass::zeta(p5);
    EXPECT_EQ(vmrt_class_threefold(5, 3, 10), 3 * z5 - PTClass::pullback(p5, "H"));
    EXPECT_EQ(to_string(vmrt_class_threefold(5, 3, 10), p5), "3z - H");
    EXPECT_EQ(to_string(vmrt_class_threefold(4, 4, 16), threefold_profile(4)), "4z");
    EXPECT_EQ(to_string(vmrt_class_threefold(3, 6, 27), threefold_profile(3)), "6z + 3H");
    EXPECT_EQ(to_string(vmrt_class_threefold(2, 12, 56), threefold_profile(2)), "12z + 16H");
    EXPECT_THROW(vmrt_class_threefold(2, 0, 56), Error);
}

TEST(VmrtClass, PivotRowHasNoHyperplaneTerm) {
    const auto cls = vmrt_class_threefold(4, 4, 16);
    EXPECT_EQ(cls.coefficient(0, {1}), 0);
    EXPECT_EQ(cls.coefficient(1, {0}), 4);
}

TEST(VmrtClass, RationalCoefficient) {
    const auto cls = vmrt_class_threefold(3, 2, 4);
    EXPECT_EQ(cls.coefficient(0, {1}), Rational(-2, 3));
}

TEST(VmrtTable, Rows) {
    const auto rows = vmrt_table();
    ASSERT_EQ(rows.size(), 5u);
    const std::array<int, 5> k{60, 12, 6, 4, 3};
    const std::array<int, 5> r{240, 56, 27, 16, 10};
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_EQ(rows[i].d, static_cast<int>(i) + 1);
        EXPECT_EQ(rows[i].k, k[i]);
        EXPECT_EQ(rows[i].r, r[i]);
    }
    EXPECT_FALSE(rows[0].r_exact);
    EXPECT_FALSE(rows[0].cls.has_value());
    EXPECT_EQ(rows[0].h_coeff, 180);
    EXPECT_EQ(vmrt_row_text(rows[0]), "60z + mH, m >= 180");
    EXPECT_EQ(vmrt_row_text(rows[1]), "12z + 16H");
    EXPECT_EQ(vmrt_row_text(rows[2]), "6z + 3H");
    EXPECT_EQ(vmrt_row_text(rows[3]), "4z");
    EXPECT_EQ(vmrt_row_text(rows[4]), "3z - H");
    for (std::size_t i = 1; i < 5; ++i)
        EXPECT_EQ(*rows[i].cls, vmrt_class_threefold(rows[i].d, rows[i].k, rows[i].r));
}

TEST(VmrtTable, NotBigExactlyUpToDegreeFour) {
    for (const auto& row : vmrt_table()) EXPECT_EQ(not_big_certificate(row), row.d <= 4) << row.d;
}

TEST(VmrtTable, Json) {
    const auto j = vmrt_table_json(vmrt_table());
    ASSERT_EQ(j.size(), 5u);
    EXPECT_EQ(j[0]["h_coefficient_min"], "180");
    EXPECT_FALSE(j[0].contains("h_coefficient"));
    EXPECT_EQ(j[4]["class"], "3z - H");
    EXPECT_EQ(j[4]["not_big_certificate"], false);
    EXPECT_NE(j[3]["note"].get<std::string>().find("literature"), std::string::npos);
}

TEST(NotBig, Certificate) {
    const auto p2 = threefold_profile(2);
    const auto z = PTClass::zeta(p2);
    const auto h = PTClass::pullback(p2, "H");
    EXPECT_TRUE(not_big_certificate(4 * z));
    EXPECT_TRUE(not_big_certificate(12 * z + 16 * h));
    EXPECT_FALSE(not_big_certificate(3 * z - h));
    EXPECT_THROW(not_big_certificate(-1 * z + h), Error);
    EXPECT_THROW(not_big_certificate(z * z), Error);
    EXPECT_THROW(not_big_certificate(PTClass::zeta(cubic_surface_profile())), Error);
}

TEST(Certificates, DegreeOne) {
    EXPECT_EQ(certificate_degree1(), -11);
    EXPECT_EQ(certificate_degree1(), expand_product(threefold_profile(1, 42), {0, 1, 3, 3, 4}));
}

TEST(Certificates, DegreeTwoModifiedNef) {
    EXPECT_EQ(certificate_degree2_modnef(), -8);
    EXPECT_EQ(certificate_degree2().first, -8);
    EXPECT_EQ(certificate_degree2_modnef(), expand_product(threefold_profile(2, 20), {0, 0, 2, 2, 2}));
}

// The second degree-2 product, recomputed by hand from (-48, -4, 4) and
// z^2 H^3 = 2, is -17/2; the engine must agree with that expansion.
TEST(Certificates, DegreeTwoSecondProductMatchesExpansion) {
    const auto p = threefold_profile(2, 20);
    const Rational value = certificate_degree2().second;
    EXPECT_EQ(value, expand_product(p, {0, 1, Rational(4, 3), Rational(3, 2), Rational(3, 2)}));
    EXPECT_EQ(value, Rational(-17, 2));
    EXPECT_LT(value, 0);
}

TEST(Certificates, AllStrictlyNegative) {
    EXPECT_LT(certificate_degree1(), 0);
    EXPECT_LT(certificate_degree2().first, 0);
    EXPECT_LT(certificate_degree2().second, 0);
}

TEST(K3Quartic, Data) {
    const auto k3 = k3_quartic_data();
    EXPECT_EQ(k3.z3, -24);
    EXPECT_EQ(k3.z2h, 0);
    EXPECT_EQ(k3.zh2, 4);
    EXPECT_EQ(to_string(k3.bitangent_class, k3.profile), "6z + 8H");
    EXPECT_EQ(to_string(k3.normalized, k3.profile), "z + (4/3)H");
    EXPECT_TRUE(k3.profile.c(1).is_zero());
}
