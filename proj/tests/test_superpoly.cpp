#include "superharm/superpoly.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace superharm;
using superharm::testing::P;

namespace {

const SuperSignature s11(1, 1), s20(2, 0), s23(2, 3), s01(0, 1), s22(2, 2);

SuperPolynomial parity_part(const SuperPolynomial& p, int par) {
    SuperPolynomial r(p.signature());
    for (const auto& [mono, c] : p.terms())
        if (mono.parity() == par) r.add_term(mono, c);
    return r;
}

// Brute-force count of degree-k monomials: every exponent tuple with entries <= k and every
// fermion subset, filtered by total degree.
std::size_t brute_count(SuperSignature sig, int k) {
    std::size_t fermion_subsets = std::size_t{1} << sig.fermion_count();
    std::vector<int> e(sig.m, 0);
    std::size_t count = 0;
    while (true) {
        int bdeg = 0;
        for (int v : e) bdeg += v;
        for (std::size_t s = 0; s < fermion_subsets; ++s)
            if (bdeg + std::popcount(s) == k) ++count;
        int i = 0;
        while (i < sig.m && e[i] == k) e[i++] = 0;
        if (i == sig.m) break;
        ++e[i];
    }
    return count;
}

} // namespace

TEST(Signature, SuperdimensionAndValidation) {
    EXPECT_EQ(s23.superdimension(), -4);
    EXPECT_EQ(SuperSignature(3, 0).superdimension(), 3);
    EXPECT_EQ(to_string(s23), "(2|6)");
    EXPECT_THROW(SuperSignature(-1, 0), std::invalid_argument);
    EXPECT_THROW(SuperSignature(0, 33), std::invalid_argument);
    EXPECT_THROW(SuperSignature(0, 2).hyperplane(), std::domain_error);
    EXPECT_EQ(s23.hyperplane(), SuperSignature(1, 3));
}

TEST(Multiply, Grassmann) {
    auto t1 = SuperPolynomial::theta(s11, 1);
    auto t2 = SuperPolynomial::theta(s11, 2);
    EXPECT_TRUE(multiply(t1, t1).is_zero());
    EXPECT_EQ(multiply(t2, t1), P("-t1 t2", s11));
    auto a = P("x1 + t1 t2", s11);
    EXPECT_EQ(multiply(a, a), P("x1^2 + 2*x1 t1 t2", s11));
}

TEST(Multiply, SignatureMismatchThrows) {
    EXPECT_THROW(multiply(SuperPolynomial::x(s11, 1), SuperPolynomial::x(s20, 1)), std::invalid_argument);
}

TEST(AddScale, Basics) {
    auto t = P("t1 t2", s11);
    auto zero = add(t, scale(-1, t));
    EXPECT_TRUE(zero.is_zero());
    EXPECT_TRUE(zero.terms().empty());
    EXPECT_EQ(scale(ratio(1, 2), P("2*x1", s20)), P("x1", s20));
    EXPECT_EQ(add(SuperPolynomial::x(s20, 1), SuperPolynomial::x(s20, 2)), P("x1 + x2", s20));
}

TEST(Derivatives, Bosonic) {
    const SuperSignature s21(2, 1);
    EXPECT_EQ(d_bosonic(P("x1^3", s11), 1), P("3*x1^2", s11));
    EXPECT_TRUE(d_bosonic(P("t1", s11), 1).is_zero());
    EXPECT_EQ(d_bosonic(P("x1 x2 t1", s21), 2), P("x1 t1", s21));
}

TEST(Derivatives, FermionicIsLeftDerivative) {
    EXPECT_EQ(d_fermionic(P("t1 t2", s01), 1), P("t2", s01));
    EXPECT_EQ(d_fermionic(P("t1 t2", s01), 2), P("-t1", s01));
    EXPECT_TRUE(d_fermionic(P("x1", s11), 1).is_zero());
}

TEST(MonomialBasis, Examples) {
    auto b = monomial_basis(s01, 1);
    ASSERT_EQ(b.size(), 2u);
    EXPECT_EQ(SuperPolynomial::monomial(s01, b[0]), P("t1", s01));
    EXPECT_EQ(SuperPolynomial::monomial(s01, b[1]), P("t2", s01));
    EXPECT_EQ(monomial_basis(s23, 2).size(), 30u);
    EXPECT_TRUE(monomial_basis(s01, 3).empty());
    EXPECT_TRUE(monomial_basis(s23, -1).empty());
}

TEST(MonomialBasis, CountsMatchBruteForce) {
    for (auto sig : {s11, s20, s23, s01, s22, SuperSignature(3, 2), SuperSignature(0, 3), SuperSignature(3, 0)}) {
        for (int k = 0; k <= 6; ++k) {
            const auto& b = basis_of(sig, k);
            EXPECT_EQ(b.size(), brute_count(sig, k)) << to_string(sig) << " k=" << k;
            EXPECT_EQ(monomial_count(sig, k), b.size());
            for (std::size_t i = 1; i < b.size(); ++i) EXPECT_LT(b[i - 1], b[i]);
            for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(b.index_of(b[i]), i);
        }
    }
}

TEST(MonomialBasis, DimensionsOfTwoSix) {
    const std::vector<std::size_t> expect{1, 8, 30, 72, 129, 192, 256, 320, 384};
    for (int k = 0; k <= 8; ++k) EXPECT_EQ(basis_of(s23, k).size(), expect[k]) << k;
}

TEST(Hyperplane, RestrictAndEmbed) {
    EXPECT_EQ(restrict_hyperplane(P("x2^2 + x1", s20)), P("x1", SuperSignature(1, 0)));
    EXPECT_EQ(restrict_hyperplane(P("t1 t2", s11)), P("t1 t2", SuperSignature(0, 1)));
    EXPECT_TRUE(restrict_hyperplane(P("x1 t1", s11)).is_zero());
    EXPECT_THROW(restrict_hyperplane(P("t1", s01)), std::domain_error);

    const SuperSignature lower(1, 1);
    EXPECT_EQ(embed(P("1", lower)), P("1", SuperSignature(2, 1)));
    EXPECT_EQ(embed(P("x1 t1", lower)), P("x1 t1", SuperSignature(2, 1)));
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        auto p = superharm::testing::random_polynomial(rng, lower, 4);
        EXPECT_EQ(restrict_hyperplane(embed(p)), p);
    }
}

TEST(XmCoefficients, Examples) {
    const SuperSignature lower = s11.hyperplane();
    auto q = xm_coefficients(P("x1 t1", s11), 2);
    ASSERT_EQ(q.size(), 3u);
    EXPECT_TRUE(q[0].is_zero());
    EXPECT_EQ(q[1], P("t1", lower));
    EXPECT_TRUE(q[2].is_zero());

    q = xm_coefficients(P("x1^2", s11), 2);
    EXPECT_EQ(q[2], P("2", lower));

    const SuperSignature s21(2, 1);
    q = xm_coefficients(P("x1^2", s21), 2);
    EXPECT_EQ(q[0], P("x1^2", s21.hyperplane()));
    EXPECT_TRUE(q[1].is_zero());
    EXPECT_TRUE(q[2].is_zero());

    EXPECT_THROW(xm_coefficients(P("x1 + x1^2", s11), 2), std::invalid_argument);
}

TEST(XmCoefficients, RoundTrip) {
    std::mt19937 rng(11);
    for (auto sig : {s11, s22, SuperSignature(3, 1)}) {
        for (int k = 0; k <= 5; ++k) {
            auto p = superharm::testing::random_homogeneous(rng, sig, k, 6);
            EXPECT_EQ(from_xm_coefficients(xm_coefficients(p, k), sig), p);
        }
    }
}

// ---- algebraic properties on random inputs (seeded) ----------------------------------

class SuperAlgebraProperties : public ::testing::TestWithParam<SuperSignature> {};

TEST_P(SuperAlgebraProperties, Supercommutative) {
    const auto sig = GetParam();
    std::mt19937 rng(1000 + sig.m * 10 + sig.n);
    for (int i = 0; i < 40; ++i) {
        for (int pa = 0; pa < 2; ++pa)
            for (int pb = 0; pb < 2; ++pb) {
                auto p = parity_part(superharm::testing::random_polynomial(rng, sig, 3), pa);
                auto q = parity_part(superharm::testing::random_polynomial(rng, sig, 3), pb);
                auto expect = (pa & pb) ? scale(-1, multiply(q, p)) : multiply(q, p);
                EXPECT_EQ(multiply(p, q), expect);
            }
    }
}

TEST_P(SuperAlgebraProperties, AssociativeAndDistributive) {
    const auto sig = GetParam();
    std::mt19937 rng(2000 + sig.m * 10 + sig.n);
    for (int i = 0; i < 30; ++i) {
        auto a = superharm::testing::random_polynomial(rng, sig, 3);
        auto b = superharm::testing::random_polynomial(rng, sig, 3);
        auto c = superharm::testing::random_polynomial(rng, sig, 3);
        EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
        EXPECT_EQ(multiply(a, add(b, c)), add(multiply(a, b), multiply(a, c)));
    }
}

TEST_P(SuperAlgebraProperties, GradedLeibniz) {
    const auto sig = GetParam();
    std::mt19937 rng(3000 + sig.m * 10 + sig.n);
    for (int i = 0; i < 30; ++i) {
        for (int pa = 0; pa < 2; ++pa) {
            auto p = parity_part(superharm::testing::random_polynomial(rng, sig, 3), pa);
            auto q = superharm::testing::random_polynomial(rng, sig, 3);
            for (int j = 1; j <= sig.m; ++j)
                EXPECT_EQ(d_bosonic(multiply(p, q), j), add(multiply(d_bosonic(p, j), q), multiply(p, d_bosonic(q, j))));
            for (int j = 1; j <= sig.fermion_count(); ++j) {
                auto second = multiply(p, d_fermionic(q, j));
                auto expect = add(multiply(d_fermionic(p, j), q), pa ? scale(-1, second) : second);
                EXPECT_EQ(d_fermionic(multiply(p, q), j), expect);
            }
        }
    }
}

TEST_P(SuperAlgebraProperties, CanonicalAnticommutators) {
    const auto sig = GetParam();
    std::mt19937 rng(4000 + sig.m * 10 + sig.n);
    for (int i = 0; i < 20; ++i) {
        auto p = superharm::testing::random_polynomial(rng, sig, 3);
        for (int a = 1; a <= sig.fermion_count(); ++a)
            for (int b = 1; b <= sig.fermion_count(); ++b) {
                auto lhs = add(d_fermionic(mul_theta(p, b), a), mul_theta(d_fermionic(p, a), b));
                EXPECT_EQ(lhs, a == b ? p : SuperPolynomial(sig));
                EXPECT_TRUE(add(d_fermionic(d_fermionic(p, a), b), d_fermionic(d_fermionic(p, b), a)).is_zero());
            }
        for (int a = 1; a <= sig.m; ++a)
            EXPECT_EQ(subtract(d_bosonic(mul_x(p, a), a), mul_x(d_bosonic(p, a), a)), p);
    }
}

INSTANTIATE_TEST_SUITE_P(Signatures, SuperAlgebraProperties,
                         ::testing::Values(SuperSignature(1, 1), SuperSignature(2, 2), SuperSignature(0, 3),
                                           SuperSignature(3, 0), SuperSignature(1, 2)),
                         [](const auto& info) {
                             return "m" + std::to_string(info.param.m) + "n" + std::to_string(info.param.n);
                         });

TEST(Parity, Homogeneity) {
    EXPECT_EQ(P("t1 + x1 t2", s11).parity(), 1);
    EXPECT_EQ(P("x1 + t1 t2", s11).parity(), 0);
    EXPECT_FALSE(P("x1 + t1", s11).parity().has_value());
    EXPECT_EQ(P("x1 + t1", s11).homogeneous_degree(), 1);
    EXPECT_FALSE(P("1 + t1", s11).homogeneous_degree().has_value());
}
