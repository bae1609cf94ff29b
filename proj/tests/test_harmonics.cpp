#include "superharm/harmonics.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace superharm;

namespace {

const SuperSignature s23(2, 3), s21(2, 1), s30(3, 0), s11(1, 1);

long binom(long n, long r) { return binomial(n, r).get_num().get_si(); }

struct Expected {
    HarmonicKind kind;
    int ell;
};

constexpr auto H = HarmonicKind::Harmonic;
constexpr auto Ht = HarmonicKind::Generalized;

} // namespace

TEST(ExceptionalIndices, Examples) {
    EXPECT_EQ(exceptional_indices(-4), (std::vector<int>{4, 5, 6}));
    EXPECT_TRUE(exceptional_indices(3).empty());
    EXPECT_TRUE(exceptional_indices(-3).empty());
    EXPECT_EQ(exceptional_indices(0), (std::vector<int>{2}));
    EXPECT_EQ(exceptional_indices(-2), (std::vector<int>{3, 4}));
}

TEST(HarmonicSpace, Examples) {
    EXPECT_EQ(harmonic_space(s30, 2).dim(), 5u);
    EXPECT_TRUE(harmonic_space(s11, 4).is_zero());
    for (auto sig : {s23, s21, s30, SuperSignature(0, 2)}) EXPECT_EQ(harmonic_space(sig, 0).dim(), 1u);
}

TEST(HarmonicSpace, RegularDimensionFormula) {
    for (auto sig : {s11, s21, SuperSignature(2, 2), SuperSignature(3, 2), s30, SuperSignature(1, 2)}) {
        if (is_exceptional_superdimension(sig.superdimension())) continue;
        for (int k = 0; k <= 7; ++k)
            EXPECT_EQ(harmonic_space(sig, k).dim(), basis_of(sig, k).size() - basis_of(sig, k - 2).size())
                << to_string(sig) << " k=" << k;
    }
}

TEST(HarmonicSpace, FermionicDimensions) {
    for (int n = 1; n <= 3; ++n) {
        const SuperSignature sig(0, n);
        for (int k = 0; k <= 2 * n + 1; ++k) {
            long expect = k <= n ? binom(2 * n, k) - binom(2 * n, k - 2) : 0;
            EXPECT_EQ(static_cast<long>(harmonic_space(sig, k).dim()), expect) << "n=" << n << " k=" << k;
        }
    }
}

TEST(HarmonicSpace, OneBosonVanishesExactlyAbove2nPlus1) {
    for (int n = 1; n <= 2; ++n) {
        const SuperSignature sig(1, n);
        for (int k = 0; k <= 2 * n + 3; ++k)
            EXPECT_EQ(harmonic_space(sig, k).is_zero(), k > 2 * n + 1) << "n=" << n << " k=" << k;
    }
}

TEST(GeneralizedHarmonics, EqualsHarmonicsOffTheExceptionalSet) {
    for (auto sig : {s21, s23, SuperSignature(3, 2), s30}) {
        for (int k = 0; k <= 7; ++k) {
            if (is_exceptional_degree(sig.superdimension(), k)) continue;
            EXPECT_EQ(generalized_harmonic_space(sig, k), harmonic_space(sig, k)) << to_string(sig) << " " << k;
        }
    }
    EXPECT_EQ(generalized_harmonic_space(s23, 0).dim(), 1u);
}

TEST(GeneralizedHarmonics, QuotientDimensionAtTwoSix) {
    EXPECT_EQ(generalized_harmonic_space(s23, 4).dim() - harmonic_space(s23, 4).dim(), harmonic_space(s23, 2).dim());
    EXPECT_EQ(generalized_harmonic_space(s23, 4).dim(), 128u);
    EXPECT_EQ(harmonic_space(s23, 4).dim(), 99u);
    EXPECT_EQ(harmonic_space(s23, 5).dim(), 120u);
    EXPECT_EQ(harmonic_space(s23, 6).dim(), 127u);
}

TEST(SocleSpace, Examples) {
    EXPECT_TRUE(socle_space(s30, 4).is_zero());
    EXPECT_TRUE(socle_space(s23, 3).is_zero());
    EXPECT_TRUE(socle_space(s23, 0).is_zero());
    EXPECT_TRUE(socle_space(s23, 1).is_zero());
    const auto& h0 = socle_space(s21, 2);
    EXPECT_EQ(h0.dim(), 1u);
    EXPECT_EQ(h0, rpower_image(harmonic_space(s21, 0), 2));
}

TEST(FischerIndexSets, Examples) {
    auto s = fischer_index_sets(s23, 6);
    EXPECT_EQ(s.N, (std::vector<int>{0, 2, 4, 6}));
    EXPECT_EQ(s.tildeJ, (std::vector<int>{4, 6}));
    EXPECT_EQ(s.J0, (std::vector<int>{0, 2}));
    EXPECT_TRUE(s.J.empty());

    s = fischer_index_sets(s30, 5);
    EXPECT_TRUE(s.tildeJ.empty());
    EXPECT_TRUE(s.J0.empty());
    EXPECT_EQ(s.J, (std::vector<int>{1, 3, 5}));

    s = fischer_index_sets(s23, 3);
    EXPECT_EQ(s.N, (std::vector<int>{1, 3}));
    EXPECT_TRUE(s.tildeJ.empty());
    EXPECT_EQ(s.J, (std::vector<int>{1, 3}));
}

// Summand pattern of the M = -4 diagram, columns P_0..P_8, listed by ascending ell.
TEST(FischerDecomposition, ExceptionalPatternTwoSix) {
    const std::vector<std::vector<Expected>> table{
        {{H, 0}},
        {{H, 1}},
        {{H, 0}, {H, 2}},
        {{H, 1}, {H, 3}},
        {{H, 0}, {Ht, 4}},
        {{H, 3}, {Ht, 5}},
        {{Ht, 4}, {Ht, 6}},
        {{H, 3}, {Ht, 5}, {H, 7}},
        {{Ht, 4}, {Ht, 6}, {H, 8}},
    };
    for (int k = 0; k <= 8; ++k) {
        auto r = fischer_decomposition(s23, k);
        EXPECT_TRUE(r.verified) << "k=" << k << " " << r.failure_witness.value_or("");
        ASSERT_EQ(r.summands.size(), table[k].size()) << "k=" << k;
        for (std::size_t i = 0; i < table[k].size(); ++i) {
            EXPECT_EQ(r.summands[i].kind, table[k][i].kind) << "k=" << k;
            EXPECT_EQ(r.summands[i].ell, table[k][i].ell) << "k=" << k;
            EXPECT_EQ(r.summands[i].r_exponent, k - table[k][i].ell);
        }
        EXPECT_EQ(r.summand_dim_sum, r.total_dim);
    }
}

TEST(FischerDecomposition, ClassicalTwoSummandsPerParity) {
    auto r = fischer_decomposition(s30, 4);
    EXPECT_TRUE(r.verified);
    ASSERT_EQ(r.summands.size(), 3u);
    EXPECT_EQ(summand_text(r.summands[0]), "R^4 H_0");
    EXPECT_EQ(summand_text(r.summands[2]), "H_4");
    for (int k = 0; k <= 8; ++k) {
        auto c = fischer_decomposition(s30, k);
        EXPECT_TRUE(c.verified);
        for (const auto& s : c.summands) EXPECT_EQ(s.dim, static_cast<std::size_t>(2 * s.ell + 1));
    }
}

TEST(FischerDecomposition, Fermionic) {
    for (int n = 1; n <= 3; ++n) {
        const SuperSignature sig(0, n);
        for (int k = 0; k <= 2 * n; ++k) {
            auto r = fischer_decomposition(sig, k);
            EXPECT_EQ(r.rule, "fermionic");
            EXPECT_TRUE(r.verified) << "n=" << n << " k=" << k;
            ASSERT_FALSE(r.notes.empty());
            EXPECT_NE(r.notes.front().find("same nonzero summands"), std::string::npos) << r.notes.front();
            // summands are R^{k-l} H_l for l = k', k'-2, ... with k' = min(k, 2n-k)
            const int top = std::min(k, 2 * n - k);
            std::size_t expected_count = static_cast<std::size_t>(top / 2 + 1);
            EXPECT_EQ(r.summands.size(), expected_count);
        }
    }
}

TEST(FischerDecomposition, NegativeDegreeIsEmpty) {
    auto r = fischer_decomposition(s23, -1);
    EXPECT_TRUE(r.summands.empty());
    EXPECT_EQ(r.total_dim, 0u);
}

TEST(TheoremA, ExceptionalCases) {
    for (auto [sig, k] : {std::pair{s21, 2}, std::pair{s23, 4}, std::pair{s23, 5}, std::pair{s23, 6}}) {
        auto r = verify_theorem_A(sig, k);
        EXPECT_TRUE(r.exceptional);
        EXPECT_TRUE(r.verified) << to_string(sig) << " k=" << k;
        EXPECT_EQ(r.dim_Htilde - r.dim_H, r.dim_H0);
        EXPECT_EQ(r.dim_H0, r.dim_mirror);
        EXPECT_EQ(r.mirror_degree, 2 - sig.superdimension() - k);
    }
}

TEST(TheoremA, RegularCases) {
    for (int k = 0; k <= 6; ++k) {
        auto r = verify_theorem_A(s30, k);
        EXPECT_FALSE(r.exceptional);
        EXPECT_TRUE(r.verified);
        EXPECT_EQ(r.dim_H0, 0u);
    }
    EXPECT_TRUE(verify_theorem_A(s23, 3).verified);
    EXPECT_TRUE(verify_theorem_A(s23, 7).verified);
}

// m = 0 is outside the hypotheses: the generalized harmonics vanish on I_M, so the chain
// of the exceptional case cannot be strict there. The report says so instead of passing.
TEST(TheoremA, PurelyFermionicExceptionalDegreesAreFlagged) {
    const SuperSignature sig(0, 2);
    for (int k : exceptional_indices(sig.superdimension())) {
        auto r = verify_theorem_A(sig, k);
        EXPECT_TRUE(r.exceptional);
        EXPECT_FALSE(r.notes.empty());
        EXPECT_EQ(r.dim_Htilde, 0u);
        EXPECT_FALSE(r.verified);
    }
}
