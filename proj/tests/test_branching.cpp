#include "superharm/branching.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace superharm;

namespace {
const SuperSignature s33(3, 3), s23(2, 3), s21(2, 1), s30(3, 0);
}

TEST(BranchingIndexSets, ExceptionalHyperplane) {
    auto s = branching_index_sets(s33, 5);
    EXPECT_EQ(s.tildeB, (std::vector<int>{4, 5}));
    EXPECT_EQ(s.B0, (std::vector<int>{1, 2}));
    EXPECT_EQ(s.B, (std::vector<int>{0, 3}));

    s = branching_index_sets(s33, 3);
    EXPECT_TRUE(s.tildeB.empty());
    EXPECT_EQ(s.B, (std::vector<int>{0, 1, 2, 3}));
}

TEST(BranchingIndexSets, RegularHyperplane) {
    auto s = branching_index_sets(s30, 4);
    EXPECT_TRUE(s.tildeB.empty());
    EXPECT_TRUE(s.B0.empty());
    EXPECT_EQ(s.B, (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(BranchClassical, RotationGroupDimensions) {
    for (int k = 0; k <= 6; ++k) {
        auto r = branch_classical(s30, k);
        EXPECT_TRUE(r.verified) << k;
        EXPECT_EQ(r.lhs_dim, static_cast<std::size_t>(2 * k + 1));
        ASSERT_EQ(r.summands.size(), static_cast<std::size_t>(k + 1));
        for (const auto& s : r.summands) EXPECT_EQ(s.dim, s.ell == 0 ? 1u : 2u);
    }
}

TEST(BranchClassical, RejectsExceptionalHyperplane) {
    EXPECT_THROW(branch_classical(s33, 2), std::domain_error);
    EXPECT_THROW(branch_harmonic(SuperSignature(0, 2), 2), std::domain_error);
}

TEST(BranchHarmonic, ReducesToClassicalWhenRegular) {
    for (auto sig : {s30, s21, SuperSignature(2, 2), SuperSignature(3, 2)}) {
        for (int k = 0; k <= 5; ++k) {
            auto h = branch_harmonic(sig, k);
            EXPECT_TRUE(h.verified) << to_string(sig) << " k=" << k;
            if (is_exceptional_superdimension(sig.superdimension() - 1)) continue;
            auto c = branch_classical(sig, k);
            ASSERT_EQ(h.summands.size(), c.summands.size());
            for (std::size_t i = 0; i < c.summands.size(); ++i) {
                EXPECT_EQ(h.summands[i].ell, c.summands[i].ell);
                EXPECT_EQ(h.summands[i].kind, HarmonicKind::Harmonic);
                EXPECT_EQ(h.summands[i].dim, c.summands[i].dim);
            }
        }
    }
}

TEST(BranchHarmonic, ExceptionalHyperplaneThreeSix) {
    for (int k = 0; k <= 6; ++k) {
        auto r = branch_harmonic(s33, k);
        EXPECT_TRUE(r.verified) << "k=" << k;
        EXPECT_EQ(r.lhs_dim, r.rhs_dim);
    }
    auto r = branch_harmonic(s33, 5);
    ASSERT_EQ(r.summands.size(), 4u);
    EXPECT_EQ(r.summands[0].ell, 0);
    EXPECT_EQ(r.summands[1].ell, 3);
    EXPECT_EQ(r.summands[2].kind, HarmonicKind::Generalized);
    EXPECT_EQ(r.summands[2].ell, 4);
    EXPECT_EQ(r.summands[3].kind, HarmonicKind::Generalized);
    EXPECT_EQ(r.summands[3].ell, 5);
}

TEST(BranchHarmonic, DeepStabilityCheck) {
    for (int k = 0; k <= 4; ++k) {
        auto r = branch_harmonic(s21, k, true);
        EXPECT_TRUE(r.verified) << k;
        EXPECT_EQ(r.checks.back().name, "summand images stable under osp(m-1|2n)");
    }
    EXPECT_TRUE(branch_harmonic(s23, 4, true).verified);
}

TEST(BranchGeneralized, MultiplicityTwoBelowTheMirror) {
    auto r = branch_generalized(s23, 4);
    EXPECT_TRUE(r.verified);
    ASSERT_EQ(r.summands.size(), 5u);
    const std::vector<int> mult{2, 2, 2, 1, 1};
    for (int l = 0; l <= 4; ++l) {
        EXPECT_EQ(r.summands[l].ell, l);
        EXPECT_EQ(r.summands[l].multiplicity, mult[l]);
    }
    EXPECT_EQ(r.lhs_dim, 128u);
}

TEST(BranchGeneralized, AllCases) {
    for (auto [sig, k] : {std::pair{s21, 2}, std::pair{s23, 4}, std::pair{s23, 5}, std::pair{s23, 6}}) {
        auto r = branch_generalized(sig, k);
        EXPECT_TRUE(r.verified) << to_string(sig) << " k=" << k;
        for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name;
    }
    EXPECT_THROW(branch_generalized(s23, 3), std::domain_error);
    EXPECT_THROW(branch_generalized(s30, 2), std::domain_error);
}
