#pragma once

// Branching of H_k and H~_k under osp(m|2n) > osp(m-1|2n). Each law is certified by
// dimensions and by the CK-transported subspace identities it rests on.

#include "superharm/ck.hpp"
#include "superharm/harmonics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace superharm {

/// B~_k = {0..k} meet I_{M-1}; B0_k = {3 - M - l : l in B~_k}; B_k = the rest (ascending).
struct BranchingIndexSets {
    int k = 0;
    std::vector<int> tildeB;
    std::vector<int> B0;
    std::vector<int> B;
};

inline BranchingIndexSets branching_index_sets(SuperSignature sig, int k) {
    BranchingIndexSets s;
    s.k = k;
    const int M = sig.superdimension();
    for (int l = 0; l <= k; ++l)
        if (is_exceptional_degree(M - 1, l)) s.tildeB.push_back(l);
    for (int l : s.tildeB) s.B0.push_back(3 - M - l);
    std::sort(s.B0.begin(), s.B0.end());
    auto in = [](const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); };
    for (int l = 0; l <= k; ++l)
        if (!in(s.tildeB, l) && !in(s.B0, l)) s.B.push_back(l);
    return s;
}

enum class BranchMode { Classical, Harmonic, Generalized };

inline const char* to_string(BranchMode m) {
    switch (m) {
    case BranchMode::Classical: return "classical";
    case BranchMode::Harmonic: return "harmonic";
    case BranchMode::Generalized: return "generalized";
    }
    return "?";
}

struct BranchSummand {
    HarmonicKind kind = HarmonicKind::Harmonic; ///< of the hyperplane signature
    int ell = 0;
    int multiplicity = 1;
    std::size_t dim = 0;
};

struct BranchingReport {
    SuperSignature sig;
    int k = 0;
    BranchMode mode = BranchMode::Harmonic;
    BranchingIndexSets index_sets; ///< filled for the harmonic mode
    std::vector<BranchSummand> summands;
    std::size_t lhs_dim = 0;
    std::size_t rhs_dim = 0;
    std::vector<NamedCheck> checks;
    std::vector<std::string> notes;
    bool verified = false;
};

namespace detail {

inline void finish(BranchingReport& r) {
    r.rhs_dim = 0;
    for (const auto& s : r.summands) r.rhs_dim += s.multiplicity * s.dim;
    r.checks.insert(r.checks.begin(), {"dim identity", r.lhs_dim == r.rhs_dim});
    r.verified = std::all_of(r.checks.begin(), r.checks.end(), [](const NamedCheck& c) { return c.passed; });
}

/// CK(p, 0, 0) and CK(0, q, 0) over the monomials of P_k and P_{k-1} on the hyperplane,
/// followed by CK(0, 0, r) for every r in `lap_data`.
inline Subspace ck_image(SuperSignature sig, int k, const std::vector<SuperPolynomial>& lap_data) {
    const auto lower = sig.hyperplane();
    std::vector<SuperPolynomial> images;
    for (const auto& mono : basis_of(lower, k).monomials()) {
        CKData d = make_ck_data(sig, k);
        d.p_k = SuperPolynomial::monomial(lower, mono);
        images.push_back(ck_extend(sig, d));
    }
    for (const auto& mono : basis_of(lower, k - 1).monomials()) {
        CKData d = make_ck_data(sig, k);
        d.p_k1 = SuperPolynomial::monomial(lower, mono);
        images.push_back(ck_extend(sig, d));
    }
    for (const auto& r : lap_data) {
        CKData d = make_ck_data(sig, k);
        d.P_k2 = r;
        images.push_back(ck_extend(sig, d));
    }
    return span_of(sig, k, images);
}

/// Every osp(m-1|2n) generator maps the subspace into itself.
inline bool stable_under_hyperplane_generators(const Subspace& u) {
    auto [sig, k] = u.ambient().graded.value();
    auto basis = basis_polynomials(u);
    for (const auto& gen : osp_generators(sig, sig.m)) {
        for (const auto& p : basis)
            if (!u.contains(to_vector(gen(p), k))) return false;
    }
    return true;
}

inline void require_m(SuperSignature sig) {
    if (sig.m == 0) throw std::domain_error("branching needs m >= 1");
}

} // namespace detail

/// H_k = sum_{l <= k} H_l of the hyperplane, when M - 1 is not in -2N_0.
inline BranchingReport branch_classical(SuperSignature sig, int k) {
    detail::require_m(sig);
    if (is_exceptional_superdimension(sig.superdimension() - 1))
        throw std::domain_error("M - 1 lies in -2N_0; use branch_harmonic for this signature");
    const auto lower = sig.hyperplane();
    BranchingReport r;
    r.sig = sig;
    r.k = k;
    r.mode = BranchMode::Classical;
    r.index_sets = branching_index_sets(sig, k);
    r.lhs_dim = harmonic_space(sig, k).dim();
    for (int l = 0; l <= k; ++l) r.summands.push_back({HarmonicKind::Harmonic, l, 1, harmonic_space(lower, l).dim()});
    detail::finish(r);
    return r;
}

/// H_k = sum_{B~_k} H~_l + sum_{B_k} H_l of the hyperplane. With deep_check, each CK image of a
/// hyperplane Fischer summand is also tested for stability under the osp(m-1|2n) generators.
inline BranchingReport branch_harmonic(SuperSignature sig, int k, bool deep_check = false) {
    detail::require_m(sig);
    const auto lower = sig.hyperplane();
    BranchingReport r;
    r.sig = sig;
    r.k = k;
    r.mode = BranchMode::Harmonic;
    r.index_sets = branching_index_sets(sig, k);
    const Subspace& h = harmonic_space(sig, k);
    r.lhs_dim = h.dim();
    for (int l = 0; l <= k; ++l) {
        auto& s = r.index_sets;
        if (std::find(s.tildeB.begin(), s.tildeB.end(), l) != s.tildeB.end())
            r.summands.push_back({HarmonicKind::Generalized, l, 1, generalized_harmonic_space(lower, l).dim()});
        else if (std::find(s.B.begin(), s.B.end(), l) != s.B.end())
            r.summands.push_back({HarmonicKind::Harmonic, l, 1, harmonic_space(lower, l).dim()});
    }
    if (lower.m == 0 && !r.index_sets.tildeB.empty())
        r.notes.push_back("hyperplane is purely fermionic; Htilde computed as Ker(lap r2 lap) there");

    const std::size_t dim_p = basis_of(lower, k).size() + basis_of(lower, k - 1).size();
    r.checks.push_back({"dim H_k = dim P_k + dim P_{k-1} (hyperplane)", h.dim() == dim_p});
    r.checks.push_back({"H_k = CK(P_k + P_{k-1} + 0)", equal(h, detail::ck_image(sig, k, {}))});

    // The hyperplane Fischer summands of P_k and P_{k-1} must be exactly the listed summands.
    auto fk = fischer_decomposition(lower, k);
    auto fk1 = fischer_decomposition(lower, k - 1);
    r.checks.push_back({"hyperplane Fischer decompositions verified", fk.verified && fk1.verified});
    std::map<std::pair<int, int>, int> from_fischer, from_sets;
    for (const auto* rep : {&fk, &fk1})
        for (const auto& s : rep->summands)
            if (!s.trivial()) ++from_fischer[{static_cast<int>(s.kind), s.ell}];
    for (const auto& s : r.summands)
        if (s.dim > 0) ++from_sets[{static_cast<int>(s.kind), s.ell}];
    r.checks.push_back({"Fischer summands match index sets", from_fischer == from_sets});

    if (deep_check) {
        bool stable = true;
        for (int shift = 0; shift <= 1 && stable; ++shift) {
            const auto& rep = shift == 0 ? fk : fk1;
            for (const auto& s : rep.summands) {
                if (s.trivial()) continue;
                std::vector<SuperPolynomial> images;
                for (const auto& p : basis_polynomials(space_of_kind(s.kind, lower, s.ell))) {
                    CKData d = make_ck_data(sig, k);
                    (shift == 0 ? d.p_k : d.p_k1) = rpower_mul(p, s.r_exponent);
                    images.push_back(ck_extend(sig, d));
                }
                if (!detail::stable_under_hyperplane_generators(span_of(sig, k, images))) {
                    stable = false;
                    break;
                }
            }
        }
        r.checks.push_back({"summand images stable under osp(m-1|2n)", stable});
    }
    detail::finish(r);
    return r;
}

/// For M in -2N_0 and k in I_M: H~_k = sum_{l <= 2-M-k} 2 H_l + sum_{3-M-k <= l <= k} H_l.
inline BranchingReport branch_generalized(SuperSignature sig, int k) {
    detail::require_m(sig);
    const int M = sig.superdimension();
    if (!is_exceptional_degree(M, k))
        throw std::domain_error("generalized branching needs M in -2N_0 and k in I_M");
    const auto lower = sig.hyperplane();
    const int mirror = 2 - M - k;
    BranchingReport r;
    r.sig = sig;
    r.k = k;
    r.mode = BranchMode::Generalized;
    const Subspace& ht = generalized_harmonic_space(sig, k);
    r.lhs_dim = ht.dim();
    for (int l = 0; l <= k; ++l)
        r.summands.push_back({HarmonicKind::Harmonic, l, l <= mirror ? 2 : 1, harmonic_space(lower, l).dim()});

    const Subspace& ker = lap_rsq_kernel(sig, k - 2);
    const Subspace& hm = harmonic_space(sig, mirror);
    r.checks.push_back({"Ker_{k-2}(lap r2) = R^" + std::to_string(2 * k + M - 4) + " H_" + std::to_string(mirror),
                        equal(ker, rpower_image(hm, 2 * k + M - 4))});
    r.checks.push_back({"Htilde_k = CK(P_k + P_{k-1} + Ker_{k-2}(lap r2))",
                        equal(ht, detail::ck_image(sig, k, basis_polynomials(ker)))});
    const std::size_t expect = basis_of(lower, k).size() + basis_of(lower, k - 1).size() + hm.dim();
    r.checks.push_back({"dim Htilde_k = dim P_k + dim P_{k-1} (hyperplane) + dim H_{2-M-k}", ht.dim() == expect});
    detail::finish(r);
    return r;
}

} // namespace superharm
