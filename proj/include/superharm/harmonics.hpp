#pragma once

// Spherical harmonics H_k = Ker_k Lap, generalized harmonics Ker_k(Lap R^2 Lap), the
// socle H_k meet R^2 P_{k-2}, and the Fischer decompositions of P_k.

#include "superharm/exactla.hpp"
#include "superharm/memo.hpp"
#include "superharm/operators.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace superharm {

/// M in -2N_0 (zero included).
inline bool is_exceptional_superdimension(int M) { return M <= 0 && M % 2 == 0; }

/// I_M = {k in N_0 : 2 - M/2 <= k <= 2 - M} for M in -2N_0, else empty.
inline std::vector<int> exceptional_indices(int M) {
    std::vector<int> out;
    if (!is_exceptional_superdimension(M)) return out;
    for (int k = std::max(0, 2 - M / 2); k <= 2 - M; ++k) out.push_back(k);
    return out;
}

inline bool is_exceptional_degree(int M, int k) {
    auto idx = exceptional_indices(M);
    return std::find(idx.begin(), idx.end(), k) != idx.end();
}

enum class HarmonicKind { Harmonic, Generalized };

inline const char* to_string(HarmonicKind k) { return k == HarmonicKind::Harmonic ? "H" : "Htilde"; }

namespace detail {

using SpaceKey = std::tuple<int, int, int, int>;

inline Memo<SpaceKey, Subspace>& space_cache() {
    static Memo<SpaceKey, Subspace> memo;
    return memo;
}

inline Subspace zero_space(SuperSignature sig, int k) { return Subspace(Ambient::of(sig, k)); }

} // namespace detail

/// H_k = Ker_k Lap.
inline const Subspace& harmonic_space(SuperSignature sig, int k) {
    return detail::space_cache().get({0, sig.m, sig.n, k}, [&] {
        return k < 0 ? detail::zero_space(sig, k) : kernel_of(laplacian_op(sig), k);
    });
}

/// H~_k = Ker_k(Lap R^2 Lap).
inline const Subspace& generalized_harmonic_space(SuperSignature sig, int k) {
    return detail::space_cache().get({1, sig.m, sig.n, k}, [&] {
        return k < 0 ? detail::zero_space(sig, k) : kernel_of(lap_rsq_lap_op(sig), k);
    });
}

/// Ker_k(Lap R^2).
inline const Subspace& lap_rsq_kernel(SuperSignature sig, int k) {
    return detail::space_cache().get({2, sig.m, sig.n, k}, [&] {
        return k < 0 ? detail::zero_space(sig, k) : kernel_of(compose(laplacian_op(sig), rsquare_op(sig)), k);
    });
}

/// R^2 P_{k-2} inside P_k.
inline const Subspace& rsquare_image(SuperSignature sig, int k) {
    return detail::space_cache().get({3, sig.m, sig.n, k}, [&] {
        if (k < 2) return detail::zero_space(sig, k);
        return image(operator_matrix(rsquare_op(sig), k - 2), Ambient::of(sig, k));
    });
}

/// H^0_k = H_k meet R^2 P_{k-2}.
inline const Subspace& socle_space(SuperSignature sig, int k) {
    return detail::space_cache().get({4, sig.m, sig.n, k}, [&] {
        if (k < 2) return detail::zero_space(sig, k);
        return intersect(harmonic_space(sig, k), rsquare_image(sig, k));
    });
}

inline const Subspace& space_of_kind(HarmonicKind kind, SuperSignature sig, int k) {
    return kind == HarmonicKind::Harmonic ? harmonic_space(sig, k) : generalized_harmonic_space(sig, k);
}

/// R^e U for a subspace U of P_l (e even).
inline Subspace rpower_image(const Subspace& u, int exponent) {
    auto [sig, l] = u.ambient().graded.value();
    std::vector<SuperPolynomial> images;
    for (const auto& p : basis_polynomials(u)) images.push_back(rpower_mul(p, exponent));
    return span_of(sig, l + exponent, images);
}

inline bool is_subspace_of(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v);
    return std::all_of(u.rows().begin(), u.rows().end(), [&](const SparseVector& r) { return v.contains(r); });
}

// ---- Fischer decomposition -------------------------------------------------------------------

/// Index sets N_k, J~_k = N_k meet I_M, J0_k = {2 - M - l : l in J~_k}, J_k = the rest (ascending).
struct FischerIndexSets {
    int k = 0;
    std::vector<int> N;
    std::vector<int> tildeJ;
    std::vector<int> J0;
    std::vector<int> J;
};

inline std::vector<int> parity_ladder(int k) {
    std::vector<int> out;
    for (int l = k % 2; l <= k; l += 2) out.push_back(l);
    return out;
}

inline FischerIndexSets fischer_index_sets(SuperSignature sig, int k) {
    FischerIndexSets s;
    s.k = k;
    if (k < 0) return s;
    const int M = sig.superdimension();
    s.N = parity_ladder(k);
    for (int l : s.N)
        if (is_exceptional_degree(M, l)) s.tildeJ.push_back(l);
    for (int l : s.tildeJ) s.J0.push_back(2 - M - l);
    std::sort(s.J0.begin(), s.J0.end());
    auto in = [](const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); };
    for (int l : s.N)
        if (!in(s.tildeJ, l) && !in(s.J0, l)) s.J.push_back(l);
    return s;
}

struct FischerSummand {
    HarmonicKind kind = HarmonicKind::Harmonic;
    int ell = 0;
    int r_exponent = 0; ///< the summand is R^{r_exponent} times the space of degree ell
    std::size_t dim = 0;
    bool trivial() const { return dim == 0; }

    friend bool operator==(const FischerSummand&, const FischerSummand&) = default;
};

inline std::string summand_text(const FischerSummand& s) {
    std::string out;
    if (s.r_exponent > 0) out += "R^" + std::to_string(s.r_exponent) + " ";
    return out + to_string(s.kind) + "_" + std::to_string(s.ell);
}

struct DecompositionReport {
    SuperSignature sig;
    int k = 0;
    std::string rule; ///< "theorem-B" (m >= 1) or "fermionic" (m = 0)
    FischerIndexSets index_sets;
    std::vector<FischerSummand> summands; ///< ascending ell
    std::size_t total_dim = 0;            ///< dim P_k
    std::size_t summand_dim_sum = 0;
    bool verified = false;
    std::optional<std::string> failure_witness;
    std::vector<std::string> notes;
};

namespace detail {

inline std::vector<FischerSummand> theorem_b_summands(SuperSignature sig, int k, const FischerIndexSets& s) {
    std::vector<FischerSummand> out;
    for (int l : s.N) {
        bool tilde = std::find(s.tildeJ.begin(), s.tildeJ.end(), l) != s.tildeJ.end();
        bool plain = std::find(s.J.begin(), s.J.end(), l) != s.J.end();
        if (!tilde && !plain) continue;
        auto kind = tilde ? HarmonicKind::Generalized : HarmonicKind::Harmonic;
        out.push_back({kind, l, k - l, space_of_kind(kind, sig, l).dim()});
    }
    return out;
}

// Purely fermionic rule: with k' = min(k, 2n - k), P_k = sum_j R^{k-l} H_l over l = k' - 2j.
inline std::vector<FischerSummand> fermionic_summands(SuperSignature sig, int k) {
    std::vector<FischerSummand> out;
    if (k < 0 || k > 2 * sig.n) return out;
    const int top = std::min(k, 2 * sig.n - k);
    for (int l : parity_ladder(top)) out.push_back({HarmonicKind::Harmonic, l, k - l, harmonic_space(sig, l).dim()});
    return out;
}

inline std::vector<FischerSummand> nonzero(const std::vector<FischerSummand>& v) {
    std::vector<FischerSummand> out;
    std::copy_if(v.begin(), v.end(), std::back_inserter(out), [](const auto& s) { return !s.trivial(); });
    return out;
}

// Builds each summand as a subspace of P_k and checks injectivity, independence and span.
inline void verify_summands(DecompositionReport& r) {
    Subspace running(Ambient::of(r.sig, r.k));
    r.summand_dim_sum = 0;
    for (const auto& s : r.summands) {
        const Subspace& source = space_of_kind(s.kind, r.sig, s.ell);
        Subspace piece = rpower_image(source, s.r_exponent);
        if (piece.dim() != source.dim()) {
            r.failure_witness = "R^" + std::to_string(s.r_exponent) + " is not injective on " +
                                std::string(to_string(s.kind)) + "_" + std::to_string(s.ell);
            return;
        }
        Subspace next = sum(running, piece);
        if (next.dim() != running.dim() + piece.dim()) {
            r.failure_witness = summand_text(s) + " meets the preceding summands";
            return;
        }
        running = std::move(next);
        r.summand_dim_sum += s.dim;
    }
    if (running.dim() != r.total_dim) {
        r.failure_witness = "summands span dimension " + std::to_string(running.dim()) + " of " +
                            std::to_string(r.total_dim);
        return;
    }
    r.verified = true;
}

} // namespace detail

inline DecompositionReport fischer_decomposition(SuperSignature sig, int k) {
    DecompositionReport r;
    r.sig = sig;
    r.k = k;
    r.index_sets = fischer_index_sets(sig, k);
    r.total_dim = basis_of(sig, k).size();
    if (sig.m == 0) {
        r.rule = "fermionic";
        r.summands = detail::fermionic_summands(sig, k);
        auto by_b = detail::nonzero(detail::theorem_b_summands(sig, k, r.index_sets));
        auto by_f = detail::nonzero(r.summands);
        if (by_b == by_f) {
            r.notes.push_back("theorem-B index sets give the same nonzero summands");
        } else {
            std::string b_text, f_text;
            for (const auto& s : by_b) b_text += (b_text.empty() ? "" : ", ") + summand_text(s);
            for (const auto& s : by_f) f_text += (f_text.empty() ? "" : ", ") + summand_text(s);
            r.notes.push_back("theorem-B index sets disagree: [" + b_text + "] vs [" + f_text + "]");
        }
    } else {
        r.rule = "theorem-B";
        r.summands = detail::theorem_b_summands(sig, k, r.index_sets);
    }
    for (const auto& s : r.summands)
        if (s.trivial()) r.notes.push_back(summand_text(s) + " is zero");
    if (k < 0) {
        r.verified = true;
        return r;
    }
    detail::verify_summands(r);
    return r;
}

// ---- composition series of the generalized harmonics -----------------------------------------

struct NamedCheck {
    std::string name;
    bool passed = false;
};

struct TheoremAReport {
    SuperSignature sig;
    int k = 0;
    bool exceptional = false; ///< k in I_M
    std::size_t dim_P = 0, dim_H = 0, dim_Htilde = 0, dim_H0 = 0;
    std::optional<int> mirror_degree; ///< 2 - M - k in the exceptional case
    std::size_t dim_mirror = 0;       ///< dim H_{2-M-k}
    std::size_t quotient_dim = 0;     ///< dim H_k - dim H^0_k
    std::vector<NamedCheck> checks;
    std::vector<std::string> notes;
    bool verified = false;
};

inline TheoremAReport verify_theorem_A(SuperSignature sig, int k) {
    TheoremAReport r;
    r.sig = sig;
    r.k = k;
    const int M = sig.superdimension();
    r.exceptional = is_exceptional_degree(M, k);
    const Subspace& h = harmonic_space(sig, k);
    const Subspace& ht = generalized_harmonic_space(sig, k);
    const Subspace& h0 = socle_space(sig, k);
    r.dim_P = basis_of(sig, k).size();
    r.dim_H = h.dim();
    r.dim_Htilde = ht.dim();
    r.dim_H0 = h0.dim();
    r.quotient_dim = r.dim_H - r.dim_H0;
    if (sig.m == 0 && r.exceptional) r.notes.push_back("m = 0 lies outside the hypotheses of the statement");

    auto check = [&r](std::string name, bool ok) { r.checks.push_back({std::move(name), ok}); };
    check("H0 inside H", is_subspace_of(h0, h));
    check("H inside Htilde", is_subspace_of(h, ht));
    if (!r.exceptional) {
        check("Htilde = H", equal(ht, h));
        check("H0 = 0", h0.is_zero());
    } else {
        const int mirror = 2 - M - k;
        r.mirror_degree = mirror;
        const Subspace& hm = harmonic_space(sig, mirror);
        r.dim_mirror = hm.dim();
        check("H0 = R^" + std::to_string(2 * k + M - 2) + " H_" + std::to_string(mirror),
              equal(h0, rpower_image(hm, 2 * k + M - 2)));
        check("H0 != 0", !h0.is_zero());
        check("H0 strictly inside H", r.dim_H0 < r.dim_H);
        check("H strictly inside Htilde", r.dim_H < r.dim_Htilde);
        check("dim Htilde - dim H = dim H0", r.dim_Htilde - r.dim_H == r.dim_H0);
        check("dim H0 = dim H_" + std::to_string(mirror), r.dim_H0 == r.dim_mirror);
    }
    r.verified = std::all_of(r.checks.begin(), r.checks.end(), [](const NamedCheck& c) { return c.passed; });
    return r;
}

} // namespace superharm
