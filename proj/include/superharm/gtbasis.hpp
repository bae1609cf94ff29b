#pragma once

// Gelfand-Tsetlin bases of H_k and H~_k along osp(m|2n) > osp(m-1|2n) > ... > sp(2n).
//
// The recursion runs on m. At m = 0 the fermionic harmonics are split by the last pair
// of Grassmann variables; for m >= 1 every element is a CK extension of a (power of R^2
// times a) lower-level element, chosen by the Fischer index sets of the hyperplane.

#include "superharm/ck.hpp"
#include "superharm/harmonics.hpp"
#include "superharm/memo.hpp"
#include "superharm/polytext.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace superharm {

enum class GTBranch {
    OrdinaryA1,    ///< CK(R^{k-l} h, 0, 0), hyperplane not exceptional
    OrdinaryA2,    ///< CK(0, R^{k-1-l} h, 0), hyperplane not exceptional
    GeneralizedA3, ///< CK(0, 0, R^{2k+M-4} h) with h from H_{2-M-k} of the same signature
    OrdinaryB3,    ///< CK(R^{k-l} h, 0, 0), l in J_k of an exceptional hyperplane
    OrdinaryB4,    ///< CK(0, R^{k-1-l} h, 0), l in J_{k-1}
    TildeB5,       ///< CK(R^{k-l} h~, 0, 0), l in J~_k
    TildeB6,       ///< CK(0, R^{k-1-l} h~, 0), l in J~_{k-1}
    Fermionic0,    ///< h
    Fermionic1,    ///< theta_{2n-1} h
    Fermionic2,    ///< theta_{2n} h
    Fermionic3,    ///< Theta_{n,k} h
    Kernel,        ///< taken directly from an exact kernel basis (no lower level)
};

inline const char* to_string(GTBranch b) {
    switch (b) {
    case GTBranch::OrdinaryA1: return "ordinary-a1";
    case GTBranch::OrdinaryA2: return "ordinary-a2";
    case GTBranch::GeneralizedA3: return "generalized-a3";
    case GTBranch::OrdinaryB3: return "ordinary-b3";
    case GTBranch::OrdinaryB4: return "ordinary-b4";
    case GTBranch::TildeB5: return "tilde-b5";
    case GTBranch::TildeB6: return "tilde-b6";
    case GTBranch::Fermionic0: return "fermionic-0";
    case GTBranch::Fermionic1: return "fermionic-1";
    case GTBranch::Fermionic2: return "fermionic-2";
    case GTBranch::Fermionic3: return "fermionic-3";
    case GTBranch::Kernel: return "kernel";
    }
    return "?";
}

inline const char* short_name(GTBranch b) {
    switch (b) {
    case GTBranch::OrdinaryA1: return "a1";
    case GTBranch::OrdinaryA2: return "a2";
    case GTBranch::GeneralizedA3: return "a3";
    case GTBranch::OrdinaryB3: return "b3";
    case GTBranch::OrdinaryB4: return "b4";
    case GTBranch::TildeB5: return "b5";
    case GTBranch::TildeB6: return "b6";
    case GTBranch::Fermionic0: return "f0";
    case GTBranch::Fermionic1: return "f1";
    case GTBranch::Fermionic2: return "f2";
    case GTBranch::Fermionic3: return "f3";
    case GTBranch::Kernel: return "k";
    }
    return "?";
}

inline bool is_fermionic(GTBranch b) {
    return b == GTBranch::Fermionic0 || b == GTBranch::Fermionic1 || b == GTBranch::Fermionic2 ||
           b == GTBranch::Fermionic3;
}

/// One reduction step. `level` is the bosonic count m for CK steps and the pair count n for
/// fermionic steps; `ell` is the degree of the lower element (a kernel index for Kernel).
struct GTRecord {
    int level = 0;
    GTBranch kind = GTBranch::Fermionic0;
    int ell = 0;

    friend bool operator==(const GTRecord&, const GTRecord&) = default;
};

struct GTLabel {
    std::vector<GTRecord> chain;

    GTLabel tail() const { return {std::vector<GTRecord>(chain.begin() + (chain.empty() ? 0 : 1), chain.end())}; }

    friend bool operator==(const GTLabel&, const GTLabel&) = default;
};

/// e.g. "b3@1:1/f1@1:0"; the empty chain prints as "root".
inline std::string to_string(const GTLabel& label) {
    if (label.chain.empty()) return "root";
    std::string out;
    for (const auto& r : label.chain) {
        if (!out.empty()) out += '/';
        out += std::string(short_name(r.kind)) + '@' + std::to_string(r.level) + ':' + std::to_string(r.ell);
    }
    return out;
}

struct GTBasisElement {
    GTLabel label;
    SuperPolynomial polynomial;
};

enum class GTTarget { H, Htilde };

inline const char* to_string(GTTarget t) { return t == GTTarget::H ? "H" : "Htilde"; }

struct GTBasis {
    SuperSignature sig;
    int k = 0;
    GTTarget target = GTTarget::H;
    std::vector<GTBasisElement> elements;
    /// Degrees at which a purely fermionic Htilde basis had to come from the kernel directly.
    std::vector<std::string> kernel_fallbacks;
};

/// Theta_{n,k} = theta_1 theta_2 + ... + theta_{2n-3} theta_{2n-2} + (k - n - 1) theta_{2n-1} theta_{2n}.
inline SuperPolynomial theta_form(int n, int k) {
    SuperSignature sig(0, n);
    SuperPolynomial t(sig);
    for (int j = 1; j <= n; ++j) {
        Rational c = j < n ? Rational(1) : Rational(k - n - 1);
        t.add_term(SuperMonomial{{}, std::uint64_t{3} << (2 * j - 2)}, c);
    }
    return t;
}

namespace detail {

inline Memo<std::tuple<int, int>, std::vector<GTBasisElement>>& fermionic_cache() {
    static Memo<std::tuple<int, int>, std::vector<GTBasisElement>> memo;
    return memo;
}

inline Memo<std::tuple<int, int, int, int>, GTBasis>& gt_cache() {
    static Memo<std::tuple<int, int, int, int>, GTBasis> memo;
    return memo;
}

inline GTLabel prepend(GTRecord head, const GTLabel& tail) {
    GTLabel out{{head}};
    out.chain.insert(out.chain.end(), tail.chain.begin(), tail.chain.end());
    return out;
}

} // namespace detail

/// Basis of H_k(R^{0|2n}), 0 <= k <= n, split as
/// H_k(n-1) + theta_{2n-1} H_{k-1}(n-1) + theta_{2n} H_{k-1}(n-1) + Theta_{n,k} H_{k-2}(n-1).
inline const std::vector<GTBasisElement>& fermionic_harmonic_basis(int n, int k) {
    return detail::fermionic_cache().get({n, k}, [n, k] {
        std::vector<GTBasisElement> out;
        if (n < 0 || k < 0 || k > n) return out;
        const SuperSignature sig(0, n);
        if (n == 0) {
            out.push_back({GTLabel{}, SuperPolynomial::constant(sig, 1)});
            return out;
        }
        auto lift = [&](GTBranch kind, int lower_degree, const SuperPolynomial& factor) {
            for (const auto& h : fermionic_harmonic_basis(n - 1, lower_degree))
                out.push_back({detail::prepend({n, kind, lower_degree}, h.label),
                               multiply(factor, widen(h.polynomial, sig))});
        };
        lift(GTBranch::Fermionic0, k, SuperPolynomial::constant(sig, 1));
        lift(GTBranch::Fermionic1, k - 1, SuperPolynomial::theta(sig, 2 * n - 1));
        lift(GTBranch::Fermionic2, k - 1, SuperPolynomial::theta(sig, 2 * n));
        lift(GTBranch::Fermionic3, k - 2, theta_form(n, k));
        return out;
    });
}

/// Whether H~_k differs in definition from H_k, i.e. M in -2N_0 and k in I_M.
inline bool generalized_target_defined(SuperSignature sig, int k) {
    return is_exceptional_degree(sig.superdimension(), k);
}

inline const GTBasis& gt_basis(SuperSignature sig, int k, GTTarget target = GTTarget::H) {
    if (target == GTTarget::Htilde && !generalized_target_defined(sig, k)) target = GTTarget::H;
    return detail::gt_cache().get({sig.m, sig.n, k, static_cast<int>(target)}, [sig, k, target] {
        GTBasis out;
        out.sig = sig;
        out.k = k;
        out.target = target;
        if (k < 0) return out;

        if (sig.m == 0) {
            if (target == GTTarget::H) {
                out.elements = fermionic_harmonic_basis(sig.n, k);
            } else {
                int idx = 0;
                for (const auto& p : basis_polynomials(generalized_harmonic_space(sig, k)))
                    out.elements.push_back({GTLabel{{{sig.n, GTBranch::Kernel, idx++}}}, p});
                out.kernel_fallbacks.push_back("Htilde_" + std::to_string(k) + " of " + to_string(sig));
            }
            return out;
        }

        const auto lower = sig.hyperplane();
        const int M = sig.superdimension();
        std::set<std::string> flags;

        // Lifts a lower-level basis through CK with the given slot and R^2 power.
        auto lift = [&](GTBranch kind, int ell, const GTBasis& source, int slot, int r_exponent) {
            flags.insert(source.kernel_fallbacks.begin(), source.kernel_fallbacks.end());
            for (const auto& h : source.elements) {
                CKData d = make_ck_data(sig, k);
                if (slot == 0) d.p_k = rpower_mul(h.polynomial, r_exponent);
                else if (slot == 1) d.p_k1 = rpower_mul(h.polynomial, r_exponent);
                else d.P_k2 = rpower_mul(h.polynomial, r_exponent);
                out.elements.push_back({detail::prepend({sig.m, kind, ell}, h.label), ck_extend(sig, d)});
            }
        };
        auto descending = [](std::vector<int> v) {
            std::sort(v.rbegin(), v.rend());
            return v;
        };

        if (!is_exceptional_superdimension(M - 1)) {
            for (int l : descending(parity_ladder(k)))
                lift(GTBranch::OrdinaryA1, l, gt_basis(lower, l, GTTarget::H), 0, k - l);
            for (int l : descending(parity_ladder(k - 1)))
                lift(GTBranch::OrdinaryA2, l, gt_basis(lower, l, GTTarget::H), 1, k - 1 - l);
            if (target == GTTarget::Htilde) {
                const int mirror = 2 - M - k;
                lift(GTBranch::GeneralizedA3, mirror, gt_basis(sig, mirror, GTTarget::H), 2, 2 * k + M - 4);
            }
        } else {
            const auto sk = fischer_index_sets(lower, k);
            const auto sk1 = fischer_index_sets(lower, k - 1);
            for (int l : descending(sk.J))
                lift(GTBranch::OrdinaryB3, l, gt_basis(lower, l, GTTarget::H), 0, k - l);
            for (int l : descending(sk1.J))
                lift(GTBranch::OrdinaryB4, l, gt_basis(lower, l, GTTarget::H), 1, k - 1 - l);
            for (int l : descending(sk.tildeJ))
                lift(GTBranch::TildeB5, l, gt_basis(lower, l, GTTarget::Htilde), 0, k - l);
            for (int l : descending(sk1.tildeJ))
                lift(GTBranch::TildeB6, l, gt_basis(lower, l, GTTarget::Htilde), 1, k - 1 - l);
        }
        out.kernel_fallbacks.assign(flags.begin(), flags.end());
        return out;
    });
}

struct GTVerification {
    std::size_t size = 0;
    std::size_t expected_dim = 0;
    bool cardinality = false;
    bool independent = false;
    bool annihilated = false;
    bool level_compatible = false;
    std::optional<std::string> witness;
    std::vector<std::string> kernel_fallbacks;
    bool verdict() const { return cardinality && independent && annihilated && level_compatible; }
};

namespace detail {

// Recomputes what the top record says the element was built from and compares exactly.
inline bool level_compatible(const GTBasis& basis, const GTBasisElement& e) {
    if (e.label.chain.empty()) return e.polynomial == SuperPolynomial::constant(basis.sig, 1);
    const GTRecord top = e.label.chain.front();
    const GTLabel tail = e.label.tail();
    const auto& sig = basis.sig;
    const int k = basis.k;
    if (top.kind == GTBranch::Kernel) return true;

    auto find_parent = [&](const GTBasis& parent_basis) -> std::optional<SuperPolynomial> {
        for (const auto& p : parent_basis.elements)
            if (p.label == tail) return p.polynomial;
        return std::nullopt;
    };

    if (is_fermionic(top.kind)) {
        const int n = top.level;
        if (sig.m != 0 || n != sig.n) return false;
        auto parents = fermionic_harmonic_basis(n - 1, top.ell);
        for (const auto& p : parents) {
            if (!(p.label == tail)) continue;
            SuperPolynomial lifted = widen(p.polynomial, sig);
            SuperPolynomial factor = SuperPolynomial::constant(sig, 1);
            if (top.kind == GTBranch::Fermionic1) factor = SuperPolynomial::theta(sig, 2 * n - 1);
            if (top.kind == GTBranch::Fermionic2) factor = SuperPolynomial::theta(sig, 2 * n);
            if (top.kind == GTBranch::Fermionic3) factor = theta_form(n, k);
            return e.polynomial == multiply(factor, lifted);
        }
        return false;
    }

    if (top.level != sig.m || sig.m == 0) return false;
    const auto lower = sig.hyperplane();
    const CKData data = ck_data(e.polynomial, k);
    switch (top.kind) {
    case GTBranch::OrdinaryA1:
    case GTBranch::OrdinaryB3:
    case GTBranch::TildeB5: {
        auto t = top.kind == GTBranch::TildeB5 ? GTTarget::Htilde : GTTarget::H;
        auto parent = find_parent(gt_basis(lower, top.ell, t));
        return parent && data.p_k == rpower_mul(*parent, k - top.ell) && data.p_k1.is_zero() && data.P_k2.is_zero();
    }
    case GTBranch::OrdinaryA2:
    case GTBranch::OrdinaryB4:
    case GTBranch::TildeB6: {
        auto t = top.kind == GTBranch::TildeB6 ? GTTarget::Htilde : GTTarget::H;
        auto parent = find_parent(gt_basis(lower, top.ell, t));
        return parent && data.p_k.is_zero() && data.p_k1 == rpower_mul(*parent, k - 1 - top.ell) &&
               data.P_k2.is_zero();
    }
    case GTBranch::GeneralizedA3: {
        const int M = sig.superdimension();
        auto parent = find_parent(gt_basis(sig, top.ell, GTTarget::H));
        return parent && data.p_k.is_zero() && data.p_k1.is_zero() &&
               data.P_k2 == rpower_mul(*parent, 2 * k + M - 4);
    }
    default: return false;
    }
}

} // namespace detail

/// Cardinality, exact independence, annihilation by the defining operator, and level compatibility.
inline GTVerification verify_gt_basis(SuperSignature sig, int k, GTTarget target = GTTarget::H) {
    if (target == GTTarget::Htilde && !generalized_target_defined(sig, k)) target = GTTarget::H;
    const GTBasis& basis = gt_basis(sig, k, target);
    GTVerification v;
    v.kernel_fallbacks = basis.kernel_fallbacks;
    v.size = basis.elements.size();
    const Subspace& space = target == GTTarget::H ? harmonic_space(sig, k) : generalized_harmonic_space(sig, k);
    v.expected_dim = space.dim();
    v.cardinality = v.size == v.expected_dim;

    std::vector<SuperPolynomial> polys;
    for (const auto& e : basis.elements) polys.push_back(e.polynomial);
    v.independent = k < 0 ? polys.empty() : span_of(sig, k, polys).dim() == polys.size();

    v.annihilated = true;
    for (const auto& e : basis.elements) {
        auto image = target == GTTarget::H ? laplacian(e.polynomial)
                                           : laplacian(rsquare_mul(laplacian(e.polynomial)));
        if (!image.is_zero() || !e.polynomial.is_homogeneous(k) || e.polynomial.is_zero()) {
            v.annihilated = false;
            v.witness = "not annihilated: " + to_string(e.label);
            break;
        }
    }

    v.level_compatible = true;
    for (const auto& e : basis.elements) {
        if (!detail::level_compatible(basis, e)) {
            v.level_compatible = false;
            if (!v.witness) v.witness = "level mismatch: " + to_string(e.label);
            break;
        }
    }
    if (!v.witness && !v.cardinality)
        v.witness = "basis has " + std::to_string(v.size) + " elements, space has dimension " +
                    std::to_string(v.expected_dim);
    if (!v.witness && !v.independent) v.witness = "basis elements are linearly dependent";
    return v;
}

} // namespace superharm
