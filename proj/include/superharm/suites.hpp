#pragma once

// Named verification suites: each property is checked per degree, stopping at the first
// failure, whose witness is kept for serialization.

#include "superharm/branching.hpp"
#include "superharm/ck.hpp"
#include "superharm/gtbasis.hpp"
#include "superharm/harmonics.hpp"
#include "superharm/operators.hpp"
#include "superharm/polytext.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace superharm {

struct PropertyResult {
    std::string property;
    SuperSignature sig;
    int k = 0;
    bool passed = false;
    std::optional<std::string> witness;
};

struct SuiteOutcome {
    std::string suite;
    SuperSignature sig;
    int kmax = 0;
    std::vector<PropertyResult> results;
    std::vector<std::string> skipped;
    bool passed = true;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"sl2", "fischer", "theoremA", "ck", "branching", "gt", "invariance"};
    return names;
}

namespace detail {

class SuiteRun {
public:
    SuiteRun(SuiteOutcome& out) : out_(out) {}

    /// Records one property; returns false once anything has failed.
    bool record(std::string property, int k, bool passed, std::optional<std::string> witness = std::nullopt) {
        if (passed) witness.reset();
        out_.results.push_back({std::move(property), out_.sig, k, passed, std::move(witness)});
        if (!passed) out_.passed = false;
        return out_.passed;
    }

    bool ok() const { return out_.passed; }
    void skip(std::string why) { out_.skipped.push_back(std::move(why)); }

private:
    SuiteOutcome& out_;
};

inline void suite_sl2(SuperSignature sig, int kmax, SuiteRun& run) {
    for (int k = 0; k <= kmax && run.ok(); ++k) {
        for (auto rel : {Sl2Relation::LaplaceRSquare, Sl2Relation::LaplaceEuler, Sl2Relation::RSquareEuler}) {
            auto c = check_sl2_relation(sig, rel, k);
            std::optional<std::string> w;
            if (c.witness) w = "monomial " + detail::monomial_text(*c.witness);
            if (!run.record(std::string("sl2 ") + to_string(rel), k, c.holds, w)) return;
        }
    }
}

inline void suite_invariance(SuperSignature sig, int kmax, SuiteRun& run) {
    for (int k = 0; k <= kmax; ++k) {
        auto c = invariance_check(sig, k);
        std::optional<std::string> w;
        if (c.witness)
            w = c.failing_generator + " vs " + c.failing_operator + " on " + detail::monomial_text(*c.witness);
        if (!run.record("osp generators commute with lap, r2, E", k, c.holds, w)) return;
    }
}

inline void suite_fischer(SuperSignature sig, int kmax, SuiteRun& run) {
    const int M = sig.superdimension();
    for (int k = 0; k <= kmax; ++k) {
        auto r = fischer_decomposition(sig, k);
        if (!run.record("fischer decomposition is direct and spans P_k", k, r.verified, r.failure_witness)) return;
        const std::size_t h = harmonic_space(sig, k).dim();
        if (!is_exceptional_superdimension(M)) {
            const std::size_t expect = basis_of(sig, k).size() - basis_of(sig, k - 2).size();
            if (!run.record("dim H_k = dim P_k - dim P_{k-2}", k, h == expect,
                            "dim H_k = " + std::to_string(h) + ", expected " + std::to_string(expect)))
                return;
        }
        if (sig.m == 0) {
            bool agree = !r.notes.empty() && r.notes.front().find("same nonzero summands") != std::string::npos;
            if (!run.record("fermionic rule agrees with the general index sets", k, agree,
                            r.notes.empty() ? std::string("no cross-check note") : r.notes.front()))
                return;
            long expect = 0;
            if (k <= sig.n)
                expect = binomial(2 * sig.n, k).get_num().get_si() - binomial(2 * sig.n, k - 2).get_num().get_si();
            if (!run.record("dim H_k = C(2n,k) - C(2n,k-2) for k <= n, else 0", k,
                            static_cast<long>(h) == expect,
                            "dim H_k = " + std::to_string(h) + ", expected " + std::to_string(expect)))
                return;
        }
    }
}

inline void suite_theorem_a(SuperSignature sig, int kmax, SuiteRun& run) {
    for (int k = 0; k <= kmax; ++k) {
        auto r = verify_theorem_A(sig, k);
        if (sig.m == 0 && r.exceptional) {
            run.skip("k=" + std::to_string(k) + ": m = 0 is outside the hypotheses");
            continue;
        }
        std::optional<std::string> w;
        for (const auto& c : r.checks)
            if (!c.passed) {
                w = "failed check: " + c.name;
                break;
            }
        if (!run.record(r.exceptional ? "H0 < H < Htilde composition series" : "Htilde = H and H0 = 0", k,
                        r.verified, w))
            return;
    }
}

inline std::vector<CKData> spanning_ck_data(SuperSignature sig, int k) {
    const auto lower = sig.hyperplane();
    std::vector<CKData> out;
    for (const auto& mono : basis_of(lower, k).monomials()) {
        auto d = make_ck_data(sig, k);
        d.p_k = SuperPolynomial::monomial(lower, mono);
        out.push_back(d);
    }
    for (const auto& mono : basis_of(lower, k - 1).monomials()) {
        auto d = make_ck_data(sig, k);
        d.p_k1 = SuperPolynomial::monomial(lower, mono);
        out.push_back(d);
    }
    for (const auto& mono : basis_of(sig, k - 2).monomials()) {
        auto d = make_ck_data(sig, k);
        d.P_k2 = SuperPolynomial::monomial(sig, mono);
        out.push_back(d);
    }
    return out;
}

inline void suite_ck(SuperSignature sig, int kmax, SuiteRun& run) {
    if (sig.m == 0) {
        run.skip("ck: needs m >= 1");
        return;
    }
    for (int k = 0; k <= kmax; ++k) {
        std::optional<std::string> w;
        for (const auto& mono : basis_of(sig, k).monomials()) {
            auto q = SuperPolynomial::monomial(sig, mono);
            if (!(ck_extend(sig, ck_data(q, k)) == q)) {
                w = "monomial " + detail::monomial_text(mono);
                break;
            }
        }
        if (!run.record("ck_extend(ck_data(Q)) = Q", k, !w, w)) return;
        for (const auto& d : spanning_ck_data(sig, k)) {
            auto closed = ck_extend(sig, d);
            if (!(closed == ck_extend_recursive(sig, d))) {
                w = "data (" + to_text(d.p_k) + "; " + to_text(d.p_k1) + "; " + to_text(d.P_k2) + ")";
                break;
            }
            if (!(ck_data(closed, k) == d)) {
                w = "round trip of (" + to_text(d.p_k) + "; " + to_text(d.p_k1) + "; " + to_text(d.P_k2) + ")";
                break;
            }
        }
        if (!run.record("closed form = recursion and ck_data(ck_extend(d)) = d", k, !w, w)) return;
    }
}

inline std::optional<std::string> first_failed(const BranchingReport& r) {
    for (const auto& c : r.checks)
        if (!c.passed) return "failed check: " + c.name;
    return std::nullopt;
}

inline void suite_branching(SuperSignature sig, int kmax, SuiteRun& run) {
    if (sig.m == 0) {
        run.skip("branching: needs m >= 1");
        return;
    }
    const int M = sig.superdimension();
    for (int k = 0; k <= kmax; ++k) {
        auto h = branch_harmonic(sig, k);
        if (!run.record("branching of H_k", k, h.verified, first_failed(h))) return;
        if (!is_exceptional_superdimension(M - 1)) {
            auto c = branch_classical(sig, k);
            bool same = c.verified && c.rhs_dim == h.rhs_dim && h.index_sets.tildeB.empty();
            if (!run.record("harmonic law reduces to the classical law", k, same, first_failed(c)))
                return;
        }
        if (is_exceptional_degree(M, k)) {
            auto g = branch_generalized(sig, k);
            if (!run.record("branching of Htilde_k", k, g.verified, first_failed(g))) return;
        }
    }
}

inline void suite_gt(SuperSignature sig, int kmax, SuiteRun& run) {
    for (int k = 0; k <= kmax; ++k) {
        for (auto target : {GTTarget::H, GTTarget::Htilde}) {
            if (target == GTTarget::Htilde && !generalized_target_defined(sig, k)) continue;
            auto v = verify_gt_basis(sig, k, target);
            if (!run.record(std::string("GT basis of ") + to_string(target), k, v.verdict(), v.witness)) return;
        }
    }
}

} // namespace detail

/// Runs one named suite (or "all") for degrees 0..kmax. Unknown names throw std::invalid_argument.
inline SuiteOutcome run_suite(const std::string& name, SuperSignature sig, int kmax) {
    using Fn = void (*)(SuperSignature, int, detail::SuiteRun&);
    static const std::vector<std::pair<std::string, Fn>> table{
        {"sl2", detail::suite_sl2},     {"fischer", detail::suite_fischer},     {"theoremA", detail::suite_theorem_a},
        {"ck", detail::suite_ck},       {"branching", detail::suite_branching}, {"gt", detail::suite_gt},
        {"invariance", detail::suite_invariance}};
    SuiteOutcome out;
    out.suite = name;
    out.sig = sig;
    out.kmax = kmax;
    detail::SuiteRun run(out);
    bool found = false;
    for (const auto& [key, fn] : table) {
        if (name != "all" && name != key) continue;
        found = true;
        fn(sig, kmax, run);
        if (!run.ok()) break;
    }
    if (!found) throw std::invalid_argument("unknown suite: " + name);
    return out;
}

} // namespace superharm
