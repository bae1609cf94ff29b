#pragma once

// Sparse exact arithmetic in R[x_1..x_m] (x) Lambda(theta_1..theta_2n).

#include "superharm/rational.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace superharm {

/// The pair (m, n) for R^{m|2n}. The superdimension M = m - 2n is always derived.
struct SuperSignature {
    int m = 0;
    int n = 0;

    SuperSignature() = default;
    SuperSignature(int bosons, int fermion_pairs) : m(bosons), n(fermion_pairs) {
        if (m < 0 || n < 0) throw std::invalid_argument("signature counts must be non-negative");
        if (2 * n > 64) throw std::invalid_argument("at most 64 fermionic variables are supported");
    }

    int superdimension() const { return m - 2 * n; }
    int fermion_count() const { return 2 * n; }
    int variable_count() const { return m + 2 * n; }

    /// Signature of the hyperplane x_m = 0, i.e. (m - 1, n).
    SuperSignature hyperplane() const {
        if (m == 0) throw std::domain_error("hyperplane restriction needs m >= 1");
        return {m - 1, n};
    }

    friend bool operator==(const SuperSignature&, const SuperSignature&) = default;
    friend auto operator<=>(const SuperSignature&, const SuperSignature&) = default;
};

inline std::string to_string(const SuperSignature& s) {
    return "(" + std::to_string(s.m) + "|" + std::to_string(2 * s.n) + ")";
}

/// x^a theta_S with S stored as a bitmask (bit j-1 <-> theta_j); the word is always ascending.
struct SuperMonomial {
    std::vector<std::uint16_t> exponents;
    std::uint64_t fermions = 0;

    int bosonic_degree() const {
        return std::accumulate(exponents.begin(), exponents.end(), 0);
    }
    int fermionic_degree() const { return std::popcount(fermions); }
    int degree() const { return bosonic_degree() + fermionic_degree(); }
    int parity() const { return fermionic_degree() & 1; }
    bool has_theta(int j) const { return (fermions >> (j - 1)) & 1U; }

    friend bool operator==(const SuperMonomial&, const SuperMonomial&) = default;

    // Canonical order: degree, then exponent vectors lexicographically, then fermion bitmask.
    friend std::strong_ordering operator<=>(const SuperMonomial& a, const SuperMonomial& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        if (auto c = std::lexicographical_compare_three_way(
                a.exponents.begin(), a.exponents.end(), b.exponents.begin(), b.exponents.end());
            c != 0)
            return c;
        return a.fermions <=> b.fermions;
    }
};

namespace detail {

inline std::uint64_t low_bits(int count) {
    return count >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1);
}

// Sign of theta_A * theta_B rewritten as the ascending word of A u B; 0 when A, B overlap.
inline int merge_sign(std::uint64_t a, std::uint64_t b) {
    if (a & b) return 0;
    int inversions = 0;
    for (std::uint64_t rest = b; rest; rest &= rest - 1) {
        int j = std::countr_zero(rest);
        inversions += std::popcount(a & ~low_bits(j + 1));
    }
    return (inversions & 1) ? -1 : 1;
}

} // namespace detail

class SuperPolynomial {
public:
    using TermMap = std::map<SuperMonomial, Rational>;

    explicit SuperPolynomial(SuperSignature sig = {}) : sig_(sig) {}

    static SuperPolynomial constant(SuperSignature sig, const Rational& c) {
        SuperPolynomial p(sig);
        p.add_term(SuperMonomial{std::vector<std::uint16_t>(sig.m, 0), 0}, c);
        return p;
    }

    static SuperPolynomial monomial(SuperSignature sig, SuperMonomial mono, const Rational& c = 1) {
        SuperPolynomial p(sig);
        p.check_conforms(mono);
        p.add_term(mono, c);
        return p;
    }

    static SuperPolynomial x(SuperSignature sig, int j) {
        if (j < 1 || j > sig.m) throw std::out_of_range("bosonic index out of range");
        SuperMonomial mono{std::vector<std::uint16_t>(sig.m, 0), 0};
        mono.exponents[j - 1] = 1;
        return monomial(sig, std::move(mono));
    }

    static SuperPolynomial theta(SuperSignature sig, int j) {
        if (j < 1 || j > sig.fermion_count()) throw std::out_of_range("fermionic index out of range");
        return monomial(sig, SuperMonomial{std::vector<std::uint16_t>(sig.m, 0), std::uint64_t{1} << (j - 1)});
    }

    const SuperSignature& signature() const { return sig_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const SuperMonomial& mono) const {
        auto it = terms_.find(mono);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// True iff every monomial has degree k (the zero polynomial is homogeneous of every degree).
    bool is_homogeneous(int k) const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [k](const auto& t) { return t.first.degree() == k; });
    }

    /// Degree of a nonzero homogeneous polynomial.
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty()) return std::nullopt;
        int k = terms_.begin()->first.degree();
        return is_homogeneous(k) ? std::optional<int>(k) : std::nullopt;
    }

    /// 0 or 1 for parity-homogeneous input (zero counts as even), nullopt for mixed parity.
    std::optional<int> parity() const {
        std::optional<int> par;
        for (const auto& [mono, c] : terms_) {
            if (par && *par != mono.parity()) return std::nullopt;
            par = mono.parity();
        }
        return par.value_or(0);
    }

    /// Accumulates c * mono; used while a value is being built.
    void add_term(const SuperMonomial& mono, const Rational& c) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(mono, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    void check_conforms(const SuperMonomial& mono) const {
        if (static_cast<int>(mono.exponents.size()) != sig_.m ||
            (mono.fermions & ~detail::low_bits(sig_.fermion_count())) != 0)
            throw std::invalid_argument("monomial does not conform to the signature");
    }

    friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
        return a.sig_ == b.sig_ && a.terms_ == b.terms_;
    }

private:
    SuperSignature sig_;
    TermMap terms_;
};

inline void require_same_signature(const SuperPolynomial& p, const SuperPolynomial& q) {
    if (p.signature() != q.signature()) throw std::invalid_argument("signature mismatch");
}

inline SuperPolynomial add(const SuperPolynomial& p, const SuperPolynomial& q) {
    require_same_signature(p, q);
    SuperPolynomial r = p;
    for (const auto& [mono, c] : q.terms()) r.add_term(mono, c);
    return r;
}

inline SuperPolynomial scale(const Rational& c, const SuperPolynomial& p) {
    SuperPolynomial r(p.signature());
    if (sgn(c) == 0) return r;
    for (const auto& [mono, a] : p.terms()) r.add_term(mono, c * a);
    return r;
}

inline SuperPolynomial subtract(const SuperPolynomial& p, const SuperPolynomial& q) {
    return add(p, scale(-1, q));
}

inline SuperPolynomial multiply(const SuperPolynomial& p, const SuperPolynomial& q) {
    require_same_signature(p, q);
    SuperPolynomial r(p.signature());
    for (const auto& [a, ca] : p.terms()) {
        for (const auto& [b, cb] : q.terms()) {
            int sign = detail::merge_sign(a.fermions, b.fermions);
            if (sign == 0) continue;
            SuperMonomial prod{a.exponents, a.fermions | b.fermions};
            for (std::size_t i = 0; i < prod.exponents.size(); ++i) prod.exponents[i] += b.exponents[i];
            r.add_term(prod, sign > 0 ? Rational(ca * cb) : Rational(-ca * cb));
        }
    }
    return r;
}

inline SuperPolynomial operator+(const SuperPolynomial& p, const SuperPolynomial& q) { return add(p, q); }
inline SuperPolynomial operator-(const SuperPolynomial& p, const SuperPolynomial& q) { return subtract(p, q); }
inline SuperPolynomial operator-(const SuperPolynomial& p) { return scale(-1, p); }
inline SuperPolynomial operator*(const SuperPolynomial& p, const SuperPolynomial& q) { return multiply(p, q); }
inline SuperPolynomial operator*(const Rational& c, const SuperPolynomial& p) { return scale(c, p); }

/// Partial derivative in x_j (1-based).
inline SuperPolynomial d_bosonic(const SuperPolynomial& p, int j) {
    const auto& sig = p.signature();
    if (j < 1 || j > sig.m) throw std::out_of_range("bosonic index out of range");
    SuperPolynomial r(sig);
    for (const auto& [mono, c] : p.terms()) {
        auto e = mono.exponents[j - 1];
        if (e == 0) continue;
        SuperMonomial d = mono;
        d.exponents[j - 1] = static_cast<std::uint16_t>(e - 1);
        r.add_term(d, c * e);
    }
    return r;
}

/// Left Grassmann derivative in theta_j (1-based): move theta_j to the front, then strip it.
inline SuperPolynomial d_fermionic(const SuperPolynomial& p, int j) {
    const auto& sig = p.signature();
    if (j < 1 || j > sig.fermion_count()) throw std::out_of_range("fermionic index out of range");
    const std::uint64_t bit = std::uint64_t{1} << (j - 1);
    SuperPolynomial r(sig);
    for (const auto& [mono, c] : p.terms()) {
        if (!(mono.fermions & bit)) continue;
        int before = std::popcount(mono.fermions & (bit - 1));
        SuperMonomial d{mono.exponents, mono.fermions & ~bit};
        r.add_term(d, (before & 1) ? Rational(-c) : c);
    }
    return r;
}

/// Left multiplication by x_j.
inline SuperPolynomial mul_x(const SuperPolynomial& p, int j) {
    const auto& sig = p.signature();
    if (j < 1 || j > sig.m) throw std::out_of_range("bosonic index out of range");
    SuperPolynomial r(sig);
    for (const auto& [mono, c] : p.terms()) {
        SuperMonomial d = mono;
        ++d.exponents[j - 1];
        r.add_term(d, c);
    }
    return r;
}

/// Left multiplication by theta_j.
inline SuperPolynomial mul_theta(const SuperPolynomial& p, int j) {
    const auto& sig = p.signature();
    if (j < 1 || j > sig.fermion_count()) throw std::out_of_range("fermionic index out of range");
    const std::uint64_t bit = std::uint64_t{1} << (j - 1);
    SuperPolynomial r(sig);
    for (const auto& [mono, c] : p.terms()) {
        if (mono.fermions & bit) continue;
        int before = std::popcount(mono.fermions & (bit - 1));
        r.add_term(SuperMonomial{mono.exponents, mono.fermions | bit}, (before & 1) ? Rational(-c) : c);
    }
    return r;
}

/// dim P_k: sum over f of C(2n, f) * #(bosonic monomials of degree k - f).
inline std::size_t monomial_count(SuperSignature sig, int k) {
    if (k < 0) return 0;
    mpz_class total = 0;
    for (int f = 0; f <= std::min(sig.fermion_count(), k); ++f) {
        int rest = k - f;
        Rational bos = sig.m == 0 ? Rational(rest == 0 ? 1 : 0) : binomial(rest + sig.m - 1, sig.m - 1);
        total += binomial(sig.fermion_count(), f).get_num() * bos.get_num();
    }
    return total.get_ui();
}

/// Degree-k monomials in canonical order, with a reverse index.
class MonomialBasis {
public:
    MonomialBasis(SuperSignature sig, int k) : sig_(sig), degree_(k) {
        if (k >= 0) enumerate();
        for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
    }

    SuperSignature signature() const { return sig_; }
    int degree() const { return degree_; }
    std::size_t size() const { return monomials_.size(); }
    const std::vector<SuperMonomial>& monomials() const { return monomials_; }
    const SuperMonomial& operator[](std::size_t i) const { return monomials_[i]; }

    std::optional<std::size_t> index_of(const SuperMonomial& mono) const {
        auto it = index_.find(mono);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

private:
    void enumerate() {
        const int nf = sig_.fermion_count();
        std::vector<std::uint64_t> masks;
        for (int f = 0; f <= std::min(nf, degree_); ++f) {
            // Gosper's hack over all f-subsets of {0..nf-1}
            std::uint64_t s = detail::low_bits(f);
            while (true) {
                masks.push_back(s);
                if (s == 0) break;
                std::uint64_t c = s & (~s + 1);
                std::uint64_t r = s + c;
                if (r == 0 || (nf < 64 && (r >> nf) != 0)) break;
                s = (((r ^ s) >> 2) / c) | r;
                if (nf < 64 && (s >> nf) != 0) break;
            }
        }
        std::vector<std::uint16_t> exps(sig_.m, 0);
        for (auto s : masks) {
            int rest = degree_ - std::popcount(s);
            compositions(exps, 0, rest, s);
        }
        std::sort(monomials_.begin(), monomials_.end());
    }

    void compositions(std::vector<std::uint16_t>& exps, int pos, int rest, std::uint64_t mask) {
        if (pos == sig_.m) {
            if (rest == 0) monomials_.push_back(SuperMonomial{exps, mask});
            return;
        }
        if (pos == sig_.m - 1) {
            exps[pos] = static_cast<std::uint16_t>(rest);
            monomials_.push_back(SuperMonomial{exps, mask});
            exps[pos] = 0;
            return;
        }
        for (int e = 0; e <= rest; ++e) {
            exps[pos] = static_cast<std::uint16_t>(e);
            compositions(exps, pos + 1, rest - e, mask);
        }
        exps[pos] = 0;
    }

    SuperSignature sig_;
    int degree_;
    std::vector<SuperMonomial> monomials_;
    std::map<SuperMonomial, std::size_t> index_;
};

/// Shared, immutable basis of P_k; safe to call from several threads.
inline const MonomialBasis& basis_of(SuperSignature sig, int k) {
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int>, std::unique_ptr<const MonomialBasis>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{sig.m, sig.n, std::max(k, -1)}];
    if (!slot) slot = std::make_unique<const MonomialBasis>(sig, k);
    return *slot;
}

inline std::vector<SuperMonomial> monomial_basis(SuperSignature sig, int k) {
    return basis_of(sig, k).monomials();
}

/// p restricted to x_m = 0, as a polynomial on R^{m-1|2n}.
inline SuperPolynomial restrict_hyperplane(const SuperPolynomial& p) {
    SuperPolynomial r(p.signature().hyperplane());
    for (const auto& [mono, c] : p.terms()) {
        if (mono.exponents.back() != 0) continue;
        SuperMonomial d{std::vector<std::uint16_t>(mono.exponents.begin(), mono.exponents.end() - 1),
                        mono.fermions};
        r.add_term(d, c);
    }
    return r;
}

/// Includes a polynomial into a signature with at least as many variables of each kind.
inline SuperPolynomial widen(const SuperPolynomial& p, SuperSignature target) {
    const auto& sig = p.signature();
    if (target.m < sig.m || target.n < sig.n) throw std::invalid_argument("target signature is smaller");
    SuperPolynomial r(target);
    for (const auto& [mono, c] : p.terms()) {
        SuperMonomial d{mono.exponents, mono.fermions};
        d.exponents.resize(target.m, 0);
        r.add_term(d, c);
    }
    return r;
}

/// R^{m-1|2n} -> R^{m|2n}, fixing x_1..x_{m-1} and every theta.
inline SuperPolynomial embed(const SuperPolynomial& p) {
    return widen(p, SuperSignature(p.signature().m + 1, p.signature().n));
}

/// Splits a degree-k p as sum_j x_m^j / j! * q_{k-j}; entry j of the result is q_{k-j}.
inline std::vector<SuperPolynomial> xm_coefficients(const SuperPolynomial& p, int k) {
    if (!p.is_homogeneous(k)) throw std::invalid_argument("xm_coefficients needs a homogeneous polynomial");
    if (k < 0) return {};
    const auto lower = p.signature().hyperplane();
    std::vector<SuperPolynomial> q(k + 1, SuperPolynomial(lower));
    for (const auto& [mono, c] : p.terms()) {
        unsigned j = mono.exponents.back();
        SuperMonomial d{std::vector<std::uint16_t>(mono.exponents.begin(), mono.exponents.end() - 1),
                        mono.fermions};
        q[j].add_term(d, c * factorial(j));
    }
    return q;
}

/// Inverse of xm_coefficients: sum_j x_m^j / j! * embed(q[j]).
inline SuperPolynomial from_xm_coefficients(const std::vector<SuperPolynomial>& q, SuperSignature sig) {
    SuperPolynomial r(sig);
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (q[j].signature() != sig.hyperplane()) throw std::invalid_argument("signature mismatch");
        Rational inv = Rational(1) / factorial(static_cast<unsigned>(j));
        for (const auto& [mono, c] : q[j].terms()) {
            SuperMonomial d{mono.exponents, mono.fermions};
            d.exponents.push_back(static_cast<std::uint16_t>(j));
            r.add_term(d, c * inv);
        }
    }
    return r;
}

} // namespace superharm
