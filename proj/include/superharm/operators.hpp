#pragma once

// The invariant operators Laplacian, R^2 and Euler, the CK kernels Xi_l, osp(m|2n)
// generators, and the exhaustive sl(2) / invariance checks built on them.

#include "superharm/superpoly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superharm {

/// Super Laplacian: sum d_{x_j}^2 - 4 sum d_{theta_{2j-1}} d_{theta_{2j}}.
inline SuperPolynomial laplacian(const SuperPolynomial& p) {
    const auto& sig = p.signature();
    SuperPolynomial r(sig);
    for (int j = 1; j <= sig.m; ++j) r = add(r, d_bosonic(d_bosonic(p, j), j));
    for (int j = 1; j <= sig.n; ++j)
        r = add(r, scale(-4, d_fermionic(d_fermionic(p, 2 * j), 2 * j - 1)));
    return r;
}

/// R^2 = sum x_j^2 - sum theta_{2j-1} theta_{2j}.
inline SuperPolynomial rsquare(SuperSignature sig) {
    SuperPolynomial r(sig);
    for (int j = 1; j <= sig.m; ++j) {
        SuperMonomial mono{std::vector<std::uint16_t>(sig.m, 0), 0};
        mono.exponents[j - 1] = 2;
        r.add_term(mono, 1);
    }
    for (int j = 1; j <= sig.n; ++j) {
        std::uint64_t pair = std::uint64_t{3} << (2 * j - 2);
        r.add_term(SuperMonomial{std::vector<std::uint16_t>(sig.m, 0), pair}, -1);
    }
    return r;
}

inline SuperPolynomial rsquare_mul(const SuperPolynomial& p) { return multiply(rsquare(p.signature()), p); }

/// Multiplication by R^e for even e, i.e. (R^2)^(e/2).
inline SuperPolynomial rpower_mul(const SuperPolynomial& p, int exponent) {
    if (exponent < 0 || exponent % 2 != 0) throw std::invalid_argument("R power must be even and non-negative");
    SuperPolynomial r = p;
    const SuperPolynomial r2 = rsquare(p.signature());
    for (int i = 0; i < exponent / 2; ++i) r = multiply(r2, r);
    return r;
}

/// Euler operator: each monomial scaled by its degree.
inline SuperPolynomial euler(const SuperPolynomial& p) {
    SuperPolynomial r(p.signature());
    for (const auto& [mono, c] : p.terms()) r.add_term(mono, c * mono.degree());
    return r;
}

/// Xi_l p = sum_j x_m^{2j+l} / (2j+l)! (-Lap)^j p, with p living on the hyperplane (m-1, n).
/// The series stops once (-Lap)^j p vanishes.
inline SuperPolynomial xi(int ell, const SuperPolynomial& p, SuperSignature sig) {
    if (sig.m == 0) throw std::domain_error("Xi needs m >= 1");
    if (p.signature() != sig.hyperplane()) throw std::invalid_argument("Xi input must live on the hyperplane");
    if (ell < 0) throw std::invalid_argument("Xi index must be non-negative");
    SuperPolynomial out(sig);
    SuperPolynomial power = p;
    for (int j = 0; !power.is_zero(); ++j) {
        const unsigned e = static_cast<unsigned>(2 * j + ell);
        const Rational w = Rational(1) / factorial(e);
        for (const auto& [mono, c] : power.terms()) {
            SuperMonomial d{mono.exponents, mono.fermions};
            d.exponents.push_back(static_cast<std::uint16_t>(e));
            out.add_term(d, c * w);
        }
        power = scale(-1, laplacian(power));
    }
    return out;
}

/// A linear map between homogeneous components, applied functionally.
struct LinearOperator {
    std::string name;
    SuperSignature domain;
    SuperSignature codomain;
    int degree_shift = 0;
    int parity = 0;
    std::function<SuperPolynomial(const SuperPolynomial&)> apply;

    SuperPolynomial operator()(const SuperPolynomial& p) const { return apply(p); }
};

inline LinearOperator laplacian_op(SuperSignature sig) {
    return {"laplacian", sig, sig, -2, 0, [](const SuperPolynomial& p) { return laplacian(p); }};
}

inline LinearOperator rsquare_op(SuperSignature sig) {
    auto r2 = rsquare(sig);
    return {"rsquare_mul", sig, sig, 2, 0, [r2](const SuperPolynomial& p) { return multiply(r2, p); }};
}

inline LinearOperator euler_op(SuperSignature sig) {
    return {"euler", sig, sig, 0, 0, [](const SuperPolynomial& p) { return euler(p); }};
}

inline LinearOperator xi_op(SuperSignature sig, int ell) {
    return {"xi(" + std::to_string(ell) + ")", sig.hyperplane(), sig, ell, 0,
            [sig, ell](const SuperPolynomial& p) { return xi(ell, p, sig); }};
}

inline LinearOperator identity_op(SuperSignature sig) {
    return {"identity", sig, sig, 0, 0, [](const SuperPolynomial& p) { return p; }};
}

/// a after b.
inline LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
    if (b.codomain != a.domain) throw std::invalid_argument("operator composition signature mismatch");
    return {a.name + "*" + b.name, b.domain, a.codomain, a.degree_shift + b.degree_shift,
            (a.parity + b.parity) & 1, [a, b](const SuperPolynomial& p) { return a(b(p)); }};
}

/// Laplacian * R^2 * Laplacian, whose kernel defines the generalized harmonics.
inline LinearOperator lap_rsq_lap_op(SuperSignature sig) {
    return compose(laplacian_op(sig), compose(rsquare_op(sig), laplacian_op(sig)));
}

/// Graded commutator [A, B] p = A(B p) - (-1)^{|A||B|} B(A p).
inline SuperPolynomial graded_commutator(const LinearOperator& a, const LinearOperator& b,
                                         const SuperPolynomial& p) {
    SuperPolynomial ab = a(b(p));
    SuperPolynomial ba = b(a(p));
    return (a.parity & b.parity) ? add(ab, ba) : subtract(ab, ba);
}

enum class Sl2Relation {
    LaplaceRSquare = 1, ///< [Lap/2, R^2/2] = E + M/2
    LaplaceEuler = 2,   ///< [Lap/2, E + M/2] = Lap
    RSquareEuler = 3,   ///< [R^2/2, E + M/2] = -R^2
};

inline const char* to_string(Sl2Relation r) {
    switch (r) {
    case Sl2Relation::LaplaceRSquare: return "[lap/2,r2/2]=E+M/2";
    case Sl2Relation::LaplaceEuler: return "[lap/2,E+M/2]=lap";
    case Sl2Relation::RSquareEuler: return "[r2/2,E+M/2]=-r2";
    }
    return "?";
}

struct IdentityCheck {
    bool holds = true;
    std::optional<SuperMonomial> witness;
    std::size_t checked = 0;
};

/// Both sides of one sl(2) relation evaluated on p.
inline std::pair<SuperPolynomial, SuperPolynomial> sl2_sides(Sl2Relation rel, const SuperPolynomial& p) {
    const auto& sig = p.signature();
    const Rational half = ratio(1, 2);
    const Rational half_m = ratio(sig.superdimension(), 2);
    auto shifted_euler = [&](const SuperPolynomial& q) { return add(euler(q), scale(half_m, q)); };
    switch (rel) {
    case Sl2Relation::LaplaceRSquare: {
        auto lhs = scale(ratio(1, 4), subtract(laplacian(rsquare_mul(p)), rsquare_mul(laplacian(p))));
        return {lhs, shifted_euler(p)};
    }
    case Sl2Relation::LaplaceEuler: {
        auto lhs = scale(half, subtract(laplacian(shifted_euler(p)), shifted_euler(laplacian(p))));
        return {lhs, laplacian(p)};
    }
    case Sl2Relation::RSquareEuler: {
        auto lhs = scale(half, subtract(rsquare_mul(shifted_euler(p)), shifted_euler(rsquare_mul(p))));
        return {lhs, scale(-1, rsquare_mul(p))};
    }
    }
    throw std::invalid_argument("unknown sl(2) relation");
}

/// Checks one sl(2) relation on every monomial of P_k; the witness is the first failing monomial.
inline IdentityCheck check_sl2_relation(SuperSignature sig, Sl2Relation rel, int k) {
    IdentityCheck out;
    for (const auto& mono : basis_of(sig, k).monomials()) {
        auto [lhs, rhs] = sl2_sides(rel, SuperPolynomial::monomial(sig, mono));
        ++out.checked;
        if (!(lhs == rhs)) {
            out.holds = false;
            out.witness = mono;
            return out;
        }
    }
    return out;
}

namespace detail {

// Coordinate X_a (1-based over x_1..x_m, theta_1..theta_2n) lowered by the metric E_m + J_2n:
// bosons are unchanged; theta_{2j-1} -> -theta_{2j}/2 and theta_{2j} -> theta_{2j-1}/2.
inline SuperPolynomial lowered_coordinate(SuperSignature sig, int a) {
    if (a <= sig.m) return SuperPolynomial::x(sig, a);
    int f = a - sig.m;
    if (f % 2 == 1) return scale(ratio(-1, 2), SuperPolynomial::theta(sig, f + 1));
    return scale(ratio(1, 2), SuperPolynomial::theta(sig, f - 1));
}

inline SuperPolynomial coordinate_derivative(const SuperPolynomial& p, int a) {
    const int m = p.signature().m;
    return a <= m ? d_bosonic(p, a) : d_fermionic(p, a - m);
}

} // namespace detail

/// L_ab = X_(a) d_b - (-1)^{|a||b|} X_(b) d_a with indices lowered by the superproduct.
inline LinearOperator osp_generator(SuperSignature sig, int a, int b) {
    const int total = sig.variable_count();
    if (a < 1 || b < 1 || a > total || b > total) throw std::out_of_range("generator index out of range");
    const int pa = a > sig.m ? 1 : 0;
    const int pb = b > sig.m ? 1 : 0;
    const auto xa = detail::lowered_coordinate(sig, a);
    const auto xb = detail::lowered_coordinate(sig, b);
    const int sign = (pa & pb) ? -1 : 1;
    return {"L(" + std::to_string(a) + "," + std::to_string(b) + ")", sig, sig, 0, (pa + pb) & 1,
            [=](const SuperPolynomial& p) {
                auto first = multiply(xa, detail::coordinate_derivative(p, b));
                auto second = multiply(xb, detail::coordinate_derivative(p, a));
                return sign > 0 ? subtract(first, second) : add(first, second);
            }};
}

/// All generators L_ab with a <= b, optionally skipping every generator that involves x_skip.
inline std::vector<LinearOperator> osp_generators(SuperSignature sig, int skip = 0) {
    std::vector<LinearOperator> out;
    for (int a = 1; a <= sig.variable_count(); ++a) {
        for (int b = a; b <= sig.variable_count(); ++b) {
            if (a == skip || b == skip) continue;
            if (a == b && a <= sig.m) continue; // L_aa vanishes for bosons
            out.push_back(osp_generator(sig, a, b));
        }
    }
    return out;
}

struct InvarianceCheck {
    bool holds = true;
    std::string failing_generator;
    std::string failing_operator;
    std::optional<SuperMonomial> witness;
};

/// Every generator must graded-commute with Lap, R^2 and E on each monomial of P_k.
inline InvarianceCheck invariance_check(SuperSignature sig, int k) {
    InvarianceCheck out;
    const std::vector<LinearOperator> invariants{laplacian_op(sig), rsquare_op(sig), euler_op(sig)};
    for (const auto& gen : osp_generators(sig)) {
        for (const auto& inv : invariants) {
            for (const auto& mono : basis_of(sig, k).monomials()) {
                if (!graded_commutator(gen, inv, SuperPolynomial::monomial(sig, mono)).is_zero()) {
                    out.holds = false;
                    out.failing_generator = gen.name;
                    out.failing_operator = inv.name;
                    out.witness = mono;
                    return out;
                }
            }
        }
    }
    return out;
}

} // namespace superharm
