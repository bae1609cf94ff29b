#pragma once

// Cauchy-Kovalevskaya extension: a degree-k polynomial on R^{m|2n} is fixed by its
// Laplacian and by the traces of Q and d_{x_m} Q on the hyperplane x_m = 0.

#include "superharm/operators.hpp"
#include "superharm/superpoly.hpp"

#include <stdexcept>
#include <vector>

namespace superharm {

/// Initial data (p_k, p_{k-1}, P_{k-2}) of the CK problem at degree k.
struct CKData {
    int k = 0;
    SuperPolynomial p_k;  ///< on (m-1, n), degree k
    SuperPolynomial p_k1; ///< on (m-1, n), degree k-1
    SuperPolynomial P_k2; ///< on (m, n), degree k-2

    friend bool operator==(const CKData&, const CKData&) = default;
};

inline CKData make_ck_data(SuperSignature sig, int k) {
    const auto lower = sig.hyperplane();
    return {k, SuperPolynomial(lower), SuperPolynomial(lower), SuperPolynomial(sig)};
}

inline void validate_ck_data(SuperSignature sig, const CKData& d) {
    if (sig.m == 0) throw std::domain_error("CK extension needs m >= 1");
    if (d.k < 0) throw std::invalid_argument("CK degree must be non-negative");
    const auto lower = sig.hyperplane();
    if (d.p_k.signature() != lower || d.p_k1.signature() != lower || d.P_k2.signature() != sig)
        throw std::invalid_argument("CK data signature mismatch");
    if (!d.p_k.is_homogeneous(d.k) || !d.p_k1.is_homogeneous(d.k - 1) || !d.P_k2.is_homogeneous(d.k - 2))
        throw std::invalid_argument("CK data degree mismatch");
    if ((d.k < 1 && !d.p_k1.is_zero()) || (d.k < 2 && !d.P_k2.is_zero()))
        throw std::invalid_argument("CK data degree mismatch");
}

/// Closed form CK = sum_l Xi_l p_{k-l}, with p_{k-2-l} = (d_{x_m}^l P_{k-2})|_{x_m=0}.
inline SuperPolynomial ck_extend(SuperSignature sig, const CKData& d) {
    validate_ck_data(sig, d);
    SuperPolynomial q = add(xi(0, d.p_k, sig), xi(1, d.p_k1, sig));
    if (d.k >= 2) {
        auto lower_data = xm_coefficients(d.P_k2, d.k - 2);
        for (int ell = 2; ell <= d.k; ++ell) q = add(q, xi(ell, lower_data[ell - 2], sig));
    }
    return q;
}

/// Same extension by the coefficient recursion q_{k-2-j} = -Lap q_{k-j} + p_{k-2-j}.
inline SuperPolynomial ck_extend_recursive(SuperSignature sig, const CKData& d) {
    validate_ck_data(sig, d);
    const auto lower = sig.hyperplane();
    // q[j] is q_{k-j}, the j-th x_m coefficient (with the 1/j! convention).
    std::vector<SuperPolynomial> q(d.k + 1, SuperPolynomial(lower));
    q[0] = d.p_k;
    if (d.k >= 1) q[1] = d.p_k1;
    if (d.k >= 2) {
        auto p = xm_coefficients(d.P_k2, d.k - 2);
        for (int j = 0; j + 2 <= d.k; ++j) q[j + 2] = add(scale(-1, laplacian(q[j])), p[j]);
    }
    return from_xm_coefficients(q, sig);
}

/// (Q|_{x_m=0}, (d_{x_m} Q)|_{x_m=0}, Lap Q) for homogeneous Q of degree k.
inline CKData ck_data(const SuperPolynomial& q, int k) {
    const auto& sig = q.signature();
    if (sig.m == 0) throw std::domain_error("CK data needs m >= 1");
    if (!q.is_homogeneous(k)) throw std::invalid_argument("ck_data needs a homogeneous polynomial");
    return {k, restrict_hyperplane(q), restrict_hyperplane(d_bosonic(q, sig.m)), laplacian(q)};
}

} // namespace superharm
