#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace superharm {

/// Arbitrary-precision rational scalar; arithmetic results stay in lowest terms.
using Rational = mpq_class;

/// a/b in lowest terms (mpq_class(a, b) alone does not canonicalize).
inline Rational ratio(long a, long b) {
    Rational q(a, b);
    q.canonicalize();
    return q;
}

inline Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational binomial(long n, long r) {
    if (n < 0 || r < 0 || r > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return Rational(b);
}

} // namespace superharm
