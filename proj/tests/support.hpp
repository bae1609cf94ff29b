#pragma once

#include "superharm/polytext.hpp"

#include <random>

namespace superharm::testing {

inline SuperPolynomial P(const char* text, SuperSignature sig) { return parse_polynomial(text, sig); }

/// A random polynomial of degree at most `max_degree` with small integer coefficients.
inline SuperPolynomial random_polynomial(std::mt19937& rng, SuperSignature sig, int max_degree, int terms = 4) {
    SuperPolynomial p(sig);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int i = 0; i < terms; ++i) {
        const auto& basis = basis_of(sig, deg(rng));
        if (basis.size() == 0) continue;
        std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
        p.add_term(basis[pick(rng)], coef(rng));
    }
    return p;
}

/// Homogeneous random polynomial of degree k.
inline SuperPolynomial random_homogeneous(std::mt19937& rng, SuperSignature sig, int k, int terms = 4) {
    SuperPolynomial p(sig);
    const auto& basis = basis_of(sig, k);
    if (basis.size() == 0) return p;
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int i = 0; i < terms; ++i) p.add_term(basis[pick(rng)], coef(rng));
    return p;
}

} // namespace superharm::testing
