#ifndef MULTDEC_TESTS_SUPPORT_HPP
#define MULTDEC_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "multdec/exponent.hpp"
#include "multdec/polynomial.hpp"

namespace testsupport {

using multdec::Block;
using multdec::Exponent;
using multdec::Polynomial;
using multdec::PrimeField;

inline std::uint32_t uniform(std::mt19937_64& rng, std::uint32_t bound) {
    return static_cast<std::uint32_t>(rng() % bound);
}

// Random polynomial of total degree <= deg; each monomial present with the
// given probability (in percent).
inline Polynomial random_poly(std::mt19937_64& rng, const PrimeField& F, Block block, std::size_t k, unsigned deg,
                              unsigned density_pct = 50) {
    const std::size_t n = block == Block::XZ ? 2 * k : k;
    std::vector<multdec::Term> terms;
    for (const auto& e : multdec::exponents_up_to(n, deg)) {
        if (uniform(rng, 100) < density_pct) terms.push_back({e, uniform(rng, F.p())});
    }
    return Polynomial::from_terms(F, block, k, std::move(terms));
}

inline Polynomial random_homogeneous(std::mt19937_64& rng, const PrimeField& F, std::size_t k, unsigned deg) {
    std::vector<multdec::Term> terms;
    for (const auto& e : multdec::exponents_of_degree(k, deg)) terms.push_back({e, uniform(rng, F.p())});
    return Polynomial::from_terms(F, Block::X, k, std::move(terms));
}

inline Exponent random_exponent(std::mt19937_64& rng, std::size_t k, unsigned max_total) {
    Exponent e(k);
    unsigned budget = uniform(rng, max_total + 1);
    for (std::size_t i = 0; i < k; ++i) {
        const unsigned v = uniform(rng, budget + 1);
        e.set(i, v);
        budget -= v;
    }
    return e;
}

}  // namespace testsupport

#endif
