#include <algorithm>
#include <random>

#include "doctest.h"
#include "multdec/errors.hpp"
#include "multdec/fp_matrix.hpp"
#include "multdec/hasse.hpp"
#include "multdec/wronskian.hpp"
#include "generators.hpp"
#include "support.hpp"

using namespace multdec;
using testsupport::random_poly;
using testsupport::uniform;
using testsupport::coefficient_rank;
using testsupport::random_family;

namespace {

Polynomial X(const PrimeField& F, std::size_t k, std::size_t i) { return Polynomial::variable(F, Block::X, k, i); }
Polynomial C(const PrimeField& F, std::size_t k, std::int64_t c) { return Polynomial::constant(F, Block::X, k, c); }

// Every tuple (e_1..e_w) with |e_i| <= i-1, by recursion.
bool some_tuple_nonzero(const std::vector<Polynomial>& fs, std::vector<Exponent>& cur) {
    if (cur.size() == fs.size()) return !wronskian_det(fs, cur).is_zero();
    for (const auto& e : exponents_up_to(fs.front().k(), static_cast<unsigned>(cur.size()))) {
        cur.push_back(e);
        const bool hit = some_tuple_nonzero(fs, cur);
        cur.pop_back();
        if (hit) return true;
    }
    return false;
}

// dim(H_a cap W) by enumerating all coefficient vectors b.
std::size_t brute_restriction_dimension(const std::vector<Polynomial>& basis, const std::vector<std::uint32_t>& a,
                                        unsigned mu) {
    const PrimeField& F = basis.front().field();
    std::vector<std::uint32_t> b(basis.size(), 0);
    std::size_t count = 0;
    while (true) {
        Polynomial g(F, Block::X, basis.front().k());
        for (std::size_t i = 0; i < b.size(); ++i) g += basis[i].scaled(b[i]);
        const auto m = multiplicity(g, a);
        if (!m || *m >= mu) ++count;
        std::size_t i = 0;
        while (i < b.size() && ++b[i] == F.p()) b[i++] = 0;
        if (i == b.size()) break;
    }
    std::size_t dim = 0;
    while (count > 1) {
        count /= F.p();
        ++dim;
    }
    return dim;
}

}  // namespace

TEST_CASE("wronskian_det examples") {
    const PrimeField F(7);
    const auto x = X(F, 1, 0);
    const auto f = x * x + C(F, 1, 3);
    CHECK(wronskian_det(std::vector{f}, std::vector{Exponent{0}}) == f);
    const std::vector<Polynomial> fam{C(F, 1, 1), x, x * x};
    CHECK(wronskian_det(fam, std::vector{Exponent{0}, Exponent{1}, Exponent{2}}) == C(F, 1, 1));
    // Classical Wronskian of (1, x, x^2) with orders (0,0,0) is zero.
    CHECK(wronskian_det(fam, std::vector{Exponent{0}, Exponent{0}, Exponent{0}}).is_zero());
    CHECK_THROWS_AS(wronskian_det(fam, std::vector{Exponent{0}}), ValidationError);
}

TEST_CASE("dependent families have zero Wronskian for every order tuple") {
    std::mt19937_64 rng(2);
    const PrimeField F(101);
    for (int n = 0; n < 40; ++n) {
        const std::size_t k = 1 + uniform(rng, 2);
        const auto a = random_poly(rng, F, Block::X, k, 4);
        const auto b = random_poly(rng, F, Block::X, k, 4);
        const std::vector<Polynomial> fs{a, b, a.scaled(3) - b.scaled(5)};
        for (int t = 0; t < 10; ++t) {
            std::vector<Exponent> es;
            for (int i = 0; i < 3; ++i) es.push_back(testsupport::random_exponent(rng, k, 3));
            CHECK(wronskian_det(fs, es).is_zero());
        }
    }
}

TEST_CASE("independence_witness examples") {
    const PrimeField F(7);
    for (std::size_t k : {1u, 2u}) {
        const auto x = X(F, k, 0);
        const std::vector<Polynomial> fam{C(F, k, 1), x, x * x};
        const auto wit = independence_witness(fam);
        REQUIRE(wit);
        CHECK(wit->monomials == std::vector<Exponent>{Exponent{0}.concat(Exponent(k - 1)),
                                                      Exponent{1}.concat(Exponent(k - 1)),
                                                      Exponent{2}.concat(Exponent(k - 1))});
        CHECK(wit->iterations == 0);
        CHECK(wit->determinant == C(F, k, 1));
    }
    const auto x = X(F, 1, 0);
    CHECK_FALSE(independence_witness(std::vector{x, Polynomial(F, Block::X, 1)}));
    CHECK_FALSE(independence_witness(std::vector{x, x.scaled(2)}));
    // x^3 alone needs one translation: (x+1)^3 has a constant term.
    const auto w3 = independence_witness(std::vector{x * x * x});
    REQUIRE(w3);
    CHECK(w3->iterations == 1);
    CHECK(w3->monomials == std::vector<Exponent>{Exponent{0}});
    CHECK_THROWS_AS(independence_witness(std::vector{x * x * x * x * x * x * x}), FieldTooSmall);
}

TEST_CASE("witness exists iff the coefficient matrix has full rank") {
    std::mt19937_64 rng(7);
    const PrimeField F(101);
    int dependent = 0, looped = 0;
    for (int n = 0; n < 300; ++n) {
        const std::size_t k = 1 + uniform(rng, 2);
        const std::size_t w = 1 + uniform(rng, 4);
        const auto fs = random_family(rng, F, k, w, 5);
        const auto wit = independence_witness(fs);
        const bool independent = coefficient_rank(fs) == w;
        CHECK(wit.has_value() == independent);
        dependent += independent ? 0 : 1;
        if (!wit) continue;
        looped += wit->iterations > 0 ? 1 : 0;
        CHECK(wit->iterations <= w);
        for (std::size_t i = 0; i < w; ++i) CHECK(wit->monomials[i].total() < i + 1);
        CHECK_FALSE(wit->determinant.is_zero());
        CHECK(wit->determinant == wronskian_det(fs, wit->monomials));
    }
    CHECK(dependent > 30);
    CHECK(looped > 30);
}

TEST_CASE("witness agrees with a search over all admissible order tuples") {
    std::mt19937_64 rng(8);
    const PrimeField F(13);
    for (int n = 0; n < 60; ++n) {
        const std::size_t k = 1 + uniform(rng, 2);
        const std::size_t w = 1 + uniform(rng, 3);
        const auto fs = random_family(rng, F, k, w, 4);
        std::vector<Exponent> cur;
        CHECK(independence_witness(fs).has_value() == some_tuple_nonzero(fs, cur));
    }
}

TEST_CASE("restriction sum examples") {
    const PrimeField F(11);
    const Grid G1(F, {0, 1, 2, 3}, 1);
    CHECK(subspace_restriction_sum(std::vector{C(F, 1, 1)}, G1, 1) == 0);
    const Grid G2(F, {0, 2, 5}, 2);
    const auto x = X(F, 2, 0);
    const auto x3 = x * x * x;
    // x1^3 vanishes to order 3 exactly where a1 = 0.
    CHECK(subspace_restriction_sum(std::vector{x3}, G2, 3) == 3);
    CHECK(subspace_restriction_sum(std::vector{x3}, G2, 4) == 0);
    CHECK_THROWS_AS(subspace_restriction_sum(std::vector{x, x.scaled(2)}, G2, 3), ValidationError);
    CHECK_THROWS_AS(subspace_restriction_sum(std::vector{x, x3}, G2, 1), ValidationError);
}

TEST_CASE("restriction sums obey the bound; direct, brute force and parallel agree") {
    std::mt19937_64 rng(12);
    const PrimeField F(7);
    int positive = 0;
    for (int n = 0; n < 100; ++n) {
        const std::size_t k = 1 + uniform(rng, 2);
        const std::size_t w = 1 + uniform(rng, 3);
        const unsigned mu = static_cast<unsigned>(w) + uniform(rng, 6 - static_cast<std::uint32_t>(w));
        std::vector<std::uint32_t> S{0, 1, 2, 3, 4, 5, 6};
        std::shuffle(S.begin(), S.end(), rng);
        S.resize(2 + uniform(rng, 3));
        const Grid G(F, S, k);
        const auto basis = testsupport::random_restriction_basis(rng, F, k, w, S);
        int d = 0;
        for (const auto& f : basis) d = std::max(d, f.total_degree());
        const std::size_t sum = subspace_restriction_sum(basis, G, mu, Exec::Parallel);
        CHECK(sum == subspace_restriction_sum(basis, G, mu, Exec::Serial));
        std::size_t side = 1;
        for (std::size_t i = 1; i < k; ++i) side *= S.size();
        // sum (mu - w + 1) <= d w |S|^(k-1), in integers.
        CHECK(sum * (mu - w + 1) <= static_cast<std::size_t>(d) * w * side);
        positive += sum > 0 ? 1 : 0;
        for (std::size_t i = 0; i < G.size(); i += 1 + G.size() / 5) {
            CHECK(restriction_dimension(basis, G.point(i), mu) == brute_restriction_dimension(basis, G.point(i), mu));
        }
    }
    CHECK(positive > 20);
}

TEST_CASE("witness determinant vanishes to order (mu - w + 1) dim at every point") {
    std::mt19937_64 rng(14);
    const PrimeField F(11);
    for (int n = 0; n < 40; ++n) {
        const std::size_t k = 1 + uniform(rng, 2);
        const std::size_t w = 1 + uniform(rng, 2);
        const std::vector<std::uint32_t> S{0, 1, 2};
        const Grid G(F, S, k);
        std::vector<Polynomial> basis;
        while (basis.size() < w) {
            Polynomial f = C(F, k, 1);
            for (unsigned t = 0, n_f = 1 + uniform(rng, 4); t < n_f; ++t) {
                f = f * (X(F, k, uniform(rng, static_cast<std::uint32_t>(k))) - C(F, k, S[uniform(rng, 3)]));
            }
            basis.push_back(f);
            if (coefficient_rank(basis) != basis.size()) basis.pop_back();
        }
        const auto wit = independence_witness(basis);
        REQUIRE(wit);
        for (unsigned mu = static_cast<unsigned>(w); mu <= 4; ++mu) {
            for (std::size_t i = 0; i < G.size(); ++i) {
                const auto a = G.point(i);
                const auto dim = restriction_dimension(basis, a, mu);
                const auto m = multiplicity(wit->determinant, a);
                REQUIRE(m.has_value());
                CHECK(*m >= (mu - w + 1) * dim);
            }
        }
    }
}
