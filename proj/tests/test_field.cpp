#include <random>

#include "doctest.h"
#include "multdec/errors.hpp"
#include "multdec/exponent.hpp"
#include "multdec/field.hpp"

using namespace multdec;

TEST_CASE("field arithmetic examples") {
    const PrimeField F7(7);
    CHECK((Fp(F7, 3) + Fp(F7, 5)).value() == 1);
    for (int x = 0; x < 7; ++x) CHECK((Fp(F7, 0) * Fp(F7, x)).is_zero());
    const PrimeField F97(97);
    CHECK((Fp(F97, 96) + Fp(F97, 1)).value() == 0);
    CHECK(Fp(F7, 1).inv().value() == 1);
    CHECK(Fp(F7, 3).inv().value() == 5);
    CHECK(Fp(F7, -1).value() == 6);
    CHECK((-Fp(F7, 2)).value() == 5);
}

TEST_CASE("field rejects bad input") {
    CHECK_THROWS_AS(PrimeField(8), ValidationError);
    CHECK_THROWS_AS(PrimeField(1), ValidationError);
    CHECK_THROWS_AS(PrimeField(2147483659u), ValidationError);
    const PrimeField F7(7), F11(11);
    CHECK_THROWS_AS(Fp(F7, 1) + Fp(F11, 1), ValidationError);
    CHECK_THROWS_AS(Fp(F7, 0).inv(), std::domain_error);
}

TEST_CASE("inverse property on random elements") {
    const PrimeField F(97);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        const Fp a(F, static_cast<std::int64_t>(rng() % 96 + 1));
        CHECK((a.inv() * a).value() == 1);
    }
}

TEST_CASE("field axioms on random triples") {
    const PrimeField F(10007);
    std::mt19937_64 rng(2);
    int failures = 0;
    for (int i = 0; i < 10000; ++i) {
        const Fp a(F, static_cast<std::int64_t>(rng() % F.p()));
        const Fp b(F, static_cast<std::int64_t>(rng() % F.p()));
        const Fp c(F, static_cast<std::int64_t>(rng() % F.p()));
        if ((a + b) + c != a + (b + c)) ++failures;
        if ((a * b) * c != a * (b * c)) ++failures;
        if (a * (b + c) != a * b + a * c) ++failures;
        if (a + (-a) != Fp(F, 0)) ++failures;
        if (!a.is_zero() && a * a.inv() != Fp(F, 1)) ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("binomials mod p") {
    const PrimeField F7(7);
    CHECK(binomial_mod_p(2, 1, F7).value() == 2);
    CHECK(binomial_mod_p(5, 7, F7).value() == 0);
    CHECK(binomial_mod_p(6, 3, F7).value() == 6);
    for (std::uint32_t p : {2u, 3u, 7u, 101u}) {
        const PrimeField F(p);
        // Independent Pascal recurrence over exact integers, reduced at the end.
        std::vector<std::vector<unsigned long long>> pascal(31);
        for (unsigned n = 0; n <= 30; ++n) {
            pascal[n].assign(n + 1, 1);
            for (unsigned r = 1; r < n; ++r) pascal[n][r] = pascal[n - 1][r - 1] + pascal[n - 1][r];
        }
        for (unsigned n = 0; n <= 30; ++n) {
            for (unsigned r = 0; r <= 30; ++r) {
                const unsigned long long want = r > n ? 0 : pascal[n][r] % p;
                CHECK(binomial_mod_p(n, r, F).value() == want);
            }
        }
    }
}

TEST_CASE("exponent graded order") {
    const auto es = exponents_up_to(2, 2);
    REQUIRE(es.size() == 6);
    CHECK(es[0] == Exponent{0, 0});
    CHECK(es[1] == Exponent{1, 0});
    CHECK(es[2] == Exponent{0, 1});
    CHECK(es[3] == Exponent{2, 0});
    CHECK(es[4] == Exponent{1, 1});
    CHECK(es[5] == Exponent{0, 2});
    for (std::size_t i = 1; i < es.size(); ++i) CHECK(es[i - 1] < es[i]);
    CHECK(exponents_up_to(3, 4).size() == binomial_count(7, 3));
    CHECK(exponents_up_to(0, 5).size() == 1);
    const Exponent e10{1, 0}, e01{0, 1};
    CHECK_THROWS_AS(e10 - e01, ValidationError);
}

TEST_CASE("graded order is a monomial order on samples") {
    std::mt19937_64 rng(3);
    const auto es = exponents_up_to(3, 5);
    for (int i = 0; i < 2000; ++i) {
        const auto& a = es[rng() % es.size()];
        const auto& b = es[rng() % es.size()];
        const auto& c = es[rng() % es.size()];
        if (a < b) CHECK(a + c < b + c);
        if (a.dominated_by(b) && !(a == b)) CHECK(a < b);
    }
}
