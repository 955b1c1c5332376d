#include "doctest.h"

#include <random>

#include "regskew/gf2poly.hpp"
#include "support/oracles.hpp"

using namespace regskew::gf2;

namespace {

Gf2Poly one_plus_w1() {
    return Gf2Poly::one(1) + Gf2Poly::from_terms(1, {Monomial::generator(1, 1)});
}

} // namespace

TEST_SUITE("gf2poly") {

TEST_CASE("addition is symmetric difference") {
    Gf2Poly w1 = Gf2Poly::from_terms(1, {Monomial::generator(1, 1)});
    CHECK((w1 + w1).is_zero()); // characteristic 2

    Gf2Poly a = Gf2Poly::one(2) + Gf2Poly::from_terms(2, {Monomial::generator(2, 1)});
    Gf2Poly b = Gf2Poly::from_terms(2, {Monomial::generator(2, 2)});
    CHECK((a + b).str() == "1 + w1 + w2");

    Gf2Poly c = Gf2Poly::one(2) + Gf2Poly::from_terms(2, {Monomial::generator(2, 2)});
    CHECK((a + c).str() == "w1 + w2"); // units cancel

    CHECK_THROWS_AS(add(Gf2Poly::one(2), Gf2Poly::one(3)), std::invalid_argument);
}

TEST_CASE("truncated products") {
    Gf2Poly p = one_plus_w1();
    CHECK(mul_truncated(p, p, 2).str() == "1 + w1^2"); // Frobenius
    CHECK(mul_truncated(p, p, 1).str() == "1");        // truncation drops w1^2
    CHECK_THROWS_AS(mul_truncated(Gf2Poly::one(1), Gf2Poly::one(2), 5), std::invalid_argument);
}

TEST_CASE("pow via Pascal parity") {
    auto pascal = oracles::pascal_mod2(64);
    for (std::uint64_t e : {0ull, 1ull, 2ull, 3ull, 5ull, 12ull, 31ull, 32ull}) {
        Gf2Poly r = pow_truncated(one_plus_w1(), e, 64);
        for (std::uint16_t i = 0; i <= 64; ++i) {
            bool expect = i <= e && pascal[e][i];
            CHECK(r.contains(Monomial::generator(1, 1, i)) == expect);
        }
    }
    CHECK(pow_truncated(one_plus_w1(), 3, 3).str() == "1 + w1 + w1^2 + w1^3");
}

TEST_CASE("high 2-power powers truncate to 1") {
    // (1+u)^{2^t} = 1 + u^{2^t}, out of range once 2^t exceeds the window
    for (std::size_t gens : {1, 3, 5}) {
        Gf2Poly base = Gf2Poly::one(gens) + Gf2Poly::generator_sum(gens);
        CHECK(pow_truncated(base, 32, 31).is_one());
        CHECK(pow_truncated(base, 64, 20).is_one());
    }
}

TEST_CASE("series inversion, frozen examples") {
    CHECK(invert_series(Gf2Poly::one(3), 7).is_one());
    CHECK(invert_series(one_plus_w1(), 3).str() == "1 + w1 + w1^2 + w1^3");
    // four generators, the degree-3 window
    Gf2Poly p = Gf2Poly::one(3) + Gf2Poly::generator_sum(3);
    CHECK(invert_series(p, 3).str() == "1 + w1 + w1^2 + w2 + w1^3 + w3");
    CHECK_THROWS_AS(invert_series(Gf2Poly::generator_sum(2), 5), std::invalid_argument);
    CHECK_THROWS_AS(invert_series(Gf2Poly::zero(2), 5), std::invalid_argument);
}

TEST_CASE("graded components") {
    Gf2Poly p = Gf2Poly::one(2) + Gf2Poly::generator_sum(2);
    CHECK(graded_component(p, 2).str() == "w2");
    CHECK(graded_component(p, 5).is_zero());
    CHECK(graded_component(p, 0).is_one());
}

TEST_CASE("mul agrees with the dense oracle") {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t gens = 1 + gen() % 6;
        Gf2Poly p = oracles::random_poly(gen, gens, 8, 20);
        Gf2Poly q = oracles::random_poly(gen, gens, 8, 20);
        std::uint64_t d = gen() % 21;
        auto direct = oracles::DensePoly::from(mul_truncated(p, q, d));
        auto expect = oracles::DensePoly::from(p).mul(oracles::DensePoly::from(q), d);
        REQUIRE(direct == expect);
    }
}

TEST_CASE("ring laws under a common truncation") {
    std::mt19937_64 gen(12);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t gens = 1 + gen() % 6;
        std::uint64_t d = 20;
        Gf2Poly p = oracles::random_poly(gen, gens, 6, 20);
        Gf2Poly q = oracles::random_poly(gen, gens, 6, 20);
        Gf2Poly r = oracles::random_poly(gen, gens, 6, 20);
        CHECK(mul_truncated(p, q, d) == mul_truncated(q, p, d));
        CHECK(mul_truncated(mul_truncated(p, q, d), r, d) ==
              mul_truncated(p, mul_truncated(q, r, d), d));
        CHECK(mul_truncated(p, q + r, d) == mul_truncated(p, q, d) + mul_truncated(p, r, d));
    }
}

TEST_CASE("Frobenius squares termwise") {
    std::mt19937_64 gen(13);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t gens = 1 + gen() % 6;
        Gf2Poly p = oracles::random_poly(gen, gens, 8, 15);
        Gf2Poly direct = mul_truncated(p, p, 40);
        std::vector<Monomial> squared;
        for (const Monomial& m : p.terms())
            squared.push_back(m.squared());
        CHECK(direct == Gf2Poly::from_terms(gens, std::move(squared)));
    }
}

TEST_CASE("pow equals the multiplication chain") {
    std::mt19937_64 gen(14);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t gens = 1 + gen() % 4;
        Gf2Poly p = oracles::random_poly(gen, gens, 5, 10);
        std::uint64_t e = gen() % 9;
        Gf2Poly chain = Gf2Poly::one(gens);
        for (std::uint64_t i = 0; i < e; ++i)
            chain = mul_truncated(chain, p, 24);
        CHECK(pow_truncated(p, e, 24) == chain);
    }
}

TEST_CASE("2-power exponents match iterated squaring") {
    std::mt19937_64 gen(16);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t gens = 1 + gen() % 4;
        Gf2Poly p = oracles::random_poly(gen, gens, 5, 8);
        Gf2Poly sq = p;
        for (int t = 0; t < 3; ++t)
            sq = mul_truncated(sq, sq, 30);
        CHECK(pow_truncated(p, 8, 30) == sq);
    }
}

TEST_CASE("inversion round-trips to degree 40") {
    std::mt19937_64 gen(15);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t gens = 1 + gen() % 6;
        Gf2Poly p = oracles::random_series_unit(gen, gens, 6, 12);
        Gf2Poly inv = invert_series(p, 40);
        CHECK(mul_truncated(p, inv, 40).is_one());
    }
}

TEST_CASE("canonical order and rendering") {
    CHECK(Gf2Poly::zero(3).str() == "0");
    CHECK(Gf2Poly::one(3).str() == "1");
    Monomial m(std::vector<std::uint16_t>{2, 0, 1});
    CHECK(m.str() == "w1^2*w3");
    CHECK(m.weighted_degree() == 5);
    // within one degree the w1-heavy monomial prints first
    Gf2Poly p = Gf2Poly::from_terms(
        2, {Monomial(std::vector<std::uint16_t>{0, 1}), Monomial(std::vector<std::uint16_t>{2, 0})});
    CHECK(p.str() == "w1^2 + w2");
}

TEST_CASE("duplicate terms cancel in from_terms") {
    Monomial w1 = Monomial::generator(2, 1);
    Gf2Poly p = Gf2Poly::from_terms(2, {w1, w1, Monomial::generator(2, 2)});
    CHECK(p.str() == "w2");
}

TEST_CASE("term guard trips with an explicit error") {
    std::size_t saved = term_limit();
    set_term_limit(8);
    Gf2Poly base = Gf2Poly::one(6) + Gf2Poly::generator_sum(6);
    CHECK_THROWS_AS(pow_truncated(base, 9, 40), TermLimitError);
    set_term_limit(saved);
    CHECK_NOTHROW(pow_truncated(base, 9, 40));
}

TEST_CASE("exponent overflow is rejected") {
    Monomial big = Monomial::generator(1, 1, 0xffff);
    CHECK_THROWS_AS(big.times(Monomial::generator(1, 1, 1)), std::overflow_error);
}

} // TEST_SUITE
