#include "doctest.h"

#include <random>

#include "regskew/cohmodel.hpp"
#include "support/oracles.hpp"

using namespace regskew;
using gf2::Gf2Poly;
using gf2::Monomial;

namespace {

Monomial mono(std::vector<std::uint16_t> e) { return Monomial(std::move(e)); }

// all monomials over `gens` generators of weighted degree exactly `degree`
void monomials_of_degree(std::size_t gens, std::uint64_t degree, std::vector<std::uint16_t>& cur,
                         std::size_t idx, std::vector<Monomial>& out) {
    if (idx == gens) {
        if (degree == 0)
            out.push_back(Monomial(cur));
        return;
    }
    std::uint64_t w = idx + 1;
    for (std::uint64_t e = 0; e * w <= degree; ++e) {
        cur[idx] = static_cast<std::uint16_t>(e);
        monomials_of_degree(gens, degree - e * w, cur, idx + 1, out);
    }
    cur[idx] = 0;
}

std::vector<Monomial> basis(std::size_t gens, std::uint64_t degree) {
    std::vector<Monomial> out;
    std::vector<std::uint16_t> cur(gens, 0);
    monomials_of_degree(gens, degree, cur, 0, out);
    return out;
}

} // namespace

TEST_SUITE("cohmodel") {

TEST_CASE("model construction") {
    CHECK_THROWS_AS(QuotientModel(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(QuotientModel(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(QuotientModel(3, 6), std::invalid_argument);
    QuotientModel m(4, 8);
    CHECK(m.top_degree == 21);
    CHECK(m.num_generators() == 7);
}

TEST_CASE("projective model coincides with F2[w1]/(w1^d)") {
    for (std::int64_t d = 2; d <= 32; ++d) {
        QuotientModel m = QuotientModel::projective(d);
        CHECK(m.k == 2);
        for (std::int64_t j = 0; j <= d + 3; ++j)
            CHECK(vanishes(Monomial::generator(1, 1, static_cast<std::uint16_t>(j)), m) ==
                  (j >= d));
    }
}

TEST_CASE("vanishing relations, pinned cases") {
    QuotientModel m34(3, 4);
    // the pure power survives
    CHECK_FALSE(vanishes(mono({0, 0, 2}), m34));
    // w1^{(d-1)(k-1)} dies
    CHECK(vanishes(mono({6, 0, 0}), m34));

    QuotientModel m44(4, 4);
    CHECK(vanishes(mono({2, 2, 2}), m44)); // degree 12 > 9
    CHECK_FALSE(vanishes(mono({0, 0, 3}), m44));

    CHECK_THROWS_AS(vanishes(mono({1, 0}), m34), std::invalid_argument);
}

TEST_CASE("everything above the top degree dies") {
    std::mt19937_64 gen(21);
    for (auto [d, k] : std::vector<std::pair<int, int>>{{2, 4}, {3, 4}, {4, 8}, {2, 2}}) {
        QuotientModel m(d, k);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::uint16_t> e(m.num_generators(), 0);
            for (auto& x : e)
                x = static_cast<std::uint16_t>(gen() % 5);
            Monomial mm(e);
            if (mm.weighted_degree() > static_cast<std::uint64_t>(m.top_degree))
                CHECK(vanishes(mm, m));
        }
        CHECK_FALSE(vanishes(Monomial(m.num_generators()), m)); // the unit survives
    }
}

TEST_CASE("reduce, pinned cases") {
    // top component of the inverse of 1+w1 at d=3, k=2
    QuotientModel m32(3, 2);
    Gf2Poly wb = gf2::invert_series(Gf2Poly::one(1) + Gf2Poly::generator_sum(1), 2);
    Gf2Poly top = gf2::graded_component(wb, 2);
    CHECK(reduce(top, m32).str() == "w1^2");

    CHECK(reduce(Gf2Poly::zero(1), m32).is_zero());

    // d=2, k=4: top degree 3; w1^3 and w1*w2 die, w3 survives
    QuotientModel m24(2, 4);
    Gf2Poly p = Gf2Poly::from_terms(3, {mono({3, 0, 0}), mono({0, 0, 1}), mono({1, 1, 0})});
    CHECK(reduce(p, m24).str() == "w3");
}

TEST_CASE("reduce is idempotent and additive") {
    std::mt19937_64 gen(22);
    QuotientModel m(3, 4);
    for (int trial = 0; trial < 100; ++trial) {
        Gf2Poly p = oracles::random_poly(gen, 3, 8, 8);
        Gf2Poly q = oracles::random_poly(gen, 3, 8, 8);
        Gf2Poly rp = reduce(p, m);
        CHECK(reduce(rp, m) == rp);
        CHECK(reduce(p + q, m) == reduce(p, m) + reduce(q, m));
    }
}

TEST_CASE("pure-power detection, pinned cases") {
    QuotientModel m(3, 4);
    Gf2Poly pure = Gf2Poly::from_terms(3, {mono({0, 0, 2})});
    CHECK(detect_pure_power(pure, 2, m));
    CHECK_FALSE(detect_pure_power(Gf2Poly::zero(3), 2, m));
    // degree precondition
    CHECK_THROWS_AS(detect_pure_power(Gf2Poly::one(3), 2, m), std::invalid_argument);
    CHECK_THROWS_AS(detect_pure_power(pure, 5, m), std::invalid_argument);
}

TEST_CASE("pure-power detection is exactly membership of the pure monomial") {
    // exhaustive over subsets of the degree-(k-1)j basis, d <= 4, k in {2,4}
    for (std::int64_t d = 2; d <= 4; ++d) {
        for (std::int64_t k : {2, 4}) {
            QuotientModel m(d, k);
            const std::size_t g = m.num_generators();
            for (std::int64_t j = 0; j <= d - 1; ++j) {
                auto bas = basis(g, static_cast<std::uint64_t>((k - 1) * j));
                REQUIRE(bas.size() <= 16); // keeps the power set enumerable
                Monomial pure = Monomial::generator(g, g, static_cast<std::uint16_t>(j));
                for (std::uint32_t mask = 0; mask < (1u << bas.size()); ++mask) {
                    std::vector<Monomial> terms;
                    bool has_pure = false;
                    for (std::size_t i = 0; i < bas.size(); ++i)
                        if (mask >> i & 1) {
                            terms.push_back(bas[i]);
                            has_pure = has_pure || bas[i] == pure;
                        }
                    Gf2Poly p = Gf2Poly::from_terms(g, std::move(terms));
                    REQUIRE(detect_pure_power(p, j, m) == has_pure);
                }
            }
        }
    }
}

} // TEST_SUITE
