#include "doctest.h"

#include <stdexcept>

#include <bit>
#include <set>

#include "regskew/bounds.hpp"
#include "regskew/dyadic.hpp"

using namespace regskew::bounds;
using regskew::dyadic::alpha;
using regskew::dyadic::gamma;

namespace {

std::int64_t entry(const BoundReport& r, const std::string& formula) {
    for (const auto& e : r.entries)
        if (e.formula == formula)
            return e.min_admissible_n;
    FAIL("missing formula ", formula);
    return -1;
}

bool has_entry(const BoundReport& r, const std::string& formula) {
    for (const auto& e : r.entries)
        if (e.formula == formula)
            return true;
    return false;
}

} // namespace

TEST_SUITE("bounds") {

TEST_CASE("regular bounds, pinned cases") {
    for (std::int64_t d : {1, 2, 3, 5, 9}) {
        BoundReport r = regular_bound(d, 3);
        CHECK(r.best_lower == d + 2);
        CHECK(r.tight == Tightness::Exact);
    }
    for (std::int64_t m = 1; m <= 6; ++m) {
        BoundReport r = regular_bound(2, std::int64_t(1) << m);
        CHECK(r.best_lower == (std::int64_t(1) << (m + 1)) - 1);
        CHECK(r.tight == Tightness::Exact);
        if (m >= 2) // k = 2 is claimed through the affine lift instead
            CHECK(r.tight_family ==
                  "complex_moment(" + std::to_string(std::int64_t(1) << m) + ")");
    }
    for (std::int64_t k : {1, 2, 5, 8}) {
        BoundReport r = regular_bound(1, k);
        CHECK(r.best_lower == k);
        CHECK(r.tight == Tightness::Exact);
    }
    BoundReport r35 = regular_bound(3, 5);
    CHECK(entry(r35, "MAIN1") == 11);
    CHECK(r35.tight == Tightness::Unknown);
    CHECK_FALSE(has_entry(r35, "BRS")); // odd k
    CHECK(has_entry(regular_bound(3, 6), "BRS"));
    CHECK_THROWS_AS(regular_bound(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(regular_bound(3, 0), std::invalid_argument);
}

TEST_CASE("MAIN1 dominates BRS for even k") {
    for (std::int64_t d = 2; d <= 64; ++d)
        for (std::int64_t k = 2; k <= 64; k += 2) {
            BoundReport r = regular_bound(d, k);
            CHECK(entry(r, "MAIN1") >= entry(r, "BRS"));
        }
}

TEST_CASE("skew bounds, pinned cases") {
    CHECK(entry(skew_bound(3, 3), "MAIN2") == 11);
    CHECK(entry(skew_bound(2, 4), "MAIN2") == 14);
    for (std::int64_t d : {2, 3, 4, 7, 12}) {
        BoundReport r = skew_bound(d, 2);
        std::int64_t expected = d + (std::int64_t(1) << gamma(d));
        CHECK(entry(r, "MAIN2") == expected);
        CHECK(entry(r, "GT") == expected);
        CHECK(r.tight == Tightness::Unknown);
    }
    CHECK_FALSE(has_entry(skew_bound(3, 3), "GT"));
    CHECK_THROWS_AS(skew_bound(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(skew_bound(3, 0), std::invalid_argument);
}

TEST_CASE("GT form equals MAIN2 for every d up to 1024") {
    for (std::int64_t d = 2; d <= 1024; ++d) {
        BoundReport r = skew_bound(d, 2);
        CHECK(entry(r, "MAIN2") == d + (std::int64_t(1) << gamma(d)));
    }
}

TEST_CASE("MAIN2 vs NAIVE: exceptions are exactly the d = 2^r - 1 column") {
    std::set<std::int64_t> exceptional;
    for (std::int64_t d = 2; d <= 64; ++d)
        for (std::int64_t l = 2; l <= 64; ++l) {
            BoundReport r = skew_bound(d, l);
            std::int64_t m2 = entry(r, "MAIN2"), nv = entry(r, "NAIVE");
            CHECK(m2 >= nv);
            if (m2 <= nv)
                exceptional.insert(d);
        }
    for (std::int64_t d : exceptional)
        CHECK(std::has_single_bit(static_cast<std::uint64_t>(d + 1)));
    CHECK(exceptional == std::set<std::int64_t>{3, 7, 15, 31, 63});
}

TEST_CASE("regular-skew bounds, pinned cases") {
    BoundReport r222 = regular_skew_bound(2, 2, 2);
    CHECK(entry(r222, "MAIN3") == 9);

    BoundReport r342 = regular_skew_bound(3, 4, 2);
    CHECK(entry(r342, "MAIN3") == 17);

    CHECK(has_entry(r222, "STOJ"));
    CHECK(has_entry(r222, "COMBO"));
    CHECK(r222.tight == Tightness::Unknown);
}

TEST_CASE("degenerate delegations") {
    BoundReport skew = regular_skew_bound(3, 0, 4);
    CHECK(skew.problem.kind == ProblemKind::RegularSkew);
    CHECK(skew.best_lower == skew_bound(3, 4).best_lower);

    BoundReport reg = regular_skew_bound(3, 4, 0);
    CHECK(reg.best_lower == regular_bound(3, 4).best_lower - 1);
    // the affine shift agrees with MAIN3 evaluated literally at l=0
    std::int64_t a = alpha(4);
    CHECK(reg.best_lower == (3 - 1) * (4 - a) + 4 - 1);

    BoundReport zero = regular_skew_bound(4, 0, 0);
    CHECK(zero.best_lower == 0);
    CHECK(zero.entries.empty());

    // an EXACT inner claim survives the shift
    BoundReport t = regular_skew_bound(5, 3, 0);
    CHECK(t.tight == Tightness::Exact);
    CHECK(*t.tight_n == 5 + 2 - 1);
}

TEST_CASE("bounds are monotone in k and l") {
    for (std::int64_t d = 1; d <= 32; ++d)
        for (std::int64_t k = 1; k < 32; ++k)
            CHECK(regular_bound(d, k + 1).best_lower >= regular_bound(d, k).best_lower);
    for (std::int64_t d = 2; d <= 32; ++d)
        for (std::int64_t l = 1; l < 32; ++l)
            CHECK(skew_bound(d, l + 1).best_lower >= skew_bound(d, l).best_lower);
    for (std::int64_t d = 2; d <= 12; ++d)
        for (std::int64_t k = 1; k < 12; ++k)
            for (std::int64_t l = 1; l < 12; ++l) {
                CHECK(regular_skew_bound(d, k + 1, l).best_lower >=
                      regular_skew_bound(d, k, l).best_lower);
                CHECK(regular_skew_bound(d, k, l + 1).best_lower >=
                      regular_skew_bound(d, k, l).best_lower);
            }
}

TEST_CASE("ls category bound") {
    CHECK(regskew::bounds::ls_category_bound(2, 2) == 1);
    CHECK(regskew::bounds::ls_category_bound(4, 4) == 9);
    CHECK(regskew::bounds::ls_category_bound(3, 6) == 8);
    CHECK_THROWS_AS(regskew::bounds::ls_category_bound(1, 4), std::invalid_argument);
}

TEST_CASE("comparison table values and the single discrepancy") {
    auto t = comparison_table({3, 4, 5}, {2, 3, 4, 5, 6, 7, 8});
    REQUIRE(t.cells.size() == 21);
    int flagged = 0;
    for (const auto& c : t.cells) {
        CHECK_FALSE(c.published_main2.has_value());
        if (c.published_stojanovic) {
            ++flagged;
            CHECK(c.l == 5);
            CHECK(c.d == 6);
            CHECK(c.stojanovic == 34);
            CHECK(*c.published_stojanovic == 24);
        }
    }
    CHECK(flagged == 1);

    auto find = [&](std::int64_t l, std::int64_t d) {
        for (const auto& c : t.cells)
            if (c.l == l && c.d == d)
                return c;
        FAIL("missing cell");
        return t.cells[0];
    };
    CHECK(find(3, 8).main2 == 33);
    CHECK(find(3, 8).stojanovic == 26);
    CHECK(find(5, 2).main2 == 17);
    CHECK(find(5, 2).stojanovic == 14);
    CHECK(find(5, 6).main2 == 37);
    CHECK(find(5, 6).stojanovic == 34);
}

TEST_CASE("csv rendering is stable") {
    auto t = comparison_table({3}, {2, 3});
    CHECK(to_csv(t) == "l,d,main2,stojanovic\n3,2,9,8\n3,3,11,11\n");
    CHECK(to_csv(t) == to_csv(comparison_table({3}, {2, 3})));
}

TEST_CASE("exact claims carry a family and match best_lower") {
    for (std::int64_t d = 1; d <= 16; ++d)
        for (std::int64_t k = 1; k <= 16; ++k) {
            BoundReport r = regular_bound(d, k);
            if (r.tight == Tightness::Exact) {
                CHECK(*r.tight_n == r.best_lower);
                CHECK_FALSE(r.tight_family.empty());
            }
        }
}

} // TEST_SUITE
