#include <doctest.h>

#include <stdexcept>

#include "hlag/binomial.hpp"
#include "hlag/colex.hpp"
#include "hlag/errors.hpp"
#include "hlag/rset.hpp"
#include "support.hpp"

using namespace hlag;

TEST_SUITE("combinatorics") {

TEST_CASE("binomial agrees with Pascal's triangle") {
    std::vector<std::vector<std::uint64_t>> pascal(62, std::vector<std::uint64_t>(62, 0));
    for (int n = 0; n < 62; ++n) {
        pascal[n][0] = 1;
        for (int k = 1; k <= n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + (k < n ? pascal[n - 1][k] : 0);
    }
    for (int n = 0; n < 62; ++n) {
        for (int k = 0; k < 62; ++k) CHECK(binomial(n, k) == pascal[n][k]);
    }
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-1, 2) == 0);
    CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
    std::uint64_t out = 7;
    CHECK_FALSE(try_binomial(200, 100, out));
}

TEST_CASE("rset validates and prints") {
    const RSet a{1, 3, 4};
    CHECK(a.r() == 3);
    CHECK(a.min() == 1);
    CHECK(a.max() == 4);
    CHECK(a.to_string() == "{1,3,4}");
    CHECK(a.contains(3));
    CHECK_FALSE(a.contains(2));
    CHECK(a.coordinate_sum() == 8);
    CHECK(a.without(3) == RSet{1, 4});
    CHECK(a.with(2) == RSet{1, 2, 3, 4});
    CHECK_THROWS_AS(a.without(2), IndexError);
    CHECK_THROWS((RSet{2, 1}));
    CHECK_THROWS((RSet{0, 1}));
    CHECK_THROWS((RSet{1, 1}));
    CHECK(RSet::from_unsorted({5, 2, 3}) == RSet{2, 3, 5});
    CHECK(initial_segment(3) == RSet{1, 2, 3});
    CHECK(RSet{}.r() == 0);
}

TEST_CASE("colex order on triples starts 123 < 124 < 134 < 234") {
    CHECK(RSet{1, 2, 3} < RSet{1, 2, 4});
    CHECK(RSet{1, 2, 4} < RSet{1, 3, 4});
    CHECK(RSet{1, 3, 4} < RSet{2, 3, 4});
    CHECK(RSet{2, 3, 4} < RSet{1, 2, 5});
    CHECK(colex_compare(RSet{1, 4}, RSet{2, 3}) == std::strong_ordering::greater);
    CHECK_THROWS((void)(RSet{1, 2} < RSet{1, 2, 3}));
}

TEST_CASE("colex rank examples") {
    CHECK(colex_rank(RSet{1, 2, 3}) == 1);
    CHECK(colex_rank(RSet{3, 4, 5}) == 10);
    CHECK(colex_unrank(10, 3) == RSet{3, 4, 5});
    CHECK(colex_unrank(17, 3) == RSet{1, 5, 6});
    CHECK(colex_unrank(1, 2) == RSet{1, 2});
    CHECK_THROWS(colex_unrank(0, 3));
}

TEST_CASE("colex rank matches position in the brute-force sorted order") {
    for (std::size_t r = 2; r <= 4; ++r) {
        const auto sorted = oracle::colex_sorted(12, r);
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            const RSet s(std::vector<Vertex>(sorted[i].begin(), sorted[i].end()));
            REQUIRE(colex_rank(s) == i + 1);
            REQUIRE(colex_unrank(i + 1, r) == s);
        }
    }
}

TEST_CASE("descendants match coordinatewise domination") {
    for (std::size_t r = 2; r <= 4; ++r) {
        for (const auto& raw : oracle::subsets(7, r)) {
            const RSet a(std::vector<Vertex>(raw.begin(), raw.end()));
            std::vector<RSet> all_expected;
            std::vector<RSet> direct_expected;
            for (const auto& b : oracle::subsets(7, r)) {
                if (!oracle::dominated(b, raw)) continue;
                RSet bs(std::vector<Vertex>(b.begin(), b.end()));
                std::uint64_t gap = 0;
                for (std::size_t i = 0; i < r; ++i) gap += raw[i] - b[i];
                if (gap == 1) direct_expected.push_back(bs);
                all_expected.push_back(std::move(bs));
            }
            std::sort(all_expected.begin(), all_expected.end());
            std::sort(direct_expected.begin(), direct_expected.end());
            REQUIRE(descendants(a, false) == all_expected);
            REQUIRE(descendants(a, true) == direct_expected);
            for (const auto& b : all_expected) {
                REQUIRE(is_descendant(b, a));
                REQUIRE(b < a);
            }
            CHECK_FALSE(is_descendant(a, a));
        }
    }
}

TEST_CASE("direct ancestors invert direct descendants") {
    const Vertex n = 7;
    for (const auto& raw : oracle::subsets(n, 3)) {
        const RSet a(std::vector<Vertex>(raw.begin(), raw.end()));
        for (const auto& up : direct_ancestors(a, n)) {
            const auto down = descendants(up, true);
            CHECK(std::find(down.begin(), down.end(), a) != down.end());
            CHECK(up.max() <= n);
        }
    }
    CHECK(direct_ancestors(RSet{1, 2, 3}, 4) == std::vector<RSet>{RSet{1, 2, 4}});
}

}  // TEST_SUITE
