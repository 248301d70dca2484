#include <doctest.h>

#include "properties.hpp"

namespace {

void expect(const props::Outcome& o) {
    INFO(o.detail);
    CHECK(o.ok);
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("growth steps never lose value") { expect(props::growth_monotone(1000)); }
TEST_CASE("subgraphs have smaller Lagrangians") { expect(props::subgraph_monotone(500)); }
TEST_CASE("colex rank and unrank are inverse") { expect(props::colex_bijection(12)); }
TEST_CASE("left compression postconditions") { expect(props::compression_postconditions(500)); }
TEST_CASE("converged reports meet the KKT tolerance") { expect(props::converged_reports_meet_kkt(200)); }
TEST_CASE("left-compressed optima are sorted") { expect(props::sorted_optimum_on_left_compressed(200)); }
TEST_CASE("enumeration counts") { expect(props::enumeration_matches_brute_force(5, 5)); }
TEST_CASE("fixed points are critical") { expect(props::fixed_points_are_critical(150)); }
TEST_CASE("difference identity at left-compressed optima") { expect(props::difference_identity(150)); }
TEST_CASE("clique lower bound") { expect(props::clique_lower_bound(200)); }
TEST_CASE("Motzkin-Straus oracle") { expect(props::motzkin_straus_oracle(200)); }
TEST_CASE("complete graph oracle") { expect(props::complete_graph_oracle()); }
TEST_CASE("descendant order") { expect(props::descendant_order(7)); }

}  // TEST_SUITE
