#include "bergefree/search.hpp"

#include "bergefree/bounds.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace bergefree;
using namespace bergefree::search;
using berge::BergePattern;

namespace {
const BergePattern kC2 = BergePattern::c2();
const BergePattern kC3 = BergePattern::c3();
const BergePattern kK23 = BergePattern::k2t(3);
} // namespace

TEST_CASE("linear packings on few points") {
    CHECK(extremal(3, 4, {kC2}).value == 1);
    CHECK(extremal(3, 5, {kC2}).value == 2);
    CHECK(extremal(3, 6, {kC2}).value == 4);
}

TEST_CASE("seven points admit a full triple system") {
    auto result = extremal(3, 7, {kC2});
    CHECK(result.value == 7);
    CHECK(result.complete);
    CHECK(result.witness.edge_count() == 7);
    CHECK(result.witness.is_linear());
    // A 7-edge linear system on 7 points is a Steiner triple system: every
    // vertex has degree 3 and every pair is covered.
    for (int v = 0; v < 7; ++v) CHECK(result.witness.degree(v) == 3);
    CHECK_FALSE(berge::detect_c2(result.witness).found);
}

TEST_CASE("richer forbidden families on five points") {
    auto result = extremal(3, 5, {kC2, kC3, kK23});
    CHECK(result.value == 2);
    CHECK(result.complete);
    CHECK(static_cast<double>(result.value) <= bounds::ub_general(3, 2, 5));
    CHECK_FALSE(berge::detect_c2(result.witness).found);
    CHECK_FALSE(berge::detect_c3(result.witness).found);
    CHECK_FALSE(berge::detect_k2t(result.witness, 3).found);
}

TEST_CASE("agreement with the naive oracle") {
    const std::vector<std::vector<BergePattern>> families = {
        {kC2}, {kC2, kC3}, {kC2, kC3, kK23}};
    for (int n : {4, 5}) {
        for (const auto& family : families) {
            CHECK(extremal(3, n, family).value == naive_extremal(3, n, family));
        }
    }
}

TEST_CASE("rpartite search") {
    SUBCASE("eight transversal triples over parts of size two") {
        auto result = extremal_rpartite(3, 2, {kC2});
        CHECK(result.value == 4);
        CHECK(result.mode == "rpartite");
        CHECK(result.witness.is_linear());
        // Each of the three part pairs offers 4 vertex pairs and each edge
        // uses one from each, so 4 edges is also an upper bound.
        CHECK(result.value <= 4);
    }
    SUBCASE("single transversal when parts are singletons") {
        CHECK(extremal_rpartite(3, 1, {kC2}).value == 1);
    }
    SUBCASE("bounded by the rpartite formula") {
        auto result = extremal_rpartite(3, 3, {kC2, kC3, kK23});
        CHECK(result.value == 6);
        CHECK(result.complete);
        CHECK(static_cast<double>(result.value) <= bounds::ub_rpartite(3, 3)); // ~8.196
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(extremal(3, 2, {kC2}), std::invalid_argument);
    CHECK_THROWS_AS(extremal(1, 4, {kC2}), std::invalid_argument);
    CHECK_THROWS_AS(extremal(3, 4, {}), std::invalid_argument);
    CHECK_THROWS_AS(naive_extremal(3, 4, {}), std::invalid_argument);
    CHECK_THROWS_AS(naive_extremal(3, 7, {kC2}), std::invalid_argument); // C(7,3) > 20
    CHECK_THROWS_AS(extremal_rpartite(3, 0, {kC2}), std::invalid_argument);
}

TEST_CASE("budget exhaustion reports an incomplete search") {
    SearchBudget tiny;
    tiny.max_nodes = 2;
    auto result = extremal(3, 7, {kC2}, tiny);
    CHECK_FALSE(result.complete);
    CHECK(result.value <= 7);
    CHECK(result.nodes_explored <= 4);
}

TEST_CASE("generic patterns restrict the search") {
    // Forbidding a single-edge pattern forces the empty hypergraph.
    berge::Multigraph one_edge(2, {{0, 1}});
    auto result = extremal(3, 4, {BergePattern::generic(one_edge)});
    CHECK(result.value == 0);
    CHECK(result.witness.edge_count() == 0);

    // Forbidding a path of two edges still allows one edge.
    berge::Multigraph path(3, {{0, 1}, {1, 2}});
    CHECK(extremal(3, 4, {BergePattern::generic(path)}).value == 1);
}

TEST_CASE("search result serializes with its witness") {
    auto result = extremal(3, 5, {kC2});
    std::string json = result_to_json(result);
    CHECK(json.find("\"value\": 2") != std::string::npos);
    CHECK(json.find("\"mode\": \"general\"") != std::string::npos);
    CHECK(json.find("3 5 2\\n") != std::string::npos);
    CHECK(json.find("\"c2\"") != std::string::npos);
}
