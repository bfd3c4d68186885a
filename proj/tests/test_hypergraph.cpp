#include "bergefree/hypergraph.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace bergefree;

namespace {

// Brute-force codegree oracle: scan every unordered edge pair at every apex.
std::map<std::pair<int, int>, long long> brute_codegree(const Hypergraph& h) {
    std::map<std::pair<int, int>, long long> counts;
    for (int v = 0; v < h.vertex_count(); ++v) {
        for (int a = 0; a < h.edge_count(); ++a) {
            for (int b = a + 1; b < h.edge_count(); ++b) {
                const auto& ea = h.edge(a);
                const auto& eb = h.edge(b);
                auto contains = [](const std::vector<int>& e, int x) {
                    return std::find(e.begin(), e.end(), x) != e.end();
                };
                if (!contains(ea, v) || !contains(eb, v)) continue;
                for (int x : ea) {
                    if (x == v) continue;
                    for (int y : eb) {
                        if (y == v || y == x) continue;
                        auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
                        ++counts[key];
                    }
                }
            }
        }
    }
    return counts;
}

const std::vector<std::vector<int>> kFanoLines = {
    {0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};

} // namespace

TEST_CASE("constructor canonicalizes and validates") {
    Hypergraph h(3, 5, {{4, 3, 0}, {2, 1, 0}});
    CHECK(h.edges() == std::vector<std::vector<int>>{{0, 1, 2}, {0, 3, 4}});

    CHECK_THROWS_AS(Hypergraph(3, 5, {{0, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, 5, {{0, 1, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, 5, {{0, 1, 2}, {2, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(1, 5, {}), std::invalid_argument);
    CHECK_NOTHROW(Hypergraph(3, 0, {}));
}

TEST_CASE("degrees") {
    Hypergraph h(3, 5, {{0, 1, 2}, {0, 3, 4}});
    CHECK(h.degree(0) == 2);
    CHECK(h.degree(1) == 1);
    CHECK(h.degree_sequence() == std::vector<int>{2, 1, 1, 1, 1});
    CHECK_THROWS_AS(h.degree(5), std::out_of_range);

    Hypergraph empty(3, 4, {});
    CHECK(empty.degree(2) == 0);

    int sum = 0;
    for (int d : h.degree_sequence()) sum += d;
    CHECK(sum == h.uniformity() * h.edge_count());
}

TEST_CASE("linearity") {
    Hypergraph bad(3, 4, {{0, 1, 2}, {1, 2, 3}});
    auto check = bad.linearity();
    CHECK_FALSE(check.linear);
    CHECK(check.edge_a == 0);
    CHECK(check.edge_b == 1);

    Hypergraph fano(3, 7, kFanoLines);
    CHECK(fano.is_linear());
    // Every pair of Fano lines meets in exactly one point.
    for (int a = 0; a < fano.edge_count(); ++a) {
        for (int b = a + 1; b < fano.edge_count(); ++b) {
            int common = 0;
            for (int x : fano.edge(a)) {
                for (int y : fano.edge(b)) {
                    if (x == y) ++common;
                }
            }
            CHECK(common == 1);
        }
    }

    CHECK(Hypergraph(3, 0, {}).is_linear());
}

TEST_CASE("codegree profile matches the brute-force oracle") {
    SUBCASE("single edge") {
        Hypergraph h(3, 3, {{0, 1, 2}});
        auto profile = h.codegree_profile();
        CHECK(profile.counts.empty());
        CHECK(profile.max_multiplicity == 0);
    }
    SUBCASE("two edges at one apex") {
        Hypergraph h(3, 5, {{0, 1, 2}, {0, 3, 4}});
        auto profile = h.codegree_profile();
        std::map<std::pair<int, int>, long long> got(profile.counts.begin(),
                                                     profile.counts.end());
        CHECK(got[{1, 3}] == 1);
        CHECK(got == brute_codegree(h));
    }
    SUBCASE("fano") {
        Hypergraph h(3, 7, kFanoLines);
        auto profile = h.codegree_profile();
        std::map<std::pair<int, int>, long long> got(profile.counts.begin(),
                                                     profile.counts.end());
        CHECK(got == brute_codegree(h));
    }
    SUBCASE("non-linear input is rejected") {
        Hypergraph h(3, 4, {{0, 1, 2}, {1, 2, 3}});
        CHECK_THROWS_AS(h.codegree_profile(), std::invalid_argument);
    }
}

TEST_CASE("codegree counting identity for linear hypergraphs") {
    // Both sides of the double count agree: the profile mass equals
    // (r-1)^2 * sum of C(d(v), 2).
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 5 + static_cast<int>(rng() % 4);
        std::vector<std::vector<int>> edges;
        std::vector<std::vector<char>> pair_used(
            static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
        for (int attempt = 0; attempt < 30; ++attempt) {
            int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            int b = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            int c = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            if (a == b || b == c || a == c) continue;
            auto used = [&](int x, int y) { return pair_used[static_cast<std::size_t>(x)]
                                                            [static_cast<std::size_t>(y)]; };
            if (used(a, b) || used(b, c) || used(a, c)) continue;
            for (auto [x, y] : {std::pair{a, b}, {b, c}, {a, c}}) {
                pair_used[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1;
                pair_used[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = 1;
            }
            edges.push_back({a, b, c});
        }
        Hypergraph h(3, n, edges);
        REQUIRE(h.is_linear());
        auto profile = h.codegree_profile();
        long long mass = 0;
        for (const auto& [pair, count] : profile.counts) mass += count;
        long long expected = 0;
        int r = h.uniformity();
        for (int d : h.degree_sequence()) {
            expected += static_cast<long long>(r - 1) * (r - 1) * d * (d - 1) / 2;
        }
        CHECK(mass == expected);
    }
}

TEST_CASE("partitioned hypergraph validates transversality") {
    Hypergraph ok(3, 6, {{0, 2, 4}, {1, 3, 5}});
    CHECK_NOTHROW(PartitionedHypergraph(ok, {0, 0, 1, 1, 2, 2}));

    Hypergraph bad(3, 6, {{0, 1, 4}});
    CHECK_THROWS_AS(PartitionedHypergraph(bad, {0, 0, 1, 1, 2, 2}),
                    std::invalid_argument);

    PartitionedHypergraph p(ok, {0, 0, 1, 1, 2, 2});
    CHECK(p.part_vertices(1) == std::vector<int>{2, 3});
    CHECK(p.part_of(4) == 2);
}

TEST_CASE("edge-list text round-trip is byte-identical") {
    Hypergraph h(3, 7, kFanoLines);
    std::string text = to_edge_list_text(h);
    CHECK(text.substr(0, 6) == "3 7 7\n");
    Hypergraph back = parse_edge_list_text(text);
    CHECK(to_edge_list_text(back) == text);

    // Unsorted input canonicalizes to the same bytes.
    std::string scrambled = "3 7 7\n2 4 5\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n";
    CHECK(to_edge_list_text(parse_edge_list_text(scrambled)) == text);

    CHECK_THROWS_AS(parse_edge_list_text("3 7"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list_text("3 7 2\n0 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list_text("3 3 1\n0 1 2\n9"), std::invalid_argument);
}
