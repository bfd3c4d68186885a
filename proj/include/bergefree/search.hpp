#pragma once

#include "bergefree/berge.hpp"
#include "bergefree/hypergraph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bergefree::search {

struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;
    double max_seconds = 60.0;
};

struct SearchResult {
    int r = 0;
    int n = 0; // vertices (general mode) or vertices per part (rpartite mode)
    std::vector<berge::BergePattern> forbidden;
    std::string mode; // "general" | "rpartite"
    int value = 0;
    Hypergraph witness;
    std::uint64_t nodes_explored = 0;
    double elapsed_seconds = 0.0;
    bool complete = true; // false when a budget cut the search short
};

/// Exact maximum edge count over r-uniform hypergraphs on n labeled vertices
/// avoiding every listed pattern. Branch and bound over candidate edges in
/// lexicographic order with incremental freeness checks; the only symmetry
/// break forces the lexicographically least first edge. Budget exhaustion
/// yields complete = false with the best value found so far.
SearchResult extremal(int r, int n, std::vector<berge::BergePattern> forbidden,
                      SearchBudget budget = {});

/// r-partite variant with n vertices per part; candidate edges are the
/// transversals of the parts.
SearchResult extremal_rpartite(int r, int n_per_part,
                               std::vector<berge::BergePattern> forbidden,
                               SearchBudget budget = {});

/// Brute force over all 2^C(n,r) edge subsets, deciding freeness only
/// through detect_generic. Reference oracle for extremal(); capped at
/// C(n,r) <= 20.
int naive_extremal(int r, int n, const std::vector<berge::BergePattern>& forbidden);

/// SearchResult JSON with the witness in edge-list text form.
std::string result_to_json(const SearchResult& result);

} // namespace bergefree::search
