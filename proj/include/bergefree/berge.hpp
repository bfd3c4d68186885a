#pragma once

#include "bergefree/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bergefree::berge {

/// Loop-free multigraph; parallel edges allowed. Edge order is preserved
/// because witnesses assign hyperedges per pattern edge index.
struct Multigraph {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> edges; // normalized u < v

    Multigraph() = default;
    Multigraph(int n, std::vector<std::pair<int, int>> e);
};

/// Forbidden pattern: two parallel edges (c2), the triangle (c3), the
/// complete bipartite K_{2,t}, or an arbitrary multigraph.
class BergePattern {
public:
    enum class Kind { c2, c3, k2t, generic };

    static BergePattern c2();
    static BergePattern c3();
    static BergePattern k2t(int t);
    static BergePattern generic(Multigraph g);

    /// Parses "c2" | "c3" | "k2t:<t>".
    static BergePattern parse(std::string_view spec);

    Kind kind() const { return kind_; }
    int t() const { return t_; }
    const Multigraph& graph() const { return graph_; }
    std::string name() const;

private:
    BergePattern(Kind k, int t, Multigraph g)
        : kind_(k), t_(t), graph_(std::move(g)) {}

    Kind kind_;
    int t_ = 0;
    Multigraph graph_;
};

/// Embedding certificate: injective map of pattern vertices into the
/// hypergraph plus an injective hyperedge per pattern edge containing the
/// image of that edge. Isolated pattern vertices map to -1.
struct Witness {
    std::vector<int> core_vertices;                  // pattern vertex -> vertex id
    std::vector<std::pair<int, int>> edge_assignment; // (pattern edge, hyperedge)

    bool validates(const Hypergraph& h, const BergePattern& pattern) const;
};

struct DetectStats {
    std::uint64_t pairs_checked = 0;
    int max_codegree = 0;
    double elapsed_seconds = 0.0;
};

struct VerificationReport {
    BergePattern pattern;
    bool found = false;
    std::optional<Witness> witness;
    DetectStats stats;
};

/// Two distinct hyperedges sharing two vertices; equivalently a linearity
/// violation.
VerificationReport detect_c2(const Hypergraph& h);

/// Three distinct vertices v1, v2, v3 and three distinct hyperedges e1, e2,
/// e3 with {v1,v2} in e1, {v2,v3} in e2, {v3,v1} in e3.
VerificationReport detect_c3(const Hypergraph& h);

/// Distinct vertices a, b, w_1..w_t and 2t pairwise distinct hyperedges
/// e_i containing {a, w_i} and f_i containing {b, w_i}. Screens center
/// pairs by counting usable leaves, then backtracks over distinct
/// representative edge pairs for qualifying centers. The reported witness
/// is the one for the canonically first center pair regardless of thread
/// count.
VerificationReport detect_k2t(const Hypergraph& h, int t, int threads = 1);

/// System-of-distinct-representatives detection for an arbitrary multigraph:
/// enumerate injective vertex embeddings (pruned by degree and pair
/// coverage), then match pattern edges to eligible hyperedges by augmenting
/// paths. Exact; used as the correctness oracle for the specialized
/// detectors.
VerificationReport detect_generic(const Hypergraph& h, const Multigraph& g);

/// Dispatch on pattern kind.
VerificationReport detect(const Hypergraph& h, const BergePattern& pattern,
                          int threads = 1);

namespace internal {

/// Map from covered vertex pair to the hyperedges containing it.
class PairCoverage {
public:
    explicit PairCoverage(const Hypergraph& h);
    const std::vector<int>* edges_for(int x, int y) const; // null when uncovered
    const std::vector<std::pair<std::pair<int, int>, std::vector<int>>>& entries() const {
        return entries_;
    }

private:
    std::vector<std::pair<std::pair<int, int>, std::vector<int>>> entries_; // sorted
};

/// Exact Berge-K_{2,t} check for one center pair {a, b} over the given
/// hypergraph; used by detect_k2t and by the incremental search checks.
std::optional<Witness> k2t_pair_witness(const Hypergraph& h, const PairCoverage& cover,
                                        int a, int b, int t);

} // namespace internal

} // namespace bergefree::berge
