#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bergefree {

/// r-uniform hypergraph on dense vertex ids [0, n). Edges are stored in
/// canonical form: each edge sorted ascending, the edge list sorted
/// lexicographically, no duplicate edges. Immutable after construction;
/// queries are pure.
class Hypergraph {
public:
    Hypergraph(int r, int n_vertices, std::vector<std::vector<int>> edges);

    int uniformity() const { return r_; }
    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<int>& edge(int idx) const { return edges_[static_cast<std::size_t>(idx)]; }

    /// Indices of edges containing v.
    const std::vector<int>& edges_at(int v) const;

    int degree(int v) const { return static_cast<int>(edges_at(v).size()); }
    std::vector<int> degree_sequence() const;

    struct LinearityCheck {
        bool linear = true;
        int edge_a = -1; // a pair of edges sharing >= 2 vertices, when !linear
        int edge_b = -1;
    };
    LinearityCheck linearity() const;
    bool is_linear() const { return linearity().linear; }

    /// Multiplicity, per unordered vertex pair {x, y}, of cherries through a
    /// common apex: triples (v, {e, f}) with e != f both containing v,
    /// x in e \ {v} and y in f \ {v}. Requires a linear hypergraph. The
    /// entries are sorted by pair, so the profile is deterministic.
    struct CodegreeProfile {
        std::vector<std::pair<std::pair<int, int>, std::int64_t>> counts;
        std::int64_t max_multiplicity = 0;
    };
    CodegreeProfile codegree_profile() const;

private:
    int r_ = 0;
    int n_ = 0;
    std::vector<std::vector<int>> edges_;
    std::vector<std::vector<int>> incidence_;
};

/// r-partite overlay: every edge meets each part in exactly one vertex.
class PartitionedHypergraph {
public:
    PartitionedHypergraph(Hypergraph base, std::vector<int> parts);

    const Hypergraph& base() const { return base_; }
    const std::vector<int>& parts() const { return parts_; }
    int part_of(int v) const { return parts_[static_cast<std::size_t>(v)]; }
    std::vector<int> part_vertices(int part) const;

private:
    Hypergraph base_;
    std::vector<int> parts_;
};

/// Edge-list text form: "r n m\n" then one line per edge, ascending vertex
/// ids separated by single spaces, lines in lexicographic order, LF endings.
std::string to_edge_list_text(const Hypergraph& h);

/// Parses and canonicalizes edge-list text (so parse-then-serialize is
/// idempotent). Rejects malformed headers, bad ids and duplicate edges.
Hypergraph parse_edge_list_text(const std::string& text);

} // namespace bergefree
