#pragma once

#include "bergefree/gf.hpp"
#include "bergefree/hypergraph.hpp"

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace bergefree::construction {

using gf::Fe;
using gf::FieldCtx;

/// Parameters of the finite-field hypergraph: uniformity r, multiplier count
/// l, the field, r distinct anchors alpha_1..alpha_r and l distinct nonzero
/// multipliers m_1..m_l subject to the separation condition
///   m_s * (alpha_k - alpha_i) != m_t * (alpha_k - alpha_j)
/// for all multiplier indices s, t and distinct part indices i, j, k.
struct ConstructionParams {
    int r = 0;
    int l = 0;
    std::shared_ptr<const FieldCtx> field;
    std::vector<Fe> alphas;
    std::vector<Fe> ms;
};

/// First separation-condition violation in lexicographic (s, t, i, j, k)
/// order; indices are 1-based.
struct ConditionViolation {
    int s, t, i, j, k;
    Fe lhs, rhs;
};

/// nullopt means the condition holds. Throws on malformed parameters
/// (wrong counts, repeated alphas, zero or repeated multipliers).
std::optional<ConditionViolation> check_condition(const ConstructionParams& params);

/// Canonical parameter choice: alphas are the first r field elements, and
/// multipliers are chosen greedily (canonically smallest admissible nonzero
/// element each round, avoiding every product m_z * (alpha_k - alpha_j) *
/// (alpha_k - alpha_i)^-1). Succeeds whenever q >= 2*l*r^3; may also succeed
/// for smaller q.
struct ParamSelection {
    std::optional<ConstructionParams> params;
    int blocked_index = 0; // 1-based index of the multiplier that could not be chosen
};
ParamSelection select_parameters(int r, int l, std::shared_ptr<const FieldCtx> field);

/// The greedy multiplier rounds alone, against explicitly given anchors.
struct MultiplierSelection {
    std::optional<std::vector<Fe>> ms;
    int blocked_index = 0;
};
MultiplierSelection greedy_multipliers(const std::shared_ptr<const FieldCtx>& field,
                                       const std::vector<Fe>& alphas, int l);

/// The hypergraph: one vertex (x, y, i) per pair of field elements and part,
/// and one edge per (x, y, a, m_s) with a nonzero,
///   e(x, y, a, m_s) = { (x + alpha_i m_s a, y + alpha_i m_s a^2, i) : i }.
/// Vertex ids are part*q^2 + rank(x)*q + rank(y). Edge generation may be
/// split across threads; the canonical sort makes the output identical for
/// any thread count.
struct BuiltHypergraph {
    ConstructionParams params;
    PartitionedHypergraph hyp;

    struct VertexLabel {
        Fe x, y;
        int part;
    };
    std::vector<VertexLabel> labels; // by vertex id

    struct EdgeOrigin {
        Fe x, y, a;
        int s; // 0-based multiplier (color) index
    };
    std::vector<EdgeOrigin> origins; // by canonical edge index

    // Triangle-freeness is only guaranteed for l = 1. For l >= 2 the builder
    // runs the detector and records the observed outcome without asserting
    // anything about it.
    std::optional<bool> triangle_found;

    int color_of(int edge_idx) const { return origins[static_cast<std::size_t>(edge_idx)].s; }
};

BuiltHypergraph build_hypergraph(const ConstructionParams& params, int threads = 1);

/// Bipartite projection onto two parts, each edge carrying the color of the
/// unique hyperedge it comes from (unique because the hypergraph is linear).
struct ColoredBipartiteGraph {
    int part_left = 0;
    int part_right = 0;
    std::vector<int> left_vertices, right_vertices;
    std::vector<std::tuple<int, int, int>> edges; // (left id, right id, color), sorted
};

/// Adjacency computed algebraically: (u, v, i) ~ (u + m_s (alpha_j -
/// alpha_i) a, v + m_s (alpha_j - alpha_i) a^2, j) over all a != 0 and s.
ColoredBipartiteGraph build_auxiliary_graph(const BuiltHypergraph& built,
                                            int part_i, int part_j);

/// Adjacency read off the hyperedges; must equal build_auxiliary_graph
/// edge-for-edge.
ColoredBipartiteGraph project_auxiliary_graph(const BuiltHypergraph& built,
                                              int part_i, int part_j);

/// Maximum common-neighbourhood sizes over the bipartite projections:
/// per part pair (whole graph and single-color subgraphs) and per ordered
/// part triple (centers split across two parts, leaves in the third).
/// The expected ceilings are 2l^2-l per pair, 1 per color, 2l^2 per triple.
struct PairwiseFreenessReport {
    struct PairStat {
        int part_i, part_j;
        int max_common = 0;
        int max_common_per_color = 0;
    };
    struct TripleStat {
        int part_i, part_j, part_k;
        int max_common = 0;
    };
    std::vector<PairStat> pairs;
    std::vector<TripleStat> triples;
    int max_pair_common = 0;
    int max_color_common = 0;
    int max_triple_common = 0;
};

PairwiseFreenessReport verify_pairwise_freeness(const BuiltHypergraph& built);

/// Params JSON text: {"alphas": [...], "field": "p^k", "l": .., "ms": [...],
/// "r": ..} with field-element text forms.
std::string params_to_json(const ConstructionParams& params);

/// Label-table JSON text: array of {"id", "part", "x", "y"}.
std::string labels_to_json(const BuiltHypergraph& built);

} // namespace bergefree::construction
