#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bergefree::bounds {

/// Upper bound for linear, triangle-free, K_{2,t+1}-free r-uniform
/// hypergraphs on n vertices: sqrt(t)/(r(r-1)) * n^(3/2) + n/r.
double ub_general(int r, std::int64_t t, std::int64_t n);

/// Upper bound for r-partite instances with n vertices per part, forbidding
/// the pair patterns, the triangle and K_{2,3}: sqrt(2/(r-1)) * n^(3/2) + n.
double ub_rpartite(int r, std::int64_t n_per_part);

/// Upper bound without forbidding triangles: sqrt(2(t+1))/r * n^(3/2) + n/r.
double ub_palmer(int r, std::int64_t t, std::int64_t n);

/// The t for which the (r, l) construction is K_{2,t+1}-free: 2r-4 when
/// l = 1, otherwise (r-1)(2l^2 - l).
std::int64_t t_eff(int r, int l);

/// Exact edge count of the (r, l, q) construction together with the closed
/// form (l/r^(3/2)) n^(3/2) - (l/r) n at n = rq^2, evaluated on the integer
/// side where it collapses to lq^3 - lq^2. The two always agree exactly.
struct ConstructionBound {
    std::int64_t edge_count = 0;
    std::int64_t closed_form = 0;
    double density_ratio = 0.0; // edge_count / n^(3/2)
    bool identity_holds = false;
};
ConstructionBound lb_construction(int r, int l, std::int64_t q);

/// Exact comparison of c1*sqrt(n1)/d1 with c2*sqrt(n2)/d2 (all positive):
/// -1, 0 or 1. Used for surd comparisons that must not go through doubles.
int compare_scaled_sqrt(std::int64_t c1, std::int64_t n1, std::int64_t d1,
                        std::int64_t c2, std::int64_t n2, std::int64_t d2);

/// Checks q = p^k for an odd prime p; returns (p, k) or (0, 0).
std::pair<std::int64_t, int> odd_prime_power(std::int64_t q);

struct BoundsEntry {
    std::string name;
    double value = 0.0;
    std::string kind;   // "upper" | "lower" | "reference"
    std::string source; // which formula or count the entry comes from
};

struct BoundsReport {
    std::vector<std::pair<std::string, std::int64_t>> inputs;
    std::vector<BoundsEntry> entries;
};

/// Known density coefficients reported for context only, never asserted:
/// the girth-five hypergraph constant 1/6, the graph girth-five window
/// [1/(2*sqrt(2)), 1/2], the K_{2,t+1}-free graph constant sqrt(t)/2 and the
/// triangle-and-K_{2,3}-free graph constant 1/sqrt(3).
std::vector<BoundsEntry> reference_constants(std::int64_t t = 1);

/// Bound table for explicit (r, t, n).
BoundsReport bounds_report_general(int r, std::int64_t t, std::int64_t n);

/// Bound table for a construction instance (r, l, q), combining the exact
/// count, the closed form and the applicable upper bounds at t_eff.
BoundsReport bounds_report_construction(int r, int l, std::int64_t q);

/// Renders a report as an aligned text table.
std::string render_table(const BoundsReport& report);

/// Renders a report as JSON.
std::string render_json(const BoundsReport& report);

} // namespace bergefree::bounds
