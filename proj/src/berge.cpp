#include "bergefree/berge.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace bergefree::berge {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::vector<int>> partner_lists(const Hypergraph& h) {
    std::vector<std::vector<int>> partners(static_cast<std::size_t>(h.vertex_count()));
    for (int v = 0; v < h.vertex_count(); ++v) {
        auto& out = partners[static_cast<std::size_t>(v)];
        for (int e : h.edges_at(v)) {
            for (int u : h.edge(e)) {
                if (u != v) out.push_back(u);
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return partners;
}

} // namespace

// ---------------------------------------------------------------------------
// Multigraph / BergePattern
// ---------------------------------------------------------------------------

Multigraph::Multigraph(int n, std::vector<std::pair<int, int>> e)
    : n_vertices(n), edges(std::move(e)) {
    if (n_vertices < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("pattern loops are not supported");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n_vertices) throw std::invalid_argument("pattern vertex out of range");
    }
}

BergePattern BergePattern::c2() {
    return BergePattern(Kind::c2, 0, Multigraph(2, {{0, 1}, {0, 1}}));
}

BergePattern BergePattern::c3() {
    return BergePattern(Kind::c3, 0, Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}));
}

BergePattern BergePattern::k2t(int t) {
    if (t < 1) throw std::invalid_argument("k2t requires t >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(2 * t));
    for (int i = 0; i < t; ++i) {
        edges.emplace_back(0, 2 + i);
        edges.emplace_back(1, 2 + i);
    }
    return BergePattern(Kind::k2t, t, Multigraph(t + 2, std::move(edges)));
}

BergePattern BergePattern::generic(Multigraph g) {
    if (g.edges.empty()) throw std::invalid_argument("pattern must have at least one edge");
    return BergePattern(Kind::generic, 0, std::move(g));
}

BergePattern BergePattern::parse(std::string_view spec) {
    if (spec == "c2") return c2();
    if (spec == "c3") return c3();
    if (spec.rfind("k2t:", 0) == 0) {
        std::string_view num = spec.substr(4);
        int t = 0;
        auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), t);
        if (ec != std::errc{} || p != num.data() + num.size()) {
            throw std::invalid_argument("malformed pattern spec: " + std::string(spec));
        }
        return k2t(t);
    }
    throw std::invalid_argument("unknown pattern spec: " + std::string(spec));
}

std::string BergePattern::name() const {
    switch (kind_) {
        case Kind::c2: return "c2";
        case Kind::c3: return "c3";
        case Kind::k2t: return "k2t:" + std::to_string(t_);
        case Kind::generic: return "generic";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Witness
// ---------------------------------------------------------------------------

bool Witness::validates(const Hypergraph& h, const BergePattern& pattern) const {
    const Multigraph& g = pattern.graph();
    if (static_cast<int>(core_vertices.size()) != g.n_vertices) return false;
    if (edge_assignment.size() != g.edges.size()) return false;

    std::vector<int> pdeg(static_cast<std::size_t>(g.n_vertices), 0);
    for (const auto& [u, v] : g.edges) {
        ++pdeg[static_cast<std::size_t>(u)];
        ++pdeg[static_cast<std::size_t>(v)];
    }
    std::vector<int> mapped;
    for (int pv = 0; pv < g.n_vertices; ++pv) {
        int image = core_vertices[static_cast<std::size_t>(pv)];
        if (pdeg[static_cast<std::size_t>(pv)] == 0) continue;
        if (image < 0 || image >= h.vertex_count()) return false;
        mapped.push_back(image);
    }
    std::sort(mapped.begin(), mapped.end());
    if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end()) return false;

    std::vector<char> edge_seen(static_cast<std::size_t>(g.edges.size()), 0);
    std::vector<int> hyperedges;
    for (const auto& [pe, he] : edge_assignment) {
        if (pe < 0 || pe >= static_cast<int>(g.edges.size())) return false;
        if (edge_seen[static_cast<std::size_t>(pe)]) return false;
        edge_seen[static_cast<std::size_t>(pe)] = 1;
        if (he < 0 || he >= h.edge_count()) return false;
        hyperedges.push_back(he);
        const auto& edge = h.edge(he);
        int iu = core_vertices[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(pe)].first)];
        int iv = core_vertices[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(pe)].second)];
        if (!std::binary_search(edge.begin(), edge.end(), iu)) return false;
        if (!std::binary_search(edge.begin(), edge.end(), iv)) return false;
    }
    std::sort(hyperedges.begin(), hyperedges.end());
    if (std::adjacent_find(hyperedges.begin(), hyperedges.end()) != hyperedges.end()) {
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// PairCoverage
// ---------------------------------------------------------------------------

namespace internal {

PairCoverage::PairCoverage(const Hypergraph& h) {
    std::vector<std::pair<std::pair<int, int>, int>> flat;
    for (int idx = 0; idx < h.edge_count(); ++idx) {
        const auto& e = h.edge(idx);
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                flat.push_back({{e[i], e[j]}, idx});
            }
        }
    }
    std::sort(flat.begin(), flat.end());
    for (const auto& [pair, idx] : flat) {
        if (entries_.empty() || entries_.back().first != pair) {
            entries_.push_back({pair, {}});
        }
        entries_.back().second.push_back(idx);
    }
}

const std::vector<int>* PairCoverage::edges_for(int x, int y) const {
    if (x > y) std::swap(x, y);
    auto key = std::make_pair(x, y);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                               [](const auto& entry, const auto& k) {
                                   return entry.first < k;
                               });
    if (it == entries_.end() || it->first != key) return nullptr;
    return &it->second;
}

// Backtracking over candidate leaves in ascending order, assigning a
// distinct (e, f) hyperedge pair per chosen leaf.
std::optional<Witness> k2t_pair_witness(const Hypergraph& h, const PairCoverage& cover,
                                        int a, int b, int t) {
    struct Candidate {
        int w;
        const std::vector<int>* at_a;
        const std::vector<int>* at_b;
    };
    std::vector<Candidate> cands;
    std::vector<int> around_a;
    for (int e : h.edges_at(a)) {
        for (int u : h.edge(e)) {
            if (u != a) around_a.push_back(u);
        }
    }
    std::sort(around_a.begin(), around_a.end());
    around_a.erase(std::unique(around_a.begin(), around_a.end()), around_a.end());
    for (int w : around_a) {
        if (w == b) continue;
        const auto* at_a = cover.edges_for(a, w);
        const auto* at_b = cover.edges_for(b, w);
        if (at_a == nullptr || at_b == nullptr) continue;
        if (at_a->size() == 1 && at_b->size() == 1 && (*at_a)[0] == (*at_b)[0]) continue;
        cands.push_back({w, at_a, at_b});
    }
    if (static_cast<int>(cands.size()) < t) return std::nullopt;

    std::vector<char> used(static_cast<std::size_t>(h.edge_count()), 0);
    std::vector<int> leaves, edges_a, edges_b;

    auto dfs = [&](auto&& self, std::size_t idx, int chosen) -> bool {
        if (chosen == t) return true;
        if (idx >= cands.size()) return false;
        if (chosen + static_cast<int>(cands.size() - idx) < t) return false;
        const Candidate& c = cands[idx];
        for (int e : *c.at_a) {
            if (used[static_cast<std::size_t>(e)]) continue;
            used[static_cast<std::size_t>(e)] = 1;
            for (int f : *c.at_b) {
                if (f == e || used[static_cast<std::size_t>(f)]) continue;
                used[static_cast<std::size_t>(f)] = 1;
                leaves.push_back(c.w);
                edges_a.push_back(e);
                edges_b.push_back(f);
                if (self(self, idx + 1, chosen + 1)) return true;
                leaves.pop_back();
                edges_a.pop_back();
                edges_b.pop_back();
                used[static_cast<std::size_t>(f)] = 0;
            }
            used[static_cast<std::size_t>(e)] = 0;
        }
        return self(self, idx + 1, chosen);
    };
    if (!dfs(dfs, 0, 0)) return std::nullopt;

    Witness w;
    w.core_vertices = {a, b};
    w.core_vertices.insert(w.core_vertices.end(), leaves.begin(), leaves.end());
    for (int i = 0; i < t; ++i) {
        w.edge_assignment.emplace_back(2 * i, edges_a[static_cast<std::size_t>(i)]);
        w.edge_assignment.emplace_back(2 * i + 1, edges_b[static_cast<std::size_t>(i)]);
    }
    return w;
}

} // namespace internal

// ---------------------------------------------------------------------------
// detect_c2
// ---------------------------------------------------------------------------

VerificationReport detect_c2(const Hypergraph& h) {
    auto start = Clock::now();
    VerificationReport report{BergePattern::c2(), false, std::nullopt, {}};

    std::vector<std::pair<std::pair<int, int>, int>> seen;
    seen.reserve(static_cast<std::size_t>(h.edge_count()) * 3);
    for (int idx = 0; idx < h.edge_count(); ++idx) {
        const auto& e = h.edge(idx);
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                seen.push_back({{e[i], e[j]}, idx});
            }
        }
    }
    std::sort(seen.begin(), seen.end());
    report.stats.pairs_checked = seen.size();
    for (std::size_t i = 0; i + 1 < seen.size(); ++i) {
        if (seen[i].first == seen[i + 1].first) {
            Witness w;
            w.core_vertices = {seen[i].first.first, seen[i].first.second};
            w.edge_assignment = {{0, seen[i].second}, {1, seen[i + 1].second}};
            report.found = true;
            report.witness = w;
            report.stats.max_codegree = 2;
            break;
        }
    }
    if (!report.found) report.stats.max_codegree = seen.empty() ? 0 : 1;
    report.stats.elapsed_seconds = seconds_since(start);
    return report;
}

// ---------------------------------------------------------------------------
// detect_c3
// ---------------------------------------------------------------------------

VerificationReport detect_c3(const Hypergraph& h) {
    auto start = Clock::now();
    VerificationReport report{BergePattern::c3(), false, std::nullopt, {}};
    if (h.edge_count() < 3) {
        report.stats.elapsed_seconds = seconds_since(start);
        return report;
    }

    internal::PairCoverage cover(h);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(h.vertex_count()));
    for (const auto& [pair, edges] : cover.entries()) {
        adj[static_cast<std::size_t>(pair.first)].push_back(pair.second);
        adj[static_cast<std::size_t>(pair.second)].push_back(pair.first);
        report.stats.max_codegree =
            std::max(report.stats.max_codegree, static_cast<int>(edges.size()));
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    for (int x = 0; x < h.vertex_count() && !report.found; ++x) {
        for (int y : adj[static_cast<std::size_t>(x)]) {
            if (y <= x) continue;
            // z ranges over common shadow neighbours of x and y above y.
            const auto& ax = adj[static_cast<std::size_t>(x)];
            const auto& ay = adj[static_cast<std::size_t>(y)];
            std::size_t ix = 0, iy = 0;
            while (ix < ax.size() && iy < ay.size()) {
                if (ax[ix] < ay[iy]) { ++ix; continue; }
                if (ay[iy] < ax[ix]) { ++iy; continue; }
                int z = ax[ix];
                ++ix; ++iy;
                if (z <= y) continue;
                ++report.stats.pairs_checked;
                const auto* exy = cover.edges_for(x, y);
                const auto* eyz = cover.edges_for(y, z);
                const auto* exz = cover.edges_for(x, z);
                for (int e1 : *exy) {
                    for (int e2 : *eyz) {
                        if (e2 == e1) continue;
                        for (int e3 : *exz) {
                            if (e3 == e1 || e3 == e2) continue;
                            Witness w;
                            w.core_vertices = {x, y, z};
                            w.edge_assignment = {{0, e1}, {1, e2}, {2, e3}};
                            report.found = true;
                            report.witness = w;
                            break;
                        }
                        if (report.found) break;
                    }
                    if (report.found) break;
                }
                if (report.found) break;
            }
            if (report.found) break;
        }
    }
    report.stats.elapsed_seconds = seconds_since(start);
    return report;
}

// ---------------------------------------------------------------------------
// detect_k2t
// ---------------------------------------------------------------------------

VerificationReport detect_k2t(const Hypergraph& h, int t, int threads) {
    if (t < 1) throw std::invalid_argument("detect_k2t requires t >= 1");
    auto start = Clock::now();
    VerificationReport report{BergePattern::k2t(t), false, std::nullopt, {}};
    if (h.edge_count() < 2 * t) {
        report.stats.elapsed_seconds = seconds_since(start);
        return report;
    }

    internal::PairCoverage cover(h);
    auto partners = partner_lists(h);
    int n = h.vertex_count();

    struct ChunkResult {
        std::vector<std::pair<int, int>> qualifying;
        std::uint64_t pairs_checked = 0;
        int max_candidates = 0;
    };

    auto scan_range = [&](int lo, int hi, ChunkResult& out) {
        std::vector<int> count(static_cast<std::size_t>(n), 0);
        std::vector<int> touched;
        for (int a = lo; a < hi; ++a) {
            touched.clear();
            for (int w : partners[static_cast<std::size_t>(a)]) {
                const auto* at_a = cover.edges_for(a, w);
                for (int b : partners[static_cast<std::size_t>(w)]) {
                    if (b <= a) continue;
                    const auto* at_b = cover.edges_for(b, w);
                    if (at_a->size() == 1 && at_b->size() == 1 && (*at_a)[0] == (*at_b)[0]) {
                        continue; // only one shared hyperedge: leaf unusable
                    }
                    if (count[static_cast<std::size_t>(b)]++ == 0) touched.push_back(b);
                }
            }
            std::sort(touched.begin(), touched.end());
            for (int b : touched) {
                ++out.pairs_checked;
                out.max_candidates =
                    std::max(out.max_candidates, count[static_cast<std::size_t>(b)]);
                if (count[static_cast<std::size_t>(b)] >= t) {
                    out.qualifying.emplace_back(a, b);
                }
                count[static_cast<std::size_t>(b)] = 0;
            }
        }
    };

    int workers = std::max(1, threads);
    std::vector<ChunkResult> results(static_cast<std::size_t>(workers));
    if (workers == 1 || n < 2 * workers) {
        scan_range(0, n, results[0]);
    } else {
        std::vector<std::thread> pool;
        int chunk = (n + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            int lo = w * chunk;
            int hi = std::min(n, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(scan_range, lo, hi, std::ref(results[static_cast<std::size_t>(w)]));
        }
        for (auto& th : pool) th.join();
    }

    std::vector<std::pair<int, int>> qualifying;
    for (const auto& res : results) {
        report.stats.pairs_checked += res.pairs_checked;
        report.stats.max_codegree = std::max(report.stats.max_codegree, res.max_candidates);
        qualifying.insert(qualifying.end(), res.qualifying.begin(), res.qualifying.end());
    }
    // Chunks cover ascending ranges of a, so the concatenation is already in
    // canonical (a, b) order; the first witness is schedule independent.
    for (const auto& [a, b] : qualifying) {
        if (auto w = internal::k2t_pair_witness(h, cover, a, b, t)) {
            report.found = true;
            report.witness = std::move(w);
            break;
        }
    }
    report.stats.elapsed_seconds = seconds_since(start);
    return report;
}

// ---------------------------------------------------------------------------
// detect_generic
// ---------------------------------------------------------------------------

VerificationReport detect_generic(const Hypergraph& h, const Multigraph& g) {
    if (g.edges.empty()) throw std::invalid_argument("pattern must have at least one edge");
    auto start = Clock::now();
    VerificationReport report{BergePattern::generic(g), false, std::nullopt, {}};

    std::vector<int> pdeg(static_cast<std::size_t>(g.n_vertices), 0);
    std::vector<std::vector<std::pair<int, int>>> incident(
        static_cast<std::size_t>(g.n_vertices)); // (pattern edge idx, other endpoint)
    for (std::size_t idx = 0; idx < g.edges.size(); ++idx) {
        auto [u, v] = g.edges[idx];
        ++pdeg[static_cast<std::size_t>(u)];
        ++pdeg[static_cast<std::size_t>(v)];
        incident[static_cast<std::size_t>(u)].push_back({static_cast<int>(idx), v});
        incident[static_cast<std::size_t>(v)].push_back({static_cast<int>(idx), u});
    }

    std::vector<int> order;
    for (int pv = 0; pv < g.n_vertices; ++pv) {
        if (pdeg[static_cast<std::size_t>(pv)] > 0) order.push_back(pv);
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (pdeg[static_cast<std::size_t>(a)] != pdeg[static_cast<std::size_t>(b)]) {
            return pdeg[static_cast<std::size_t>(a)] > pdeg[static_cast<std::size_t>(b)];
        }
        return a < b;
    });

    if (static_cast<int>(order.size()) > h.vertex_count() ||
        static_cast<int>(g.edges.size()) > h.edge_count()) {
        report.stats.elapsed_seconds = seconds_since(start);
        return report;
    }

    internal::PairCoverage cover(h);
    std::vector<int> image(static_cast<std::size_t>(g.n_vertices), -1);
    std::vector<char> used(static_cast<std::size_t>(h.vertex_count()), 0);

    auto try_match = [&]() -> std::optional<std::vector<int>> {
        // Assign a distinct hyperedge per pattern edge by augmenting paths.
        std::vector<const std::vector<int>*> eligible(g.edges.size());
        for (std::size_t idx = 0; idx < g.edges.size(); ++idx) {
            auto [u, v] = g.edges[idx];
            eligible[idx] = cover.edges_for(image[static_cast<std::size_t>(u)],
                                            image[static_cast<std::size_t>(v)]);
            if (eligible[idx] == nullptr) return std::nullopt;
        }
        std::vector<int> match_edge(g.edges.size(), -1);       // pattern edge -> hyperedge
        std::vector<int> owner(static_cast<std::size_t>(h.edge_count()), -1);
        std::vector<char> visited(static_cast<std::size_t>(h.edge_count()), 0);
        auto augment = [&](auto&& self, int pe) -> bool {
            for (int he : *eligible[static_cast<std::size_t>(pe)]) {
                if (visited[static_cast<std::size_t>(he)]) continue;
                visited[static_cast<std::size_t>(he)] = 1;
                if (owner[static_cast<std::size_t>(he)] < 0 ||
                    self(self, owner[static_cast<std::size_t>(he)])) {
                    owner[static_cast<std::size_t>(he)] = pe;
                    match_edge[static_cast<std::size_t>(pe)] = he;
                    return true;
                }
            }
            return false;
        };
        for (std::size_t pe = 0; pe < g.edges.size(); ++pe) {
            std::fill(visited.begin(), visited.end(), 0);
            if (!augment(augment, static_cast<int>(pe))) return std::nullopt;
        }
        return match_edge;
    };

    auto place = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == order.size()) {
            ++report.stats.pairs_checked;
            if (auto match = try_match()) {
                Witness w;
                w.core_vertices = image;
                for (std::size_t pe = 0; pe < match->size(); ++pe) {
                    w.edge_assignment.emplace_back(static_cast<int>(pe),
                                                   (*match)[pe]);
                }
                report.found = true;
                report.witness = std::move(w);
                return true;
            }
            return false;
        }
        int pv = order[depth];
        for (int cand = 0; cand < h.vertex_count(); ++cand) {
            if (used[static_cast<std::size_t>(cand)]) continue;
            if (h.degree(cand) < pdeg[static_cast<std::size_t>(pv)]) continue;
            bool feasible = true;
            for (const auto& [pe, other] : incident[static_cast<std::size_t>(pv)]) {
                int other_image = image[static_cast<std::size_t>(other)];
                if (other_image < 0) continue;
                if (cover.edges_for(cand, other_image) == nullptr) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) continue;
            image[static_cast<std::size_t>(pv)] = cand;
            used[static_cast<std::size_t>(cand)] = 1;
            if (self(self, depth + 1)) return true;
            image[static_cast<std::size_t>(pv)] = -1;
            used[static_cast<std::size_t>(cand)] = 0;
        }
        return false;
    };
    place(place, 0);
    report.stats.elapsed_seconds = seconds_since(start);
    return report;
}

VerificationReport detect(const Hypergraph& h, const BergePattern& pattern, int threads) {
    switch (pattern.kind()) {
        case BergePattern::Kind::c2: return detect_c2(h);
        case BergePattern::Kind::c3: return detect_c3(h);
        case BergePattern::Kind::k2t: return detect_k2t(h, pattern.t(), threads);
        case BergePattern::Kind::generic: return detect_generic(h, pattern.graph());
    }
    throw std::logic_error("unknown pattern kind");
}

} // namespace bergefree::berge
