#include "bergefree/search.hpp"

#include "bergefree/bounds.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace bergefree::search {

namespace {

using berge::BergePattern;
using Clock = std::chrono::steady_clock;

std::vector<std::vector<int>> general_candidates(int r, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(pick);
        int pos = r - 1;
        while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - r + pos) --pos;
        if (pos < 0) break;
        ++pick[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < r; ++i) {
            pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    return out;
}

std::vector<std::vector<int>> transversal_candidates(int r, int n_per_part) {
    std::vector<std::vector<int>> out;
    std::vector<int> offset(static_cast<std::size_t>(r), 0);
    while (true) {
        std::vector<int> edge(static_cast<std::size_t>(r));
        for (int p = 0; p < r; ++p) {
            edge[static_cast<std::size_t>(p)] =
                p * n_per_part + offset[static_cast<std::size_t>(p)];
        }
        out.push_back(std::move(edge));
        int pos = r - 1;
        while (pos >= 0 && offset[static_cast<std::size_t>(pos)] == n_per_part - 1) {
            offset[static_cast<std::size_t>(pos--)] = 0;
        }
        if (pos < 0) break;
        ++offset[static_cast<std::size_t>(pos)];
    }
    return out;
}

class Searcher {
public:
    Searcher(int r, int n_total, std::vector<std::vector<int>> candidates,
             const std::vector<BergePattern>& forbidden, SearchBudget budget)
        : r_(r),
          n_(n_total),
          candidates_(std::move(candidates)),
          budget_(budget),
          pair_edges_(static_cast<std::size_t>(n_total) * static_cast<std::size_t>(n_total)) {
        for (const auto& pattern : forbidden) {
            switch (pattern.kind()) {
                case BergePattern::Kind::c2: forbids_c2_ = true; break;
                case BergePattern::Kind::c3: forbids_c3_ = true; break;
                case BergePattern::Kind::k2t: k2t_ts_.push_back(pattern.t()); break;
                case BergePattern::Kind::generic:
                    generics_.push_back(pattern.graph());
                    break;
            }
        }
        std::sort(k2t_ts_.begin(), k2t_ts_.end());
        k2t_ts_.erase(std::unique(k2t_ts_.begin(), k2t_ts_.end()), k2t_ts_.end());
        // A valid upper bound caps the search whenever the bound's pattern
        // family is a subset of the forbidden one.
        if (forbids_c2_ && forbids_c3_ && !k2t_ts_.empty() && r_ >= 3 && k2t_ts_[0] >= 2) {
            cap_ = static_cast<int>(
                std::floor(bounds::ub_general(r_, k2t_ts_[0] - 1, n_total)));
        }
    }

    void run() {
        start_ = Clock::now();
        if (!candidates_.empty() && admissible(candidates_[0])) {
            add_edge(0);
            dfs(1);
            remove_edge(0);
        } else {
            ++nodes_;
        }
    }

    int best() const { return best_; }
    const std::vector<std::vector<int>>& best_edges() const { return best_edges_; }
    std::uint64_t nodes() const { return nodes_; }
    bool complete() const { return !budget_hit_; }
    double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

private:
    // Pairs are keyed x * n + y with x < y.
    std::vector<int>& pair_list(int x, int y) {
        if (x > y) std::swap(x, y);
        return pair_edges_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
                           static_cast<std::size_t>(y)];
    }

    void add_edge(std::size_t cand_idx) {
        const auto& e = candidates_[cand_idx];
        int idx = static_cast<int>(chosen_.size());
        chosen_.push_back(e);
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                pair_list(e[i], e[j]).push_back(idx);
            }
        }
    }

    void remove_edge(std::size_t cand_idx) {
        const auto& e = candidates_[cand_idx];
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                pair_list(e[i], e[j]).pop_back();
            }
        }
        chosen_.pop_back();
    }

    bool creates_c2(const std::vector<int>& e) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                if (!pair_list(e[i], e[j]).empty()) return true;
            }
        }
        return false;
    }

    bool creates_c3(const std::vector<int>& e) {
        // The new edge covers one triangle side; the other two sides need
        // distinct existing edges.
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                int x = e[i], y = e[j];
                for (int z = 0; z < n_; ++z) {
                    if (z == x || z == y) continue;
                    const auto& l1 = pair_list(y, z);
                    if (l1.empty()) continue;
                    const auto& l2 = pair_list(x, z);
                    if (l2.empty()) continue;
                    if (l1.size() == 1 && l2.size() == 1 && l1[0] == l2[0]) continue;
                    return true;
                }
            }
        }
        return false;
    }

    bool creates_k2t_or_generic(const std::vector<int>& e) {
        std::vector<std::vector<int>> edges = chosen_;
        edges.push_back(e);
        Hypergraph h(r_, n_, std::move(edges));
        if (!k2t_ts_.empty()) {
            berge::internal::PairCoverage cover(h);
            for (int t : k2t_ts_) {
                // Any new witness has a center inside the new edge.
                for (int a : e) {
                    for (int b = 0; b < n_; ++b) {
                        if (b == a) continue;
                        int lo = std::min(a, b), hi = std::max(a, b);
                        if (berge::internal::k2t_pair_witness(h, cover, lo, hi, t)) {
                            return true;
                        }
                    }
                }
            }
        }
        for (const auto& g : generics_) {
            if (berge::detect_generic(h, g).found) return true;
        }
        return false;
    }

    bool admissible(const std::vector<int>& e) {
        if (forbids_c2_ && creates_c2(e)) return false;
        if (forbids_c3_ && creates_c3(e)) return false;
        if ((!k2t_ts_.empty() || !generics_.empty()) && creates_k2t_or_generic(e)) {
            return false;
        }
        return true;
    }

    bool out_of_budget() {
        if (budget_hit_) return true;
        if (nodes_ > budget_.max_nodes) {
            budget_hit_ = true;
            return true;
        }
        if ((nodes_ & 1023) == 0 &&
            std::chrono::duration<double>(Clock::now() - start_).count() >
                budget_.max_seconds) {
            budget_hit_ = true;
            return true;
        }
        return false;
    }

    void dfs(std::size_t start) {
        ++nodes_;
        if (out_of_budget()) return;
        int current = static_cast<int>(chosen_.size());
        if (current > best_) {
            best_ = current;
            best_edges_ = chosen_;
        }
        if (cap_ >= 0 && best_ >= cap_) return;
        if (forbids_c2_) {
            // Linear hypergraphs consume C(r,2) vertex pairs per edge.
            std::int64_t pairs_per_edge = static_cast<std::int64_t>(r_) * (r_ - 1) / 2;
            std::int64_t free_pairs = static_cast<std::int64_t>(n_) * (n_ - 1) / 2 -
                                      current * pairs_per_edge;
            if (current + free_pairs / pairs_per_edge <= best_) return;
        }
        for (std::size_t i = start; i < candidates_.size(); ++i) {
            if (current + static_cast<int>(candidates_.size() - i) <= best_) break;
            if (!admissible(candidates_[i])) continue;
            add_edge(i);
            dfs(i + 1);
            remove_edge(i);
            if (budget_hit_ || (cap_ >= 0 && best_ >= cap_)) return;
        }
    }

    int r_, n_;
    std::vector<std::vector<int>> candidates_;
    SearchBudget budget_;
    bool forbids_c2_ = false;
    bool forbids_c3_ = false;
    std::vector<int> k2t_ts_;
    std::vector<berge::Multigraph> generics_;
    int cap_ = -1;

    std::vector<std::vector<int>> chosen_;
    std::vector<std::vector<int>> pair_edges_;
    int best_ = 0;
    std::vector<std::vector<int>> best_edges_;
    std::uint64_t nodes_ = 0;
    bool budget_hit_ = false;
    Clock::time_point start_;
};

SearchResult run_search(int r, int n, int n_total,
                        std::vector<std::vector<int>> candidates,
                        std::vector<BergePattern> forbidden, SearchBudget budget,
                        std::string mode) {
    if (forbidden.empty()) throw std::invalid_argument("forbidden family must be nonempty");
    Searcher searcher(r, n_total, std::move(candidates), forbidden, budget);
    searcher.run();
    SearchResult result{r,
                        n,
                        std::move(forbidden),
                        std::move(mode),
                        searcher.best(),
                        Hypergraph(r, n_total, searcher.best_edges()),
                        searcher.nodes(),
                        searcher.elapsed(),
                        searcher.complete()};
    return result;
}

} // namespace

SearchResult extremal(int r, int n, std::vector<BergePattern> forbidden,
                      SearchBudget budget) {
    if (r < 2) throw std::invalid_argument("uniformity must be >= 2");
    if (n < r) throw std::invalid_argument("need at least r vertices");
    return run_search(r, n, n, general_candidates(r, n), std::move(forbidden), budget,
                      "general");
}

SearchResult extremal_rpartite(int r, int n_per_part,
                               std::vector<BergePattern> forbidden, SearchBudget budget) {
    if (r < 2) throw std::invalid_argument("uniformity must be >= 2");
    if (n_per_part < 1) throw std::invalid_argument("need at least one vertex per part");
    return run_search(r, n_per_part, r * n_per_part,
                      transversal_candidates(r, n_per_part), std::move(forbidden), budget,
                      "rpartite");
}

int naive_extremal(int r, int n, const std::vector<BergePattern>& forbidden) {
    if (r < 2) throw std::invalid_argument("uniformity must be >= 2");
    if (n < r) throw std::invalid_argument("need at least r vertices");
    if (forbidden.empty()) throw std::invalid_argument("forbidden family must be nonempty");
    auto candidates = general_candidates(r, n);
    if (candidates.size() > 20) {
        throw std::invalid_argument("naive oracle capped at C(n,r) <= 20");
    }
    int best = 0;
    std::uint32_t full = static_cast<std::uint32_t>(1u << candidates.size());
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        int count = std::popcount(mask);
        if (count <= best) continue;
        std::vector<std::vector<int>> edges;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (mask & (1u << i)) edges.push_back(candidates[i]);
        }
        Hypergraph h(r, n, std::move(edges));
        bool free = true;
        for (const auto& pattern : forbidden) {
            if (berge::detect_generic(h, pattern.graph()).found) {
                free = false;
                break;
            }
        }
        if (free) best = count;
    }
    return best;
}

std::string result_to_json(const SearchResult& result) {
    nlohmann::json j;
    j["r"] = result.r;
    j["n"] = result.n;
    j["mode"] = result.mode;
    j["forbidden"] = nlohmann::json::array();
    for (const auto& pattern : result.forbidden) j["forbidden"].push_back(pattern.name());
    j["value"] = result.value;
    j["complete"] = result.complete;
    j["nodes_explored"] = result.nodes_explored;
    j["witness"] = to_edge_list_text(result.witness);
    return j.dump(2) + "\n";
}

} // namespace bergefree::search
