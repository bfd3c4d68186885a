#include "bergefree/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bergefree {

Hypergraph::Hypergraph(int r, int n_vertices, std::vector<std::vector<int>> edges)
    : r_(r), n_(n_vertices), edges_(std::move(edges)) {
    if (r_ < 2) throw std::invalid_argument("uniformity must be >= 2");
    if (n_ < 0) throw std::invalid_argument("vertex count must be >= 0");
    for (auto& e : edges_) {
        if (static_cast<int>(e.size()) != r_) {
            throw std::invalid_argument("edge has wrong number of vertices");
        }
        std::sort(e.begin(), e.end());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n_) throw std::invalid_argument("vertex id out of range");
            if (i > 0 && e[i] == e[i - 1]) {
                throw std::invalid_argument("edge contains a repeated vertex");
            }
        }
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i] == edges_[i - 1]) throw std::invalid_argument("duplicate edge");
    }
    incidence_.assign(static_cast<std::size_t>(n_), {});
    for (std::size_t idx = 0; idx < edges_.size(); ++idx) {
        for (int v : edges_[idx]) {
            incidence_[static_cast<std::size_t>(v)].push_back(static_cast<int>(idx));
        }
    }
}

const std::vector<int>& Hypergraph::edges_at(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
    return incidence_[static_cast<std::size_t>(v)];
}

std::vector<int> Hypergraph::degree_sequence() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
    return d;
}

Hypergraph::LinearityCheck Hypergraph::linearity() const {
    // First edge seen per vertex pair; a second edge on the same pair is a
    // violation.
    std::map<std::pair<int, int>, int> first_edge;
    for (std::size_t idx = 0; idx < edges_.size(); ++idx) {
        const auto& e = edges_[idx];
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                auto key = std::make_pair(e[i], e[j]);
                auto [it, inserted] = first_edge.emplace(key, static_cast<int>(idx));
                if (!inserted) {
                    return LinearityCheck{false, it->second, static_cast<int>(idx)};
                }
            }
        }
    }
    return LinearityCheck{};
}

Hypergraph::CodegreeProfile Hypergraph::codegree_profile() const {
    if (!is_linear()) {
        throw std::invalid_argument("codegree profile requires a linear hypergraph");
    }
    std::map<std::pair<int, int>, std::int64_t> counts;
    for (int v = 0; v < n_; ++v) {
        const auto& inc = incidence_[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < inc.size(); ++i) {
            const auto& ei = edges_[static_cast<std::size_t>(inc[i])];
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                const auto& ej = edges_[static_cast<std::size_t>(inc[j])];
                for (int x : ei) {
                    if (x == v) continue;
                    for (int y : ej) {
                        if (y == v) continue;
                        auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
                        ++counts[key];
                    }
                }
            }
        }
    }
    CodegreeProfile profile;
    profile.counts.assign(counts.begin(), counts.end());
    for (const auto& [pair, c] : profile.counts) {
        profile.max_multiplicity = std::max(profile.max_multiplicity, c);
    }
    return profile;
}

PartitionedHypergraph::PartitionedHypergraph(Hypergraph base, std::vector<int> parts)
    : base_(std::move(base)), parts_(std::move(parts)) {
    int r = base_.uniformity();
    if (static_cast<int>(parts_.size()) != base_.vertex_count()) {
        throw std::invalid_argument("part assignment size mismatch");
    }
    for (int p : parts_) {
        if (p < 0 || p >= r) throw std::invalid_argument("part index out of range");
    }
    std::vector<char> seen(static_cast<std::size_t>(r), 0);
    for (const auto& e : base_.edges()) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int v : e) {
            int p = parts_[static_cast<std::size_t>(v)];
            if (seen[static_cast<std::size_t>(p)]) {
                throw std::invalid_argument("edge has two vertices in one part");
            }
            seen[static_cast<std::size_t>(p)] = 1;
        }
    }
}

std::vector<int> PartitionedHypergraph::part_vertices(int part) const {
    std::vector<int> out;
    for (int v = 0; v < base_.vertex_count(); ++v) {
        if (parts_[static_cast<std::size_t>(v)] == part) out.push_back(v);
    }
    return out;
}

std::string to_edge_list_text(const Hypergraph& h) {
    std::string out = std::to_string(h.uniformity()) + " " +
                      std::to_string(h.vertex_count()) + " " +
                      std::to_string(h.edge_count()) + "\n";
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i > 0) out.push_back(' ');
            out += std::to_string(e[i]);
        }
        out.push_back('\n');
    }
    return out;
}

Hypergraph parse_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    int r = 0, n = 0, m = 0;
    if (!(in >> r >> n >> m) || m < 0) {
        throw std::invalid_argument("malformed edge-list header");
    }
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        std::vector<int> e(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j) {
            if (!(in >> e[static_cast<std::size_t>(j)])) {
                throw std::invalid_argument("edge-list file truncated");
            }
        }
        edges.push_back(std::move(e));
    }
    int trailing = 0;
    if (in >> trailing) throw std::invalid_argument("trailing data in edge-list file");
    return Hypergraph(r, n, std::move(edges));
}

} // namespace bergefree
