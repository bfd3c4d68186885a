#include "bergefree/bounds.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace bergefree::bounds {

namespace {

double n_to_three_halves(std::int64_t n) {
    return std::pow(static_cast<double>(n), 1.5);
}

std::string format_value(double v) {
    std::ostringstream out;
    out << std::setprecision(6) << v;
    return out.str();
}

} // namespace

double ub_general(int r, std::int64_t t, std::int64_t n) {
    if (r < 3) throw std::invalid_argument("ub_general requires r >= 3");
    if (t < 1) throw std::invalid_argument("ub_general requires t >= 1");
    if (n < 0) throw std::invalid_argument("ub_general requires n >= 0");
    return std::sqrt(static_cast<double>(t)) /
               (static_cast<double>(r) * (r - 1)) * n_to_three_halves(n) +
           static_cast<double>(n) / r;
}

double ub_rpartite(int r, std::int64_t n_per_part) {
    if (r < 3) throw std::invalid_argument("ub_rpartite requires r >= 3");
    if (n_per_part < 0) throw std::invalid_argument("ub_rpartite requires n >= 0");
    return std::sqrt(2.0 / (r - 1)) * n_to_three_halves(n_per_part) +
           static_cast<double>(n_per_part);
}

double ub_palmer(int r, std::int64_t t, std::int64_t n) {
    if (r < 3) throw std::invalid_argument("ub_palmer requires r >= 3");
    if (t < 1) throw std::invalid_argument("ub_palmer requires t >= 1");
    if (n < 0) throw std::invalid_argument("ub_palmer requires n >= 0");
    return std::sqrt(2.0 * (static_cast<double>(t) + 1)) / r * n_to_three_halves(n) +
           static_cast<double>(n) / r;
}

std::int64_t t_eff(int r, int l) {
    if (r < 3) throw std::invalid_argument("t_eff requires r >= 3");
    if (l < 1) throw std::invalid_argument("t_eff requires l >= 1");
    if (l == 1) return 2 * static_cast<std::int64_t>(r) - 4;
    return static_cast<std::int64_t>(r - 1) * (2 * static_cast<std::int64_t>(l) * l - l);
}

ConstructionBound lb_construction(int r, int l, std::int64_t q) {
    if (r < 2) throw std::invalid_argument("lb_construction requires r >= 2");
    if (l < 1) throw std::invalid_argument("lb_construction requires l >= 1");
    auto [p, k] = odd_prime_power(q);
    if (p == 0) throw std::invalid_argument("q must be an odd prime power");
    ConstructionBound out;
    out.edge_count = static_cast<std::int64_t>(l) * q * q * (q - 1);
    // (l/r^(3/2)) (rq^2)^(3/2) - (l/r)(rq^2) = l q^3 - l q^2, an integer.
    out.closed_form = static_cast<std::int64_t>(l) * q * q * q -
                      static_cast<std::int64_t>(l) * q * q;
    out.identity_holds = out.edge_count == out.closed_form;
    std::int64_t n = static_cast<std::int64_t>(r) * q * q;
    out.density_ratio = static_cast<double>(out.edge_count) / n_to_three_halves(n);
    return out;
}

int compare_scaled_sqrt(std::int64_t c1, std::int64_t n1, std::int64_t d1,
                        std::int64_t c2, std::int64_t n2, std::int64_t d2) {
    if (c1 <= 0 || n1 <= 0 || d1 <= 0 || c2 <= 0 || n2 <= 0 || d2 <= 0) {
        throw std::invalid_argument("compare_scaled_sqrt requires positive arguments");
    }
    // c1*sqrt(n1)/d1 <=> c2*sqrt(n2)/d2 squared: c1^2 n1 d2^2 <=> c2^2 n2 d1^2.
    __int128 lhs = static_cast<__int128>(c1) * c1 * n1 * d2 * d2;
    __int128 rhs = static_cast<__int128>(c2) * c2 * n2 * d1 * d1;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

std::pair<std::int64_t, int> odd_prime_power(std::int64_t q) {
    if (q < 3 || q % 2 == 0) return {0, 0};
    std::int64_t p = 0;
    for (std::int64_t d = 3; d * d <= q; d += 2) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return {q, 1}; // q itself is prime
    int k = 0;
    std::int64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) return {0, 0};
    return {p, k};
}

std::vector<BoundsEntry> reference_constants(std::int64_t t) {
    if (t < 1) throw std::invalid_argument("reference_constants requires t >= 1");
    return {
        {"girth5-hypergraph-density", 1.0 / 6.0, "reference",
         "coefficient of n^(3/2) for 3-uniform girth-5 hypergraphs"},
        {"girth5-graph-lower", 1.0 / (2.0 * std::sqrt(2.0)), "reference",
         "lower coefficient of n^(3/2) for graphs without C3, C4"},
        {"girth5-graph-upper", 0.5, "reference",
         "upper coefficient of n^(3/2) for graphs without C3, C4"},
        {"k2t-free-graph-density", 0.5 * std::sqrt(static_cast<double>(t)), "reference",
         "coefficient of n^(3/2) for K_{2,t+1}-free graphs"},
        {"c3-k23-free-graph-lower", 1.0 / std::sqrt(3.0), "reference",
         "lower coefficient of n^(3/2) for graphs without C3, K_{2,3}"},
    };
}

BoundsReport bounds_report_general(int r, std::int64_t t, std::int64_t n) {
    BoundsReport report;
    report.inputs = {{"r", r}, {"t", t}, {"n", n}};
    report.entries.push_back({"general-upper", ub_general(r, t, n), "upper",
                              "sqrt(t)/(r(r-1)) n^(3/2) + n/r for linear C3-free "
                              "K_{2,t+1}-free hypergraphs"});
    report.entries.push_back({"no-c3-upper", ub_palmer(r, t, n), "upper",
                              "sqrt(2(t+1))/r n^(3/2) + n/r for linear K_{2,t+1}-free "
                              "hypergraphs"});
    auto refs = reference_constants(t);
    report.entries.insert(report.entries.end(), refs.begin(), refs.end());
    return report;
}

BoundsReport bounds_report_construction(int r, int l, std::int64_t q) {
    if (r < 3) throw std::invalid_argument("bounds report requires r >= 3");
    auto bound = lb_construction(r, l, q);
    std::int64_t t = t_eff(r, l);
    std::int64_t n = static_cast<std::int64_t>(r) * q * q;

    BoundsReport report;
    report.inputs = {{"r", r}, {"l", l}, {"q", q}, {"n", n}, {"t", t}};
    report.entries.push_back({"construction-edges", static_cast<double>(bound.edge_count),
                              "lower", "exact count l q^2 (q-1)"});
    report.entries.push_back({"construction-closed-form",
                              static_cast<double>(bound.closed_form), "lower",
                              "(l/r^(3/2)) n^(3/2) - (l/r) n at n = r q^2"});
    report.entries.push_back({"general-upper", ub_general(r, t, n), "upper",
                              "sqrt(t)/(r(r-1)) n^(3/2) + n/r for linear C3-free "
                              "K_{2,t+1}-free hypergraphs"});
    report.entries.push_back({"no-c3-upper", ub_palmer(r, t, n), "upper",
                              "sqrt(2(t+1))/r n^(3/2) + n/r for linear K_{2,t+1}-free "
                              "hypergraphs"});
    if (l == 1) {
        report.entries.push_back({"rpartite-upper", ub_rpartite(r, q * q), "upper",
                                  "sqrt(2/(r-1)) n^(3/2) + n per-part bound without "
                                  "C2, C3, K_{2,3}"});
    }
    auto refs = reference_constants(t);
    report.entries.insert(report.entries.end(), refs.begin(), refs.end());
    return report;
}

std::string render_table(const BoundsReport& report) {
    std::size_t name_width = 4, kind_width = 4, value_width = 5;
    std::vector<std::string> values;
    for (const auto& e : report.entries) {
        values.push_back(format_value(e.value));
        name_width = std::max(name_width, e.name.size());
        kind_width = std::max(kind_width, e.kind.size());
        value_width = std::max(value_width, values.back().size());
    }
    std::ostringstream out;
    out << "inputs:";
    for (const auto& [key, value] : report.inputs) out << " " << key << "=" << value;
    out << "\n";
    out << std::left << std::setw(static_cast<int>(name_width)) << "name" << "  "
        << std::setw(static_cast<int>(kind_width)) << "kind" << "  "
        << std::setw(static_cast<int>(value_width)) << "value" << "  source\n";
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
        const auto& e = report.entries[i];
        out << std::left << std::setw(static_cast<int>(name_width)) << e.name << "  "
            << std::setw(static_cast<int>(kind_width)) << e.kind << "  "
            << std::setw(static_cast<int>(value_width)) << values[i] << "  " << e.source
            << "\n";
    }
    return out.str();
}

std::string render_json(const BoundsReport& report) {
    nlohmann::json j;
    j["inputs"] = nlohmann::json::object();
    for (const auto& [key, value] : report.inputs) j["inputs"][key] = value;
    j["entries"] = nlohmann::json::array();
    for (const auto& e : report.entries) {
        j["entries"].push_back(
            {{"name", e.name}, {"value", e.value}, {"kind", e.kind}, {"source", e.source}});
    }
    return j.dump(2) + "\n";
}

} // namespace bergefree::bounds
