#include "bergefree/cli.hpp"

#include "bergefree/berge.hpp"
#include "bergefree/bounds.hpp"
#include "bergefree/construction.hpp"
#include "bergefree/gf.hpp"
#include "bergefree/hypergraph.hpp"
#include "bergefree/search.hpp"

#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bergefree::cli {

namespace {

nlohmann::json witness_json(const berge::VerificationReport& report) {
    if (!report.found) return nullptr;
    nlohmann::json w;
    w["core_vertices"] = report.witness->core_vertices;
    w["edge_assignment"] = nlohmann::json::array();
    for (const auto& [pe, he] : report.witness->edge_assignment) {
        w["edge_assignment"].push_back({pe, he});
    }
    return w;
}

std::string certificate_json(const berge::VerificationReport& report) {
    nlohmann::json j;
    j["pattern"] = report.pattern.name();
    j["found"] = report.found;
    j["witness"] = witness_json(report);
    // elapsed time is intentionally not serialized: certificate files must be
    // byte-identical across runs.
    j["stats"] = {{"pairs_checked", report.stats.pairs_checked},
                  {"max_codegree", report.stats.max_codegree}};
    return j.dump(2) + "\n";
}

berge::Multigraph parse_pattern_file(const std::string& path) {
    nlohmann::json j = nlohmann::json::parse(read_file(path));
    int n = j.at("n_vertices").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw std::invalid_argument("pattern edges must be vertex pairs");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return berge::Multigraph(n, std::move(edges));
}

} // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing file: " + path);
}

int run_construct(const ConstructOptions& options, std::ostream& out, std::ostream& err) {
    try {
        if (options.out.empty()) throw std::invalid_argument("missing output path");
        auto field = gf::make_field(options.field);

        construction::ConstructionParams params;
        params.r = options.r;
        params.l = options.l;
        params.field = field;
        if (!options.alphas.empty()) {
            for (const auto& text : options.alphas) params.alphas.push_back(field->parse(text));
            if (static_cast<int>(params.alphas.size()) != options.r) {
                throw std::invalid_argument("expected r anchor elements");
            }
        }
        if (!options.ms.empty()) {
            for (const auto& text : options.ms) params.ms.push_back(field->parse(text));
            if (static_cast<int>(params.ms.size()) != options.l) {
                throw std::invalid_argument("expected l multipliers");
            }
        }

        if (params.alphas.empty() && params.ms.empty()) {
            auto selection = construction::select_parameters(options.r, options.l, field);
            if (!selection.params) {
                err << "no admissible multiplier m_" << selection.blocked_index
                    << " in GF(" << field->q() << "); try a larger field\n";
                return 1;
            }
            params = std::move(*selection.params);
        } else {
            if (params.alphas.empty()) {
                for (int i = 0; i < options.r; ++i) params.alphas.push_back(field->element(i));
            }
            if (params.ms.empty()) {
                auto ms = construction::greedy_multipliers(field, params.alphas, options.l);
                if (!ms.ms) {
                    err << "no admissible multiplier m_" << ms.blocked_index << " in GF("
                        << field->q() << "); try a larger field\n";
                    return 1;
                }
                params.ms = std::move(*ms.ms);
            }
            if (auto violation = construction::check_condition(params)) {
                err << "separation condition fails at (s=" << violation->s
                    << ", t=" << violation->t << ", i=" << violation->i
                    << ", j=" << violation->j << ", k=" << violation->k
                    << "): " << violation->lhs.str() << " = " << violation->rhs.str()
                    << "\n";
                return 1;
            }
        }

        auto built = construction::build_hypergraph(params, options.threads);
        const Hypergraph& h = built.hyp.base();

        write_file(options.out, to_edge_list_text(h));
        std::string labels_path =
            options.labels_out.empty() ? options.out + ".labels.json" : options.labels_out;
        std::string params_path =
            options.params_out.empty() ? options.out + ".params.json" : options.params_out;
        write_file(labels_path, construction::labels_to_json(built));
        write_file(params_path, construction::params_to_json(built.params));

        std::int64_t q = field->q();
        out << "vertices " << h.vertex_count() << " edges " << h.edge_count()
            << " degree " << params.l * (q - 1);
        if (built.triangle_found.has_value()) {
            out << " berge-triangle " << (*built.triangle_found ? "found" : "none");
        }
        out << "\n";
        return 0;
    } catch (const std::exception& ex) {
        err << "construct: " << ex.what() << "\n";
        return 1;
    }
}

int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
    try {
        Hypergraph h = parse_edge_list_text(read_file(options.input));

        berge::VerificationReport report = [&] {
            if (options.pattern.rfind("generic:", 0) == 0) {
                auto g = parse_pattern_file(options.pattern.substr(8));
                return berge::detect_generic(h, g);
            }
            auto pattern = berge::BergePattern::parse(options.pattern);
            return berge::detect(h, pattern, options.threads);
        }();

        std::string cert = certificate_json(report);
        out << cert;
        if (!options.cert_out.empty()) write_file(options.cert_out, cert);
        return report.found ? 2 : 0;
    } catch (const std::exception& ex) {
        err << "verify: " << ex.what() << "\n";
        return 1;
    }
}

int run_bounds(const BoundsOptions& options, std::ostream& out, std::ostream& err) {
    try {
        bounds::BoundsReport report;
        bool construction_form = options.l >= 1 || !options.field.empty();
        if (construction_form) {
            if (options.l < 1 || options.field.empty()) {
                throw std::invalid_argument("construction form needs both --l and --q");
            }
            auto field = gf::make_field(options.field);
            report = bounds::bounds_report_construction(options.r, options.l, field->q());
        } else {
            if (options.t < 1 || options.n < 0) {
                throw std::invalid_argument("general form needs --r, --t and --n");
            }
            report = bounds::bounds_report_general(options.r, options.t, options.n);
        }
        out << (options.json ? bounds::render_json(report) : bounds::render_table(report));
        return 0;
    } catch (const std::exception& ex) {
        err << "bounds: " << ex.what() << "\n";
        return 1;
    }
}

int run_extremal(const ExtremalOptions& options, std::ostream& out, std::ostream& err) {
    try {
        if (options.forbid.empty()) throw std::invalid_argument("missing --forbid list");
        std::vector<berge::BergePattern> forbidden;
        std::size_t pos = 0;
        while (pos <= options.forbid.size()) {
            std::size_t comma = options.forbid.find(',', pos);
            std::string piece = options.forbid.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (piece.empty()) throw std::invalid_argument("empty pattern in --forbid");
            forbidden.push_back(berge::BergePattern::parse(piece));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }

        search::SearchBudget budget{options.budget_nodes, options.budget_seconds};
        search::SearchResult result =
            options.rpartite
                ? search::extremal_rpartite(options.r, options.n, forbidden, budget)
                : search::extremal(options.r, options.n, forbidden, budget);

        std::string json = search::result_to_json(result);
        out << json;
        if (!options.out.empty()) write_file(options.out, json);
        if (!result.complete) {
            err << "search budget exhausted; value " << result.value
                << " is a lower bound only\n";
        }
        return 0;
    } catch (const std::exception& ex) {
        err << "extremal: " << ex.what() << "\n";
        return 1;
    }
}

} // namespace bergefree::cli
