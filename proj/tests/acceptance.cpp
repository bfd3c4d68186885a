// Acceptance suite: every criterion below runs exactly, at its stated
// tolerance, and prints one PASS/FAIL line. The process exit code is the
// number of failed criteria.

#include "bergefree/berge.hpp"
#include "bergefree/bounds.hpp"
#include "bergefree/cli.hpp"
#include "bergefree/construction.hpp"
#include "bergefree/gf.hpp"
#include "bergefree/hypergraph.hpp"
#include "bergefree/search.hpp"

#include "test_util.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace bergefree;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Checker {
    bool ok = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }
};

struct Instance {
    int r, l;
    std::int64_t q;
    construction::BuiltHypergraph built;
};

std::vector<Instance> g_instances; // filled by criteria 1 and 3

construction::BuiltHypergraph build_instance(int r, int l, std::int64_t q) {
    auto [p, k] = bounds::odd_prime_power(q);
    auto field = gf::make_field(p, k);
    auto selection = construction::select_parameters(r, l, field);
    if (!selection.params) throw std::runtime_error("parameter selection failed");
    return construction::build_hypergraph(*selection.params);
}

// 1. Exact vertex, edge and degree counts for the l = 1 instances, each
//    built in under a second.
Checker criterion_construction_sizes() {
    Checker c;
    struct Shape { int r; std::int64_t q; };
    for (auto [r, q] : {Shape{3, 5}, {3, 7}, {3, 9}, {3, 11}, {3, 13}, {4, 5}, {4, 7}}) {
        auto start = Clock::now();
        auto built = build_instance(r, 1, q);
        double elapsed = seconds_since(start);
        const Hypergraph& h = built.hyp.base();
        std::string tag = "(" + std::to_string(r) + ",1," + std::to_string(q) + ")";
        c.require(h.vertex_count() == r * q * q, tag + " vertex count");
        c.require(h.edge_count() == q * q * (q - 1), tag + " edge count");
        bool regular = true;
        for (int v = 0; v < h.vertex_count(); ++v) {
            if (h.degree(v) != q - 1) regular = false;
        }
        c.require(regular, tag + " regularity");
        c.require(elapsed < 1.0, tag + " built in " + std::to_string(elapsed) + "s");
        g_instances.push_back({r, 1, q, std::move(built)});
    }
    return c;
}

// 2. The l = 1 instances contain no Berge-C2, no Berge-C3 and no
//    Berge-K_{2,2r-3}; the whole scan finishes inside a minute.
Checker criterion_freeness_l1() {
    Checker c;
    auto start = Clock::now();
    for (const auto& inst : g_instances) {
        if (inst.l != 1) continue;
        const Hypergraph& h = inst.built.hyp.base();
        std::string tag = "(" + std::to_string(inst.r) + ",1," + std::to_string(inst.q) + ")";
        c.require(!berge::detect_c2(h).found, tag + " has a C2");
        c.require(!berge::detect_c3(h).found, tag + " has a C3");
        int t = 2 * inst.r - 3;
        c.require(!berge::detect_k2t(h, t).found,
                  tag + " has a K_{2," + std::to_string(t) + "}");
    }
    c.require(seconds_since(start) < 60.0, "freeness scan exceeded 60s");
    return c;
}

// 3. r = 3, l = 2: the greedy selection succeeds at the first workable q;
//    the result is C2-free and K_{2,13}-free, and the bipartite projections
//    respect the per-color, per-pair and per-triple ceilings.
Checker criterion_multicolor() {
    Checker c;
    auto start = Clock::now();
    std::int64_t q_used = 0;
    std::optional<construction::ConstructionParams> params;
    for (std::int64_t q : {5, 7, 9, 11, 13}) {
        auto [p, k] = bounds::odd_prime_power(q);
        auto selection = construction::select_parameters(3, 2, gf::make_field(p, k));
        if (selection.params) {
            q_used = q;
            params = std::move(selection.params);
            break;
        }
    }
    c.require(params.has_value(), "no q <= 13 admits (r=3, l=2) parameters");
    if (!params) return c;

    auto built = construction::build_hypergraph(*params);
    const Hypergraph& h = built.hyp.base();
    c.require(!berge::detect_c2(h).found, "l=2 instance has a C2");
    c.require(!berge::detect_k2t(h, 13).found, "l=2 instance has a K_{2,13}");

    auto report = construction::verify_pairwise_freeness(built);
    c.require(report.max_color_common <= 1, "single-color projection has a K_{2,2}");
    c.require(report.max_pair_common <= 6, "pair projection has a K_{2,7}");
    c.require(report.max_triple_common <= 8, "split-center triple has a K_{2,9}");

    g_instances.push_back({3, 2, q_used, std::move(built)});
    c.require(seconds_since(start) < 300.0, "multicolor checks exceeded 5 minutes");
    return c;
}

// 4. The four field-identity oracles find no counterexample: exhaustive on
//    GF(5) and GF(7), ten thousand seeded samples on GF(101).
Checker criterion_identity_oracles() {
    Checker c;
    for (std::int64_t p : {5, 7}) {
        auto F = gf::make_field(p, 1);
        std::string tag = "GF(" + std::to_string(p) + ") ";
        c.require(!gf::oracle_ruzsa(*F, 0).has_value(), tag + "scaled-difference identity");
        c.require(!gf::oracle_sidon(*F, 0).has_value(), tag + "Sidon identity");
        c.require(!gf::oracle_triangle(*F, 0).has_value(), tag + "triangle identity");
        c.require(!gf::oracle_threepairs(*F, 0).has_value(), tag + "three-pair identity");
    }
    auto F101 = gf::make_field(101, 1);
    c.require(!gf::oracle_ruzsa(*F101, 10000, 0).has_value(), "GF(101) scaled-difference");
    c.require(!gf::oracle_sidon(*F101, 10000, 0).has_value(), "GF(101) Sidon");
    c.require(!gf::oracle_triangle(*F101, 10000, 0).has_value(), "GF(101) triangle");
    c.require(!gf::oracle_threepairs(*F101, 10000, 0).has_value(), "GF(101) three-pair");
    return c;
}

// 5. Every built instance sits under the closed-form upper bounds, the
//    closed-form edge count matches exactly on the integer side, and the
//    r = 3, l = 1 density ratio equals (1 - 1/q)/3^(3/2) to 1e-12.
Checker criterion_bound_sandwich() {
    Checker c;
    for (const auto& inst : g_instances) {
        std::string tag = "(" + std::to_string(inst.r) + "," + std::to_string(inst.l) +
                          "," + std::to_string(inst.q) + ")";
        std::int64_t edges = inst.built.hyp.base().edge_count();
        std::int64_t n = static_cast<std::int64_t>(inst.r) * inst.q * inst.q;
        std::int64_t t = bounds::t_eff(inst.r, inst.l);
        c.require(static_cast<double>(edges) <= bounds::ub_general(inst.r, t, n),
                  tag + " exceeds the general upper bound");
        c.require(static_cast<double>(edges) <= bounds::ub_palmer(inst.r, t, n),
                  tag + " exceeds the no-C3 upper bound");
        if (inst.l == 1) {
            c.require(static_cast<double>(edges) <=
                          bounds::ub_rpartite(inst.r, inst.q * inst.q),
                      tag + " exceeds the rpartite upper bound");
        }
        auto bound = bounds::lb_construction(inst.r, inst.l, inst.q);
        c.require(bound.identity_holds && bound.edge_count == edges,
                  tag + " closed-form identity failed");
        if (inst.r == 3 && inst.l == 1) {
            double expected =
                (1.0 - 1.0 / static_cast<double>(inst.q)) / std::pow(3.0, 1.5);
            c.require(std::abs(bound.density_ratio - expected) < 1e-12,
                      tag + " density ratio off");
        }
    }
    return c;
}

// 6. The dedicated detectors agree with the generic
//    distinct-representatives detector on every linear 3-uniform hypergraph
//    with up to 6 vertices and on 200 seeded random ones.
Checker criterion_oracle_equivalence() {
    Checker c;
    auto start = Clock::now();
    long long checked = 0;
    for (int n = 3; n <= 6; ++n) {
        for (const auto& h : testutil::all_linear_triple_systems(n)) {
            ++checked;
            bool ok =
                berge::detect_c2(h).found ==
                    berge::detect_generic(h, berge::BergePattern::c2().graph()).found &&
                berge::detect_c3(h).found ==
                    berge::detect_generic(h, berge::BergePattern::c3().graph()).found;
            for (int t : {1, 2, 3}) {
                ok = ok && berge::detect_k2t(h, t).found ==
                               berge::detect_generic(
                                   h, berge::BergePattern::k2t(t).graph()).found;
            }
            if (!ok) {
                c.require(false, "disagreement on an exhaustive instance with " +
                                     std::to_string(n) + " vertices");
                break;
            }
        }
    }
    gf::SeededRng rng(0);
    for (int trial = 0; trial < 200; ++trial) {
        Hypergraph h = testutil::random_triple_system(rng, 8, 10);
        ++checked;
        bool ok = berge::detect_c2(h).found ==
                      berge::detect_generic(h, berge::BergePattern::c2().graph()).found &&
                  berge::detect_c3(h).found ==
                      berge::detect_generic(h, berge::BergePattern::c3().graph()).found &&
                  berge::detect_k2t(h, 3).found ==
                      berge::detect_generic(h, berge::BergePattern::k2t(3).graph()).found;
        if (!ok) {
            c.require(false, "disagreement on random trial " + std::to_string(trial));
            break;
        }
    }
    c.detail << "compared " << checked << " hypergraphs";
    c.require(seconds_since(start) < 120.0, "equivalence sweep exceeded 2 minutes");
    return c;
}

// 7. Exact extremal numbers: the seven-point system packs 7 triples with a
//    valid witness, the search agrees with the naive oracle on every tiny
//    instance, and the richest family on 5 points stays under the bound.
Checker criterion_extremal_oracle() {
    Checker c;
    auto c2 = berge::BergePattern::c2();
    auto c3 = berge::BergePattern::c3();
    auto k23 = berge::BergePattern::k2t(3);

    auto timed = [&c](const std::string& tag, auto&& fn) {
        auto start = Clock::now();
        auto value = fn();
        c.require(seconds_since(start) < 60.0, tag + " exceeded 60s");
        return value;
    };

    auto fano = timed("extremal(3,7,{c2})", [&] { return search::extremal(3, 7, {c2}); });
    c.require(fano.value == 7, "extremal(3,7,{c2}) != 7");
    c.require(fano.complete, "extremal(3,7,{c2}) incomplete");
    c.require(fano.witness.edge_count() == 7 && fano.witness.is_linear(),
              "seven-point witness invalid");
    bool steiner = true;
    for (int v = 0; v < 7; ++v) steiner = steiner && fano.witness.degree(v) == 3;
    c.require(steiner, "seven-point witness is not a Steiner system");

    const std::vector<std::vector<berge::BergePattern>> families = {
        {c2}, {c2, c3}, {c2, c3, k23}};
    for (int n : {4, 5}) {
        for (std::size_t f = 0; f < families.size(); ++f) {
            std::string tag =
                "n=" + std::to_string(n) + " family " + std::to_string(f);
            int exact = timed("extremal " + tag, [&] {
                return search::extremal(3, n, families[f]).value;
            });
            int naive = timed("naive " + tag, [&] {
                return search::naive_extremal(3, n, families[f]);
            });
            c.require(exact == naive, tag + " oracle mismatch");
        }
    }

    auto rich = timed("extremal(3,5,{c2,c3,k2t:3})",
                      [&] { return search::extremal(3, 5, {c2, c3, k23}); });
    c.require(rich.value <= 4, "extremal(3,5,*) exceeds the bound floor");
    c.require(static_cast<double>(rich.value) <= bounds::ub_general(3, 2, 5),
              "extremal(3,5,*) exceeds ub_general");
    return c;
}

// 8. The codegree profile of every K_{2,t+1}-free instance peaks at t or
//    lower.
Checker criterion_codegree_screening() {
    Checker c;
    for (const auto& inst : g_instances) {
        std::int64_t t = bounds::t_eff(inst.r, inst.l);
        auto profile = inst.built.hyp.base().codegree_profile();
        std::string tag = "(" + std::to_string(inst.r) + "," + std::to_string(inst.l) +
                          "," + std::to_string(inst.q) + ")";
        c.require(profile.max_multiplicity <= t,
                  tag + " codegree " + std::to_string(profile.max_multiplicity) +
                      " exceeds " + std::to_string(t));
    }
    return c;
}

// 9. Identical configurations produce byte-identical artifacts, with one
//    and with several threads.
Checker criterion_determinism() {
    Checker c;
    fs::path dir = fs::temp_directory_path() / "bergefree_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);

    auto construct = [&](const std::string& name, int threads) {
        cli::ConstructOptions options;
        options.r = 3;
        options.l = 1;
        options.field = "5^1";
        options.out = (dir / name).string();
        options.threads = threads;
        std::ostringstream out, err;
        int code = cli::run_construct(options, out, err);
        c.require(code == 0, "construct exited with " + std::to_string(code));
        return out.str();
    };
    std::string summary1 = construct("a.txt", 1);
    std::string summary2 = construct("b.txt", 1);
    std::string summary4 = construct("c.txt", 4);
    c.require(summary1 == summary2 && summary1 == summary4, "summaries differ");
    auto bytes = [&](const std::string& name) {
        return cli::read_file((dir / name).string());
    };
    c.require(bytes("a.txt") == bytes("b.txt"), "edge lists differ across runs");
    c.require(bytes("a.txt") == bytes("c.txt"), "edge lists differ across threads");
    c.require(bytes("a.txt.labels.json") == bytes("c.txt.labels.json"),
              "label tables differ");
    c.require(bytes("a.txt.params.json") == bytes("b.txt.params.json"),
              "params differ");

    auto verify = [&](const std::string& cert, int threads) {
        cli::VerifyOptions options;
        options.input = (dir / "a.txt").string();
        options.pattern = "k2t:3";
        options.cert_out = (dir / cert).string();
        options.threads = threads;
        std::ostringstream out, err;
        int code = cli::run_verify(options, out, err);
        c.require(code == 0, "verify exited with " + std::to_string(code));
    };
    verify("cert1.json", 1);
    verify("cert2.json", 1);
    verify("cert3.json", 4);
    c.require(bytes("cert1.json") == bytes("cert2.json"), "certificates differ across runs");
    c.require(bytes("cert1.json") == bytes("cert3.json"),
              "certificates differ across threads");

    fs::remove_all(dir);
    return c;
}

} // namespace

int main() {
    struct Entry {
        int id;
        const char* label;
        Checker (*run)();
    };
    const Entry entries[] = {
        {1, "construction sizes", criterion_construction_sizes},
        {2, "freeness at l=1", criterion_freeness_l1},
        {3, "multicolor construction", criterion_multicolor},
        {4, "field identity oracles", criterion_identity_oracles},
        {5, "bound sandwich", criterion_bound_sandwich},
        {6, "detector oracle equivalence", criterion_oracle_equivalence},
        {7, "exact extremal oracle", criterion_extremal_oracle},
        {8, "codegree screening", criterion_codegree_screening},
        {9, "deterministic artifacts", criterion_determinism},
    };

    int failures = 0;
    for (const auto& entry : entries) {
        Checker result;
        try {
            result = entry.run();
        } catch (const std::exception& ex) {
            result.ok = false;
            result.detail << "exception: " << ex.what();
        }
        if (!result.ok) ++failures;
        std::cout << (result.ok ? "PASS" : "FAIL") << " criterion " << entry.id << ": "
                  << entry.label;
        if (!result.detail.str().empty()) std::cout << " (" << result.detail.str() << ")";
        std::cout << "\n";
    }
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criteria failed")
              << "\n";
    return failures;
}
