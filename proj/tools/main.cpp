#include "bergefree/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"construction, verification and bounds toolkit for "
                 "Berge-pattern-free linear uniform hypergraphs"};
    app.require_subcommand(1);

    bergefree::cli::ConstructOptions construct;
    auto* c = app.add_subcommand("construct",
                                 "build the finite-field hypergraph and write its files");
    c->add_option("--r", construct.r, "uniformity (parts)")->required();
    c->add_option("--l", construct.l, "number of multipliers");
    c->add_option("--q", construct.field, "field descriptor p^k")->required();
    c->add_option("--alphas", construct.alphas, "explicit anchor elements");
    c->add_option("--ms", construct.ms, "explicit multipliers");
    c->add_option("--out", construct.out, "edge-list output path")->required();
    c->add_option("--labels-out", construct.labels_out, "label-table output path");
    c->add_option("--params-out", construct.params_out, "params JSON output path");
    c->add_option("--threads", construct.threads, "worker threads");
    c->add_option("--seed", construct.seed, "seed for randomized operations");

    bergefree::cli::VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "detect a Berge pattern in an edge-list file");
    v->add_option("--in", verify.input, "edge-list input path")->required();
    v->add_option("--pattern", verify.pattern, "c2 | c3 | k2t:<t> | generic:<file>")
        ->required();
    v->add_option("--cert", verify.cert_out, "certificate JSON output path");
    v->add_option("--threads", verify.threads, "worker threads");

    bergefree::cli::BoundsOptions bounds;
    auto* b = app.add_subcommand("bounds", "evaluate the closed-form bounds");
    b->add_option("--r", bounds.r, "uniformity")->required();
    b->add_option("--t", bounds.t, "forbidden K_{2,t+1} parameter t");
    b->add_option("--n", bounds.n, "vertex count");
    b->add_option("--l", bounds.l, "construction multiplier count");
    b->add_option("--q", bounds.field, "construction field descriptor p^k");
    b->add_flag("--json", bounds.json, "emit JSON instead of a table");

    bergefree::cli::ExtremalOptions extremal;
    auto* e = app.add_subcommand("extremal", "exact extremal numbers on tiny instances");
    e->add_option("--r", extremal.r, "uniformity")->required();
    e->add_option("--n", extremal.n, "vertices (per part with --rpartite)")->required();
    e->add_option("--forbid", extremal.forbid, "comma-separated patterns, e.g. c2,c3,k2t:3")
        ->required();
    e->add_flag("--rpartite", extremal.rpartite, "search r-partite hypergraphs");
    e->add_option("--budget-nodes", extremal.budget_nodes, "search node cap");
    e->add_option("--budget-seconds", extremal.budget_seconds, "search time cap");
    e->add_option("--out", extremal.out, "result JSON output path");

    CLI11_PARSE(app, argc, argv);

    if (c->parsed()) return bergefree::cli::run_construct(construct, std::cout, std::cerr);
    if (v->parsed()) return bergefree::cli::run_verify(verify, std::cout, std::cerr);
    if (b->parsed()) return bergefree::cli::run_bounds(bounds, std::cout, std::cerr);
    if (e->parsed()) return bergefree::cli::run_extremal(extremal, std::cout, std::cerr);
    return 1;
}
