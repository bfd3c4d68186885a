#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bergefree::cli {

// Exit codes shared by every subcommand: 0 success (or pattern-free),
// 2 pattern found, 1 error. Machine-readable output is deterministic for a
// fixed configuration, including thread count.

struct ConstructOptions {
    int r = 3;
    int l = 1;
    std::string field;                // "p^k"
    std::vector<std::string> alphas;  // optional explicit anchors
    std::vector<std::string> ms;      // optional explicit multipliers
    std::string out;                  // edge-list path
    std::string labels_out;           // defaults to out + ".labels.json"
    std::string params_out;           // defaults to out + ".params.json"
    int threads = 1;
    std::uint64_t seed = 0;           // reserved for sampling-based workflows
};
int run_construct(const ConstructOptions& options, std::ostream& out, std::ostream& err);

struct VerifyOptions {
    std::string input;
    std::string pattern;   // c2 | c3 | k2t:<t> | generic:<file>
    std::string cert_out;  // optional certificate path
    int threads = 1;
};
int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

struct BoundsOptions {
    int r = 0;
    std::int64_t t = -1;
    std::int64_t n = -1;
    int l = -1;
    std::string field; // construction form takes --l and --q
    bool json = false;
};
int run_bounds(const BoundsOptions& options, std::ostream& out, std::ostream& err);

struct ExtremalOptions {
    int r = 3;
    int n = 0;
    std::string forbid; // comma-separated pattern specs
    bool rpartite = false;
    std::uint64_t budget_nodes = 50'000'000;
    double budget_seconds = 60.0;
    std::string out; // optional JSON path
};
int run_extremal(const ExtremalOptions& options, std::ostream& out, std::ostream& err);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace bergefree::cli
