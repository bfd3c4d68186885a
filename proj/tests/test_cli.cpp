#include "bergefree/cli.hpp"

#include "bergefree/hypergraph.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace bergefree;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / "bergefree_cli_test";
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int construct_default(const TempDir& dir, const std::string& out_name,
                      std::string field = "5^1", int r = 3, int l = 1, int threads = 1) {
    cli::ConstructOptions options;
    options.r = r;
    options.l = l;
    options.field = std::move(field);
    options.out = dir.file(out_name);
    options.threads = threads;
    std::ostringstream out, err;
    return cli::run_construct(options, out, err);
}

} // namespace

TEST_CASE("construct writes the three artifacts and a summary") {
    TempDir dir;
    cli::ConstructOptions options;
    options.r = 3;
    options.l = 1;
    options.field = "5^1";
    options.out = dir.file("h.txt");
    std::ostringstream out, err;
    REQUIRE(cli::run_construct(options, out, err) == 0);
    CHECK(out.str() == "vertices 75 edges 100 degree 4\n");

    Hypergraph h = parse_edge_list_text(cli::read_file(dir.file("h.txt")));
    CHECK(h.vertex_count() == 75);
    CHECK(h.edge_count() == 100);
    CHECK(cli::read_file(dir.file("h.txt.params.json")).find("\"5^1\"") !=
          std::string::npos);
    CHECK_FALSE(cli::read_file(dir.file("h.txt.labels.json")).empty());
}

TEST_CASE("construct rejects bad fields and bad multipliers") {
    TempDir dir;
    SUBCASE("even characteristic") {
        CHECK(construct_default(dir, "h.txt", "2^1") == 1);
    }
    SUBCASE("explicit multipliers violating the separation condition") {
        cli::ConstructOptions options;
        options.r = 3;
        options.l = 2;
        options.field = "13^1";
        options.ms = {"1", "2"};
        options.out = dir.file("h.txt");
        std::ostringstream out, err;
        CHECK(cli::run_construct(options, out, err) == 1);
        CHECK(err.str().find("s=1") != std::string::npos);
        CHECK(err.str().find("k=3") != std::string::npos);
    }
    SUBCASE("selection failure names the blocked multiplier") {
        cli::ConstructOptions options;
        options.r = 3;
        options.l = 2;
        options.field = "5^1";
        options.out = dir.file("h.txt");
        std::ostringstream out, err;
        CHECK(cli::run_construct(options, out, err) == 1);
        CHECK(err.str().find("m_2") != std::string::npos);
    }
}

TEST_CASE("explicit anchors with greedily chosen multipliers") {
    TempDir dir;
    cli::ConstructOptions options;
    options.r = 3;
    options.l = 1;
    options.field = "7^1";
    options.alphas = {"0", "1", "3"};
    options.out = dir.file("h.txt");
    std::ostringstream out, err;
    REQUIRE(cli::run_construct(options, out, err) == 0);
    CHECK(out.str() == "vertices 147 edges 294 degree 6\n");
    CHECK(cli::read_file(dir.file("h.txt.params.json")).find("\"3\"") !=
          std::string::npos);
}

TEST_CASE("verify distinguishes free, found and error") {
    TempDir dir;
    REQUIRE(construct_default(dir, "h.txt") == 0);

    cli::VerifyOptions verify;
    verify.input = dir.file("h.txt");
    verify.pattern = "k2t:3";
    std::ostringstream out, err;
    CHECK(cli::run_verify(verify, out, err) == 0);
    CHECK(out.str().find("\"found\": false") != std::string::npos);

    cli::write_file(dir.file("c2.txt"), "3 4 2\n0 1 2\n0 1 3\n");
    verify.input = dir.file("c2.txt");
    verify.pattern = "c2";
    std::ostringstream out2, err2;
    CHECK(cli::run_verify(verify, out2, err2) == 2);
    CHECK(out2.str().find("\"found\": true") != std::string::npos);
    CHECK(out2.str().find("core_vertices") != std::string::npos);

    verify.input = dir.file("missing.txt");
    std::ostringstream out3, err3;
    CHECK(cli::run_verify(verify, out3, err3) == 1);

    cli::write_file(dir.file("bad.txt"), "3 4\n");
    verify.input = dir.file("bad.txt");
    std::ostringstream out4, err4;
    CHECK(cli::run_verify(verify, out4, err4) == 1);
}

TEST_CASE("verify supports generic pattern files") {
    TempDir dir;
    cli::write_file(dir.file("h.txt"), "3 6 3\n0 1 2\n2 3 4\n0 4 5\n");
    cli::write_file(dir.file("triangle.json"),
                    "{\"n_vertices\": 3, \"edges\": [[0,1],[1,2],[2,0]]}\n");
    cli::VerifyOptions verify;
    verify.input = dir.file("h.txt");
    verify.pattern = "generic:" + dir.file("triangle.json");
    std::ostringstream out, err;
    CHECK(cli::run_verify(verify, out, err) == 2);
    CHECK(out.str().find("\"pattern\": \"generic\"") != std::string::npos);
}

TEST_CASE("construct then verify round-trips counts") {
    TempDir dir;
    REQUIRE(construct_default(dir, "h.txt", "7^1") == 0);
    Hypergraph h = parse_edge_list_text(cli::read_file(dir.file("h.txt")));
    CHECK(h.vertex_count() == 3 * 49);
    CHECK(h.edge_count() == 49 * 6);
    for (const char* pattern : {"c2", "c3", "k2t:3"}) {
        cli::VerifyOptions verify;
        verify.input = dir.file("h.txt");
        verify.pattern = pattern;
        std::ostringstream out, err;
        CHECK(cli::run_verify(verify, out, err) == 0);
    }
}

TEST_CASE("identical configs produce byte-identical files") {
    TempDir dir;
    REQUIRE(construct_default(dir, "a.txt", "5^1", 3, 1, 1) == 0);
    REQUIRE(construct_default(dir, "b.txt", "5^1", 3, 1, 1) == 0);
    REQUIRE(construct_default(dir, "c.txt", "5^1", 3, 1, 4) == 0);
    std::string a = cli::read_file(dir.file("a.txt"));
    CHECK(a == cli::read_file(dir.file("b.txt")));
    CHECK(a == cli::read_file(dir.file("c.txt")));
    CHECK(cli::read_file(dir.file("a.txt.labels.json")) ==
          cli::read_file(dir.file("c.txt.labels.json")));

    cli::VerifyOptions verify;
    verify.input = dir.file("a.txt");
    verify.pattern = "k2t:3";
    verify.cert_out = dir.file("cert1.json");
    std::ostringstream out1, err1;
    REQUIRE(cli::run_verify(verify, out1, err1) == 0);
    verify.cert_out = dir.file("cert2.json");
    verify.threads = 4;
    std::ostringstream out2, err2;
    REQUIRE(cli::run_verify(verify, out2, err2) == 0);
    CHECK(cli::read_file(dir.file("cert1.json")) == cli::read_file(dir.file("cert2.json")));
    CHECK(out1.str() == out2.str());
}

TEST_CASE("bounds command") {
    cli::BoundsOptions options;
    options.r = 3;
    options.t = 2;
    options.n = 75;
    std::ostringstream out, err;
    CHECK(cli::run_bounds(options, out, err) == 0);
    CHECK(out.str().find("178.093") != std::string::npos);

    cli::BoundsOptions construction_form;
    construction_form.r = 3;
    construction_form.l = 1;
    construction_form.field = "5^1";
    std::ostringstream out2, err2;
    CHECK(cli::run_bounds(construction_form, out2, err2) == 0);
    CHECK(out2.str().find("100") != std::string::npos);

    cli::BoundsOptions bad;
    bad.r = 2;
    bad.t = 1;
    bad.n = 10;
    std::ostringstream out3, err3;
    CHECK(cli::run_bounds(bad, out3, err3) == 1);
}

TEST_CASE("extremal command") {
    cli::ExtremalOptions options;
    options.r = 3;
    options.n = 7;
    options.forbid = "c2";
    std::ostringstream out, err;
    CHECK(cli::run_extremal(options, out, err) == 0);
    CHECK(out.str().find("\"value\": 7") != std::string::npos);

    cli::ExtremalOptions small;
    small.r = 3;
    small.n = 2;
    small.forbid = "c2";
    std::ostringstream out2, err2;
    CHECK(cli::run_extremal(small, out2, err2) == 1);

    cli::ExtremalOptions combo;
    combo.r = 3;
    combo.n = 5;
    combo.forbid = "c2,c3,k2t:3";
    std::ostringstream out3, err3;
    CHECK(cli::run_extremal(combo, out3, err3) == 0);
    CHECK(out3.str().find("\"value\": 2") != std::string::npos);
}
