#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "graphpart/certificate.hpp"
#include "graphpart/cli.hpp"
#include "graphpart/io.hpp"
#include "support/graphs.hpp"

using namespace graphpart;
using namespace testsupport;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    auto* old_out = std::cout.rdbuf(out.rdbuf());
    auto* old_err = std::cerr.rdbuf(err.rdbuf());
    int code = run_cli(std::move(args));
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {code, out.str(), err.str()};
}

fs::path work_dir() {
    fs::path dir = fs::temp_directory_path() / "graphpart_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string stage(const Graph& g, const std::string& name) {
    fs::path p = work_dir() / name;
    write_graph_file(g, p.string());
    return p.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool has_line(const std::string& text, const std::string& line) {
    return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

} // namespace

TEST_CASE("recognize answers YES and NO with matching exit codes") {
    std::string k3 = stage(complete_graph(3), "k3.col");
    auto yes = run({"recognize", "--problem", "monopolar", "--k", "1", "--input", k3});
    CHECK(yes.code == 0);
    CHECK(yes.out == "YES\n");

    std::string c4 = stage(cycle_graph(4), "c4.col");
    auto no = run({"recognize", "--problem", "monopolar", "--k", "1", "--input", c4});
    CHECK(no.code == 1);
    CHECK(no.out == "NO\n");
}

TEST_CASE("recognize writes a certificate that verifies") {
    std::string gpath = stage(monopolar_k1_example(), "mono7.col");
    std::string cpath = (work_dir() / "mono7.cert").string();
    auto rec = run({"recognize", "--problem", "monopolar", "--k", "1", "--input", gpath,
                    "--certificate", cpath});
    REQUIRE(rec.code == 0);

    Bipartition cert = parse_certificate(cpath);
    CHECK(verify_certificate(monopolar_k1_example(), cert, Problem::monopolar, 1).ok);

    auto ok = run({"verify", "--problem", "monopolar", "--k", "1", "--input", gpath,
                   "--certificate", cpath});
    CHECK(ok.code == 0);
    CHECK(ok.out == "VALID\n");

    // the same certificate uses one A cluster too many for k = 0
    auto bad = run({"verify", "--problem", "monopolar", "--k", "0", "--input", gpath,
                    "--certificate", cpath});
    CHECK(bad.code == 1);
    CHECK(bad.out == "INVALID\n");
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("stats come out as key=value lines") {
    std::string k3 = stage(complete_graph(3), "k3.col");
    auto res = run({"recognize", "--problem", "monopolar", "--k", "1", "--input", k3, "--stats"});
    CHECK(res.code == 0);
    CHECK(res.out.rfind("YES\n", 0) == 0);
    CHECK(has_line(res.out, "cap_violations=0"));
    CHECK(has_line(res.out, "degree_bound_violations=0"));
}

TEST_CASE("subcoloring problems split on the cluster bound mode") {
    std::string c5 = stage(cycle_graph(5), "c5.col");
    CHECK(run({"recognize", "--problem", "subcoloring-ka", "--k", "2", "--input", c5}).code == 0);
    CHECK(run({"recognize", "--problem", "subcoloring-total", "--k", "3", "--input", c5}).code ==
          1);
    CHECK(run({"recognize", "--problem", "subcoloring-total", "--k", "4", "--input", c5}).code ==
          0);

    std::string sub11 = stage(subcoloring_k2_example(), "sub11.col");
    std::string cpath = (work_dir() / "sub11.cert").string();
    auto rec = run({"recognize", "--problem", "subcoloring-ka", "--k", "2", "--input", sub11,
                    "--certificate", cpath});
    CHECK(rec.code == 0);
    auto ver = run({"verify", "--problem", "subcoloring-ka", "--k", "2", "--input", sub11,
                    "--certificate", cpath});
    CHECK(ver.code == 0);
}

TEST_CASE("generic problems take property specs") {
    std::string p3 = stage(path_graph(3), "p3.col");
    auto res = run({"recognize", "--problem", "generic-exclusive", "--spec-a", "clique",
                    "--spec-b", "edgeless", "--input", p3, "--stats"});
    CHECK(res.code == 0);
    CHECK(res.out.rfind("YES\n", 0) == 0);
    CHECK(has_line(res.out, "exclusivity=2"));

    CHECK(run({"recognize", "--problem", "bounded-a", "--k", "1", "--spec-a", "clique",
               "--spec-b", "edgeless", "--input", p3})
              .code == 0);
    std::string k3 = stage(complete_graph(3), "k3.col");
    CHECK(run({"recognize", "--problem", "bounded-a", "--k", "1", "--spec-a", "clique",
               "--spec-b", "edgeless", "--input", k3})
              .code == 1);

    // a generic verify enforces the A-side size bound
    Bipartition wide;
    wide.side_of = {Side::A, Side::A, Side::B};
    wide.a_clusters = {{0, 1}};
    wide.b_clusters = {{2}};
    std::string cpath = (work_dir() / "wide.cert").string();
    write_certificate(wide, cpath);
    auto ver = run({"verify", "--problem", "bounded-a", "--k", "1", "--spec-a", "cluster",
                    "--spec-b", "edgeless", "--input", p3, "--certificate", cpath});
    CHECK(ver.code == 1);
    CHECK(ver.out == "INVALID\n");
}

TEST_CASE("the oracle subcommand answers by brute force") {
    std::string c5 = stage(cycle_graph(5), "c5.col");
    CHECK(run({"oracle", "--problem", "subcoloring-total", "--k", "3", "--input", c5}).code == 1);
    CHECK(run({"oracle", "--problem", "subcoloring-total", "--k", "4", "--input", c5}).code == 0);
    std::string p3 = stage(path_graph(3), "p3.col");
    auto res = run({"oracle", "--problem", "generic-exclusive", "--spec-a", "clique", "--spec-b",
                    "edgeless", "--input", p3});
    CHECK(res.code == 0);
    CHECK(res.out == "YES\n");
}

TEST_CASE("gen writes deterministic instances") {
    std::string a = (work_dir() / "gnp_a.col").string();
    std::string b = (work_dir() / "gnp_b.col").string();
    CHECK(run({"gen", "--kind", "gnp", "--n", "12", "--p", "0.3", "--seed", "9", "--output", a})
              .code == 0);
    CHECK(run({"gen", "--kind", "gnp", "--n", "12", "--p", "0.3", "--seed", "9", "--output", b})
              .code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(slurp(a).empty());
}

TEST_CASE("planted generation closes the loop with recognize and verify") {
    std::string gpath = (work_dir() / "planted.col").string();
    std::string cpath = (work_dir() / "planted.cert").string();
    auto gen = run({"gen", "--kind", "planted-monopolar", "--n", "30", "--p", "0.2", "--k", "2",
                    "--seed", "4", "--output", gpath, "--certificate", cpath});
    REQUIRE(gen.code == 0);
    CHECK(run({"verify", "--problem", "monopolar", "--k", "2", "--input", gpath, "--certificate",
               cpath})
              .code == 0);
    CHECK(run({"recognize", "--problem", "monopolar", "--k", "2", "--input", gpath}).code == 0);
}

TEST_CASE("the processing order does not change the answer") {
    std::string gpath = (work_dir() / "order.col").string();
    REQUIRE(run({"gen", "--kind", "gnp", "--n", "14", "--p", "0.25", "--seed", "11", "--output",
                 gpath})
                .code == 0);
    auto by_degree =
        run({"recognize", "--problem", "monopolar", "--k", "2", "--input", gpath});
    auto by_input = run({"recognize", "--problem", "monopolar", "--k", "2", "--input", gpath,
                         "--order", "input"});
    CHECK(by_degree.code == by_input.code);
    CHECK(by_degree.out == by_input.out);
}

TEST_CASE("usage and input errors exit with 2") {
    std::string k3 = stage(complete_graph(3), "k3.col");
    CHECK(run({"recognize", "--problem", "nonsense", "--k", "1", "--input", k3}).code == 2);
    CHECK(run({"recognize", "--problem", "monopolar", "--k", "1"}).code == 2);
    CHECK(run({"recognize", "--problem", "monopolar", "--input", k3}).code == 2);
    CHECK(run({"recognize", "--problem", "monopolar", "--k", "1", "--input",
               (work_dir() / "missing.col").string()})
              .code == 2);
    CHECK(run({"recognize", "--problem", "generic-exclusive", "--spec-a", "clique", "--input",
               k3})
              .code == 2);
    CHECK(run({"gen", "--kind", "gnp", "--n", "5", "--p", "0.5", "--output",
               (work_dir() / "x.col").string(), "--certificate",
               (work_dir() / "x.cert").string()})
              .code == 2);
    CHECK(run({"gen", "--kind", "planted-monopolar", "--n", "5", "--p", "0.5", "--output",
               (work_dir() / "x.col").string()})
              .code == 2);
    CHECK(run({"verify", "--problem", "monopolar", "--k", "1", "--input", k3}).code == 2);
    CHECK(run({"bogus-subcommand"}).code == 2);
}

TEST_CASE("help is a successful exit") {
    auto res = run({"--help"});
    CHECK(res.code == 0);
    CHECK(res.out.find("recognize") != std::string::npos);
}
