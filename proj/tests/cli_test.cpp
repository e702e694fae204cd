#include <doctest.h>

#include <sandpile/cli.hpp>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = sandpile::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("evolve")
{
    const Run r = run({"evolve", "--model", "spm", "--n", "4", "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["trajectory"] == nlohmann::json::parse("[[4],[3,1],[2,2],[2,1,1]]"));

    const Run csv = run({"evolve", "--config", "1,1", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "step,energy,heights\n0,2,\"1,1\"\n");

    const Run ascii = run({"evolve", "--n", "5", "--seed", "3"});
    CHECK(ascii.code == 0);
    CHECK(ascii.out.find("0  E=15  (5)") == 0);
}

TEST_CASE("graph exports")
{
    const Run dot = run({"graph", "--model", "sspm", "--n", "2"});
    CHECK(dot.code == 0);
    CHECK(dot.out == "digraph og {\n  \"2\";\n  \"1,1\";\n  \"2\" -> \"1,1\";\n}\n");

    const Run json = run({"graph", "--model", "spm", "--n", "8", "--format", "json", "--workers", "4"});
    CHECK(json.code == 0);
    CHECK(nlohmann::json::parse(json.out)["vertices"].size() == 13);

    const Run summary = run({"graph", "--n", "5", "--format", "ascii"});
    CHECK(summary.code == 0);
    CHECK(summary.out.find("sinks     2") != std::string::npos);
}

TEST_CASE("graph exits with the resource code when truncated")
{
    const Run r = run({"graph", "--n", "12", "--format", "json", "--max-vertices", "10"});
    CHECK(r.code == 3);
    CHECK(nlohmann::json::parse(r.out)["truncated"] == true);
}

TEST_CASE("fixpoints")
{
    const Run r = run({"fixpoints", "--n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "n = 5: 2 fixed points\n"
          "\n"
          "..#.   .#..\n"
          "####   ####\n"
          "\n"
          "(1,1,2,1)\n"
          "(1,2,1,1)\n");

    const Run json = run({"fixpoints", "--n", "16", "--format", "json"});
    CHECK(nlohmann::json::parse(json.out)["count"] == 4);

    const Run spm = run({"fixpoints", "--model", "spm", "--n", "8", "--format", "csv"});
    CHECK(spm.out == "n,index,heights\n8,0,\"3,2,2,1\"\n");
}

TEST_CASE("count")
{
    const Run r = run({"count", "--n", "5", "--format", "csv", "--bfs-cutoff", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,g1,g2,G_closed,G_bruteforce\n1,1,0,1,1\n2,0,1,1,1\n3,0,1,1,1\n4,1,1,2,2\n5,2,0,2,2\n");
}

TEST_CASE("verify")
{
    const Run sspm = run({"verify", "--n", "12"});
    CHECK(sspm.code == 0);
    CHECK(sspm.out.find("FAIL") == std::string::npos);

    const Run spm = run({"verify", "--model", "spm", "--n", "10", "--sweep"});
    CHECK(spm.code == 0);
    CHECK(spm.out.find("pass  lattice") != std::string::npos);

    const Run cut = run({"verify", "--n", "12", "--max-vertices", "5"});
    CHECK(cut.code == 3);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == 2);
    CHECK(run({"graph"}).code == 2);
    CHECK(run({"graph", "--n", "4", "--config", "2,2"}).code == 2);
    CHECK(run({"graph", "--n", "4", "--format", "csv"}).code == 2);
    CHECK(run({"graph", "--n", "4", "--model", "abelian"}).code == 2);
    CHECK(run({"evolve", "--config", "2,x"}).code == 2);
    CHECK(run({"fixpoints", "--n", "0"}).code == 2);
    CHECK(run({"fixpoints", "--n", "4", "--format", "dot"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("--out writes to a file")
{
    const auto path = std::filesystem::temp_directory_path() / "sandpile_cli_test_out.dot";
    const Run r = run({"graph", "--n", "2", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str().rfind("digraph og {", 0) == 0);
    std::filesystem::remove(path);
}
