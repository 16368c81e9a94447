#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "closurelab/cli.hpp"

namespace {

const std::string data = CLOSURELAB_TEST_DATA;

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = closurelab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string file(const std::string& name)
{
    return data + "/" + name;
}

} // namespace

TEST_CASE("hull report")
{
    Run r = run({"hull", file("single_row.txt")});
    CHECK(r.code == 0);
    CHECK(r.out
          == "minimal points: 3\n(0, 2)\n(1, 1)\n(3, 0)\nfacets: 4\nx1 + x2 >= 2\nx1 + 2 x2 >= 3\nx1 >= 0\nx2 >= 0\n");

    Run zero = run({"hull", file("zero_demand.txt")});
    CHECK(zero.out.find("facets: 2\nx1 >= 0\nx2 >= 0\n") != std::string::npos);

    Run bad = run({"hull", file("negative.txt")});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("M[1][2] = -2") != std::string::npos);
}

TEST_CASE("closure report and exit codes")
{
    Run r = run({"closure", file("single_row.txt")});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("closure k=1 density=4 samples=1 stabilized=yes\n", 0) == 0);
    CHECK(r.out.find("x1 + x2 >= 2  [HULL_FACET {(1)}]") != std::string::npos);
    CHECK(r.out.find("x1 >= 0  [SIGN]") != std::string::npos);

    Run loose = run({"closure", file("needs_density.txt"), "--density", "1"});
    CHECK(loose.code == 3);
    CHECK(loose.out.find("stabilized=no") != std::string::npos);
    CHECK(loose.out.find("x1 + 3 x2 >= 6") != std::string::npos);

    CHECK(run({"closure", file("two_row.txt"), "--density", "0"}).code == 2);
    CHECK(run({"closure", file("two_row.txt"), "--k", "0"}).code == 2);
    CHECK(run({"closure", file("missing.txt")}).code == 2);
    CHECK(run({"closure", file("unit_square.txt")}).code == 2);
}

TEST_CASE("structured output is self-describing")
{
    Run r = run({"--format", "structured", "closure", file("two_row.txt"), "--density", "2"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["version"] == closurelab::cli::version);
    CHECK(doc["command"] == "closure");
    CHECK(doc["config"]["k"] == 1);
    CHECK(doc["config"]["density"] == 2);
    CHECK(doc["result"]["stabilized"] == true);
    CHECK_FALSE(doc.contains("timings"));

    Run timed = run({"--format", "structured", "--timings", "hull", file("single_row.txt")});
    CHECK(nlohmann::json::parse(timed.out).contains("timings"));
}

TEST_CASE("cone queries")
{
    Run rays = run({"cone", file("three_rays.txt"), "rays"});
    CHECK(rays.code == 0);
    CHECK(rays.out == "(0, 1)\n(1, 0)\n");

    Run line = run({"cone", file("with_line.txt"), "rays"});
    CHECK(line.code == 4);
    CHECK(line.err.find("line") != std::string::npos);

    CHECK(run({"cone", file("with_line.txt"), "pointed"}).out == "NOT POINTED (line: 1, 0)\n");
    CHECK(run({"cone", file("unit_square.txt"), "theorem1"}).out == "PASS\n");
    CHECK(run({"cone", file("unit_square.txt"), "fii", "x1 + x2 <= 2"}).out
          == "NOT FII (multipliers: 1, 1, 0, 0, 0)\n");
    CHECK(run({"cone", file("unit_square.txt"), "fii", "x1 <= 1"}).out == "FII\n");
    CHECK(run({"cone", file("apex.txt"), "fii", "x2 <= 7/2"}).out == "NOT FII (multipliers: 1/4, 1/4, 0)\n");
    CHECK(run({"cone", file("unit_square.txt"), "fii", "x1 <= 1/2"}).code == 4);
    CHECK(run({"cone", file("unit_square.txt"), "fii", "x1 + y <= 1"}).code == 2);
    CHECK(run({"cone", file("unit_square.txt"), "bogus"}).code == 2);
    CHECK(run({"cone", file("with_line.txt"), "theorem1"}).code == 4);

    Run closure = run({"cone", file("unit_square.txt"), "closure"});
    CHECK(closure.out.find("x1 <= 1\n") != std::string::npos);
}

TEST_CASE("verify suites")
{
    Run cov = run({"verify", "covering", "--seed", "7"});
    CHECK(cov.code == 0);
    CHECK(cov.out.find("covering: PASS") != std::string::npos);
    CHECK(cov.out.find("seed=7") != std::string::npos);
    Run all = run({"verify", "all", "--seed", "1"});
    CHECK(all.code == 0);
    CHECK(all.out.find("FAIL") == std::string::npos);
    CHECK(run({"verify", "bogus"}).code == 2);
}

TEST_CASE("usage")
{
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"hull"}).code == 2);
    CHECK(run({"--format", "xml", "hull", file("single_row.txt")}).code == 2);
}

TEST_CASE("--out writes the report to a file")
{
    auto path = std::filesystem::temp_directory_path() / "closurelab_cli_out.txt";
    Run r = run({"--out", path.string(), "hull", file("single_row.txt")});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().rfind("minimal points: 3", 0) == 0);
    std::filesystem::remove(path);
}

TEST_CASE("identical runs produce identical bytes")
{
    std::vector<std::string> args{"--format", "structured", "--seed", "5", "closure", file("two_row.txt"), "--density", "3"};
    CHECK(run(args).out == run(args).out);
}
