#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "eisen/gamma_solver.hpp"

using namespace eisen;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "eisen");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json strip_times(json doc) {
    for (auto& r : doc["reports"]) r["wall_time"] = 0;
    return doc;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("eisen_test_" + name)).string();
}

}  // namespace

TEST_CASE("double shuffle with the level-2 closed form") {
    const Run r = invoke({"verify", "double-shuffle", "--level", "2", "--max-weight", "6", "--truncation", "50",
                       "--assignment", "paper-n2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS]") != std::string::npos);
}

TEST_CASE("rank at level 6 as JSON") {
    const Run r = invoke({"rank", "--level", "6", "--json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    const auto rep = reports_from_document(doc).at(0);
    CHECK(rep.result.at("rank") == 38);
    CHECK(rep.result.at("nullity") == 3);
    CHECK(rep.status == Status::Pass);
}

TEST_CASE("divisor identity at level 30") {
    CHECK(invoke({"verify", "divisor-identity", "--level", "30", "--max-m", "500"}).code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"rank", "--level", "0"}).code == 2);
    CHECK(invoke({"rank"}).code == 2);
    CHECK(invoke({"rank", "--level", "3", "--bogus"}).code == 2);
    CHECK(invoke({"verify", "double-shuffle", "--level", "4", "--assignment", "paper-n2"}).code == 2);
    CHECK(invoke({"verify", "double-shuffle", "--level", "2", "--assignment", "/nonexistent/file.json"}).code == 2);
    CHECK(invoke({"export", "series", "--level", "3", "--kind", "nope"}).code == 2);
    CHECK(invoke({"dz", "dims", "--level", "2", "--weight", "1"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("JSON goes to --out") {
    const std::string path = temp_path("beta.json");
    const Run r = invoke({"verify", "beta", "--level", "4", "--out", path});
    CHECK(r.code == 0);
    std::ifstream in(path);
    REQUIRE(in);
    const auto reps = reports_from_document(json::parse(in));
    CHECK(reps.at(0).level == 4);
    std::filesystem::remove(path);
}

TEST_CASE("default truncation comes from the environment") {
    ::setenv("EISEN_DEFAULT_TRUNCATION", "17", 1);
    CHECK(cli::default_truncation() == 17);
    const Run r = invoke({"verify", "null-space", "--level", "3", "--json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["reports"][0]["parameters"]["truncation"] == 17);
    ::setenv("EISEN_DEFAULT_TRUNCATION", "junk", 1);
    CHECK(cli::default_truncation() == 50);
    ::unsetenv("EISEN_DEFAULT_TRUNCATION");
    CHECK(cli::default_truncation() == 50);
}

TEST_CASE("assignment files") {
    const auto asg = solve(3, {}, 20).assignment;
    const json j = cli::assignment_to_json(asg);
    CHECK(cli::assignment_to_json(cli::assignment_from_json(j)) == j);

    const std::string good = temp_path("good.json");
    std::ofstream(good) << j.dump();
    CHECK(invoke({"verify", "double-shuffle", "--level", "3", "--max-weight", "4", "--truncation", "20", "--assignment",
               good})
              .code == 0);

    // Breaking one lambda fails the linear system before any series work.
    json broken = j;
    broken["lambda"][0]["symbol"]["F"][0] = "7/3";
    const std::string bad = temp_path("bad.json");
    std::ofstream(bad) << broken.dump();
    const Run rejected = invoke({"verify", "double-shuffle", "--level", "3", "--max-weight", "4", "--truncation", "20",
                              "--assignment", bad});
    CHECK(rejected.code == 1);
    const Run forced = invoke({"verify", "double-shuffle", "--level", "3", "--max-weight", "4", "--truncation", "20",
                            "--assignment", bad, "--unchecked", "--json"});
    CHECK(forced.code == 1);
    const auto rep = reports_from_document(json::parse(forced.out)).at(0);
    CHECK(rep.status == Status::Fail);
    CHECK_FALSE(rep.counterexamples.empty());
    std::filesystem::remove(good);
    std::filesystem::remove(bad);
}

TEST_CASE("symbol JSON validation") {
    CHECK_THROWS(cli::symbol_from_json(json::parse(R"({"F":["1"],"G":["1"]})"), 1));
    CHECK_THROWS(cli::symbol_from_json(json::parse(R"({"F":["1","0"],"G":["0"]})"), 2));
    const auto v = cli::symbol_from_json(json::parse(R"({"F":["1/2","-3"],"G":["0","2"]})"), 2);
    CHECK(cli::symbol_to_json(v)["symbol"]["F"][0] == "1/2");
}

TEST_CASE("reports are deterministic apart from timing") {
    const std::vector<std::string> args{"verify", "double-shuffle", "--level", "3", "--max-weight", "5",
                                        "--truncation", "20", "--json", "--jobs", "2"};
    const Run a = invoke(args), b = invoke(args);
    CHECK(strip_times(json::parse(a.out)) == strip_times(json::parse(b.out)));
}

TEST_CASE("solve, dz and numeric subcommands") {
    const Run s = invoke({"solve", "gamma", "--level", "2", "--free", "zero", "--series", "--json", "-M", "10"});
    CHECK(s.code == 0);
    CHECK(invoke({"dz", "dims", "--level", "3", "--weight", "4", "--pure"}).code == 0);
    CHECK(invoke({"dz", "sum-formula", "--level", "2", "--weight", "6"}).code == 0);
    CHECK(invoke({"numeric", "frakz", "--level", "4", "--max-n", "4"}).code == 0);
    CHECK(invoke({"numeric", "sign-probe", "--level", "3"}).code == 0);
    const Run e = invoke({"export", "series", "--level", "3", "--kind", "g", "--a", "1", "--r", "2", "-M", "5", "--json"});
    CHECK(e.code == 0);
    CHECK(json::parse(e.out)["reports"][0]["result"].contains("coeffs"));
}
