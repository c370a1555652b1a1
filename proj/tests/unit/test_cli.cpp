#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "json.hpp"
#include "swkit/cli.hpp"
#include "swkit/errors.hpp"
#include "swkit/guards.hpp"

using namespace swkit;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("swkit_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs the CLI with an input document; returns the exit code and leaves the
// output in dir/out.json.
int run_cli(const TempDir& dir, std::vector<std::string> args, const std::string& input) {
    const auto in = dir.path / "in.json", out = dir.path / "out.json";
    fs::remove(out);
    {
        std::ofstream f(in);
        f << input;
    }
    std::vector<std::string> argv{"swkit"};
    argv.insert(argv.end(), args.begin(), args.end());
    if (!input.empty()) argv.insert(argv.end(), {"--input", in.string()});
    argv.insert(argv.end(), {"--out", out.string()});
    std::vector<char*> raw;
    for (auto& a : argv) raw.push_back(a.data());
    const double old = guard_scale();
    const int code = cli::run(static_cast<int>(raw.size()), raw.data());
    set_guard_scale(old);
    return code;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("den") {
    TempDir dir;
    REQUIRE(run_cli(dir, {"den"}, R"({"q":3,"n":1,"places":[{"deg":1,"kind":"inert","lambda":[1]}]})") == 0);
    auto doc = json::parse(slurp(dir.path / "out.json"));
    CHECK(doc["schema"] == "swkit/1");
    CHECK(doc["coeffs"] == json::array({"1", "-1"}));
    REQUIRE(run_cli(dir, {"den"}, R"({"q":3,"n":1,"places":[]})") == 0);
    CHECK(json::parse(slurp(dir.path / "out.json"))["coeffs"] == json::array({"1"}));
    REQUIRE(run_cli(dir, {"den"}, R"({"q":3,"kind":"split","lambda":[2]})") == 0);
    CHECK(json::parse(slurp(dir.path / "out.json"))["coeffs"] == json::array({"1", "1", "1"}));
}

TEST_CASE("derivative") {
    TempDir dir;
    REQUIRE(run_cli(dir, {"derivative"}, R"({"q":3,"n":1,"places":[{"deg":1,"kind":"inert","lambda":[2]}],"r":[0,1,2]})") == 0);
    const auto doc = json::parse(slurp(dir.path / "out.json"));
    const auto& recs = doc["records"];
    REQUIRE(recs.size() == 3);
    const std::vector<std::string> expected{"1", "0", "8"};
    for (int r = 0; r < 3; ++r) {
        CHECK(recs[r]["r"] == r);
        CHECK(recs[r]["analytic"] == expected[r]);
        CHECK(recs[r]["geometric"] == expected[r]);
        CHECK(recs[r]["equal"] == true);
    }
    REQUIRE(run_cli(dir, {"derivative"},
                    R"({"q":3,"n":1,"places":[{"deg":1,"kind":"split","lambda":[1]},{"deg":1,"kind":"inert","lambda":[1]}],"r":[2]})") == 0);
    const auto two = json::parse(slurp(dir.path / "out.json"))["records"][0];
    CHECK(two["analytic"] == two["geometric"]);
}

TEST_CASE("input errors exit with 2") {
    TempDir dir;
    CHECK(run_cli(dir, {"den"}, R"({"q":3,"n":1,"places":[{"deg":1,"kind":"ramified","lambda":[1]}]})") == 2);
    CHECK(run_cli(dir, {"den"}, R"({"q":3,"n":1,"places":[],"colour":1})") == 2);
    CHECK(run_cli(dir, {"den"}, R"({"n":1,"places":[]})") == 2);
    CHECK(run_cli(dir, {"den"}, R"({"schema":"swkit/0","q":3,"n":1,"places":[]})") == 2);
    CHECK(run_cli(dir, {"den"}, R"({"q":4,"n":1,"places":[]})") == 2);
    CHECK(run_cli(dir, {"den"}, R"({"q":3,"n":1,"places":[{"deg":1,"kind":"inert","lambda":[1,2]}]})") == 2);
    CHECK(run_cli(dir, {"den"}, "{not json") == 2);
    CHECK(run_cli(dir, {"verify", "nosuch"}, "") == 2);
    CHECK_FALSE(fs::exists(dir.path / "out.json"));
}

TEST_CASE("guards exit with 3") {
    TempDir dir;
    CHECK(run_cli(dir, {"den"}, R"({"q":3,"n":1,"places":[{"deg":1,"kind":"inert","lambda":[13]}]})") == 3);
    CHECK(run_cli(dir, {"verify", "qbinom", "--budget", "11"}, "") == 3);
}

TEST_CASE("verify") {
    TempDir dir;
    REQUIRE(run_cli(dir, {"verify", "qbinom"}, "") == 0);
    const auto doc = json::parse(slurp(dir.path / "out.json"));
    CHECK(doc["pass"] == true);
    CHECK(doc["failed"] == 0);
    CHECK(doc["total"].get<int>() >= 40);
    REQUIRE(run_cli(dir, {"verify", "weyl", "--budget", "4"}, "") == 0);
    CHECK(json::parse(slurp(dir.path / "out.json"))["pass"] == true);
}

TEST_CASE("output is deterministic") {
    TempDir dir;
    const std::string input = R"({"q":5,"n":2,"places":[{"deg":2,"kind":"split","lambda":[1,1]},{"deg":1,"kind":"inert","lambda":[2]}],"r":[0,1,2,3]})";
    REQUIRE(run_cli(dir, {"derivative"}, input) == 0);
    const auto first = slurp(dir.path / "out.json");
    REQUIRE(run_cli(dir, {"derivative"}, input) == 0);
    CHECK(slurp(dir.path / "out.json") == first);
}

TEST_CASE("parse_job") {
    const auto job = cli::parse_job("derivative", json::parse(R"({"q":3,"n":1,"places":[],"r_max":3})"));
    CHECK(job.r_list == std::vector<int>{0, 1, 2, 3});
    CHECK_THROWS_AS(cli::parse_job("den", json::parse(R"({"q":3,"n":1,"places":[{"deg":0,"kind":"inert","lambda":[1]}]})")), InputError);
}

}
