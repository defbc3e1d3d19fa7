#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace curveh::cli;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run_cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content)
{
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST_SUITE("cli")
{
    TEST_CASE("exit codes")
    {
        CHECK(run_cli({"analyze", "x^3 + y^3 + z^3"}).code == kOk);
        CHECK(run_cli({"analyze", "x^2 + y"}).code == kUsage);
        CHECK(run_cli({"analyze", "x^2*y"}).code == kNonReduced);
        CHECK(run_cli({"analyze", "--kmax", "2", "x^5 - y^2*z^3 - x*z^4"}).code == kUncertified);
        CHECK(run_cli({"analyze", "--catalog", "nonesuch"}).code == kUsage);
        CHECK(run_cli({"analyze"}).code == kUsage);
        CHECK(run_cli({"frobnicate"}).code == kUsage);
        CHECK(run_cli({"verify", "thm99"}).code == kUsage);
        CHECK(run_cli({"construct", "double-pencil", "0", "4"}).code == kUsage);
        CHECK(run_cli({"analyze", "--file", "/nonexistent/arrangement.txt"}).code == kUsage);
        CHECK(run_cli({"--help"}).code == kOk);
    }

    TEST_CASE("analysis output is valid JSON and byte-identical across runs")
    {
        Run a = run_cli({"analyze", "--catalog", "bolza"});
        Run b = run_cli({"analyze", "--catalog", "bolza"});
        REQUIRE(a.code == kOk);
        CHECK(a.out == b.out);
        json doc = json::parse(a.out);
        CHECK(doc["schema"] == 1);
        CHECK(doc["curve"]["exponents"] == json::array({2, 4, 4}));
        CHECK(doc["curve"]["class"] == "Type2A");
        CHECK(doc["curve"]["tau"] == 8);
        CHECK(doc["curve"]["nu"] == 4);
        CHECK(doc["profile"]["n"] == json::array({0, 0, 1, 3, 4, 4, 3, 1, 0, 0}));
        CHECK(doc["consistent"] == true);
        CHECK(json::parse(doc.dump()) == doc);
    }

    TEST_CASE("rational and two-prime analyses agree on the invariants")
    {
        json q = json::parse(run_cli({"analyze", "--rational", "--catalog", "eb7"}).out);
        json p = json::parse(run_cli({"analyze", "--catalog", "eb7"}).out);
        for (const char* k : {"exponents", "tau", "nu", "class", "type", "generators"}) CHECK(q["curve"][k] == p["curve"][k]);
        CHECK(q["curve"]["arithmetic"] == "rational");
    }

    TEST_CASE("table output")
    {
        Run t = run_cli({"analyze", "--table", "--catalog", "bolza"});
        CHECK(t.code == kOk);
        CHECK(t.out.find("Type2A") != std::string::npos);
        CHECK(run_cli({"analyze", "--table", "--json", "x^3 + y^3 + z^3"}).code == kUsage);
    }

    TEST_CASE("CURVEH_KMAX is honored")
    {
        ::setenv("CURVEH_KMAX", "2", 1);
        int limited = run_cli({"analyze", "x^5 - y^2*z^3 - x*z^4"}).code;
        ::setenv("CURVEH_KMAX", "nonsense", 1);
        int bad = run_cli({"analyze", "x^3 + y^3 + z^3"}).code;
        ::unsetenv("CURVEH_KMAX");
        CHECK(limited == kUncertified);
        CHECK(bad == kUsage);
        CHECK(run_cli({"analyze", "x^5 - y^2*z^3 - x*z^4"}).code == kOk);
    }

    TEST_CASE("construct writes a certified arrangement")
    {
        auto out = std::filesystem::temp_directory_path() / "curveh_cli_construct.txt";
        Run r = run_cli({"construct", "double-pencil", "3", "4", "--add-node-line", "--seed", "3", "--out", out.string()});
        REQUIRE(r.code == kOk);
        json doc = json::parse(r.out);
        CHECK(doc["curve"]["exponents"] == json::array({4, 5, 5}));
        CHECK(doc["seed"] == 3);
        Run again = run_cli({"analyze", "--file", out.string()});
        CHECK(again.code == kOk);
        CHECK(json::parse(again.out)["curve"]["exponents"] == json::array({4, 5, 5}));
        CHECK(run_cli({"construct", "double-pencil", "3", "4", "--add-node-line", "--seed", "3"}).out ==
              run_cli({"construct", "double-pencil", "3", "4", "--add-node-line", "--seed", "3"}).out);
        std::filesystem::remove(out);
    }

    TEST_CASE("verify emits records and a summary")
    {
        Run r = run_cli({"verify", "prop2", "--trials", "3", "--seed", "2"});
        CHECK(r.code == kOk);
        std::istringstream lines(r.out);
        std::string line;
        int records = 0, summaries = 0;
        while (std::getline(lines, line)) {
            json j = json::parse(line);
            if (j.contains("summary")) {
                ++summaries;
                CHECK(j["summary"]["pass"] == 3);
            } else {
                ++records;
                CHECK(j["verdict"] == "pass");
            }
        }
        CHECK(records == 3);
        CHECK(summaries == 1);
        CHECK(r.out == run_cli({"verify", "prop2", "--trials", "3", "--seed", "2", "--workers", "2"}).out);
        Run ex = run_cli({"verify", "thm10", "--example", "ex10"});
        CHECK(ex.code == kOk);
        CHECK(ex.out.find("hypothesis-not-met") != std::string::npos);
    }

    TEST_CASE("batch mode")
    {
        auto arr = temp_file("curveh_cli_arr.txt", "line: 1 0 0\nline: 0 1 0\nline: 0 0 1\n");
        auto batch = temp_file("curveh_cli_batch.txt", "# comment\nx^3 + y^3 + z^3\ncatalog bolza\nfile " + arr.string() + "\n");
        Run r = run_cli({"batch", batch.string()});
        CHECK(r.code == kOk);
        std::istringstream lines(r.out);
        std::string line;
        int n = 0;
        while (std::getline(lines, line)) {
            CHECK_NOTHROW(json::parse(line));
            ++n;
        }
        CHECK(n == 3);
        auto bad = temp_file("curveh_cli_batch_bad.txt", "x^3 + y^3 + z^3\nx^2*y\nx^2 + y\n");
        CHECK(run_cli({"batch", bad.string()}).code == kNonReduced);
        for (const auto& p : {arr, batch, bad}) std::filesystem::remove(p);
    }
}
