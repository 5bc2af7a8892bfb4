#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "qvl/bps.hpp"
#include "qvl/curve.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out, err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = qvl::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// admissible classes the table command tabulates for a positive-intersection
// selector, in row order
std::vector<qvl::CurveClass> positive_rows(int max_d0) {
    std::vector<qvl::CurveClass> rows;
    for (int d0 = 0; d0 <= max_d0; ++d0)
        for (int d1 = 0; d1 <= d0; ++d1)
            for (int d2 = 0; d2 <= d0; ++d2)
                for (int d3 = 0; d3 <= d0; ++d3) {
                    const qvl::CurveClass d{d0, d1, d2, d3};
                    auto [w1, w2] = inter(d);
                    if (qvl::admissible(d) && w1 > 0 && w2 > 0) rows.push_back(d);
                }
    return rows;
}

fs::path fresh_temp_file(const std::string& stem) {
    const fs::path p = fs::temp_directory_path() / (stem + "-" + std::to_string(::getpid()) + ".json");
    fs::remove(p);
    return p;
}

}  // namespace

TEST_CASE("invariant: the three log pipelines agree and report it") {
    const auto r = run_cli({"invariant", "log", "--degree", "1,1,1,1"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["agree"] == true);
    CHECK(j["notes"].empty());
    REQUIRE(j["pipelines"].size() == 3);
    CHECK(j["pipelines"]["sum"]["s_terms"] == json::parse(R"([[-1,"1"],[1,"1"]])"));
    CHECK(j["pipelines"]["trace"] == j["pipelines"]["sum"]);
    CHECK(j["pipelines"]["closed"]["num"]["s_terms"].size() == 3);
    CHECK(j["degree"] == json::array({1, 1, 1, 1}));
}

TEST_CASE("invariant: vanishing intersection is reported, not computed around") {
    const auto r = run_cli({"invariant", "log", "--degree", "1,0,1,1"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["pipelines"].size() == 1);
    CHECK(j["pipelines"]["closed"]["num"]["s_terms"].empty());
    REQUIRE(j["notes"].size() == 1);
    CHECK(j["notes"][0].get<std::string>().find("vanishing intersection") != std::string::npos);
}

TEST_CASE("invariant: text and csv formats") {
    CHECK(run_cli({"invariant", "gv", "--degree", "1,1,1,1", "--format", "text"}).out ==
          "gv(1,1,1,1) [closed] = -1\nagree\n");
    CHECK(run_cli({"invariant", "dt", "--degree", "1,1,1,1", "--format", "csv"}).out ==
          "selector,where,pipeline,value\ndt,\"(1,1,1,1)\",closed,\"1\"\n");
    const auto open_text = run_cli({"invariant", "open", "--degree", "1,1,1,1", "--format", "text"});
    CHECK(open_text.code == 0);
    CHECK(open_text.out.find("[closed]") != std::string::npos);
    CHECK(open_text.out.find("[sum]") != std::string::npos);
    CHECK(open_text.out.find("[trace]") != std::string::npos);
    CHECK(open_text.out.find("agree\n") != std::string::npos);
}

TEST_CASE("invariant: block-sum selector takes gparams") {
    const auto r = run_cli({"invariant", "g", "--gparams", "1,1,0,0,2"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["agree"] == true);
    CHECK(j["gparams"] == json::array({1, 1, 0, 0, 2}));
    CHECK(j["pipelines"]["closed"] == j["pipelines"]["sum"]);
}

TEST_CASE("invariant: both LMOV assemblies are reported under pipeline all") {
    const auto r = run_cli({"invariant", "lmov", "--degree", "2,2,2,2"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j["pipelines"].size() == 2);
    CHECK(j["pipelines"].contains("closed"));
    CHECK(j["pipelines"].contains("from-open"));
    CHECK(j["agree"] == true);
}

TEST_CASE("invalid invocations exit with code 2") {
    const std::vector<std::vector<std::string>> bad = {
        {"invariant", "log"},                                          // no degree
        {"invariant", "log", "--degree", "1,1,1"},                     // short degree
        {"invariant", "wat", "--degree", "1,1,1,1"},                   // unknown selector
        {"invariant", "g", "--degree", "1,1,1,1"},                     // g needs gparams
        {"invariant", "gv", "--degree", "1,1,1,1", "--pipeline", "sum"},   // no such route
        {"invariant", "lmov", "--degree", "1,1,1,1", "--pipeline", "trace"},
        {"invariant", "log", "--degree", "1,0,1,1", "--pipeline", "trace"},  // vanishing
        {"invariant", "gv", "--degree", "1,0,1,1"},                    // bps needs positive
        {"verify", "nope"},                                            // unknown campaign
        {"verify", "qps", "--max", "-1"},
        {"table", "--selector", "log"},                                // missing --max-d0
        {"table", "--selector", "g", "--max-d0", "2"},                 // not tabulatable
        {"nonsense"},
    };
    for (const auto& args : bad) {
        const auto r = run_cli(args);
        CHECK(r.code == 2);
        CHECK(!r.err.empty());
    }
}

TEST_CASE("help exits cleanly") {
    const auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("invariant") != std::string::npos);
    CHECK(r.out.find("verify") != std::string::npos);
    CHECK(r.out.find("table") != std::string::npos);
}

TEST_CASE("verify: campaigns run and report") {
    const auto qps = run_cli({"verify", "qps", "--max", "2", "--format", "text"});
    CHECK(qps.code == 0);
    CHECK(qps.out.find("checked: 81") != std::string::npos);
    CHECK(qps.out.find("PASS") != std::string::npos);

    const auto sym = run_cli({"verify", "symmetry", "--max-d0", "2", "--box", "2,2,2,2,4"});
    CHECK(sym.code == 0);
    CHECK(json::parse(sym.out)["pass"] == true);

    const auto rec = run_cli({"verify", "recursion", "--box", "2,2,2,2,4", "--format", "csv"});
    CHECK(rec.code == 0);
    CHECK(rec.out == "campaign,checked,failed,pass\nrecursion,180,0,true\n");
}

TEST_CASE("a failing verification maps to exit code 1") {
    qvl::VerifyReport rep;
    rep.campaign = "synthetic";
    rep.checked = 7;
    rep.failed = 1;
    rep.first_counterexample = "(1,1,1,1)";
    CHECK(qvl::cli::exit_for(rep) == 1);
    rep.failed = 0;
    CHECK(qvl::cli::exit_for(rep) == 0);
}

TEST_CASE("identical invocations produce byte-identical output") {
    const std::vector<std::vector<std::string>> invocations = {
        {"invariant", "log", "--degree", "3,2,2,1"},
        {"verify", "qps", "--max", "2"},
        {"table", "--selector", "gv", "--max-d0", "2", "--format", "csv"},
    };
    for (const auto& args : invocations) {
        const auto a = run_cli(args);
        const auto b = run_cli(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("table: rows enumerate admissible classes and match the library") {
    const auto r = run_cli({"table", "--selector", "gv", "--max-d0", "2", "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "d0,d1,d2,d3,value");
    const auto expected = positive_rows(2);
    size_t i = 0;
    while (std::getline(lines, line)) {
        REQUIRE(i < expected.size());
        std::ostringstream want;
        want << expected[i].d0 << "," << expected[i].d1 << "," << expected[i].d2 << ","
             << expected[i].d3 << ",\"" << qvl::gv(expected[i]).str() << "\"";
        CHECK(line == want.str());
        ++i;
    }
    CHECK(i == expected.size());
}

TEST_CASE("table: json rows carry degree/value pairs") {
    const auto r = run_cli({"table", "--selector", "log", "--max-d0", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["selector"] == "log");
    REQUIRE(j["rows"].is_array());
    CHECK(j["rows"].size() == 5);  // includes the vanishing classes
    for (const auto& row : j["rows"]) {
        CHECK(row["degree"].is_array());
        CHECK(row["value"].contains("s_terms"));
    }
}

TEST_CASE("table: cache round-trip changes no output byte") {
    const fs::path cache = fresh_temp_file("qvl-cache-rt");
    const std::vector<std::string> args = {"table",        "--selector", "lmov", "--max-d0", "2",
                                           "--format",     "csv",        "--cache", cache.string()};
    const size_t n = positive_rows(2).size();

    const auto first = run_cli(args);
    REQUIRE(first.code == 0);
    CHECK(first.err.find("cache: 0 hits, " + std::to_string(n) + " misses") != std::string::npos);
    REQUIRE(fs::exists(cache));

    const auto second = run_cli(args);
    REQUIRE(second.code == 0);
    CHECK(second.out == first.out);
    CHECK(second.err.find("cache: " + std::to_string(n) + " hits, 0 misses") != std::string::npos);

    {
        std::ifstream in(cache);
        const json stored = json::parse(in);
        CHECK(stored.size() == n);
        CHECK(stored.contains("1,1,1,1:lmov"));
    }

    // one malformed entry is recomputed, the rest still hit
    {
        std::ifstream in(cache);
        json stored = json::parse(in);
        stored["1,1,1,1:lmov"] = 42;
        std::ofstream out(cache, std::ios::trunc);
        out << stored.dump();
    }
    const auto third = run_cli(args);
    REQUIRE(third.code == 0);
    CHECK(third.out == first.out);
    CHECK(third.err.find("cache: " + std::to_string(n - 1) + " hits, 1 misses") != std::string::npos);

    // an unreadable cache file is ignored with a warning, never fatal
    {
        std::ofstream out(cache, std::ios::trunc);
        out << "{{{ not json";
    }
    const auto fourth = run_cli(args);
    REQUIRE(fourth.code == 0);
    CHECK(fourth.out == first.out);
    CHECK(fourth.err.find("ignoring unreadable") != std::string::npos);

    fs::remove(cache);
}

TEST_CASE("table: QVL_CACHE is the fallback cache location") {
    const fs::path cache = fresh_temp_file("qvl-cache-env");
    REQUIRE(::setenv("QVL_CACHE", cache.string().c_str(), 1) == 0);
    const auto r = run_cli({"table", "--selector", "dt", "--max-d0", "1"});
    ::unsetenv("QVL_CACHE");
    REQUIRE(r.code == 0);
    CHECK(fs::exists(cache));
    CHECK(r.err.find("misses") != std::string::npos);
    fs::remove(cache);
}

TEST_CASE("table: worker count does not change the output") {
    const auto serial = run_cli({"table", "--selector", "log", "--max-d0", "3"});
    const auto parallel = run_cli({"table", "--selector", "log", "--max-d0", "3", "--jobs", "4"});
    REQUIRE(serial.code == 0);
    REQUIRE(parallel.code == 0);
    CHECK(serial.out == parallel.out);
}

TEST_CASE("installed binary smoke test") {
    const std::string base = "\"" QVL_CLI_PATH "\"";
    auto exit_code = [&](const std::string& tail) {
        const int status = std::system((base + " " + tail + " > /dev/null 2>&1").c_str());
        REQUIRE(status != -1);
        REQUIRE(WIFEXITED(status));
        return WEXITSTATUS(status);
    };
    CHECK(exit_code("invariant gv --degree 1,1,1,1 --format text") == 0);
    CHECK(exit_code("verify qps --max 1") == 0);
    CHECK(exit_code("invariant log --degree 1,1") == 2);
    CHECK(exit_code("bogus") == 2);
}
