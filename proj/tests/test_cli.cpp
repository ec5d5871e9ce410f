#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "genius/cli.hpp"
#include "genius/config.hpp"
#include "genius/report.hpp"

using namespace genius;
using json = nlohmann::ordered_json;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
    std::vector<json> lines;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "genius");
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line[0] == '{') {
            r.lines.push_back(json::parse(line));
        }
    }
    return r;
}

std::string tmp_file(const std::string& name, const std::string& content) {
    const std::string path = std::string(GENIUS_TEST_TMP) + "/" + name;
    std::ofstream(path) << content;
    return path;
}

std::string without_elapsed(std::string out) {
    std::istringstream in(out);
    std::string result;
    for (std::string line; std::getline(in, line);) {
        json j = json::parse(line);
        j.erase("elapsed_ms");
        result += j.dump() + "\n";
    }
    return result;
}

}  // namespace

TEST_CASE("report records") {
    CheckReport r;
    r.check = "demo";
    r.params = json{{"p", 3}};
    r.status = Status::fail;
    CHECK_THROWS_AS(r.to_line(), std::logic_error);
    r.witness = "F_2 has u2^2";
    r.seed = 7;
    r.detail = json{{"x", 1}};
    const json j = json::parse(r.to_line());
    CHECK(j["status"] == "fail");
    CHECK(j["seed"] == 7);
    CHECK(j["tool_version"] == kToolVersion);
    CHECK(CheckReport::from_json(j).to_json() == j);

    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) {
        keys.push_back(k);
    }
    CHECK(keys == std::vector<std::string>{"check", "params", "status", "witness", "elapsed_ms", "seed",
                                          "tool_version", "detail"});
    CHECK(parse_status("inconclusive") == Status::inconclusive);
    CHECK_THROWS(parse_status("maybe"));
}

TEST_CASE("exit codes from statuses") {
    using S = Status;
    CHECK(exit_code_for({}) == 0);
    CHECK(exit_code_for({S::pass, S::pass}) == 0);
    CHECK(exit_code_for({S::pass, S::fail}) == 1);
    CHECK(exit_code_for({S::inconclusive, S::fail}) == 1);
    CHECK(exit_code_for({S::pass, S::inconclusive}) == 3);
}

TEST_CASE("config parsing") {
    const Config c = parse_config("# comment\nh_max = 3   # trailing\n\nr=sym\nh-max=2\n", "f.cfg");
    REQUIRE(c.entries.size() == 2);
    CHECK(c.entries[0].key == "h_max");
    CHECK(c.entries[0].value == "2");
    CHECK(c.find("r")->value == "sym");
    REQUIRE(c.warnings.size() == 1);
    CHECK(c.warnings[0] == "f.cfg:5: duplicate key 'h_max' overrides line 2");
    CHECK(parse_config("").entries.empty());
    try {
        parse_config("a=1\nnot a pair\n", "f.cfg");
        FAIL("expected a parse error");
    } catch (const ConfigError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("f.cfg:2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config("key=\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("bad key=1\n"), ConfigError);
}

TEST_CASE("selftest passes") {
    const Run r = run({"selftest"});
    CHECK(r.code == 0);
    CHECK(r.lines.size() == 7);
    for (const json& j : r.lines) {
        CHECK(j["status"] == "pass");
        CHECK(CheckReport::from_json(j).to_json() == j);
    }
}

TEST_CASE("pass, fail and inconclusive runs") {
    const Run pass = run({"check-conj1", "--p-max", "6"});
    CHECK(pass.code == 0);
    CHECK(pass.lines.size() == 5);

    const Run fail = run({"graph", "census", "--r", "3", "--v", "14", "--mode", "exhaustive"});
    CHECK(fail.code == 1);
    REQUIRE(fail.lines.size() == 1);
    CHECK(fail.lines[0]["status"] == "fail");
    CHECK(fail.lines[0]["witness"].get<std::string>().find("nside=7 r=3") != std::string::npos);
    CHECK(fail.lines[0]["detail"]["failing"] == 1);
    CHECK(fail.lines[0]["detail"]["labeled_count"] == "68938800");

    const Run inconclusive = run({"check-conj2", "--i", "4"});
    CHECK(inconclusive.code == 3);
    CHECK(inconclusive.lines[0]["status"] == "inconclusive");

    const Run mixed = run({"check-conj2", "--i", "2,4"});
    CHECK(mixed.code == 3);
    CHECK(mixed.lines.size() == 2);

    const Run scaled = run({"pernici", "--r", "4", "--h-max", "2", "--u-scale", "2"});
    CHECK(scaled.code == 1);
    CHECK(scaled.lines[0]["witness"].is_string());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"selftest", "--bogus"}).code == 2);
    CHECK(run({"solve-f", "--p", "1"}).code == 2);
    CHECK(run({"selftest", "--threads", "0"}).code == 2);
    CHECK(run({"chapman", "--g-max", "40"}).code == 2);
    CHECK(run({"graph", "census", "--r", "3", "--v", "13"}).code == 2);
    CHECK(run({"graph", "positivity", "--graph", "nside=2 r=1 rows=11,00"}).code == 2);
    CHECK(run({"awesome", "--z", "1,1"}).code == 2);
    CHECK(run({"check-conj2", "--i", "2", "--p-window", "2..5"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("solve-f emits F") {
    const Run r = run({"solve-f", "--p", "3", "--emit"});
    CHECK(r.code == 0);
    REQUIRE(r.lines.size() == 1);
    CHECK(r.lines[0]["detail"].dump().find("d1*u2 + d2 + u3") != std::string::npos);
}

TEST_CASE("graph positivity of one graph") {
    const Run ok = run({"graph", "positivity", "--graph", "nside=3 r=3 rows=111,111,111"});
    CHECK(ok.code == 0);
    const Run bad = run({"graph", "positivity", "--graph",
                         "nside=7 r=3 rows=1110000,1001100,1000011,0101010,0100101,0011001,0010110"});
    CHECK(bad.code == 1);
}

TEST_CASE("reports are reproducible") {
    const std::vector<std::string> args{"chapman", "--g-max", "5", "--symbolic-g-max", "3", "--seed", "9"};
    const Run a = run(args);
    std::vector<std::string> more = args;
    more.insert(more.end(), {"--threads", "3"});
    const Run b = run(more);
    CHECK(a.code == 0);
    CHECK(without_elapsed(a.out) == without_elapsed(b.out));
    const Run c = run({"chapman", "--g-max", "5", "--symbolic-g-max", "3", "--seed", "10"});
    CHECK(without_elapsed(a.out) != without_elapsed(c.out));

    const Run s1 = run({"graph", "census", "--r", "3", "--v", "16", "--mode", "sample", "--count", "50", "--seed", "4"});
    const Run s2 = run({"--seed", "4", "graph", "census", "--r", "3", "--v", "16", "--mode", "sample", "--count", "50"});
    CHECK(without_elapsed(s1.out) == without_elapsed(s2.out));
    CHECK(s1.lines[0]["seed"] == 4);
}

TEST_CASE("output file appends") {
    const std::string path = tmp_file("append.jsonl", "");
    CHECK(run({"--out", path, "check-conj1", "--p-max", "3"}).code == 0);
    CHECK(run({"check-conj1", "--p-max", "3", "--out", path}).code == 0);
    std::ifstream in(path);
    int lines = 0;
    for (std::string line; std::getline(in, line);) {
        CHECK(json::accept(line));
        ++lines;
    }
    CHECK(lines == 4);
}

TEST_CASE("config precedence") {
    const std::string empty = tmp_file("empty.cfg", "");
    const Run defaults = run({"--config", empty, "pernici", "--r", "3", "--h-max", "2"});
    CHECK(defaults.code == 0);
    CHECK(defaults.lines[0]["params"]["h_max"] == 2);

    const std::string cfg = tmp_file("h2.cfg", "# pernici settings\nh_max=2\nr = 3\n");
    const Run from_file = run({"pernici", "--config", cfg});
    CHECK(from_file.code == 0);
    CHECK(from_file.lines[0]["params"]["h_max"] == 2);
    CHECK(from_file.lines[0]["params"]["r"] == "3");

    const Run flag_wins = run({"pernici", "--config", cfg, "--h-max", "1"});
    CHECK(flag_wins.lines[0]["params"]["h_max"] == 1);

    const std::string dup = tmp_file("dup.cfg", "h_max=1\nr=3\nh_max=2\n");
    const Run last_wins = run({"pernici", "--config", dup});
    CHECK(last_wins.code == 0);
    CHECK(last_wins.lines[0]["params"]["h_max"] == 2);
    CHECK(last_wins.err.find("warning") != std::string::npos);
    CHECK(last_wins.err.find("duplicate key 'h_max'") != std::string::npos);

    const std::string broken = tmp_file("broken.cfg", "h_max=2\n\nthis is not valid\n");
    const Run parse_error = run({"pernici", "--config", broken});
    CHECK(parse_error.code == 2);
    CHECK(parse_error.err.find("broken.cfg:3") != std::string::npos);

    const std::string unknown = tmp_file("unknown.cfg", "p_max=3\n");
    const Run wrong_key = run({"pernici", "--config", unknown});
    CHECK(wrong_key.code == 2);
    CHECK(wrong_key.err.find("unknown.cfg:1") != std::string::npos);

    const std::string global = tmp_file("global.cfg", "seed=5\ncount=20\nmode=sample\nv=16\nr=3\n");
    const Run globals = run({"graph", "census", "--config", global});
    CHECK(globals.lines[0]["seed"] == 5);
    CHECK(globals.lines[0]["params"]["count"] == 20);

    CHECK(run({"selftest", "--config", std::string(GENIUS_TEST_TMP) + "/missing.cfg"}).code == 2);
}
