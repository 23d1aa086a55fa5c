#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

using nlohmann::json;

struct CmdResult {
    std::string out;
    int code;
};

CmdResult run_raw(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

// stdout only; diagnostics are discarded
CmdResult run(const std::string& args) {
    return run_raw(std::string(ROTORBIT_CLI_PATH) + " " + args + " 2>/dev/null");
}

// stderr only
CmdResult run_err(const std::string& args) {
    return run_raw(std::string(ROTORBIT_CLI_PATH) + " " + args + " 2>&1 1>/dev/null");
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

}  // namespace

TEST_CASE("orbit: text table lists the rotation orbit in order") {
    const CmdResult r = run("orbit 1011110 --m 3");
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 11);  // header, 9 rows, size line
    CHECK(tokens_of(lines[0]) == std::vector<std::string>{"k", "word"});
    const std::vector<std::string> expected = {"1011110", "1111001", "1001111",
                                               "0111101", "1111010", "1010111",
                                               "1011101", "1110101", "0101111"};
    for (std::size_t k = 0; k < expected.size(); ++k) {
        const auto toks = tokens_of(lines[k + 1]);
        REQUIRE(toks.size() == 2);
        CHECK(toks[0] == std::to_string(k));
        CHECK(toks[1] == expected[k]);
    }
    CHECK(lines.back() == "orbit size 9");

    const CmdResult tiny = run("orbit 1 --m 1");
    CHECK(tiny.code == 0);
    CHECK(lines_of(tiny.out).size() == 3);
}

TEST_CASE("orbit: encoding columns") {
    const CmdResult r = run("orbit 1011110 --m 3 --encoding");
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    CHECK(tokens_of(lines[0]) ==
          std::vector<std::string>{"k", "word", "ore", "rw", "qw", "bqw"});
    CHECK(tokens_of(lines[1]) ==
          std::vector<std::string>{"0", "1011110", "140", "110", "010", "010"});
    CHECK(tokens_of(lines[2]) ==
          std::vector<std::string>{"1", "1111001", "401", "101", "100", "100"});
}

TEST_CASE("orbit: json round-trips byte for byte") {
    const CmdResult r = run("orbit 1011110 --m 3 --format json");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["command"] == "orbit");
    CHECK(j["params"]["m"] == 3);
    CHECK(j["params"]["word"] == "1011110");
    REQUIRE(j["rows"].size() == 9);
    CHECK(j["rows"][0]["word"] == "1011110");
    CHECK(j["rows"][8]["word"] == "0101111");
    CHECK(j["totals"]["orbit_size"] == 9);
    CHECK(j.dump(2) + "\n" == r.out);
}

TEST_CASE("freq: the cumulative-sum grid of 1011110") {
    const CmdResult r = run("freq 1011110 --m 3");
    REQUIRE(r.code == 0);
    const std::vector<std::vector<long long>> grid = {
        {9, 2, 0, 0, 0, 0, 0, 0}, {0, 7, 6, 2, 0, 0, 0, 0}, {0, 0, 3, 4, 3, 0, 0, 0},
        {0, 0, 0, 3, 4, 3, 0, 0}, {0, 0, 0, 0, 2, 6, 7, 0}, {0, 0, 0, 0, 0, 0, 2, 9},
    };
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 6);
    for (std::size_t s = 0; s < 6; ++s) {
        const auto toks = tokens_of(lines[s]);
        REQUIRE(toks.size() == 8);
        for (std::size_t j = 0; j < 8; ++j) CHECK(std::stoll(toks[j]) == grid[s][j]);
    }

    // suffix sums draw the same grid
    const CmdResult right = run("freq 1011110 --m 3 --right");
    CHECK(right.code == 0);
    CHECK(right.out == r.out);

    const CmdResult csv = run("freq 1011110 --m 3 --format csv");
    CHECK(lines_of(csv.out)[0] == "9,2,0,0,0,0,0,0");

    const CmdResult col = run("freq 1011110 --m 3 --j 0");
    CHECK(tokens_of(lines_of(col.out)[0]) ==
          std::vector<std::string>{"9", "0", "0", "0", "0", "0"});
}

TEST_CASE("decompose: censuses the three state spaces") {
    const CmdResult rho = run("decompose --n 7 --m 3 --space rho");
    REQUIRE(rho.code == 0);
    const auto rho_lines = lines_of(rho.out);
    REQUIRE(rho_lines.size() == 28);  // header + 26 orbits + totals
    CHECK(tokens_of(rho_lines[0]) ==
          std::vector<std::string>{"zeros", "word", "bqw", "rw", "period"});
    CHECK(rho_lines.back() == "26 orbits, 128 states");

    const json j = json::parse(run("decompose --n 7 --m 3 --space rho --format json").out);
    long long total = 0, max_period = 0, sixteens = 0;
    for (const auto& row : j["rows"]) {
        total += row["period"].get<long long>();
        max_period = std::max(max_period, row["period"].get<long long>());
        if (row["period"] == 16) ++sixteens;
    }
    CHECK(total == 128);
    CHECK(max_period == 16);
    CHECK(sixteens == 1);
    CHECK(j["totals"]["orbits"] == 26);

    const CmdResult tog = run("decompose --n 14 --m 3 --space toggle");
    REQUIRE(tog.code == 0);
    CHECK(lines_of(tog.out).back() == "7 orbits, 131 states");

    const CmdResult z = run("decompose --n 4 --m 2 --space z --format csv");
    REQUIRE(z.code == 0);
    CHECK(lines_of(z.out)[0] == "rep,period");

    // identical invocations produce identical bytes
    CHECK(run("decompose --n 7 --m 3 --space rho --format json").out == j.dump(2) + "\n");
}

TEST_CASE("verify: sweeps report one verdict per parameter pair") {
    const CmdResult r = run("verify theorem1 --n 1..6 --m 1..3");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("passed") != std::string::npos);

    const json j = json::parse(run("verify snake --N 1..8 --m 1..3 --format json").out);
    CHECK(j["totals"]["failed"] == 0);
    CHECK(j["totals"]["experimental"] == false);
    for (const auto& v : j["verdicts"]) CHECK(v["pass"] == true);
    // schema: exactly these four top-level keys
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"command", "params", "totals", "verdicts"});

    const CmdResult z = run("verify z-conjecture --N 1..6 --m 2..3");
    REQUIRE(z.code == 0);
    CHECK(z.out.find("EXPERIMENTAL") != std::string::npos);

    // widths past 7 expose asymmetric boards; the sweep must say so and
    // exit with the verification-failure code
    const CmdResult zbad = run("verify z-conjecture --N 8..8 --m 3..3");
    CHECK(zbad.code == 1);
    CHECK(zbad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("board: labeled snake grid") {
    const CmdResult r = run("board 10000000001000 --m 3");
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() > 31);
    CHECK(lines[0].size() == 14);
    CHECK(lines[0][0] == 'A');  // the seed starts its own snake at (0,0)
    CHECK(lines.back() == "period 31, columns 14, 9 snakes");

    const json j = json::parse(run("board 10000000001000 --m 3 --format json").out);
    CHECK(j["totals"]["snake_count"] == 9);
    CHECK(j["totals"]["period"] == 31);
    CHECK(j["rows"].size() == 31);

    // a seed outside the space is a usage error naming the clash
    const CmdResult bad = run("board 1100000 --m 3");
    CHECK(bad.code == 2);
    const CmdResult bad_err = run_err("board 1100000 --m 3");
    CHECK(bad_err.out.find("error") != std::string::npos);
    CHECK(bad_err.out.find("positions 0 and 1") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("orbit").code == 2);                    // missing word and m
    CHECK(run("nonsense").code == 2);                 // unknown subcommand
    CHECK(run("orbit 1021 --m 1").code == 2);         // foreign character
    CHECK(run("orbit 101 --m 9").code == 2);          // m out of range
    CHECK(run("decompose --m 3 --space rho").code == 2);  // no length given
    CHECK(run("verify theorem1 --n 0..4").code == 2);     // range below 1
    CHECK(run("verify theorem1 --format csv").code == 2); // csv is tables only
    CHECK(run("decompose --n 25 --m 3 --space rho").code == 2);  // cap without override
    CHECK(run("--help").code == 0);
}
