#include "hlf/enumeration.hpp"
#include "hlf/rational.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string base =
        "/tmp/hlf_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++);
    const std::string out_path = base + ".out";
    const std::string err_path = base + ".err";
    const std::string cmd =
        std::string(HLF_BIN) + " " + args + " >" + out_path + " 2>" + err_path;
    const int status = std::system(cmd.c_str());
    RunResult r;
    if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

std::string golden(const std::string& name) {
    return slurp(std::string(GOLDEN_DIR) + "/" + name);
}

std::vector<std::string> split(const std::string& text, char delim) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, delim)) out.push_back(item);
    return out;
}

}  // namespace

TEST_CASE("frozen command outputs are reproduced byte for byte") {
    const RunResult inv = run_cli("invariants --g 2 --n 4 --sep 1:3");
    CHECK(inv.code == 0);
    CHECK(inv.out == golden("invariants_g2_n4_s3.json"));

    const RunResult solve = run_cli("solve --genus 2 --k-max 1 --t-max 1");
    CHECK(solve.code == 0);
    CHECK(solve.out == golden("solve_g2_k1_t1.csv"));
    CHECK(solve.out == "k,t,n,s,lambda\n1,1,4,3,5/1\n");

    const RunResult check = run_cli("check --g 2 --n 1 --sep 1:0 --checks C09");
    CHECK(check.code == 3);
    CHECK(check.out == golden("check_g2_n1_c09.json"));
}

TEST_CASE("invariants json parses and round-trips") {
    const RunResult r = run_cli("invariants --g 2 --n 4 --sep 1:3");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
    CHECK(j["tuple"]["g"] == 2);
    CHECK(j["tuple"]["n"] == 4);
    CHECK(j["invariants"]["slope"] == "5/1");
    CHECK(j["invariants"]["sigma"] == "-3/1");
    CHECK(j["invariants"]["chi_h"] == "0/1");
    CHECK(j["invariants"]["ratio"] == "3/4");
}

TEST_CASE("check json reports verdicts for the whole registry") {
    const RunResult r = run_cli("check --g 2 --n 4 --sep 1:3");
    CHECK(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    REQUIRE(j["checks"].size() == 22);
    for (const auto& c : j["checks"]) {
        const std::string verdict = c["verdict"].get<std::string>();
        CHECK(verdict != "fails");
    }

    const RunResult failing = run_cli("check --g 2 --n 1 --sep 1:0");
    CHECK(failing.code == 3);

    const RunResult suppressed = run_cli("check --g 2 --n 1 --sep 1:0 --realizable");
    CHECK(suppressed.code == 0);
}

TEST_CASE("minimum cycle count check is reachable from the command line") {
    const RunResult ok = run_cli("check --g 2 --n 6 --sep 1:0 --simply-connected --b2plus 1 --checks min_n");
    CHECK(ok.code == 0);
    const auto j = nlohmann::ordered_json::parse(ok.out);
    REQUIRE(j["checks"].size() == 1);
    CHECK(j["checks"][0]["id"] == "min_n");
    CHECK(j["checks"][0]["verdict"] == "holds");

    const RunResult low = run_cli("check --g 2 --n 5 --sep 1:0 --simply-connected --b2plus 1 --checks min_n");
    CHECK(low.code == 3);
}

TEST_CASE("geography rows satisfy the genus-2 surface relation") {
    const RunResult r = run_cli("geography --g-min 2 --g-max 2 --n-max 20 --s-max 40");
    REQUIRE(r.code == 0);

    std::vector<std::string> lines = split(r.out, '\n');
    REQUIRE(!lines.empty());
    CHECK(lines[0] == "g,n,s,x,chi_h,c1sq,slope,ratio,sigma,region");

    hlf::SweepBox box;
    box.g_min = 2;
    box.g_max = 2;
    box.n_max = 20;
    box.s_total_max = 40;
    box.filters = hlf::admissible_filters();
    CHECK(lines.size() - 1 == hlf::collect_admissible(box).size());

    bool saw_sharp_row = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::vector<std::string> f = split(lines[i], ',');
        REQUIRE(f.size() >= 9);
        const hlf::Rational s = hlf::Rational::parse(f[2]);
        const hlf::Rational chi_h = hlf::Rational::parse(f[4]);
        const hlf::Rational c1sq = hlf::Rational::parse(f[5]);
        CHECK(c1sq == hlf::Rational(2) * chi_h + s - hlf::Rational(6));
        if (f[1] == "4" && f[2] == "3") {
            saw_sharp_row = true;
            CHECK(f.size() == 10);
            CHECK(f[6] == "5/1");
            CHECK(f[9] == "III");
        }
    }
    CHECK(saw_sharp_row);
}

TEST_CASE("geography of an empty box is just the header") {
    const RunResult r = run_cli("geography --g-min 2 --g-max 2 --n-max 3 --s-max 40");
    CHECK(r.code == 0);
    CHECK(r.out == "g,n,s,x,chi_h,c1sq,slope,ratio,sigma,region\n");
}

TEST_CASE("parametric family tables match their closed forms") {
    const RunResult boundary = run_cli("solve --genus 2 --boundary-ratios --m-max 5");
    CHECK(boundary.code == 0);
    CHECK(boundary.out == "m,ratio\n0,3/4\n1,7/6\n2,11/8\n3,3/2\n4,19/12\n5,23/14\n");

    const RunResult g3 = run_cli("solve --genus 3 --m-max 1");
    CHECK(g3.code == 0);
    CHECK(g3.out == "m,k,n,s,ratio,lambda\n0,1,4,2,1/2,6/1\n1,5,12,13,13/12,7/1\n");

    const RunResult js = run_cli("solve --genus 2 --k-max 1 --t-max 1 --format json");
    REQUIRE(js.code == 0);
    const auto j = nlohmann::ordered_json::parse(js.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["k"] == 1);
    CHECK(j[0]["n"] == 4);
    CHECK(j[0]["s"] == 3);
    CHECK(j[0]["lambda"] == "5/1");
}

TEST_CASE("sweep command reports tallies and writes files") {
    const std::string box_args =
        "sweep --g-min 2 --g-max 2 --n-max 6 --s-max 6 --filters basic --checks C05 --cap 2";
    const RunResult r = run_cli(box_args);
    CHECK(r.code == 3);
    CHECK(r.err == "sweep: 42 tuples, 42 admissible, 23 failures\n");
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["checks"]["C05"]["fail"] == 23);
    CHECK(j["checks"]["C05"]["capped"] == true);
    CHECK(j["checks"]["C05"]["counterexamples"].size() == 2);
    CHECK(j["total_failures"] == 23);

    const std::string path = "/tmp/hlf_cli_report_" + std::to_string(::getpid()) + ".json";
    const RunResult to_file = run_cli(box_args + " --out " + path);
    CHECK(to_file.code == 3);
    CHECK(to_file.out.empty());
    CHECK(slurp(path) == r.out);
    std::remove(path.c_str());

    const RunResult clean =
        run_cli("sweep --g-min 2 --g-max 2 --n-max 6 --s-max 6 --threads 2");
    CHECK(clean.code == 0);
    CHECK(clean.err == "sweep: 42 tuples, 2 admissible, 0 failures\n");
}

TEST_CASE("malformed invocations exit with code 2 and a named cause") {
    const std::pair<const char*, const char*> cases[] = {
        {"invariants --g 1 --n 4", "genus must satisfy g >= 2"},
        {"invariants --g 2 --n 0", "need n >= 1"},
        {"invariants --g 2 --n 4 --sep 5:1", "out of range"},
        {"invariants --g 2 --n x4", "must be a nonnegative decimal integer"},
        {"invariants --g 2 --n 4 --sep 1:3,1:2", "given twice"},
        {"check --g 2 --n 4 --sep 1:3 --checks C99", "unknown check id"},
        {"sweep --g-min 2 --g-max 2 --n-max 4 --s-max 2 --kernel sse9", "unknown kernel"},
        {"sweep --g-min 2 --g-max 2 --n-max 4 --s-max 2 --filters magic", "unknown filter"},
        {"solve --genus 4", "--genus must be 2 or 3"},
        {"solve --genus 2", "--k-max and --t-max"},
    };
    for (const auto& [args, needle] : cases) {
        CAPTURE(args);
        const RunResult r = run_cli(args);
        CHECK(r.code == 2);
        CHECK(r.err.find("error: ") != std::string::npos);
        CHECK(r.err.find(needle) != std::string::npos);
    }

    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("invariants --g 2").code == 2);
    CHECK(run_cli("solve --genus 2 --k-max 1 --t-max 1 --format yaml").code == 2);

    const RunResult help = run_cli("--help");
    CHECK(help.code == 0);
    CHECK(help.out.find("invariants") != std::string::npos);
    CHECK(help.out.find("sweep") != std::string::npos);
}
