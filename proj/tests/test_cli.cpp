#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef HOOKDIST_CLI_PATH
#error "HOOKDIST_CLI_PATH must name the hookdist executable"
#endif

namespace {

struct Run {
    int exit_code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " '" HOOKDIST_CLI_PATH "' " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

int line_count(const std::string& s) {
    int n = 0;
    for (char c : s) n += c == '\n' ? 1 : 0;
    return n;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("enumerate") {
    CHECK(line_count(run("enumerate 6").out) == 11);
    CHECK(run("enumerate 8 --self-conjugate").out == "4,2,1,1\n3,3,2\n");
    CHECK(run("enumerate 0").out == "()\n");
    CHECK(run("enumerate -n 3").out == "3\n2,1\n1,1,1\n");
    CHECK(run("enumerate -1").exit_code == 2);
}

TEST_CASE("dist") {
    const Run six = run("dist -t 2 -n 6 --precision 3");
    CHECK(six.exit_code == 0);
    CHECK(six.out == "m,count\n0,1\ntotal,1\nmean,0.000\nvariance,0.000\n");
    CHECK(run("dist -t 2 -n 3").out.rfind("m,count\n0,1\ntotal,1\n", 0) == 0);
    CHECK(run("dist -t 1 -n 0").out.rfind("m,count\n0,1\ntotal,1\n", 0) == 0);
    CHECK(run("dist -t 1 -n 3 --format json").out ==
          "{\"t\":1,\"n\":3,\"coeffs\":[[2,\"1\"]],\"total\":\"1\",\"mean\":\"2\",\"variance\":\"0\"}\n");
    CHECK(run("dist -t 2 -n 2").out == "m,count\ntotal,0\nmean,\nvariance,\n");
    CHECK(run("dist -t 2 -n 10 --truncation 5").exit_code == 2);
    CHECK(run("dist -t 0 -n 4").exit_code == 2);
    CHECK(run("dist -t 2 -n 4 --format xml").exit_code == 2);
}

TEST_CASE("table1") {
    const Run one = run("table1 --nvals 100");
    CHECK(one.exit_code == 0);
    CHECK(one.out.rfind("n,mu_measured,mu_asymptotic,ratio\n100,", 0) == 0);
    CHECK(line_count(one.out) == 2);
    CHECK(run("table1 --nvals 0").exit_code == 2);
    CHECK(run("table1 --nvals 2").exit_code == 2);
    CHECK(line_count(run("table1 --nvals 100,500,1000").out) == 4);
}

TEST_CASE("figure2") {
    const Run r = run("figure2 -t 2 -n 400");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("m,x,y\n", 0) == 0);
    CHECK(run("figure2 -t 1 -n 3").exit_code == 2);
    CHECK(run("figure2 -t 2 -n 400 --precision 20").exit_code == 2);
}

TEST_CASE("asymptotics and cauchy") {
    const Run a = run("asymptotics -t 2 -n 100");
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("b_t,0.641") != std::string::npos);
    CHECK(a.out.find("mu,") != std::string::npos);
    CHECK(run("asymptotics -t 2 -n 100 --T0 -1").exit_code == 2);
    CHECK(run("asymptotics -t 2 -n 100 --T0 abc").exit_code == 2);
    const Run c = run("cauchy -t 2 -n 20 --T0 3/2 --format json");
    CHECK(c.exit_code == 0);
    CHECK(c.out.find("\"exact\":") != std::string::npos);
    CHECK(run("cauchy -t 2 -n 20 --samples 100").exit_code == 2);
}

TEST_CASE("verify") {
    const Run ids = run("verify --suite identities");
    CHECK(ids.exit_code == 0);
    CHECK(ids.out.find("FAIL") == std::string::npos);
    const Run asym = run("verify --suite asymptotics");
    const bool any_failed = asym.out.find("FAIL") != std::string::npos;
    CHECK(asym.exit_code == (any_failed ? 1 : 0));
    CHECK(run("verify --suite bogus").exit_code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
    CHECK(run("dist -t 2 -n 5 --threads 0").exit_code == 2);
}

TEST_CASE("output is byte-identical across thread counts") {
    const std::string one = run("figure2 -t 3 -n 300 --threads 1").out;
    CHECK(run("figure2 -t 3 -n 300 --threads 4").out == one);
    CHECK(run("figure2 -t 3 -n 300", "HOOKDIST_THREADS=3").out == one);
    CHECK(run("dist -t 2 -n 300 --threads 5").out == run("dist -t 2 -n 300 --threads 1").out);
    CHECK(run("cauchy -t 3 -n 30 --threads 4").out == run("cauchy -t 3 -n 30 --threads 1").out);
}

TEST_CASE("--output writes the file instead of stdout") {
    const auto dir = std::filesystem::temp_directory_path() / "hookdist_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "t.csv";
    const Run r = run("table1 --nvals 100 --output '" + path.string() + "'");
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(path) == run("table1 --nvals 100").out);
    std::filesystem::remove_all(dir);
}
