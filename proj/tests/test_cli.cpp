#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

// QMCLI_PATH is injected by the build as the location of the cli binary

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(QMCLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int rc = pclose(p);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

} // namespace

TEST_CASE("verlinde cross-route table") {
    auto r = run("verlinde --g 1 --k 3 --l all");
    CHECK(r.status == 0);
    CHECK(r.out.find("{\"l\":0,\"direct\":\"4\",\"residue\":\"4\",\"equal\":true}") !=
          std::string::npos);
    auto one = run("--format csv verlinde --g 1 --k 2 --l 2");
    CHECK(one.status == 0);
    CHECK(one.out == "l,direct,residue,equal\n2,1,1,true\n");
}

TEST_CASE("verlinde rejects odd weights") {
    auto r = run("verlinde --g 1 --k 2 --l 3");
    CHECK(r.status == 2);
    CHECK(r.out.find("even") != std::string::npos);
}

TEST_CASE("witten exact value and truncation error") {
    auto r = run("--format csv witten --g 2 --x 1/3");
    CHECK(r.status == 0);
    CHECK(r.out.find("2/81") != std::string::npos);
}

TEST_CASE("qvolume runs and reports a value") {
    auto r = run("qvolume --g 2 --x 1/3 --q 0.5 --tol 1e-9");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"value\":") != std::string::npos);
}

TEST_CASE("asym differences decrease along the hbar ray") {
    auto r = run("asym --g 1 --x 1/3 --hbar 0.2i,0.1i,0.05i");
    CHECK(r.status == 0); // nonzero exit would mean non-decreasing differences
    CHECK(r.out.find("decay_log_ratio") != std::string::npos);
}

TEST_CASE("asym rejects special parameters and names a witness") {
    auto r = run("asym --g 1 --x 1/4,1/4");
    CHECK(r.status == 2);
    CHECK(r.out.find("eps") != std::string::npos);
}

TEST_CASE("fusion dump contains the expected entry") {
    auto r = run("fusion --op J --a 1 --b 1");
    CHECK(r.status == 0);
    CHECK(r.out.find("s^8*t^1") != std::string::npos);
}

TEST_CASE("trace of the unit element") {
    auto r = run("trace --f unit --x 1/3 --q 0.5");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"route\":") != std::string::npos);
    CHECK(r.out.find("\"normalization\":") != std::string::npos);
}

TEST_CASE("torus product trace") {
    auto r = run("torus --a 1,1 --b -1,-1");
    CHECK(r.status == 0);
    CHECK(r.out.find("s^-4") != std::string::npos);
}

TEST_CASE("check suites pass and unknown suites are usage errors") {
    auto r = run("check all");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"pass\":false") == std::string::npos);
    CHECK(r.out.find("\"suite\":\"ybe\"") != std::string::npos);
    auto bad = run("check nosuch");
    CHECK(bad.status == 2);
}

TEST_CASE("output is deterministic across runs") {
    auto a = run("verlinde --g 2 --k 4 --l all");
    auto b = run("verlinde --g 2 --k 4 --l all");
    CHECK(a.out == b.out);
    auto c = run("qvolume --g 1 --x 1/3 --q 0.4 --tol 1e-10");
    auto d = run("qvolume --g 1 --x 1/3 --q 0.4 --tol 1e-10");
    CHECK(c.out == d.out);
}
