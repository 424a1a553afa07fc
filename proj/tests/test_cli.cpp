#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(TUNNELSPLIT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("analyze emits a complete json report") {
    const auto r = run("analyze \"(q^2-1)^2\" --hbar 0.2 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["input"]["potential"] == "(q^2-1)^2");
    CHECK(j["profile"]["a"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(j["semiclassical"]["epsilon"].get<double>() == doctest::Approx(64.0).epsilon(1e-9));
    CHECK(j["semiclassical"]["delta_e"].get<double>() ==
          doctest::Approx(3.861445419498e-4).epsilon(1e-9));
    CHECK(j["time_budget"]["period_eq7"].get<double>() ==
          doctest::Approx(j["semiclassical"]["period"].get<double>()).epsilon(1e-11));
    CHECK(j.contains("wkb_tail"));
}

TEST_CASE("analyze output is deterministic byte for byte") {
    const auto a = run("analyze \"(q^2-1)^2\" --hbar 0.25 --format json");
    const auto b = run("analyze \"(q^2-1)^2\" --hbar 0.25 --format json");
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("analyze table format mentions every block") {
    const auto r = run("analyze \"(q^2-1)^2\" --hbar 0.2");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("profile") != std::string::npos);
    CHECK(r.output.find("time budget") != std::string::npos);
    CHECK(r.output.find("semiclassical") != std::string::npos);
    CHECK(r.output.find("wkb tail") != std::string::npos);
}

TEST_CASE("verify passes in the semiclassical regime") {
    const auto r = run("verify \"(q^2-1)^2\" --hbar 0.2 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["pass"] == true);
    CHECK(j["checks"].size() == 7);
    for (const auto& [name, verdict] : j["checks"].items()) CHECK(verdict == "pass");
    CHECK(j["values"]["ratio_semi_exact"].get<double>() ==
          doctest::Approx(1.128091982609).epsilon(1e-6));
}

TEST_CASE("verify fails with exit code 3 outside the asymptotic window") {
    const auto r = run("verify \"(q^2-1)^2\" --hbar 0.4 --format json");
    CHECK(r.exit_code == 3);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["pass"] == false);
    CHECK(j["checks"]["delta_ratio_semi_exact"] == "fail");
}

TEST_CASE("sweep emits one csv row per value plus a header") {
    const auto r = run(
        "sweep \"(q^2-1)^2\" --sweep-param hbar --sweep-values 0.4,0.3,0.2,-1 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(count_lines(r.output) == 5);
    CHECK(r.output.rfind("param,omega,P,S0,epsilon,S,delta_e_semi,delta_e_herring,"
                         "delta_e_exact,ratio_semi_exact,flip_rate,error\n", 0) == 0);
    CHECK(r.output.find("hbar>0 required") != std::string::npos);
}

TEST_CASE("invalid expressions exit with code 2 and a located message") {
    const auto r = run("analyze \"q^^2\"");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("offset 2") != std::string::npos);
}

TEST_CASE("asymmetric potential exits with code 2") {
    const auto r = run("analyze \"q^3\"");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("V(q) != V(-q)") != std::string::npos);
}

TEST_CASE("barrier below the ground reference exits with code 2") {
    const auto r = run("analyze \"(q^2-1)^2\" --hbar 10");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("no tunnelling regime") != std::string::npos);
}

TEST_CASE("missing arguments and bad flags exit with code 2") {
    CHECK(run("analyze").exit_code == 2);
    CHECK(run("analyze \"(q^2-1)^2\" --hbar -1").exit_code == 2);
    CHECK(run("analyze \"(q^2-1)^2\" --format yaml").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
    const auto r = run("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("analyze") != std::string::npos);
    CHECK(r.output.find("verify") != std::string::npos);
    CHECK(r.output.find("sweep") != std::string::npos);
}
