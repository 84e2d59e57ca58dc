#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#include <nlohmann/json.hpp>

#ifndef ZIC_CLI_PATH
#define ZIC_CLI_PATH "zic"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string bin = ZIC_CLI_PATH;
    if (const char* env = std::getenv("ZIC_CLI_BIN")) bin = env;
    std::string cmd = bin + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("det-region emits region vertices as CSV") {
    auto res = run_cli("det-region --m 5 --n 3 --C 1");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "R1,R2\n0,0\n5,0\n5,3\n3,5\n0,5\n");

    auto high = run_cli("det-region --m 4 --n 5 --C 1");
    CHECK(high.exit_code == 0);
    CHECK(high.out.find("4,1\n") != std::string::npos);
    CHECK(high.out.find("2,3\n") != std::string::npos);

    auto nocoop = run_cli("det-region --m 5 --n 3 --C 0");
    CHECK(nocoop.out.find("5,2\n") != std::string::npos);
    CHECK(nocoop.out.find("2,5\n") != std::string::npos);
}

TEST_CASE("det-region JSON carries constraints") {
    auto res = run_cli("det-region --m 5 --n 3 --C 1 --format json");
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["regime"] == "weak_moderate");
    CHECK(j["constraints"].size() == 3);
    CHECK(j["vertices"].size() == 5);
}

TEST_CASE("det-region golden output is byte-stable") {
    auto a = run_cli("det-region --m 5 --n 3 --C 1 --format json");
    auto b = run_cli("det-region --m 5 --n 3 --C 1 --format json");
    CHECK(a.out == b.out);
}

TEST_CASE("det-verify reports and exit codes") {
    auto res = run_cli("det-verify --m 5 --n 3 --C 1");
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["reports"].size() == 4);
    for (const auto& rep : j["reports"]) {
        CHECK(rep["allGreen"] == true);
        CHECK(rep["mutualInfoBits"] == "0/1");
    }
    CHECK(j["allGreen"] == true);

    auto high = run_cli("det-verify --m 4 --n 5 --C 1");
    CHECK(high.exit_code == 0);
    CHECK(nlohmann::json::parse(high.out)["reports"].size() == 4);

    auto very = run_cli("det-verify --m 2 --n 5 --C 3");
    CHECK(very.exit_code == 0);
    auto jv = nlohmann::json::parse(very.out);
    CHECK(jv["reports"].size() == 1);
    CHECK(jv["reports"][0]["ratePair"] == nlohmann::json({2, 0}));
}

TEST_CASE("det-verify scheme files: round trip and a leaky scheme") {
    // A leaking scheme: one data bit on tx2's top level, nothing covering it.
    const char* leaky = R"({
      "m": 5, "q": 5, "k1": 0, "k2": 1, "r": 0,
      "coop_selector": [],
      "enc1_w": [[],[],[],[],[]],
      "enc1_v": [[],[],[],[],[]],
      "enc1_r": [[],[],[],[],[]],
      "enc2": [[0],[0],[0],[0],[1]]
    })";
    {
        std::ofstream f("leaky_scheme.json");
        f << leaky;
    }
    auto res = run_cli("det-verify --m 5 --n 3 --C 0 --scheme-file leaky_scheme.json");
    CHECK(res.exit_code == 1);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["reports"][0]["mutualInfoBits"] == "1/1");
    CHECK(j["reports"][0]["secrecyAlgebraic"] == false);
    std::remove("leaky_scheme.json");
}

TEST_CASE("ZIC_ENUM_CAP downgrades to algebraic-only verification") {
    std::string bin = ZIC_CLI_PATH;
    if (const char* env = std::getenv("ZIC_CLI_BIN")) bin = env;
    RunResult capped;
    {
        std::string cmd = "ZIC_ENUM_CAP=4 " + bin + " det-verify --m 5 --n 3 --C 1 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::array<char, 4096> buf{};
        std::size_t got;
        while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
            capped.out.append(buf.data(), got);
        int status = pclose(pipe);
        capped.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }
    CHECK(capped.exit_code == 0);
    auto j = nlohmann::json::parse(capped.out);
    bool saw_warning = false;
    for (const auto& rep : j["reports"]) {
        if (rep.contains("warning")) {
            saw_warning = true;
            CHECK(rep["mutualInfoBits"].is_null());
        }
    }
    CHECK(saw_warning);
}

TEST_CASE("det-sum-curve values") {
    auto res = run_cli("det-sum-curve --m 8 --C 0 --alpha-grid 0,0.5,1,1.5,2");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "alpha,C,norm_sum\n"
                     "0,0,2\n"
                     "0.5,0,1.5\n"
                     "1,0,1\n"
                     "1.5,0,1\n"
                     "2,0,1\n");

    auto full = run_cli("det-sum-curve --m 8 --C 8 --alpha-grid 0,0.5,1");
    CHECK(full.out.find("0.5,8,2\n") != std::string::npos);

    auto bad = run_cli("det-sum-curve --m 8 --C 0 --alpha-grid 1/3");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("gauss commands emit the documented CSV headers") {
    auto region = run_cli("gauss-region --P 100 --hd 1 --hc 0.5 --CG 1 --grid-density 5");
    CHECK(region.exit_code == 0);
    CHECK(region.out.rfind("R1,R2\n", 0) == 0);

    auto gdof = run_cli("gauss-gdof --kappa-grid 0,0.5,1 --gamma 0,1");
    CHECK(gdof.exit_code == 0);
    CHECK(gdof.out.rfind("kappa,gamma,dsum_formula,dsum_numeric\n", 0) == 0);
    // 3 kappas x 2 gammas plus header
    CHECK(std::count(gdof.out.begin(), gdof.out.end(), '\n') == 7);

    auto gapres = run_cli("gauss-gap --P 100 --hc 0.5 --CG 0");
    CHECK(gapres.exit_code == 0);
    CHECK(gapres.out.rfind("P,hc,CG,lower,outer,gap\n", 0) == 0);
    // gap column within [0,2]
    std::stringstream ss(gapres.out);
    std::string line;
    std::getline(ss, line);
    while (std::getline(ss, line)) {
        auto pos = line.rfind(',');
        double g = std::stod(line.substr(pos + 1));
        CHECK(g >= 0);
        CHECK(g <= 2);
    }
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("det-region --m 5 --n 3").exit_code == 2);         // missing flag
    CHECK(run_cli("det-region --m 5 --n 3 --C 1 --bogus 1").exit_code == 2);
    CHECK(run_cli("det-region --m 0 --n 3 --C 1").exit_code == 2);   // m = 0 invalid
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("det-region --m 5 --n 3 --C 1 --format xml").exit_code == 2);
}

TEST_CASE("--out writes a file") {
    auto res = run_cli("det-region --m 5 --n 3 --C 1 --out region_out.csv");
    CHECK(res.exit_code == 0);
    CHECK(res.out.empty());
    std::ifstream f("region_out.csv");
    REQUIRE(f.good());
    std::string first;
    std::getline(f, first);
    CHECK(first == "R1,R2");
    f.close();
    std::remove("region_out.csv");
}
