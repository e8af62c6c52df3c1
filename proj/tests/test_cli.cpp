#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "json.hpp"

#include "zpd/vacuum.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(ZPD_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/zpd_cli_test_") + name;
}

}  // namespace

TEST_CASE("cli: csv structure with metadata block and header") {
    const auto r = run_cli("blackbody --x-min 0.5 --x-max 2 --points 4");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.rfind("# subcommand=blackbody\n", 0) == 0);
    std::istringstream is(r.out);
    std::string line;
    std::string header;
    int meta = 0, rows = 0;
    while (std::getline(is, line)) {
        if (line.rfind("# ", 0) == 0) {
            ++meta;
            REQUIRE(line.find('=') != std::string::npos);
        } else if (header.empty()) {
            header = line;
        } else if (!line.empty()) {
            ++rows;
        }
    }
    REQUIRE(meta >= 4);
    REQUIRE(header == "x,occupation,energy,energy_with_zpe,excess");
    REQUIRE(rows == 4);
}

TEST_CASE("cli: byte-identical reruns") {
    const std::string args =
        "--format json twoslit --lambda-um 0.58 --d-um 50 --w-um 5 --D-m 1 "
        "--mode closed --points 21";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.out == b.out);
    REQUIRE_FALSE(a.out.empty());
}

TEST_CASE("cli: json document schema and full-precision values") {
    const auto r = run_cli("--format json pair-rate --eps 1 --spin 0");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.contains("params"));
    REQUIRE(doc.contains("columns"));
    REQUIRE(doc.contains("rows"));
    REQUIRE(doc["params"]["subcommand"] == "pair-rate");
    REQUIRE(doc["columns"][0] == "value");
    const double value = doc["rows"][0][0].get<double>();
    const auto expect = zpd::vacuum::pair_rate_boson(
        1.0, zpd::vacuum::ChargedFieldSpec::boson());
    // 17 significant digits round-trip exactly through the document.
    REQUIRE(value == expect.value);
}

TEST_CASE("cli: --output writes the same bytes as stdout") {
    const std::string path = temp_path("out.csv");
    std::remove(path.c_str());
    const auto to_stdout = run_cli("single-slit --points 5");
    const auto to_file = run_cli("--output " + path + " single-slit --points 5");
    REQUIRE(to_stdout.exit_code == 0);
    REQUIRE(to_file.exit_code == 0);
    REQUIRE(to_file.out.empty());
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    REQUIRE(ss.str() == to_stdout.out);
    std::remove(path.c_str());
}

TEST_CASE("cli: usage and validation errors exit with code 2") {
    REQUIRE(run_cli("no-such-subcommand").exit_code == 2);
    REQUIRE(run_cli("blackbody --no-such-flag 1").exit_code == 2);
    REQUIRE(run_cli("blackbody --x-min -1").exit_code == 2);
    REQUIRE(run_cli("twoslit --w-um 100 --d-um 50").exit_code == 2);
    REQUIRE(run_cli("unruh --accel 1 --eps 1").exit_code == 2);
    REQUIRE(run_cli("unruh").exit_code == 2);
    REQUIRE(run_cli("pair-rate --eps 1 --spin 0.3").exit_code == 2);
    REQUIRE(run_cli("--config /nonexistent.json blackbody").exit_code == 2);
}

TEST_CASE("cli: numeric non-convergence exits with code 3") {
    // b so small that the scaled integrand underflows to 0/0 = NaN: the
    // quadrature cannot converge and the error is reported as numeric.
    const auto r = run_cli("vacuum-energy --b 1e-80");
    REQUIRE(r.exit_code == 3);
}

TEST_CASE("cli: config file supplies parameters, flags take precedence") {
    const std::string cfg = temp_path("cfg.json");
    {
        std::ofstream f(cfg);
        f << "{\"eps\": 2.0}\n";
    }
    const auto boson = zpd::vacuum::ChargedFieldSpec::boson();
    const auto from_cfg = run_cli("--format json --config " + cfg + " pair-rate-1d");
    REQUIRE(from_cfg.exit_code == 0);
    const auto doc_cfg = nlohmann::json::parse(from_cfg.out);
    REQUIRE(doc_cfg["rows"][0][1].get<double>() ==
            zpd::vacuum::pair_rate_1d(2.0, boson));

    const auto from_flag =
        run_cli("--format json --config " + cfg + " pair-rate-1d --eps 1");
    REQUIRE(from_flag.exit_code == 0);
    const auto doc_flag = nlohmann::json::parse(from_flag.out);
    REQUIRE(doc_flag["rows"][0][1].get<double>() ==
            zpd::vacuum::pair_rate_1d(1.0, boson));
    std::remove(cfg.c_str());
}

TEST_CASE("cli: verify subcommand reports pass lines and exits 0") {
    const auto r = run_cli("verify blackbody");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("[PASS]") != std::string::npos);
    REQUIRE(r.out.find("[FAIL]") == std::string::npos);
    REQUIRE(r.out.find("all checks passed") != std::string::npos);
    REQUIRE(run_cli("verify no-such-suite").exit_code == 2);
}

TEST_CASE("cli: maxwell-check runs the operator algebra suite") {
    const auto r = run_cli("maxwell-check");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("cli: state-count marks the confined regime") {
    const auto r = run_cli("--format json state-count --lambda-um 0.58 --w-um 0.1");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["rows"][0][1].get<double>() == 1.0);
    const auto wide = run_cli("--format json state-count --lambda-um 0.58 --w-um 5");
    const auto doc2 = nlohmann::json::parse(wide.out);
    REQUIRE(doc2["rows"][0][1].get<double>() == 0.0);
}

TEST_CASE("cli: help exits 0") {
    REQUIRE(run_cli("--help").exit_code == 0);
    REQUIRE(run_cli("twoslit --help").exit_code == 0);
}
