#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

std::string cli_path() {
    const char* env = std::getenv("QPADE_CLI");
    REQUIRE_MESSAGE(env != nullptr, "QPADE_CLI must point at the built binary");
    return env;
}

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string command = env_prefix + "\"" + cli_path() + "\" " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    if (!current.empty()) lines.push_back(current);
    return lines;
}

}  // namespace

TEST_CASE("approx csv: header, row count, ground-truth first rows, determinism") {
    auto first = run_cli("approx --kind hp1 --p 2 --n-max 10 --format csv");
    CHECK(first.exit_code == 0);
    auto lines = lines_of(first.output);
    REQUIRE(lines.size() == 11);
    CHECK(lines[0] ==
          "n,a,b,ratio,residual,residual_error_bound,exponent,b_exponent,measure_estimate");
    CHECK(lines[1].rfind("1,-3,-2,1.5,", 0) == 0);
    CHECK(lines[2].rfind("2,241,150,", 0) == 0);

    auto second = run_cli("approx --kind hp1 --p 2 --n-max 10 --format csv");
    CHECK(first.output == second.output);  // byte-identical reruns
}

TEST_CASE("approx json: schema with integers as decimal strings") {
    auto result = run_cli("approx --kind lnp2 --p 3 --n-max 8 --format json");
    CHECK(result.exit_code == 0);
    auto parsed = nlohmann::json::parse(result.output);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 8);
    for (const auto& row : parsed) {
        CHECK(row.at("n").is_number_integer());
        for (const char* key : {"a", "b", "ratio", "residual", "residual_error_bound", "exponent",
                                "b_exponent", "measure_estimate"})
            CHECK(row.at(key).is_string());
        CHECK(row.size() == 9);
    }
    CHECK(parsed[0].at("a").get<std::string>() == "-9");
    CHECK(parsed[0].at("b").get<std::string>() == "12");
}

TEST_CASE("approx single-row table") {
    auto result = run_cli("approx --kind hp1 --p 2 --n-max 1");
    CHECK(result.exit_code == 0);
    auto lines = lines_of(result.output);
    REQUIRE(lines.size() == 2);
    CHECK(lines[1].rfind("1  -3  -2  1.5  ", 0) == 0);
}

TEST_CASE("lambert pole and zero-factor exits") {
    auto pole = run_cli("approx --kind lambert --p 2 --c 1/2 --n-max 5");
    CHECK(pole.exit_code == 3);
    CHECK(pole.output.find("k = 1") != std::string::npos);

    auto zero = run_cli("approx --kind lambert --p 2 --c 1 --n-max 5");
    CHECK(zero.exit_code == 3);

    auto fine = run_cli("approx --kind lambert --p 2 --c 3/2 --n-max 5 --format csv");
    CHECK(fine.exit_code == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("approx --kind nonsense").exit_code == 2);
    CHECK(run_cli("approx --kind lambert --p 2 --n-max 3").exit_code == 2);  // missing --c
    CHECK(run_cli("approx --kind lambert --p 2 --c 2/0 --n-max 3").exit_code == 2);
    CHECK(run_cli("approx --p 1").exit_code == 2);
    CHECK(run_cli("nonsense-subcommand").exit_code == 2);
    CHECK(run_cli("approx --precision-bits frog").exit_code == 2);
}

TEST_CASE("growth tables for both variants") {
    auto standard = run_cli("growth --p 2 --n-max 4 --format csv");
    CHECK(standard.exit_code == 0);
    auto lines = lines_of(standard.output);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "n,digits,exponent_estimate,target");
    CHECK(lines[1].rfind("1,1,", 0) == 0);   // d_1 = 1
    CHECK(lines[3].rfind("3,2,", 0) == 0);   // d_3 = 21
    CHECK(lines[4].rfind("4,3,", 0) == 0);   // d_4 = 105
    CHECK(lines[1].find("0.303964") != std::string::npos);

    auto squared = run_cli("growth --p 2 --n-max 3 --variant squared --format csv");
    CHECK(squared.exit_code == 0);
    CHECK(squared.output.find("0.607927") != std::string::npos);
}

TEST_CASE("constants match independent double-precision sums") {
    auto hp1 = run_cli("constants --kind hp1 --p 2");
    CHECK(hp1.exit_code == 0);
    CHECK(hp1.output.find("1.60669515241529176") != std::string::npos);
    CHECK(hp1.output.find("error bound") != std::string::npos);

    auto lnp2 = run_cli("constants --kind lnp2 --p 2");
    CHECK(lnp2.exit_code == 0);
    CHECK(lnp2.output.find("-7.6449978034844420") != std::string::npos);

    double expected = 0;
    for (int k = 40; k >= 1; --k) expected += 1.0 / (2.0 * std::pow(3.0, k) - 1.0);
    char prefix[32];
    std::snprintf(prefix, sizeof(prefix), "%.10e", expected);
    auto lambert = run_cli("constants --kind lambert --p 3 --c 2 --format json");
    CHECK(lambert.exit_code == 0);
    auto parsed = nlohmann::json::parse(lambert.output);
    CHECK(parsed.at("value").get<std::string>().rfind(std::string(prefix, 8), 0) == 0);
    CHECK(parsed.at("c").get<std::string>() == "2");
}

TEST_CASE("precision flag and environment override") {
    auto coarse = run_cli("constants --kind hp1 --p 2 --precision-bits 64");
    auto fine = run_cli("constants --kind hp1 --p 2 --precision-bits 512");
    CHECK(coarse.exit_code == 0);
    CHECK(fine.exit_code == 0);
    CHECK(fine.output.size() > coarse.output.size());

    // env default kicks in when the flag stays on auto
    auto via_env = run_cli("constants --kind hp1 --p 2", "QPADE_PRECISION_BITS=512 ");
    CHECK(via_env.exit_code == 0);
    CHECK(via_env.output == fine.output);
}

TEST_CASE("verify passes at reduced sizes and fails under fault injection") {
    auto ok = run_cli("verify --n-max 12");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("[FAIL]") == std::string::npos);
    CHECK(ok.output.find("verification passed") != std::string::npos);

    auto faulty = run_cli("verify --n-max 6 --inject-fault");
    CHECK(faulty.exit_code == 1);
    CHECK(faulty.output.find("[FAIL] cyclotomic: product identity") != std::string::npos);
}

TEST_CASE("output flag writes the same bytes to a file") {
    const std::string path = "/tmp/qpade_cli_test_output.csv";
    std::remove(path.c_str());
    auto direct = run_cli("approx --kind hp1 --p 2 --n-max 3 --format csv");
    auto redirected = run_cli("approx --kind hp1 --p 2 --n-max 3 --format csv --output " + path);
    CHECK(redirected.exit_code == 0);
    CHECK(redirected.output.empty());
    std::ifstream file(path);
    REQUIRE(file.good());
    std::string contents((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    CHECK(contents == direct.output);
    std::remove(path.c_str());
}
