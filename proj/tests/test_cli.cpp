#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

using nlohmann::json;

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    std::string command = std::string(ZONAL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) output.append(buffer, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

int count_lines(const std::string& s) {
    int lines = 0;
    for (char c : s)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

TEST_CASE("table command") {
    auto csv = run_cli("table --r 2 --d 2 --n 3 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(count_lines(csv.output) == 5);  // header + 2x2 values
    CHECK(csv.output.starts_with("k,l,exact,float\n"));
    CHECK(csv.output.find("-1/3") != std::string::npos);

    auto js = run_cli("table --r 2 --d 1 --n 2 --format json");
    CHECK(js.exit_code == 0);
    auto parsed = json::parse(js.output);
    CHECK(parsed["params"] == json({{"r", 2}, {"d", 1}, {"n", 2}}));
    REQUIRE(parsed["values"].size() == 3);
    // middle row is (1, 0, -1)
    CHECK(parsed["values"][1][0]["coeffs"] == json::array({{1, 1}}));
    CHECK(parsed["values"][1][1]["coeffs"] == json::array({{0, 1}}));
    CHECK(parsed["values"][1][2]["coeffs"] == json::array({{-1, 1}}));
    CHECK(parsed["rows"][1]["dim"] == 2);
    CHECK(parsed["cols"][1]["weight"] == json::array({1, 2}));

    CHECK(run_cli("table --r 3 --d 2 --n 2").exit_code == 2);
    CHECK(run_cli("table --r 2 --d 1 --n 0").exit_code == 2);
    CHECK(run_cli("table --r 4 --d 1 --n 6 --term-budget 10").exit_code == 3);
}

TEST_CASE("deterministic output") {
    auto first = run_cli("table --r 3 --d 3 --n 2 --format json");
    auto second = run_cli("table --r 3 --d 3 --n 2 --format json");
    CHECK(first.output == second.output);
    CHECK(!first.output.empty());

    auto csv_a = run_cli("table --r 2 --d 2 --n 4 --format csv");
    auto csv_b = run_cli("table --r 2 --d 2 --n 4 --format csv");
    CHECK(csv_a.output == csv_b.output);
}

TEST_CASE("eval command") {
    auto dihedral = run_cli("eval --r 4 --d 4 --n 2 --k 1,1,0,0 --l 0,1,0,1");
    CHECK(dihedral.exit_code == 0);
    auto parsed = json::parse(dihedral.output);
    CHECK(parsed["exact_string"] == "0");
    CHECK(parsed["float"] == "0");

    auto trivial = run_cli("eval --r 3 --d 1 --n 2 --k 2,0,0 --l 0,1,1");
    CHECK(json::parse(trivial.output)["exact_string"] == "1");

    auto hyper = run_cli("eval --r 2 --d 1 --n 2 --k 0,2 --l 1,1");
    CHECK(json::parse(hyper.output)["exact_string"] == "-1");

    CHECK(run_cli("eval --r 2 --d 1 --n 2 --k 1,2 --l 1,1").exit_code == 2);
    CHECK(run_cli("eval --r 2 --d 2 --n 2 --k 1,1 --l 1,1").exit_code == 2);
}

TEST_CASE("verify command") {
    auto all = run_cli("verify --r 2 --d 2 --n 3 --suite all --N 3");
    CHECK(all.exit_code == 0);
    auto parsed = json::parse(all.output);
    CHECK(parsed["suite"] == "all");
    for (const auto& check : parsed["checks"]) CHECK(check["pass"] == true);

    auto rahman = run_cli("verify --suite rahman --N 4");
    CHECK(rahman.exit_code == 0);

    CHECK(run_cli("verify --r 5 --d 1 --n 6 --suite oracle").exit_code == 3);
    CHECK(run_cli("verify --suite orthogonality").exit_code == 2);  // params missing
}

TEST_CASE("laplace command") {
    auto result = run_cli("laplace --r 2 --d 1 --n 2 --k 1");
    CHECK(result.exit_code == 0);
    auto parsed = json::parse(result.output);
    CHECK(parsed["matrix"] == json::array({{0, 2, 0}, {1, 0, 1}, {0, 2, 0}}));
    std::vector<int> lambdas;
    for (const auto& pair : parsed["eigenpairs"]) lambdas.push_back(pair["lambda"]["coeffs"][0][0]);
    CHECK(lambdas == std::vector<int>{2, 0, -2});

    auto id_matrix = run_cli("laplace --r 3 --d 1 --n 2 --k 0");
    auto id_parsed = json::parse(id_matrix.output);
    for (size_t i = 0; i < id_parsed["matrix"].size(); ++i)
        for (size_t j = 0; j < id_parsed["matrix"].size(); ++j)
            CHECK(id_parsed["matrix"][i][j] == (i == j ? 1 : 0));

    auto zero = run_cli("laplace --r 3 --d 3 --n 2 --k 1");
    for (const auto& row : json::parse(zero.output)["matrix"])
        for (const auto& entry : row) CHECK(entry == 0);
}

TEST_CASE("product command") {
    auto result = run_cli("product --r 2 --d 1 --n 2 --l 1,1 --lp 1,1");
    CHECK(result.exit_code == 0);
    auto parsed = json::parse(result.output);
    CHECK(parsed["terms"].size() == 2);
    CHECK(parsed["terms"][0]["coefficient"] == json::array({1, 2}));
    CHECK(run_cli("product --r 2 --d 2 --n 2 --l 1,1 --lp 0,2").exit_code == 2);
}

TEST_CASE("file output and argument errors") {
    std::string path = "cli_test_out.json";
    std::remove(path.c_str());
    auto result = run_cli("table --r 2 --d 1 --n 1 --out " + path);
    CHECK(result.exit_code == 0);
    CHECK(result.output.empty());
    std::ifstream file(path);
    REQUIRE(file.good());
    json parsed;
    file >> parsed;
    CHECK(parsed["values"].size() == 2);
    std::remove(path.c_str());

    CHECK(run_cli("--no-such-flag").exit_code == 2);
    CHECK(run_cli("table --r 2 --d 1").exit_code == 2);  // missing --n
    CHECK(run_cli("nonsense").exit_code == 2);
}
