#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dunklpoly/rational.hpp"

using dunklpoly::Rational;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(DUNKLPOLY_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::stringstream stream(line);
    std::string item;
    while (std::getline(stream, item, sep)) out.push_back(item);
    return out;
}

}  // namespace

TEST_CASE("gen emits the hermite gamma table") {
    const auto r = run_cli("gen --family hermite --mu 1/2 --n 5");
    REQUIRE(r.exit_code == 0);
    std::stringstream stream(r.output);
    std::string line;
    std::getline(stream, line);
    CHECK(line == "n,gamma,gamma_tilde,moment,p_coeffs");
    std::vector<std::string> gammas;
    while (std::getline(stream, line)) {
        const auto cells = split(line, ',');
        REQUIRE(cells.size() == 5);
        if (!cells[1].empty()) gammas.push_back(cells[1]);
    }
    CHECK(gammas == std::vector<std::string>{"1", "1", "2", "2", "3"});
}

TEST_CASE("gen emits the gegenbauer gamma table") {
    const auto r = run_cli("gen --family gegenbauer --alpha 1/2 --beta 1/2 --n 2");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("1,1/2,") != std::string::npos);
    CHECK(r.output.find("2,1/8,") != std::string::npos);
}

TEST_CASE("gen honors a custom gamma_1 normalization") {
    const auto r = run_cli("gen --family hermite --mu 1/2 --n 3 --gamma1 2");
    REQUIRE(r.exit_code == 0);
    std::stringstream stream(r.output);
    std::string line;
    std::getline(stream, line);
    std::vector<std::string> gammas;
    while (std::getline(stream, line)) {
        const auto cells = split(line, ',');
        if (!cells[1].empty()) gammas.push_back(cells[1]);
    }
    // gamma_{n+1} = (mu_{n+1}/mu_n) gamma_n from gamma_1 = 2
    CHECK(gammas == std::vector<std::string>{"2", "2", "4"});
}

TEST_CASE("gen rejects irregular mu with exit code 2") {
    const auto r = run_cli("gen --family hermite --mu -1/2 --n 5");
    CHECK(r.exit_code == 2);
    const auto deep = run_cli("gen --family hermite --mu -7/2 --n 5");
    CHECK(deep.exit_code == 2);
}

TEST_CASE("gen output is deterministic and round-trips") {
    const std::string args = "gen --family gegenbauer --alpha 3/4 --beta 1/4 --n 10";
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    REQUIRE(first.exit_code == 0);
    CHECK(first.output == second.output);

    std::stringstream stream(first.output);
    std::string line;
    std::getline(stream, line);  // header
    int rows = 0;
    while (std::getline(stream, line)) {
        const auto cells = split(line, ',');
        REQUIRE(cells.size() == 5);
        for (std::size_t i = 1; i < 4; ++i) {
            if (cells[i].empty()) continue;
            const Rational parsed = Rational::parse(cells[i]);
            CHECK(parsed.str() == cells[i]);
        }
        for (const auto& c : split(cells[4], ' ')) {
            const Rational parsed = Rational::parse(c);
            CHECK(parsed.str() == c);
        }
        ++rows;
    }
    CHECK(rows == 11);
}

TEST_CASE("gen json is valid and carries the same values") {
    const auto r = run_cli("gen --family hermite --mu 1/3 --n 4 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["family"] == "generalized-hermite");
    CHECK(j["params"]["mu"] == "1/3");
    CHECK(j["rows"].size() == 5);
    CHECK(j["rows"][1]["gamma"] == "5/6");
    CHECK(j["version"] == "0.1.0");
}

TEST_CASE("moments table") {
    const auto r = run_cli("moments --family hermite --mu 1/4 --n 6");
    REQUIRE(r.exit_code == 0);
    std::stringstream stream(r.output);
    std::string line;
    std::getline(stream, line);
    CHECK(line == "k,moment");
    std::vector<std::string> values;
    while (std::getline(stream, line)) values.push_back(split(line, ',')[1]);
    CHECK(values == std::vector<std::string>{"1", "0", "3/4", "0", "21/16", "0", "231/64"});
}

TEST_CASE("moments json") {
    const auto r = run_cli("moments --family gegenbauer --alpha 1/2 --beta 1/2 --n 4 "
                           "--format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["order"] == 4);
    CHECK(j["moments"] ==
          nlohmann::json::array({"1", "0", "1/2", "0", "5/16"}));
}

TEST_CASE("construct case A") {
    const auto r = run_cli("construct --case A --mu 1/2 --gamma1 1 --n 6");
    REQUIRE(r.exit_code == 0);
    std::stringstream stream(r.output);
    std::string line;
    std::getline(stream, line);
    CHECK(line == "n,theta,gamma,gamma_tilde");
    std::vector<std::string> gammas;
    while (std::getline(stream, line)) gammas.push_back(split(line, ',')[2]);
    CHECK(gammas == std::vector<std::string>{"1", "1", "2", "2", "3", "3"});
}

TEST_CASE("construct case B reads back alpha and beta") {
    const auto r = run_cli("construct --case B --mu 1 --theta 3 --n 4");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("# alpha = 1/2") != std::string::npos);
    CHECK(r.output.find("# beta = 1/2") != std::string::npos);
    CHECK(r.output.find("1,2,1/2,3/8") != std::string::npos);

    const auto j = run_cli("construct --case B --mu 1 --theta 3 --n 4 --format json");
    REQUIRE(j.exit_code == 0);
    const auto parsed = nlohmann::json::parse(j.output);
    CHECK(parsed["params"]["alpha"] == "1/2");
    CHECK(parsed["params"]["beta"] == "1/2");
    CHECK(parsed["rows"][0]["gamma"] == "1/2");
}

TEST_CASE("construct rejects excluded case-B parameters at n = 1") {
    // theta = -1 + mu hits the first exclusion
    const auto r = run_cli("construct --case B --mu 1/3 --theta -2/3 --n 4");
    CHECK(r.exit_code == 2);
}

TEST_CASE("verify exit codes") {
    CHECK(run_cli("verify --family hermite --mu 1/3 --n 8 --checks all").exit_code == 0);
    CHECK(run_cli("verify --family custom --mu 1/3 --gamma-const 1 --n 8 --checks all")
              .exit_code == 1);
    CHECK(run_cli("verify --family hermite --mu -1/2 --n 8 --checks all").exit_code == 2);
    CHECK(run_cli("verify --family hermite --mu 1/3 --n 8 --checks nonsense").exit_code == 2);
    CHECK(run_cli("verify --family hermite --n 8 --checks all").exit_code == 2);
    CHECK(run_cli("verify --family custom --mu 1/3 --n 8 --checks all").exit_code == 2);
}

TEST_CASE("verify report is valid json with the stable keys") {
    const auto r = run_cli("verify --family gegenbauer --alpha 1/2 --beta 1/2 --n 8 --checks "
                           "riccati,pearson");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["family"] == "generalized-gegenbauer");
    CHECK(j["params"]["alpha"] == "1/2");
    CHECK(j["horizon"] == 8);
    CHECK(j["version"] == "0.1.0");
    bool saw_printed_psi = false;
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("anchor"));
        CHECK(c.contains("status"));
        if (c["name"] == "pearson-printed-psi") {
            saw_printed_psi = true;
            CHECK(c["status"] == "pass");
            const std::string witness = c["witness"];
            CHECK(witness.find("inconsistent") != std::string::npos);
        }
    }
    CHECK(saw_printed_psi);

    const auto again = run_cli("verify --family gegenbauer --alpha 1/2 --beta 1/2 --n 8 "
                               "--checks riccati,pearson");
    CHECK(again.output == r.output);
}

TEST_CASE("verify honors --out") {
    const std::string path = "/tmp/dunklpoly_cli_test_report.json";
    std::remove(path.c_str());
    const auto r = run_cli("verify --family hermite --mu 0 --n 6 --checks riccati --out " + path);
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.empty());
    std::ifstream file(path);
    REQUIRE(file.good());
    std::stringstream content;
    content << file.rdbuf();
    const auto j = nlohmann::json::parse(content.str());
    CHECK(j["family"] == "generalized-hermite");
    std::remove(path.c_str());
}

TEST_CASE("custom family accepts an explicit gamma list") {
    const auto ok = run_cli(
        "verify --family custom --mu 1/2 --gammas 1,1,2,2,3,3,4,4 --n 8 --checks theorem21");
    CHECK(ok.exit_code == 0);
    const auto short_list =
        run_cli("verify --family custom --mu 1/2 --gammas 1,1 --n 8 --checks theorem21");
    CHECK(short_list.exit_code == 2);
}
