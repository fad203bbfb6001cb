#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "relmaser/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv = {"relmaser"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return relmaser::cli::run(static_cast<int>(argv.size()), argv.data());
}

fs::path fresh_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("relmaser_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("value list parsing") {
    using relmaser::cli::parse_value_list;
    const auto sweep = parse_value_list("0:3:0.1");
    CHECK(sweep.size() == 31);
    CHECK(sweep.front() == 0.0);
    CHECK(sweep.back() == doctest::Approx(3.0).epsilon(1e-12));
    const auto list = parse_value_list("0.5,1,1.5");
    CHECK(list == std::vector<double>{0.5, 1.0, 1.5});
    CHECK(parse_value_list("2") == std::vector<double>{2.0});
    CHECK_THROWS_AS(parse_value_list("1:2"), relmaser::cli::usage_error);
    CHECK_THROWS_AS(parse_value_list("abc"), relmaser::cli::usage_error);
    CHECK_THROWS_AS(parse_value_list("3:1:0.1"), relmaser::cli::usage_error);
}

TEST_CASE("range parsing") {
    using relmaser::cli::parse_range;
    const auto r = parse_range("0.01:5");
    CHECK(r.first == 0.01);
    CHECK(r.second == 5.0);
    CHECK_THROWS_AS(parse_range("1:2:3"), relmaser::cli::usage_error);
}

TEST_CASE("occupation table") {
    const fs::path dir = fresh_dir("occ");
    CHECK(run_cli({"occupation", "--omega", "1", "--beta", "1", "--u", "0",
                   "--out", dir.string()}) == 0);
    const auto rows = parse_csv(slurp(dir / "occupation.csv"));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"omega", "beta", "u", "N"});
    CHECK(std::stod(rows[1][3]) == doctest::Approx(0.58197670686932642).epsilon(1e-14));
    CHECK(fs::exists(dir / "run.json"));
}

TEST_CASE("occupation sweep is monotone in u") {
    const fs::path dir = fresh_dir("occ_sweep");
    CHECK(run_cli({"occupation", "--omega", "1", "--beta", "1", "--u", "0:3:0.1",
                   "--out", dir.string()}) == 0);
    const auto rows = parse_csv(slurp(dir / "occupation.csv"));
    REQUIRE(rows.size() == 32);  // header + 31 sweep values
    for (std::size_t k = 2; k < rows.size(); ++k)
        CHECK(std::stod(rows[k][3]) < std::stod(rows[k - 1][3]));
}

TEST_CASE("bad domain input exits with code 3") {
    CHECK(run_cli({"occupation", "--omega", "-1"}) == 3);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli({"figure", "nosuchfig"}) == 2);
    CHECK(run_cli({"occupation", "--u", "1:2"}) == 2);
    CHECK(run_cli({"nosuchcommand"}) == 2);
    CHECK(run_cli({"figure", "fig2", "--samples", "10"}) == 2);  // not a fig2 knob
}

TEST_CASE("performance record and the liouvillian oracle agree") {
    const fs::path dir = fresh_dir("perf");
    CHECK(run_cli({"performance", "--omega-h", "10", "--omega-c", "5",
                   "--beta-h", "0.01", "--beta-c", "0.08",
                   "--out", dir.string()}) == 0);
    const json rec = json::parse(slurp(dir / "performance.json"));
    CHECK(rec["mode"] == "Engine");
    CHECK(rec["power"].get<double>() == doctest::Approx(0.118839754806629).epsilon(1e-12));
    CHECK(rec["efficiency"].get<double>() == 0.5);
    CHECK(rec["steady_state"]["p_g"].get<double>()
          == doctest::Approx(0.386161241196654).epsilon(1e-12));

    const fs::path dir2 = fresh_dir("perf_oracle");
    CHECK(run_cli({"performance", "--omega-h", "10", "--omega-c", "5",
                   "--beta-h", "0.01", "--beta-c", "0.08",
                   "--oracle", "liouvillian", "--out", dir2.string()}) == 0);
    const json other = json::parse(slurp(dir2 / "performance.json"));
    for (const char* key : {"power", "q_hot", "q_cold"})
        CHECK(std::abs(rec[key].get<double>() - other[key].get<double>()) <= 1e-9);
    for (const char* key : {"p_g", "p_e", "p_r", "coherence_im"})
        CHECK(std::abs(rec["steady_state"][key].get<double>()
                       - other["steady_state"][key].get<double>()) <= 1e-9);
}

TEST_CASE("inert configuration reports zero fluxes") {
    const fs::path dir = fresh_dir("perf_inert");
    CHECK(run_cli({"performance", "--omega-h", "10", "--omega-c", "5",
                   "--beta-h", "0.01", "--beta-c", "0.02",
                   "--out", dir.string()}) == 0);
    const json rec = json::parse(slurp(dir / "performance.json"));
    CHECK(rec["power"].get<double>() == 0.0);
    CHECK(rec["q_hot"].get<double>() == 0.0);
    CHECK(rec["q_cold"].get<double>() == 0.0);
    CHECK(rec["mode"] == "Dissipator");
    CHECK(rec["efficiency"].is_null());
}

TEST_CASE("fig4 rows keep the EMP under the bound") {
    const fs::path dir = fresh_dir("fig4");
    CHECK(run_cli({"figure", "fig4", "--points", "40", "--out", dir.string()}) == 0);
    const auto rows = parse_csv(slurp(dir / "fig4.csv"));
    REQUIRE(rows.size() == 1 + 3 * 40);
    CHECK(rows[0] == std::vector<std::string>{"u", "eta_c", "eta_mp", "eta_ca", "eta_up"});
    for (std::size_t k = 1; k < rows.size(); ++k)
        CHECK(std::stod(rows[k][2]) < std::stod(rows[k][4]));
}

TEST_CASE("fig3 dataset and its manifest") {
    const fs::path dir = fresh_dir("fig3");
    CHECK(run_cli({"figure", "fig3", "--u", "1", "--seed", "7",
                   "--samples", "3000", "--out", dir.string()}) == 0);
    const auto rows = parse_csv(slurp(dir / "fig3_u1.csv"));
    CHECK(rows.size() == 1 + 3000);
    const json manifest = json::parse(slurp(dir / "run.json"));
    CHECK(manifest["command"] == "figure");
    CHECK(manifest["params"]["name"] == "fig3");
    REQUIRE(manifest["derived"]["panels"].size() == 1);
    const auto& panel = manifest["derived"]["panels"][0];
    CHECK(panel["bound_violations"].get<int>() == 0);
    CHECK(panel["engine_points"].get<int>() > 100);
    CHECK(fs::exists(dir / "fig3_u1_frontier.csv"));
}

TEST_CASE("manifest replays byte-identically") {
    const fs::path dir1 = fresh_dir("replay1");
    CHECK(run_cli({"figure", "fig3", "--u", "0.5", "--seed", "11",
                   "--samples", "2000", "--threads", "3",
                   "--out", dir1.string()}) == 0);
    const fs::path dir2 = fresh_dir("replay2");
    CHECK(run_cli({"figure", "fig3", "--config", (dir1 / "run.json").string(),
                   "--out", dir2.string()}) == 0);
    CHECK(slurp(dir1 / "fig3_u0.5.csv") == slurp(dir2 / "fig3_u0.5.csv"));
    CHECK(slurp(dir1 / "fig3_u0.5_frontier.csv") == slurp(dir2 / "fig3_u0.5_frontier.csv"));
}

TEST_CASE("flags override config which overrides defaults") {
    const fs::path dir = fresh_dir("precedence");
    const fs::path cfg_path = dir / "cfg.json";
    {
        std::ofstream out(cfg_path);
        out << R"({"samples": 500, "u": [0.5]})";
    }
    const fs::path out1 = fresh_dir("precedence_cfgonly");
    CHECK(run_cli({"figure", "fig3", "--config", cfg_path.string(),
                   "--out", out1.string()}) == 0);
    CHECK(parse_csv(slurp(out1 / "fig3_u0.5.csv")).size() == 1 + 500);

    const fs::path out2 = fresh_dir("precedence_flagwins");
    CHECK(run_cli({"figure", "fig3", "--config", cfg_path.string(),
                   "--samples", "300", "--out", out2.string()}) == 0);
    CHECK(parse_csv(slurp(out2 / "fig3_u0.5.csv")).size() == 1 + 300);
}

TEST_CASE("fig2 emits one curve per (tau, u) pair") {
    const fs::path dir = fresh_dir("fig2");
    CHECK(run_cli({"figure", "fig2", "--points", "25", "--out", dir.string()}) == 0);
    const auto rows = parse_csv(slurp(dir / "fig2.csv"));
    CHECK(rows.size() == 1 + 9 * 25);  // 3 temperature ratios x 3 rapidities

    const fs::path dir_full = fresh_dir("fig2_full");
    CHECK(run_cli({"figure", "fig2", "--points", "25", "--model", "full",
                   "--xi", "1e6", "--beta-h", "1e-4", "--tau", "0.5", "--u", "1",
                   "--out", dir_full.string()}) == 0);
    const auto full_rows = parse_csv(slurp(dir_full / "fig2.csv"));
    REQUIRE(full_rows.size() == 1 + 25);
    // deep in the strong-driving high-temperature regime the full curve
    // tracks the asymptotic one; the (tau=0.5, u=1) block is the second one
    const auto base = parse_csv(slurp(dir / "fig2.csv"));
    for (std::size_t k = 1; k <= 25; ++k) {
        REQUIRE(base[25 + k][0] == "0.5");
        REQUIRE(base[25 + k][1] == "1");
        const double asym = std::stod(base[25 + k][4]);
        const double full = std::stod(full_rows[k][4]);
        if (std::abs(asym) < 1e-3) continue;
        CHECK(full == doctest::Approx(asym).epsilon(2e-2));
    }
}

TEST_CASE("fig5 grids are long-form CSV") {
    const fs::path dir = fresh_dir("fig5c");
    CHECK(run_cli({"figure", "fig5c", "--nx", "11", "--ny", "11",
                   "--out", dir.string()}) == 0);
    const auto rows = parse_csv(slurp(dir / "fig5c.csv"));
    REQUIRE(rows.size() == 1 + 11 * 11);
    CHECK(rows[0] == std::vector<std::string>{"omega_c", "omega_h", "power", "mode"});
    bool engine = false, fridge = false;
    for (std::size_t k = 1; k < rows.size(); ++k) {
        if (rows[k][3] == "Engine") engine = true;
        if (rows[k][3] == "Refrigerator") fridge = true;
    }
    CHECK(engine);
    CHECK(fridge);
}

TEST_CASE("process-level exit codes") {
    // the real binary: usage error -> 2, domain error -> 3
    const std::string bin = RELMASER_CLI_BIN;
    const int usage = std::system((bin + " occupation --u 1:2 >/dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(usage) == 2);
    const int domain = std::system((bin + " occupation --omega -3 >/dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(domain) == 3);
    const int ok = std::system((bin + " occupation --omega 1 >/dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(ok) == 0);
}

}  // TEST_SUITE
