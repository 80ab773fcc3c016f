// End-to-end checks of the timing-eq binary. The binary path arrives as
// argv[1]; commands run through popen with stdout captured.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "buytiming/pricing.hpp"

namespace {

std::string g_binary;

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = {}) {
    const std::string cmd = env_prefix + g_binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    CliResult res;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, n);
    const int rc = pclose(pipe);
    res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string(::testing::TempDir()) + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST(Cli, PriceFixture) {
    const auto res = run_cli("price --v 10 --k 2");
    ASSERT_EQ(res.exit_code, 0);
    const auto j = nlohmann::json::parse(res.out);
    EXPECT_EQ(j["case"], 2);
    EXPECT_NEAR(j["p_star"].get<double>(), 7.441572118895504, 1e-9);
    EXPECT_NEAR(j["pi_star"].get<double>(), 6.6974149070059541, 1e-9);
    ASSERT_EQ(j["candidates"].size(), 3u);
    // emitted numbers equal the library's own results
    const auto sol = buytiming::optimal_price(10.0, 2.0);
    EXPECT_EQ(j["p_star"].get<double>(), sol.p_star);
    EXPECT_EQ(j["pi_star"].get<double>(), sol.pi_star);
}

TEST(Cli, SolveFiniteFixture) {
    const auto res = run_cli("solve-finite --c 0.4 --K 0.37 --V 1 --P 0 --lambda 1");
    ASSERT_EQ(res.exit_code, 0);
    const auto j = nlohmann::json::parse(res.out);
    std::set<int> types;
    for (const auto& rec : j["equilibria"]) types.insert(rec["type"].get<int>());
    EXPECT_EQ(types, (std::set<int>{4, 5, 7}));
}

TEST(Cli, SolveInfiniteFixture) {
    const auto res = run_cli("solve-infinite --v 10 --k 2 --p 7");
    ASSERT_EQ(res.exit_code, 0);
    const auto j = nlohmann::json::parse(res.out);
    EXPECT_EQ(j["region"], 2);
    EXPECT_NEAR(j["lambda1"].get<double>(), 2.8214393721220787, 1e-9);
    EXPECT_NEAR(j["welfare"].get<double>(), 0.0, 1e-9);
}

TEST(Cli, ProfitCurveCsv) {
    const auto res = run_cli("profit-curve --v 10 --k 2 --points 5");
    ASSERT_EQ(res.exit_code, 0);
    std::istringstream in(res.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "p,region,pi");
    int rows = 0;
    std::string last;
    while (std::getline(in, line) && !line.empty()) {
        last = line;
        ++rows;
    }
    EXPECT_EQ(rows, 5);
    EXPECT_EQ(last, "10,1,0");
}

TEST(Cli, SweepCornerPoint) {
    char spec[512];
    std::snprintf(spec, sizeof spec,
                  "axis1.name = c\naxis1.min = %.17g\naxis1.max = 1.0\naxis1.steps = 2\n"
                  "axis2.name = K\naxis2.min = %.17g\naxis2.max = 0.7\naxis2.steps = 2\n",
                  1.0 - std::exp(-1.0), std::exp(-1.0));
    const auto path = write_temp("sweep_spec.txt", spec);
    const auto res = run_cli("sweep --plane ck --spec " + path);
    ASSERT_EQ(res.exit_code, 0);
    std::istringstream in(res.out);
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    EXPECT_EQ(header, "c,K,types");
    EXPECT_NE(first.find("2;3;5;7"), std::string::npos) << first;
}

TEST(Cli, SweepDefaultGridSize) {
    const auto res = run_cli("sweep --plane vk-infinite");
    ASSERT_EQ(res.exit_code, 0);
    const auto rows = std::count(res.out.begin(), res.out.end(), '\n');
    EXPECT_EQ(rows, 1 + 100 * 100);
}

TEST(Cli, SimulateScenarioReproducible) {
    const auto path = write_temp("scenario.txt",
                                 "c = 0.2\nK = 0.4\nV = 1\nP = 0\nlambda = 1\nq0 = 0\nq1 = 1\n");
    const auto a = run_cli("simulate --scenario " + path + " --reps 20000 --seed 42");
    const auto b = run_cli("simulate --scenario " + path + " --reps 20000 --seed 42");
    ASSERT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["mode"], "market");
    EXPECT_NEAR(j["estimates"]["welfare"]["mean"].get<double>(), 0.432,
                3.0 * j["estimates"]["welfare"]["std_error"].get<double>() + 1e-3);
}

TEST(Cli, SimulateDeviationMode) {
    const auto path = write_temp("scenario_dev.txt",
                                 "c = 0.2\nK = 0.4\nV = 1\nP = 0\nlambda = inf\n"
                                 "lambda0 = 0\nlambda1 = 0\n");
    const auto res = run_cli("simulate --scenario " + path + " --reps 1000 --seed 1");
    ASSERT_EQ(res.exit_code, 0);
    const auto j = nlohmann::json::parse(res.out);
    EXPECT_EQ(j["mode"], "deviation");
    EXPECT_DOUBLE_EQ(j["estimates"]["arrive0"]["mean"].get<double>(), 0.4);
    EXPECT_DOUBLE_EQ(j["estimates"]["arrive1"]["mean"].get<double>(), 0.8);
}

TEST(Cli, EnvSeedMatchesFlag) {
    const auto path = write_temp("scenario_env.txt",
                                 "c = 0.2\nK = 0.4\nV = 1\nP = 0\nlambda = 1\nq0 = 0.3\nq1 = 0.5\n");
    const auto via_env = run_cli("simulate --scenario " + path + " --reps 5000",
                                 "TIMING_EQ_SEED=777 ");
    const auto via_flag = run_cli("simulate --scenario " + path + " --reps 5000 --seed 777");
    ASSERT_EQ(via_env.exit_code, 0);
    EXPECT_EQ(via_env.out, via_flag.out);
}

TEST(Cli, VerifySubcommandPasses) {
    const auto res = run_cli("verify --reps 4000 --samples 40");
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_NE(res.out.find("checks passed"), std::string::npos);
    EXPECT_EQ(res.out.find("[FAIL]"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli("").exit_code, 2);                         // missing subcommand
    EXPECT_EQ(run_cli("price --v 10").exit_code, 2);             // missing required option
    EXPECT_EQ(run_cli("price --v -5 --k 1").exit_code, 2);       // domain error
    EXPECT_EQ(run_cli("sweep --plane bogus").exit_code, 2);      // invalid plane
    EXPECT_EQ(run_cli("price --v 2e9 --k 20").exit_code, 3);     // v_f bracket cap
    EXPECT_EQ(run_cli("--help").exit_code, 0);
}

int main(int argc, char** argv) {
    ::testing::InitGoogleTest(&argc, argv);
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-timing-eq>\n");
        return 1;
    }
    g_binary = argv[1];
    return RUN_ALL_TESTS();
}
