// timing-eq: command-line front end for the two-period buy-timing market
// library. Single solutions are emitted as JSON, curves and sweeps as CSV
// (header row, LF line endings). Exit codes: 0 success, 2 usage or parameter
// error, 3 numeric non-convergence.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "buytiming/finite.hpp"
#include "buytiming/infinite.hpp"
#include "buytiming/market.hpp"
#include "buytiming/pricing.hpp"
#include "buytiming/simulate.hpp"
#include "buytiming/verify.hpp"

namespace {

using nlohmann::json;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("TIMING_EQ_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

// Flat key = value files; '#' starts a comment, blank lines are skipped.
std::map<std::string, std::string> parse_kv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::map<std::string, std::string> out;
    std::string line;
    const auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        const auto b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!key.empty()) out[key] = value;
    }
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return x;
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid number for '" + key + "': " + value);
    }
}

struct Axis {
    std::string name;
    double min = 0.0;
    double max = 1.0;
    int steps = 100;
};

Axis read_axis(const std::map<std::string, std::string>& kv, const std::string& prefix,
               const Axis& fallback) {
    Axis axis = fallback;
    if (auto it = kv.find(prefix + ".name"); it != kv.end()) axis.name = it->second;
    if (auto it = kv.find(prefix + ".min"); it != kv.end())
        axis.min = parse_double(prefix + ".min", it->second);
    if (auto it = kv.find(prefix + ".max"); it != kv.end())
        axis.max = parse_double(prefix + ".max", it->second);
    if (auto it = kv.find(prefix + ".steps"); it != kv.end())
        axis.steps = static_cast<int>(parse_double(prefix + ".steps", it->second));
    if (axis.steps < 2) throw std::invalid_argument(prefix + ": steps must be >= 2");
    if (!(axis.min < axis.max)) throw std::invalid_argument(prefix + ": min must be < max");
    return axis;
}

double axis_value(const Axis& axis, int i) {
    return axis.min + (axis.max - axis.min) * (static_cast<double>(i) / (axis.steps - 1));
}

std::string fmt(double x, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, x);
    return buf;
}

json estimate_json(const buytiming::SimEstimate& e) {
    return json{{"mean", e.mean}, {"std_error", e.std_error}, {"n", e.n}};
}

int run_solve_finite(const buytiming::MarketParams& mp) {
    json out;
    out["params"] = {{"c", mp.c},
                     {"K", mp.K},
                     {"V", mp.V},
                     {"P", mp.P},
                     {"lambda", mp.demand.intensity}};
    out["equilibria"] = json::array();
    for (const auto& rec : buytiming::find_equilibria(mp))
        out["equilibria"].push_back({{"type", rec.type},
                                     {"lambda0", rec.profile.lambda0},
                                     {"lambda1", rec.profile.lambda1},
                                     {"u0", rec.utilities.u0},
                                     {"u1", rec.utilities.u1},
                                     {"residual", rec.residual}});
    std::printf("%s\n", out.dump(2).c_str());
    return 0;
}

int run_solve_infinite(const buytiming::NormalizedMarket& nm) {
    const double u = buytiming::u_of_k(nm.k);
    const auto rates = buytiming::solve_rates(nm, u);
    const buytiming::MarketParams mp{1.0, nm.k, nm.v, nm.p, buytiming::Demand::unbounded()};
    const auto util = buytiming::expected_utilities(mp, rates);
    const json out{{"v", nm.v},
                   {"k", nm.k},
                   {"p", nm.p},
                   {"region", buytiming::classify_region(nm, u)},
                   {"u_of_k", u},
                   {"lambda0", rates.lambda0},
                   {"lambda1", rates.lambda1},
                   {"u0", util.u0},
                   {"u1", util.u1},
                   {"welfare", buytiming::social_welfare_two_period(nm, rates)}};
    std::printf("%s\n", out.dump(2).c_str());
    return 0;
}

int run_price(double v, double k) {
    const auto sol = buytiming::optimal_price(v, k);
    json out{{"v", v},
             {"k", k},
             {"case", sol.pricing_case},
             {"p_star", sol.p_star},
             {"pi_star", sol.pi_star},
             {"lambda0", sol.profile.lambda0},
             {"lambda1", sol.profile.lambda1}};
    if (sol.pricing_case == 1) out["price_arbitrary"] = true;  // no sale at any price
    out["candidates"] = json::array();
    if (v >= 1.0)
        for (const auto& cand : buytiming::candidate_prices(v, k))
            out["candidates"].push_back(
                {{"region", cand.region}, {"price", cand.price}, {"profit", cand.profit}});
    std::printf("%s\n", out.dump(2).c_str());
    return 0;
}

int run_profit_curve(double v, double k, int points, int precision, std::FILE* dst) {
    std::fprintf(dst, "p,region,pi\n");
    for (const auto& pt : buytiming::profit_curve(v, k, points))
        std::fprintf(dst, "%s,%d,%s\n", fmt(pt.price, precision).c_str(), pt.region,
                     fmt(pt.profit, precision).c_str());
    return 0;
}

int run_sweep(const std::string& plane, const std::string& spec_path, int precision,
              std::FILE* dst) {
    std::map<std::string, std::string> kv;
    if (!spec_path.empty()) kv = parse_kv_file(spec_path);
    double fixed_p = 0.0;

    Axis a1, a2;
    if (plane == "ck") {
        a1 = read_axis(kv, "axis1", Axis{"c", 0.012, 1.2, 100});
        a2 = read_axis(kv, "axis2", Axis{"K", 0.012, 1.2, 100});
        if (a1.name != "c" || a2.name != "K")
            throw std::invalid_argument("sweep ck: axes must be c and K");
    } else if (plane == "vk") {
        a1 = read_axis(kv, "axis1", Axis{"V", 0.04, 4.0, 100});
        a2 = read_axis(kv, "axis2", Axis{"K", 0.02, 2.0, 100});
        if (a1.name != "V" || a2.name != "K")
            throw std::invalid_argument("sweep vk: axes must be V and K");
    } else if (plane == "vk-infinite") {
        a1 = read_axis(kv, "axis1", Axis{"v", 0.08, 8.0, 100});
        a2 = read_axis(kv, "axis2", Axis{"k", 0.04, 4.0, 100});
        if (a1.name != "v" || a2.name != "k")
            throw std::invalid_argument("sweep vk-infinite: axes must be v and k");
    } else {
        throw std::invalid_argument("sweep: plane must be ck, vk or vk-infinite");
    }
    if (auto it = kv.find("fixed.p"); it != kv.end())
        fixed_p = parse_double("fixed.p", it->second);

    if (plane == "vk-infinite") {
        std::fprintf(dst, "%s,%s,region\n", a1.name.c_str(), a2.name.c_str());
        for (int i = 0; i < a1.steps; ++i) {
            const double v = axis_value(a1, i);
            for (int j = 0; j < a2.steps; ++j) {
                const double k = axis_value(a2, j);
                const buytiming::NormalizedMarket nm{v, k, fixed_p};
                if (nm.v1() < 0.0) continue;  // price exceeds value: no market
                std::fprintf(dst, "%s,%s,%d\n", fmt(v, precision).c_str(),
                             fmt(k, precision).c_str(), buytiming::classify_region(nm));
            }
        }
        return 0;
    }

    std::fprintf(dst, "%s,%s,types\n", a1.name.c_str(), a2.name.c_str());
    for (int i = 0; i < a1.steps; ++i) {
        const double x = axis_value(a1, i);
        for (int j = 0; j < a2.steps; ++j) {
            const double y = axis_value(a2, j);
            const auto types =
                plane == "ck" ? buytiming::classify_ck(x, y) : buytiming::classify_vk(x, y);
            std::string joined;
            for (int t : types) {
                if (!joined.empty()) joined += ';';
                joined += std::to_string(t);
            }
            std::fprintf(dst, "%s,%s,%s\n", fmt(x, precision).c_str(), fmt(y, precision).c_str(),
                         joined.c_str());
        }
    }
    return 0;
}

int run_simulate(const std::string& scenario_path, std::uint64_t reps, std::uint64_t seed) {
    const auto kv = parse_kv_file(scenario_path);
    const auto need = [&](const char* key) {
        const auto it = kv.find(key);
        if (it == kv.end())
            throw std::invalid_argument(std::string("scenario missing key: ") + key);
        return parse_double(key, it->second);
    };
    const auto lambda_it = kv.find("lambda");
    buytiming::Demand demand = buytiming::Demand::unbounded();
    if (lambda_it != kv.end() && lambda_it->second != "inf")
        demand = buytiming::Demand::finite(parse_double("lambda", lambda_it->second));
    const buytiming::MarketParams mp{need("c"), need("K"), need("V"), need("P"), demand};

    const buytiming::SimConfig cfg{reps, seed, kv.count("antithetic") != 0 &&
                                                   kv.at("antithetic") == "true"};
    json out;
    out["params"] = {{"c", mp.c},
                     {"K", mp.K},
                     {"V", mp.V},
                     {"P", mp.P},
                     {"lambda", mp.demand.is_unbounded() ? json("inf") : json(mp.demand.intensity)}};
    out["replications"] = cfg.replications;
    out["seed"] = cfg.seed;

    if (kv.count("q0") || kv.count("q1")) {
        const buytiming::MixedStrategy st{need("q0"), need("q1")};
        const auto est = buytiming::simulate_market(mp, st, cfg);
        out["mode"] = "market";
        out["strategy"] = {{"q0", st.q0}, {"q1", st.q1}};
        out["estimates"] = {{"u0", estimate_json(est.u0)},
                            {"u1", estimate_json(est.u1)},
                            {"profit", estimate_json(est.profit)},
                            {"welfare", estimate_json(est.welfare)}};
    } else if (kv.count("lambda0") || kv.count("lambda1")) {
        const buytiming::ArrivalProfile rates{need("lambda0"), need("lambda1")};
        const auto est = buytiming::deviation_payoffs(rates, mp, cfg);
        out["mode"] = "deviation";
        out["rates"] = {{"lambda0", rates.lambda0}, {"lambda1", rates.lambda1}};
        out["estimates"] = {{"arrive0", estimate_json(est.arrive0)},
                            {"arrive1", estimate_json(est.arrive1)}};
    } else {
        throw std::invalid_argument("scenario needs q0/q1 (market) or lambda0/lambda1 (deviation)");
    }
    std::printf("%s\n", out.dump(2).c_str());
    return 0;
}

int run_verify(std::uint64_t reps, std::uint64_t seed, int samples) {
    buytiming::verify::Options opt;
    opt.mc_replications = reps;
    if (seed != 0) opt.seed = seed;
    opt.samples = samples;
    int failures = 0;
    const auto results = buytiming::verify::run_all(opt);
    for (const auto& r : results) {
        std::printf("[%s] %-40s %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        failures += r.pass ? 0 : 1;
    }
    std::printf("verification: %zu/%zu checks passed\n", results.size() - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solvers, pricing and Monte Carlo checks for the two-period buy-timing market"};
    app.require_subcommand(1);
    int precision = 9;
    app.add_option("--precision", precision, "significant digits for CSV output")
        ->capture_default_str();

    double c = 0.2, K = 0.0, V = 1.0, P = 0.0;
    std::string lambda_str = "1";
    auto* solve_finite = app.add_subcommand("solve-finite", "all equilibria of the finite game");
    solve_finite->add_option("--c", c, "search cost")->required();
    solve_finite->add_option("--K", K, "early-purchase penalty")->required();
    solve_finite->add_option("--V", V, "value at the ideal period")->required();
    solve_finite->add_option("--P", P, "price")->required();
    solve_finite->add_option("--lambda", lambda_str, "demand intensity (number or inf)")
        ->capture_default_str();

    double v = 1.0, k = 0.0, p = 0.0;
    auto* solve_infinite =
        app.add_subcommand("solve-infinite", "region and rates under unbounded demand");
    solve_infinite->add_option("--v", v, "normalized value V/c")->required();
    solve_infinite->add_option("--k", k, "normalized penalty K/c")->required();
    solve_infinite->add_option("--p", p, "normalized price P/c")->capture_default_str();

    double pv = 1.0, pk = 0.0;
    auto* price = app.add_subcommand("price", "profit-maximizing price and candidates");
    price->add_option("--v", pv, "normalized value")->required();
    price->add_option("--k", pk, "normalized penalty")->required();

    double cv = 10.0, ck_ = 2.0;
    int points = 1001;
    std::string curve_output;
    auto* curve = app.add_subcommand("profit-curve", "profit vs price on a uniform grid (CSV)");
    curve->add_option("--v", cv, "normalized value")->required();
    curve->add_option("--k", ck_, "normalized penalty")->required();
    curve->add_option("--points", points, "grid points")->capture_default_str();
    curve->add_option("--output", curve_output, "CSV destination (default stdout)");

    std::string plane, spec_path, sweep_output;
    auto* sweep = app.add_subcommand("sweep", "grid classification over a parameter plane (CSV)");
    sweep->add_option("--plane", plane, "ck, vk or vk-infinite")->required();
    sweep->add_option("--spec", spec_path, "axis spec file (key = value)");
    sweep->add_option("--output", sweep_output, "CSV destination (default stdout)");

    std::string scenario;
    std::uint64_t reps = 100000, seed = default_seed();
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimates for a scenario file");
    simulate->add_option("--scenario", scenario, "scenario file (key = value)")->required();
    simulate->add_option("--reps", reps, "replications")->capture_default_str();
    simulate->add_option("--seed", seed, "RNG seed (default TIMING_EQ_SEED or 0)");

    std::uint64_t vreps = 20000, vseed = 0;
    int vsamples = 200;
    auto* verify = app.add_subcommand("verify", "run the library invariant suite");
    verify->add_option("--reps", vreps, "Monte Carlo replications per check")
        ->capture_default_str();
    verify->add_option("--seed", vseed, "override check seed");
    verify->add_option("--samples", vsamples, "random samples per check")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*solve_finite) {
            if (lambda_str == "inf")
                throw std::invalid_argument(
                    "solve-finite needs finite --lambda; use solve-infinite instead");
            const buytiming::MarketParams mp{
                c, K, V, P, buytiming::Demand::finite(parse_double("lambda", lambda_str))};
            return run_solve_finite(mp);
        }
        if (*solve_infinite) return run_solve_infinite(buytiming::NormalizedMarket{v, k, p});
        if (*price) return run_price(pv, pk);
        if (*curve) {
            std::FILE* dst = curve_output.empty() ? stdout : std::fopen(curve_output.c_str(), "w");
            if (!dst) throw std::invalid_argument("cannot open output file: " + curve_output);
            const int rc = run_profit_curve(cv, ck_, points, precision, dst);
            if (dst != stdout) std::fclose(dst);
            return rc;
        }
        if (*sweep) {
            std::FILE* dst = sweep_output.empty() ? stdout : std::fopen(sweep_output.c_str(), "w");
            if (!dst) throw std::invalid_argument("cannot open output file: " + sweep_output);
            const int rc = run_sweep(plane, spec_path, precision, dst);
            if (dst != stdout) std::fclose(dst);
            return rc;
        }
        if (*simulate) return run_simulate(scenario, reps, seed);
        if (*verify) return run_verify(vreps, vseed, vsamples);
    } catch (const buytiming::convergence_error& e) {
        const json err{{"error", e.what()}, {"exit_code", 3}};
        std::fprintf(stderr, "%s\n", err.dump().c_str());
        return 3;
    } catch (const std::exception& e) {
        const json err{{"error", e.what()}, {"exit_code", 2}};
        std::fprintf(stderr, "%s\n", err.dump().c_str());
        return 2;
    }
    return 0;
}
