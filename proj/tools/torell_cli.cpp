// Batch driver: loads fans/scenarios, runs the verification suites, and
// emits machine-readable JSON reports.

#include "torell/genus.hpp"
#include "torell/io.hpp"
#include "torell/orbifold.hpp"
#include "torell/pwpoly.hpp"
#include "torell/theta.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {

using namespace torell;
using nlohmann::json;

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    long long runtime_ms = 0;
};

struct Report {
    std::string scenario;
    json parameters;
    std::vector<CheckResult> checks;

    bool pass() const
    {
        for (const auto& c : checks) {
            if (!c.pass) {
                return false;
            }
        }
        return true;
    }
};

// Checks are assembled in name order so reports are reproducible.
class Suite {
public:
    template <typename F>
    void run(const std::string& name, double tolerance, F&& body)
    {
        CheckResult r;
        r.name = name;
        r.tolerance = tolerance;
        auto t0 = std::chrono::steady_clock::now();
        r.residual = body();
        auto t1 = std::chrono::steady_clock::now();
        r.runtime_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        r.pass = std::isfinite(r.residual) && r.residual < tolerance;
        results_[name] = r;
    }

    std::vector<CheckResult> sorted() const
    {
        std::vector<CheckResult> out;
        for (const auto& [name, r] : results_) {
            out.push_back(r);
        }
        return out;
    }

private:
    std::map<std::string, CheckResult> results_;
};

double uniform(std::mt19937_64& rng, double lo, double hi)
{
    double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * x;
}

// Independent sum-form reference: (1/i) sum_n (-1)^n q^{(n+1/2)^2/2} e^{(2n+1) pi i t}.
Complex theta_sum_reference(Complex t, const EvalContext& ctx)
{
    const double pi = EvalContext::pi();
    Complex acc = 0.0;
    for (int n = -60; n <= 60; ++n) {
        double half = n + 0.5;
        Complex term = std::exp(Complex(0.0, pi) * ctx.tau * half * half) *
                       std::exp(Complex(0.0, pi) * (2.0 * n + 1.0) * t);
        if (n % 2 != 0) {
            term = -term;
        }
        acc += term;
    }
    return acc / Complex(0.0, 1.0);
}

json emit(const Report& report)
{
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"residual", c.residual},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass},
                          {"runtime_ms", c.runtime_ms}});
    }
    return json{{"scenario", report.scenario},
                {"parameters", report.parameters},
                {"checks", checks},
                {"pass", report.pass()}};
}

json params_json(const EvalContext& ctx, int samples, unsigned long long seed)
{
    return json{{"tau", {ctx.tau.real(), ctx.tau.imag()}},
                {"z", {ctx.z.real(), ctx.z.imag()}},
                {"tol", ctx.tol},
                {"trunc", ctx.trunc},
                {"samples", samples},
                {"seed", seed}};
}

void run_theta_check(Suite& suite, const EvalContext& ctx, unsigned long long seed)
{
    std::mt19937_64 rng(seed);
    suite.run("product_vs_sum", 1e-10, [&] {
        double worst = 0.0;
        for (Complex tau : {Complex(0.0, 1.0), Complex(0.1, 0.8)}) {
            EvalContext c = ctx;
            c.tau = tau;
            for (int i = 0; i < 100; ++i) {
                Complex t(uniform(rng, -0.9, 0.9), uniform(rng, -0.3, 0.3));
                Complex p = theta(t, c);
                Complex s = theta_sum_reference(t, c);
                worst = std::max(worst, std::abs(p - s) / std::max(1.0, std::abs(p)));
            }
        }
        return worst;
    });
    suite.run("oddness", 1e-12, [&] {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            Complex t(uniform(rng, -0.9, 0.9), uniform(rng, -0.3, 0.3));
            Complex a = theta(t, ctx);
            worst = std::max(worst,
                             std::abs(theta(-t, ctx) + a) / std::max(1.0, std::abs(a)));
        }
        return worst;
    });
    suite.run("theta_prime_fd", 1e-8, [&] {
        const double h = 1e-5;
        Complex fd = (theta(Complex(h, 0.0), ctx) - theta(Complex(-h, 0.0), ctx)) /
                     (2.0 * h);
        return std::abs(fd - theta_prime_zero(ctx)) / std::abs(theta_prime_zero(ctx));
    });
    suite.run("modular_T", 1e-8, [&] {
        return modular_residual(SL2Matrix{1, 1, 0, 1}, Complex(0.23, 0.11), ctx);
    });
    suite.run("modular_S", 1e-8, [&] {
        return modular_residual(SL2Matrix{0, -1, 1, 0}, Complex(0.2, 0.1), ctx);
    });
    suite.run("modular_random", 1e-8, [&] {
        // Random SL(2,Z) with entries bounded by 5.
        std::vector<SL2Matrix> all;
        for (long long a = -5; a <= 5; ++a) {
            for (long long b = -5; b <= 5; ++b) {
                for (long long c = -5; c <= 5; ++c) {
                    for (long long d = -5; d <= 5; ++d) {
                        if (a * d - b * c == 1) {
                            all.push_back(SL2Matrix{a, b, c, d});
                        }
                    }
                }
            }
        }
        double worst = 0.0;
        for (int i = 0; i < 5; ++i) {
            SL2Matrix g = all[rng() % all.size()];
            Complex t(uniform(rng, 0.05, 0.4), uniform(rng, 0.02, 0.2));
            worst = std::max(worst, modular_residual(g, t, ctx));
        }
        return worst;
    });
}

void run_rigidity(Suite& suite, const Scenario& scenario)
{
    if (!cy_check(scenario.pair)) {
        throw std::invalid_argument("scenario pair is not toric Calabi-Yau");
    }
    std::mt19937_64 rng(scenario.seed);
    suite.run("rigidity", scenario.ctx.tol, [&] {
        double worst = 0.0;
        std::vector<std::pair<Complex, Complex>> zt = {
            {scenario.ctx.z, scenario.ctx.tau},
            {Complex(0.17, 0.05), Complex(0.0, 1.3)},
            {Complex(0.31, -0.02), Complex(0.2, 0.9)}};
        for (const auto& [z, tau] : zt) {
            EvalContext c = scenario.ctx;
            c.z = z;
            c.tau = tau;
            for (int i = 0; i < scenario.samples; ++i) {
                TorusSample s = sample_generic(scenario.pair, c, rng);
                EllValue v = normalized_ell(scenario.pair, s, c);
                worst = std::max(worst, std::abs(v.value) / std::max(1.0, v.max_term));
            }
        }
        return worst;
    });
}

void run_blowup(Suite& suite, const Scenario& fine, const Scenario& coarse)
{
    FanMorphism m = refinement_morphism(fine.pair.fan, coarse.pair.fan);
    std::mt19937_64 rng(coarse.seed);
    suite.run("blowup_identity", coarse.ctx.tol, [&] {
        std::vector<TorusSample> samples;
        for (int i = 0; i < coarse.samples; ++i) {
            samples.push_back(sample_generic(fine.pair, coarse.ctx, rng));
        }
        return blowup_identity_residual(fine.pair, coarse.pair, m, samples, coarse.ctx);
    });
}

void run_pushforward(Suite& suite, const Fan& fan, unsigned long long seed)
{
    Fan fine = star_subdivide(fan, fan.max_cones[0]);
    FanMorphism m = refinement_morphism(fine, fan);
    int exceptional = static_cast<int>(fine.rays.size()) - 1;

    suite.run("unit_pushforward", 0.5, [&] {
        PiecewisePoly one = pw_constant(fine, Rational(1));
        return pw_equal(pushforward(m, one), pw_constant(fan, Rational(1))) ? 0.0 : 1.0;
    });
    suite.run("exceptional_to_zero", 0.5, [&] {
        PiecewisePoly f = thom_basis_element(fine, {exceptional});
        return pw_equal(pushforward(m, f), pw_zero(fan)) ? 0.0 : 1.0;
    });
    suite.run("polynomiality", 0.5, [&] {
        for (int r = 0; r < static_cast<int>(fine.rays.size()); ++r) {
            PiecewisePoly f = thom_basis_element(fine, {r});
            PiecewisePoly pushed = pushforward(m, f); // throws on residue
            if (!compatibility_check(fan, pushed)) {
                return 1.0;
            }
        }
        return 0.0;
    });
    suite.run("projection_formula", 0.5, [&] {
        std::mt19937_64 rng(seed);
        for (int trial = 0; trial < 20; ++trial) {
            PiecewisePoly f = pw_zero(fine);
            for (int r = 0; r < static_cast<int>(fine.rays.size()); ++r) {
                Polynomial global = random_polynomial(fine.dim, 2, rng);
                PiecewisePoly basis = thom_basis_element(fine, {r});
                PiecewisePoly scaled;
                for (const auto& p : basis.per_cone) {
                    scaled.per_cone.push_back(p * global);
                }
                f = pw_add(f, scaled);
            }
            PiecewisePoly g;
            Polynomial gg = random_polynomial(fan.dim, 3, rng);
            g.per_cone.assign(fan.max_cones.size(), gg);
            if (!projection_check(m, f, g)) {
                return 1.0;
            }
        }
        return 0.0;
    });
}

void run_mckay(Suite& suite, int n, const EvalContext& ctx, int samples,
               unsigned long long seed)
{
    std::mt19937_64 rng(seed);
    std::vector<EvalContext> contexts = {ctx, ctx};
    contexts[1].z = Complex(0.13, 0.04);
    contexts[1].tau = Complex(0.1, 0.9);
    int idx = 0;
    for (const auto& c : contexts) {
        suite.run("mckay_n" + std::to_string(n) + "_ctx" + std::to_string(idx++),
                  c.tol, [&] {
                      std::vector<TorusSample> ss;
                      for (int i = 0; i < samples; ++i) {
                          ss.push_back(sample_generic_orbifold(n, c, rng));
                      }
                      return mckay_residual(n, ss, c);
                  });
    }
}

void run_orb_blowup(Suite& suite, int n, const EvalContext& ctx, int samples,
                    unsigned long long seed)
{
    std::mt19937_64 rng(seed);
    suite.run("orb_blowup_n" + std::to_string(n), ctx.tol, [&] {
        std::vector<TorusSample> ss;
        for (int i = 0; i < samples; ++i) {
            ss.push_back(sample_generic_orbifold(n, ctx, rng));
        }
        return orbifold_blowup_residual(n, ss, ctx);
    });
}

void run_stringy(Suite& suite, const Fan& fan, const StringyDivisor& divisor,
                 const EvalContext& ctx)
{
    suite.run("stringy_limit", 1e-3, [&] {
        return stringy_limit_residual(fan, divisor, ctx);
    });
    suite.run("euler_consistency", 0.5, [&] {
        Rational e = stringy_euler(fan, StringyDivisor{});
        return e == Rational(Integer(fan.max_cones.size())) ? 0.0 : 1.0;
    });
}

void run_chi_y(Suite& suite, const Fan& fan, const EvalContext& ctx,
               unsigned long long seed)
{
    std::mt19937_64 rng(seed);
    suite.run("chi_y_u_independence", 1e-9, [&] {
        Complex y(0.37, 0.21);
        std::vector<Complex> values;
        ToricPair probe{fan, std::vector<Rational>(fan.rays.size(), Rational(0))};
        for (int i = 0; i < 5; ++i) {
            TorusSample s = sample_generic(probe, ctx, rng);
            values.push_back(chi_y_genus(fan, {}, s, y));
        }
        double worst = 0.0;
        for (const auto& v : values) {
            worst = std::max(worst, std::abs(v - values[0]));
        }
        return worst;
    });
    suite.run("chi_y_at_one", 1e-9, [&] {
        ToricPair probe{fan, std::vector<Rational>(fan.rays.size(), Rational(0))};
        TorusSample s = sample_generic(probe, ctx, rng);
        Complex v = chi_y_genus(fan, {}, s, Complex(1.0, 0.0));
        return std::abs(v - static_cast<double>(fan.max_cones.size()));
    });
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"toric equivariant elliptic genus verification driver"};
    app.require_subcommand(1);
    app.fallthrough(); // accept global flags after the subcommand name

    std::vector<double> tau_flag, z_flag;
    double tol = 1e-7;
    int trunc = 64;
    int samples = 10;
    unsigned long long seed = 42;
    std::string out_path;
    app.add_option("--tau", tau_flag, "lattice parameter re im")->expected(2);
    app.add_option("--z", z_flag, "Jacobi parameter re im")->expected(2);
    app.add_option("--tol", tol, "residual tolerance");
    app.add_option("--trunc", trunc, "base q-product truncation");
    app.add_option("--samples", samples, "torus samples per check");
    app.add_option("--seed", seed, "RNG seed");
    app.add_option("--out", out_path, "write the report JSON to this path");

    auto* cmd_theta = app.add_subcommand("theta-check", "theta oracle and modular suites");
    std::string pair_file;
    auto* cmd_rigidity = app.add_subcommand("rigidity", "rigidity of a Calabi-Yau pair");
    cmd_rigidity->add_option("pair", pair_file, "scenario JSON")->required();
    std::string fine_file, coarse_file;
    auto* cmd_blowup = app.add_subcommand("blowup", "refinement identity for a blow-up");
    cmd_blowup->add_option("fine", fine_file, "fine scenario JSON")->required();
    cmd_blowup->add_option("coarse", coarse_file, "coarse scenario JSON")->required();
    std::string fan_file;
    auto* cmd_push = app.add_subcommand("pushforward", "polynomiality and projection suite");
    cmd_push->add_option("fan", fan_file, "fan JSON")->required();
    int order = 1;
    auto* cmd_mckay = app.add_subcommand("mckay", "orbifold vs resolution comparison");
    cmd_mckay->add_option("--n", order, "cyclic group order")->required();
    auto* cmd_orb = app.add_subcommand("orb-blowup", "orbifold blow-up identity");
    cmd_orb->add_option("--n", order, "cyclic group order")->required();
    std::string divisor_file;
    auto* cmd_stringy = app.add_subcommand("stringy", "stringy Euler specialization");
    cmd_stringy->add_option("fan", fan_file, "fan JSON")->required();
    cmd_stringy->add_option("divisor", divisor_file, "divisor JSON")->required();
    auto* cmd_chiy = app.add_subcommand("chi-y", "chi_y genus checks");
    cmd_chiy->add_option("fan", fan_file, "fan JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // bad arguments are input errors
    }

    EvalContext ctx;
    ctx.tol = tol;
    ctx.trunc = trunc;
    if (tau_flag.size() == 2) {
        ctx.tau = Complex(tau_flag[0], tau_flag[1]);
    }
    if (z_flag.size() == 2) {
        ctx.z = Complex(z_flag[0], z_flag[1]);
    }
    if (!ctx.valid()) {
        std::cerr << "invalid parameters: Im(tau) must be positive\n";
        return 2;
    }

    Report report;
    Suite suite;
    try {
        if (cmd_theta->parsed()) {
            report.scenario = "theta-check";
            run_theta_check(suite, ctx, seed);
        } else if (cmd_rigidity->parsed()) {
            Scenario s = load_scenario(pair_file);
            s.ctx.tol = tol;
            report.scenario = "rigidity:" + pair_file;
            run_rigidity(suite, s);
            ctx = s.ctx;
            samples = s.samples;
            seed = s.seed;
        } else if (cmd_blowup->parsed()) {
            Scenario fine = load_scenario(fine_file);
            Scenario coarse = load_scenario(coarse_file);
            coarse.ctx.tol = tol;
            report.scenario = "blowup:" + fine_file + ":" + coarse_file;
            run_blowup(suite, fine, coarse);
        } else if (cmd_push->parsed()) {
            Fan fan = load_fan(fan_file);
            report.scenario = "pushforward:" + fan_file;
            run_pushforward(suite, fan, seed);
        } else if (cmd_mckay->parsed()) {
            report.scenario = "mckay:n=" + std::to_string(order);
            run_mckay(suite, order, ctx, samples, seed);
        } else if (cmd_orb->parsed()) {
            report.scenario = "orb-blowup:n=" + std::to_string(order);
            run_orb_blowup(suite, order, ctx, samples, seed);
        } else if (cmd_stringy->parsed()) {
            Fan fan = load_fan(fan_file);
            StringyDivisor d = load_divisor(divisor_file);
            report.scenario = "stringy:" + fan_file;
            run_stringy(suite, fan, d, ctx);
        } else if (cmd_chiy->parsed()) {
            Fan fan = load_fan(fan_file);
            report.scenario = "chi-y:" + fan_file;
            run_chi_y(suite, fan, ctx, seed);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    report.parameters = params_json(ctx, samples, seed);
    report.checks = suite.sorted();
    json j = emit(report);
    std::cout << j.dump(2) << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
    }
    return report.pass() ? 0 : 1;
}
