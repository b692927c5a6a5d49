#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sr1lab/bounds.hpp"
#include "sr1lab/data.hpp"
#include "sr1lab/errors.hpp"
#include "sr1lab/potentials.hpp"
#include "sr1lab/report.hpp"
#include "sr1lab/rng.hpp"
#include "sr1lab/solvers.hpp"
#include "sr1lab/verify.hpp"

namespace {

using namespace sr1lab;

std::string envelope_path(const std::string& out) {
    std::filesystem::path p(out);
    if (p.extension() == ".csv") {
        p.replace_extension(".envelopes.csv");
        return p.string();
    }
    return out + ".envelopes.csv";
}

std::ofstream open_sink(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw SinkFailure("cannot open '" + path + "' for writing");
    return f;
}

std::string config_echo(const SolverConfig& cfg) {
    std::string s = "skip_tol=" + format_double(cfg.skip_tol) +
                    ",max_iters=" + std::to_string(cfg.max_iters) +
                    ",grad_tol=" + format_double(cfg.grad_tol) +
                    ",warm_start=" + std::to_string(cfg.warm_start_steps) +
                    ",quadrature_nodes=" + std::to_string(cfg.quadrature_nodes) +
                    ",diagnostics=" + (cfg.record_diagnostics ? "1" : "0");
    return s;
}

Vector gaussian_vector(std::uint64_t seed, int n) {
    SplitMix64 rng(seed);
    Vector v(n);
    for (int j = 0; j < n; ++j) v[j] = rng.gaussian();
    return v;
}

struct QuadArgs {
    int n = 20;
    double kappa = 100.0;
    std::uint64_t seed = 1;
    int iters = 0;  // 0: derive from n
    std::string out;
    bool diagnostics = false;
};

int run_quad(const QuadArgs& a) {
    const QuadraticProblem p = gen_quadratic(a.n, a.kappa, a.seed);
    const Vector x0 = gaussian_vector(SplitMix64::derive(a.seed, 1), a.n);

    SolverConfig cfg;
    cfg.m_const = 0.0;
    cfg.max_iters = a.iters > 0 ? a.iters : 4 * a.n + 8;
    cfg.grad_tol = 1e-8 * norm(p.gradient(x0));
    cfg.record_diagnostics = a.diagnostics;

    const SolveResult run = solve_quadratic_sr1(p, x0, cfg);

    RunManifest manifest;
    manifest.method = "quad_sr1";
    manifest.config = config_echo(cfg);
    manifest.n = a.n;
    manifest.kappa = p.lip() / p.mu();
    manifest.mu = p.mu();
    manifest.lip = p.lip();
    manifest.seed = a.seed;

    auto trace = open_sink(a.out);
    write_trace_csv(run, manifest, trace);

    const ProblemConstants c = constants_from_quadratic(p, run);
    const int k_max = run.records.back().k;
    auto env = open_sink(envelope_path(a.out));
    write_envelopes_csv({quad_trace_envelope(c, k_max), quad_logdet_envelope(c, std::max(1, k_max))},
                        env);

    nlohmann::ordered_json j;
    j["iterations"] = k_max;
    j["applied_updates"] = run.applied_updates;
    j["final_grad_norm"] = run.records.back().grad_norm;
    j["termination"] = run.termination == Termination::ExactOptimum ? "exact_optimum"
                       : run.termination == Termination::GradTol    ? "grad_tol"
                                                                    : "max_iters";
    std::cout << j.dump(2) << std::endl;
    return 0;
}

struct LogisticArgs {
    std::string data_path;
    int m = 200;
    int n = 30;
    double separation = 1.0;
    double gamma = -1.0;
    double m_const = 1.0;
    std::string method = "sr1_cs";
    int warm_start = 3;
    double tol = 1e-12;
    int iters = 200;
    std::uint64_t seed = 1;
    std::string out;
    bool diagnostics = false;
};

int run_logistic(const LogisticArgs& a) {
    Dataset data;
    if (!a.data_path.empty()) {
        std::ifstream in(a.data_path);
        if (!in) throw SinkFailure("cannot open dataset '" + a.data_path + "'");
        data = parse_libsvm(in, a.data_path);
    } else {
        data = gen_synthetic_logistic(a.m, a.n, SplitMix64::derive(a.seed, 2), a.separation);
    }
    const LogisticProblem p = make_logistic_problem(data, a.gamma);

    SolverConfig cfg;
    cfg.m_const = a.m_const;
    cfg.max_iters = a.iters;
    cfg.grad_tol = a.tol;
    cfg.warm_start_steps = a.warm_start;
    cfg.record_diagnostics = a.diagnostics;

    const Vector x0 = newton_warm_start(p, Vector(p.dimension(), 0.0), a.warm_start);

    SolveResult run;
    if (a.method == "sr1_cs")
        run = solve_sr1_cs(p, x0, cfg);
    else if (a.method == "sr1")
        run = solve_sr1_vanilla(p, x0, cfg);
    else if (a.method == "bfgs")
        run = solve_bfgs(p, x0, cfg);
    else if (a.method == "newton")
        run = solve_newton(p, x0, cfg);
    else
        throw MissingConstants("unknown method '" + a.method + "'");

    RunManifest manifest;
    manifest.method = a.method;
    manifest.config = config_echo(cfg);
    manifest.n = p.dimension();
    manifest.kappa = p.lip() / p.mu();
    manifest.mu = p.mu();
    manifest.lip = p.lip();
    manifest.m_const = a.m_const;
    manifest.gamma = p.gamma();
    manifest.seed = a.seed;

    auto trace = open_sink(a.out);
    write_trace_csv(run, manifest, trace);

    ProblemConstants c = constants_from_objective(p, a.m_const, run.records.front().lambda_f);
    const int k_max = std::max(1, run.records.back().k);
    auto [exp_env, poly_env] = general_envelope(c, k_max);
    auto env = open_sink(envelope_path(a.out));
    write_envelopes_csv({exp_env, poly_env}, env);

    const LocalCondition lc = local_condition(c);
    nlohmann::ordered_json j;
    j["samples"] = p.sample_count();
    j["n"] = p.dimension();
    j["gamma"] = p.gamma();
    j["kappa"] = c.kappa;
    j["lambda0_after_warm_start"] = c.lambda0;
    j["local_condition_threshold"] = lc.threshold;
    j["local_condition_satisfied"] = lc.satisfied;
    j["iterations"] = run.records.back().k;
    j["final_grad_norm"] = run.records.back().grad_norm;
    j["skip_events"] = run.skip_events;
    j["negative_denominator_events"] = run.negative_denominator_events;
    std::cout << j.dump(2) << std::endl;
    return 0;
}

struct BoundsArgs {
    int n = 10;
    double kappa = 100.0;
    int k_max = 200;
    double lambda0 = 0.0;
    double m_const = 1.0;
    std::string out;
};

int run_bounds(const BoundsArgs& a) {
    ProblemConstants c;
    c.n = a.n;
    c.kappa = a.kappa;
    c.m_const = a.m_const;
    c.lambda0 = a.lambda0;

    auto [exp_env, poly_env] = general_envelope(c, a.k_max);
    auto env = open_sink(a.out);
    write_envelopes_csv({quad_logdet_envelope(c, a.k_max), exp_env, poly_env}, env);

    nlohmann::ordered_json j;
    j["starting_moments"] = starting_moments(c);
    const LocalCondition lc = local_condition(c);
    j["local_condition_threshold"] = lc.threshold;
    j["local_condition_satisfied"] = lc.satisfied;
    j["poly_envelope_onset"] = general_poly_onset(c);
    std::cout << j.dump(2) << std::endl;
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    int cases = 1000;
    std::uint64_t seed = 1;
    std::string out;
};

int run_verify(const VerifyArgs& a) {
    const std::vector<SuiteResult> results = run_suites(a.suite, {a.cases, a.seed});
    const std::string summary = verify_summary_json(results);
    std::cout << summary << std::endl;
    if (!a.out.empty()) {
        auto f = open_sink(a.out);
        f << summary << '\n';
    }
    for (const SuiteResult& s : results)
        if (!s.failures.empty()) return 1;
    return 0;
}

struct GenArgs {
    int m = 200;
    int n = 30;
    std::uint64_t seed = 1;
    double separation = 1.0;
    std::string out;
};

int run_gen(const GenArgs& a) {
    const Dataset d = gen_synthetic_logistic(a.m, a.n, a.seed, a.separation);
    auto f = open_sink(a.out);
    serialize_libsvm(d, f);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SR1 quasi-Newton toolkit: solvers, rate envelopes, and invariant suites"};
    app.require_subcommand(1);

    QuadArgs qa;
    auto* quad = app.add_subcommand("quad", "Rank-one scheme on a seeded SPD quadratic");
    quad->add_option("--n", qa.n, "dimension")->check(CLI::PositiveNumber);
    quad->add_option("--kappa", qa.kappa, "condition number")->check(CLI::Range(1.0, 1e12));
    quad->add_option("--seed", qa.seed, "rng seed");
    quad->add_option("--iters", qa.iters, "max iterations (0: derived from n)");
    quad->add_option("--out", qa.out, "trace csv path")->required();
    quad->add_flag("--diagnostics", qa.diagnostics, "record per-step matrices and measures");

    LogisticArgs la;
    auto* logistic = app.add_subcommand("logistic", "Regularized logistic regression solvers");
    logistic->add_option("--data", la.data_path, "LIBSVM dataset path");
    logistic->add_option("--m", la.m, "synthetic sample count")->check(CLI::PositiveNumber);
    logistic->add_option("--n", la.n, "synthetic dimension")->check(CLI::PositiveNumber);
    logistic->add_option("--separation", la.separation, "synthetic class separation");
    logistic->add_option("--gamma", la.gamma, "ridge parameter (default 1/(10m))");
    logistic->add_option("--m-const", la.m_const, "correction constant M")
        ->check(CLI::NonNegativeNumber);
    logistic->add_option("--method", la.method, "sr1 | sr1_cs | bfgs | newton")
        ->check(CLI::IsMember({"sr1", "sr1_cs", "bfgs", "newton"}));
    logistic->add_option("--warm-start", la.warm_start, "Newton warm-start steps")
        ->check(CLI::NonNegativeNumber);
    logistic->add_option("--tol", la.tol, "gradient-norm termination threshold");
    logistic->add_option("--iters", la.iters, "max iterations")->check(CLI::PositiveNumber);
    logistic->add_option("--seed", la.seed, "rng seed");
    logistic->add_option("--out", la.out, "trace csv path")->required();
    logistic->add_flag("--diagnostics", la.diagnostics, "record per-step matrices and measures");

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "Tabulate rate envelopes and starting moments");
    bounds->add_option("--n", ba.n, "dimension")->check(CLI::PositiveNumber);
    bounds->add_option("--kappa", ba.kappa, "condition number")->check(CLI::Range(1.0, 1e12));
    bounds->add_option("--k-max", ba.k_max, "last tabulated iteration")
        ->check(CLI::NonNegativeNumber);
    bounds->add_option("--lambda0", ba.lambda0, "initial local gradient norm");
    bounds->add_option("--m-const", ba.m_const, "correction constant M")
        ->check(CLI::NonNegativeNumber);
    bounds->add_option("--out", ba.out, "envelope csv path")->required();

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run the property suites");
    verify->add_option("--suite", va.suite, "lemmas | quadratic | general | all")
        ->check(CLI::IsMember({"lemmas", "quadratic", "general", "all"}));
    verify->add_option("--cases", va.cases, "case budget")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", va.seed, "master seed");
    verify->add_option("--out", va.out, "also write the JSON summary here");

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "Write a synthetic LIBSVM dataset");
    gen->add_option("--m", ga.m, "sample count")->check(CLI::PositiveNumber);
    gen->add_option("--n", ga.n, "dimension")->check(CLI::PositiveNumber);
    gen->add_option("--seed", ga.seed, "rng seed");
    gen->add_option("--separation", ga.separation, "class separation");
    gen->add_option("--out", ga.out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*quad) return run_quad(qa);
        if (*logistic) return run_logistic(la);
        if (*bounds) return run_bounds(ba);
        if (*verify) return run_verify(va);
        if (*gen) return run_gen(ga);
    } catch (const sr1lab::ParseError& e) {
        std::cerr << "parse error at line " << e.line_no << ": " << e.what() << std::endl;
        return 1;
    } catch (const sr1lab::Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 2;
}
