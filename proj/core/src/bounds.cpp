#include "sr1lab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sr1lab/errors.hpp"

namespace sr1lab {

namespace {

constexpr double kRankTol = 1e-8;

double clamp_finite(double v) {
    if (std::isnan(v)) return 0.0;
    return std::min(v, std::numeric_limits<double>::max());
}

/// exp(0.5*k*ln_base + 0.5*ln_tail), overflow-safe.
double log_space_multiplier(int k, double ln_base, double ln_tail) {
    const double ln_mult = 0.5 * k * ln_base + 0.5 * ln_tail;
    if (ln_mult == -std::numeric_limits<double>::infinity()) return 0.0;
    return clamp_finite(std::exp(ln_mult));
}

/// ln(e^t - 1) without overflow.
double ln_expm1(double t) {
    if (t <= 0.0) return -std::numeric_limits<double>::infinity();
    if (t > 36.0) return t;  // e^-t below double resolution
    return std::log(std::expm1(t));
}

/// Trace-decrease factor 1 - lambda_min / sum over the nonzero spectrum;
/// 0 once the spectrum has at most one nonzero eigenvalue.
double trace_factor(const std::vector<double>& spectrum) {
    double top = 0.0;
    for (double e : spectrum) top = std::max(top, std::abs(e));
    if (top == 0.0) return 0.0;
    double sum = 0.0;
    double smallest = top;
    int count = 0;
    for (double e : spectrum) {
        if (std::abs(e) <= kRankTol * top) continue;
        ++count;
        sum += e;
        smallest = std::min(smallest, e);
    }
    if (count <= 1) return 0.0;
    return 1.0 - smallest / sum;
}

double initial_diff_condition(const std::vector<double>& spectrum) {
    double top = 0.0;
    for (double e : spectrum) top = std::max(top, std::abs(e));
    if (top == 0.0) return 1.0;
    double smallest = top;
    for (double e : spectrum) {
        if (std::abs(e) <= kRankTol * top) continue;
        smallest = std::min(smallest, std::abs(e));
    }
    return top / smallest;
}

}  // namespace

std::string envelope_kind_name(EnvelopeKind k) {
    switch (k) {
        case EnvelopeKind::QuadTrace: return "quad_trace";
        case EnvelopeKind::QuadLogDet: return "quad_logdet";
        case EnvelopeKind::GeneralExp: return "general_exp";
        case EnvelopeKind::GeneralPoly: return "general_poly";
    }
    return "unknown";
}

double RateEnvelope::at(int k) const {
    for (const auto& [kk, v] : values)
        if (kk == k) return v;
    throw GridMismatch("envelope has no value at k=" + std::to_string(k));
}

ProblemConstants constants_from_quadratic(const QuadraticProblem& p, const SolveResult& run,
                                          double m_const) {
    ProblemConstants c;
    c.n = p.dimension();
    c.mu = p.mu();
    c.lip = p.lip();
    c.kappa = p.lip() / p.mu();
    c.m_const = m_const;
    c.lambda0 = run.records.empty() ? 0.0 : run.records.front().lambda_f;
    for (double e : run.initial_diff_spectrum) c.trace0 += e;
    if (!run.steps.empty()) {
        for (const auto& s : run.steps) c.eig_history.push_back(s.diff_spectrum);
    } else if (!run.initial_diff_spectrum.empty()) {
        c.eig_history.push_back(run.initial_diff_spectrum);
    }
    return c;
}

ProblemConstants constants_from_objective(const Objective& o, double m_const, double lambda0) {
    ProblemConstants c;
    c.n = o.dimension();
    c.mu = o.mu();
    c.lip = o.lip();
    c.kappa = o.lip() / o.mu();
    c.m_const = m_const;
    c.lambda0 = lambda0;
    return c;
}

RateEnvelope quad_trace_envelope(const ProblemConstants& c, int k_max) {
    if (c.mu <= 0.0 || c.eig_history.empty())
        throw MissingConstants("quad_trace_envelope: needs mu and at least the initial spectrum");
    const double head = c.trace0 / c.mu;

    RateEnvelope env{EnvelopeKind::QuadTrace, {}};
    env.values.reserve(k_max + 1);
    env.values.emplace_back(0, clamp_finite(head));

    const bool per_step = static_cast<int>(c.eig_history.size()) + 1 >= k_max;
    double product = 1.0;
    if (per_step) {
        // The one-step contraction at index k is controlled by the trace
        // potential of the previous iterate, so the factor for step j
        // enters the bound at index j+1.
        for (int k = 1; k <= k_max; ++k) {
            if (k >= 2) product *= trace_factor(c.eig_history[k - 2]);
            env.values.emplace_back(k, clamp_finite(product * head));
        }
    } else {
        const double kappa_r = initial_diff_condition(c.eig_history.front());
        for (int k = 1; k <= k_max; ++k) {
            const int remaining = c.n - k + 1;
            const double factor = remaining >= 1 ? 1.0 - 1.0 / (remaining * kappa_r) : 0.0;
            product *= std::max(0.0, factor);
            env.values.emplace_back(k, clamp_finite(product * head));
        }
    }
    return env;
}

RateEnvelope quad_logdet_envelope(const ProblemConstants& c, int k_max) {
    if (c.n < 1 || c.kappa < 1.0)
        throw MissingConstants("quad_logdet_envelope: needs n and kappa");
    RateEnvelope env{EnvelopeKind::QuadLogDet, {}};
    const double ln_tail = std::log(c.kappa);
    for (int k = 1; k <= k_max; ++k) {
        const double t = static_cast<double>(c.n) / k * std::log(c.kappa);
        env.values.emplace_back(k, log_space_multiplier(k, ln_expm1(t), ln_tail));
    }
    return env;
}

double general_poly_onset(const ProblemConstants& c) {
    return 4.0 * c.n * std::log(M_E * c.kappa) / std::log(2.0);
}

std::pair<RateEnvelope, RateEnvelope> general_envelope(const ProblemConstants& c, int k_max) {
    if (c.n < 1 || c.kappa < 1.0)
        throw MissingConstants("general_envelope: needs n and kappa");
    const double lnek = std::log(M_E * c.kappa);
    const double ln_tail = std::log(3.0 * c.kappa);

    RateEnvelope exp_env{EnvelopeKind::GeneralExp, {}};
    for (int k = 1; k <= k_max; ++k) {
        const double t = 2.0 * c.n * lnek / k;
        exp_env.values.emplace_back(k, log_space_multiplier(k, ln_expm1(t), ln_tail));
    }

    RateEnvelope poly_env{EnvelopeKind::GeneralPoly, {}};
    const int k_start = static_cast<int>(std::floor(general_poly_onset(c))) + 1;
    for (int k = k_start; k <= k_max; ++k) {
        const double base = 4.0 * c.n * lnek / k;
        poly_env.values.emplace_back(k, log_space_multiplier(k, std::log(base), ln_tail));
    }
    return {std::move(exp_env), std::move(poly_env)};
}

LocalCondition local_condition(const ProblemConstants& c) {
    if (c.kappa < 1.0 || c.m_const < 0.0 || c.lambda0 < 0.0)
        throw MissingConstants("local_condition: needs kappa, m_const, lambda0");
    LocalCondition lc;
    lc.threshold = std::log(1.5) / (4.0 * c.kappa);
    lc.satisfied = c.m_const * c.lambda0 <= lc.threshold;
    return lc;
}

std::map<std::string, double> starting_moments(const ProblemConstants& c) {
    if (c.n < 1 || c.kappa < 1.0) throw MissingConstants("starting_moments: needs n and kappa");
    const double n = c.n;
    const double kappa = c.kappa;
    std::map<std::string, double> m;
    m["sr1_cs"] = 2.0 * n * std::log(M_E * kappa) / std::log(2.0);
    m["greedy_sr1"] = 4.0 * std::max(n, kappa) * std::log(2.0 * n * kappa);
    m["rand_bfgs"] = std::max(n, 2.0 * kappa) * std::log(4.0 * n * kappa);
    m["bfgs"] = 8.0 * n * std::log(2.0 * kappa);
    m["dfp"] = 18.0 * n * kappa * std::log(2.0 * kappa);
    return m;
}

std::vector<Theorem41Step> theorem41_quantities(const SolveResult& trace,
                                                const ProblemConstants& c) {
    if (c.kappa < 1.0 || c.m_const < 0.0)
        throw MissingConstants("theorem41_quantities: needs kappa and m_const");
    const double m = c.m_const;
    std::vector<Theorem41Step> out;
    out.reserve(trace.records.size());
    double xi = 1.0;
    double r_prev = 0.0;
    for (const IterationRecord& rec : trace.records) {
        const double r_k = rec.r_k;
        Theorem41Step step;
        step.xi = xi;
        step.alpha = (1.0 + m * r_k / 2.0) * (1.0 + m * r_prev / 2.0) - 1.0;
        step.beta = 1.0 - 1.0 / (c.kappa * xi * (1.0 + m * r_prev / 2.0) * (1.0 + m * r_k / 2.0));
        out.push_back(step);
        xi *= std::exp(m * (r_prev + r_k));
        r_prev = r_k;
    }
    return out;
}

}  // namespace sr1lab
