#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sr1lab/solvers.hpp"

namespace sr1lab {

enum class EnvelopeKind { QuadTrace, QuadLogDet, GeneralExp, GeneralPoly };

std::string envelope_kind_name(EnvelopeKind k);

/// Tabulated theoretical bound: multiplier on lambda_f(x_0) per iteration
/// index. Multipliers are nonnegative and clamped to the largest finite
/// double where the closed form overflows.
struct RateEnvelope {
    EnvelopeKind kind;
    std::vector<std::pair<int, double>> values;  // (k, multiplier), k ascending

    /// Multiplier at index k; throws GridMismatch when k is not tabulated.
    double at(int k) const;
};

struct ProblemConstants {
    int n = 0;
    double kappa = 1.0;
    double mu = 1.0;
    double lip = 1.0;
    double m_const = 0.0;
    double lambda0 = 0.0;
    double trace0 = 0.0;  ///< tr(G0 - A), quadratic runs only
    /// Spectra of G_k - A per step, quadratic runs only. A single entry
    /// (the initial spectrum) is enough for the condition-number form of
    /// the trace envelope; a full history enables the per-step form.
    std::vector<std::vector<double>> eig_history;
};

ProblemConstants constants_from_quadratic(const QuadraticProblem& p, const SolveResult& run,
                                          double m_const = 0.0);
ProblemConstants constants_from_objective(const Objective& o, double m_const, double lambda0);

/// Trace-potential envelope for the quadratic scheme. With a full spectrum
/// history the per-step decrease factors are used and the envelope reaches
/// exactly 0 at the finite-termination index; otherwise the coarser form
/// based on the condition number of G0 - A applies.
RateEnvelope quad_trace_envelope(const ProblemConstants& c, int k_max);

/// Log-det envelope (e^{(n/k) ln kappa} - 1)^{k/2} sqrt(kappa), k >= 1.
RateEnvelope quad_logdet_envelope(const ProblemConstants& c, int k_max);

/// General-function envelopes: the exponential form
/// (e^{2n ln(e kappa)/k} - 1)^{k/2} sqrt(3 kappa) for k >= 1 and the
/// polynomial form (4n ln(e kappa)/k)^{k/2} sqrt(3 kappa), tabulated only
/// on its validity range k > 4n ln(e kappa)/ln 2.
std::pair<RateEnvelope, RateEnvelope> general_envelope(const ProblemConstants& c, int k_max);

/// Validity onset of the polynomial general envelope.
double general_poly_onset(const ProblemConstants& c);

struct LocalCondition {
    double threshold = 0.0;  ///< ln(3/2) / (4 kappa)
    bool satisfied = false;  ///< M * lambda0 <= threshold
};

LocalCondition local_condition(const ProblemConstants& c);

/// Iteration counts past which each method's superlinear envelope starts
/// to bite; keys: sr1_cs, greedy_sr1, rand_bfgs, bfgs, dfp.
std::map<std::string, double> starting_moments(const ProblemConstants& c);

struct Theorem41Step {
    double xi = 1.0;    ///< e^{M sum (r_{i-1}+r_i)} accumulated over past steps
    double alpha = 0.0; ///< (1+M r_k/2)(1+M r_{k-1}/2) - 1
    double beta = 0.0;  ///< 1 - 1/(kappa xi_k (1+M r_{k-1}/2)(1+M r_k/2))
};

/// Per-record correction-growth quantities computed from the r_k history.
std::vector<Theorem41Step> theorem41_quantities(const SolveResult& trace,
                                                const ProblemConstants& c);

}  // namespace sr1lab
