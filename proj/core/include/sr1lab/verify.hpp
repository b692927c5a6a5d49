#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sr1lab/bounds.hpp"
#include "sr1lab/objectives.hpp"
#include "sr1lab/report.hpp"
#include "sr1lab/solvers.hpp"

namespace sr1lab {

struct VerifyOptions {
    int cases = 1000;
    std::uint64_t seed = 1;
};

/// Test-only hooks. corrupt_update, when set, perturbs each updated matrix
/// before the checks run, so a deliberately broken update is pinned to the
/// invariant it violates.
struct VerifyHooks {
    std::function<void(SymMatrix&)> corrupt_update;
};

/// Rank-one update properties on one random (A, G = A + PSD, u) instance:
/// the eigenvalue sandwich, trace decrease, rank drop with non-increasing
/// condition number, the log-det identity, the nu lower bound, agreement
/// of the direct/secant/inverse forms, and the degenerate-direction skip.
std::vector<CaseFailure> verify_lemma_case(std::uint64_t case_seed, const VerifyHooks& hooks = {});

// Per-run invariant checks. Runs must be made with record_diagnostics on.

/// A <= G_k <= kappa A along the whole trace.
std::vector<CaseFailure> check_sandwich(const QuadraticProblem& p, const SolveResult& run);

/// One-step contraction lambda_{k+1} <= (1 - 1/eta_k) lambda_k.
std::vector<CaseFailure> check_step_contraction(const QuadraticProblem& p, const SolveResult& run);

/// Secant history G_k u_i = A u_i for applied i < k, and linear
/// independence of the applied directions.
std::vector<CaseFailure> check_secant_history(const QuadraticProblem& p, const SolveResult& run);

/// Applied-update count <= n and gradient reduction within n+1 iterates.
std::vector<CaseFailure> check_finite_termination(const QuadraticProblem& p,
                                                  const SolveResult& run);

/// Empirical lambda ratio below both quadratic envelopes at every k.
std::vector<CaseFailure> check_quad_envelope_dominance(const QuadraticProblem& p,
                                                       const SolveResult& run);

/// lambda_k <= sqrt(kappa) g_k and g_0 <= lambda_0 on quadratic traces.
std::vector<CaseFailure> check_lambda_g_relations(const QuadraticProblem& p,
                                                  const SolveResult& run);

/// min eig(G~_k - J_k) >= -1e-8 ||G~_k||_2 at every recorded step.
std::vector<CaseFailure> check_correction_order(const SolveResult& run);

/// Conditional decay under M lambda_0 <= ln(3/2)/(4 kappa): the discounted
/// lambda and r_k sequences under (1 - 1/(2 kappa))^k, xi_k <= 3/2, and
/// min eig(G_k - J_{k-1}) >= -1e-8 scale.
std::vector<CaseFailure> check_conditional_decay(const SolveResult& run,
                                                 const ProblemConstants& c);

/// Every skip event must leave G_{k+1} exactly equal to G~_k.
std::vector<CaseFailure> check_skip_identity(const SolveResult& run);

/// lambda ratio below the exponential general envelope, and the polynomial
/// envelope dominating the exponential one on its validity range.
std::vector<CaseFailure> check_general_envelope_dominance(const SolveResult& run,
                                                          const ProblemConstants& c);

/// solve_sr1_cs with M = 0 must reproduce solve_quadratic_sr1 iterates.
std::vector<CaseFailure> check_quadratic_degeneration(std::uint64_t seed);

SuiteResult run_lemma_suite(const VerifyOptions& opts, const VerifyHooks& hooks = {});
SuiteResult run_quadratic_suite(const VerifyOptions& opts);
SuiteResult run_general_suite(const VerifyOptions& opts);

/// which: lemmas | quadratic | general | all
std::vector<SuiteResult> run_suites(const std::string& which, const VerifyOptions& opts);

}  // namespace sr1lab
