#pragma once

#include <optional>
#include <vector>

#include "sr1lab/linalg.hpp"
#include "sr1lab/objectives.hpp"
#include "sr1lab/sr1_update.hpp"
#include "sr1lab/trace.hpp"

namespace sr1lab {

struct SolverConfig {
    double m_const = 1.0;    ///< strong self-concordance constant M >= 0
    double skip_tol = 1e-8;  ///< relative curvature threshold for skipping
    int max_iters = 200;
    double grad_tol = 1e-12;  ///< termination threshold on ||grad||
    int warm_start_steps = 0;
    int quadrature_nodes = 16;  ///< averaged-Hessian nodes (diagnostics only)
    bool record_diagnostics = false;
    std::optional<double> initial_scale;  ///< override for L in G0 = L*I
};

enum class Termination { GradTol, MaxIters, ExactOptimum };

/// Per-step matrices kept when diagnostics are on; the invariant suites
/// check the sandwich and secant identities against these.
struct StepSnapshot {
    Vector x;  ///< iterate at the start of the step
    Vector u;  ///< step taken
    SymMatrix g_before;
    SymMatrix g_tilde;  ///< after correction (== g_before when a_k = 1)
    SymMatrix g_after;
    std::optional<SymMatrix> j_quad;    ///< averaged Hessian (general solvers)
    std::vector<double> diff_spectrum;  ///< eigs of g_before - A (quadratic solver)
    double denom_direct = 0.0;
    double denom_inverse = 0.0;
};

struct SolveResult {
    Vector final_x;
    std::vector<IterationRecord> records;
    Termination termination = Termination::MaxIters;
    int applied_updates = 0;
    int negative_denominator_events = 0;
    int skip_events = 0;
    /// Spectrum of G0 - A; always recorded by the quadratic solver.
    std::vector<double> initial_diff_spectrum;
    /// Per-step snapshots; empty unless record_diagnostics was set.
    std::vector<StepSnapshot> steps;
};

/// Rank-one update scheme for the quadratic problem: G0 = L*I, unit steps
/// x+ = x - H grad, update toward A along the step taken. Terminates with
/// ExactOptimum once the skip rule has fired and the following gradient is
/// below grad_tol; never applies more than n updates.
SolveResult solve_quadratic_sr1(const QuadraticProblem& p, const Vector& x0,
                                const SolverConfig& cfg);

/// General strongly convex objectives with the correction strategy: the
/// approximation is inflated by a_k = (1 + M r_{k-1}/2)(1 + M r_k/2) before
/// each secant update, which keeps the update well defined near the optimum.
SolveResult solve_sr1_cs(const Objective& o, const Vector& x0, const SolverConfig& cfg);

/// Same iteration with a_k forced to 1. May lose definiteness by design;
/// skipped steps and negative curvature denominators are recorded, not
/// repaired.
SolveResult solve_sr1_vanilla(const Objective& o, const Vector& x0, const SolverConfig& cfg);

/// `steps` exact Newton iterations from x0.
Vector newton_warm_start(const Objective& o, const Vector& x0, int steps);

/// Unit-step BFGS baseline with the same trace format.
SolveResult solve_bfgs(const Objective& o, const Vector& x0, const SolverConfig& cfg);

/// Exact Newton reference trace.
SolveResult solve_newton(const Objective& o, const Vector& x0, const SolverConfig& cfg);

}  // namespace sr1lab
