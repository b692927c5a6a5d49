#pragma once

#include <optional>

#include "sr1lab/linalg.hpp"
#include "sr1lab/objectives.hpp"

namespace sr1lab {

/// Bundle of the scalar measures attached to one approximation state.
struct MeasureReport {
    double sigma = 0.0;
    double v_potential = 0.0;
    std::optional<double> nu;
    std::optional<double> theta;
    double lambda_f = 0.0;
    double g_norm = 0.0;
};

/// sigma(a, g) = tr(g - a); nonnegative whenever a <= g.
double trace_potential(const SymMatrix& a, const SymMatrix& g);

/// V(a, g) = ln det(g a^-1), computed as logdet(g) - logdet(a).
double logdet_potential(const SymMatrix& a, const SymMatrix& g);

/// Directional closeness of g to a along u (requires g >= a):
///   nu = sqrt( u'(g-a)g^-1(g-a)u / u'(a - a g^-1 a)u ),
/// with nu = 0 when (g-a)u vanishes. One rank-one step decreases the
/// log-det potential by exactly ln(1 + nu^2).
double nu_measure(const SymMatrix& a, const SymMatrix& g, const Vector& u);

/// Contraction factor along u without any ordering requirement on g vs j:
///   theta = sqrt( u'(g-j)j^-1(g-j)u / u' g j^-1 g u ).
double theta_measure(const SymMatrix& j, const SymMatrix& g, const Vector& u);

/// Gradient norm in the A^-1 metric for the quadratic problem.
double lambda_quadratic(const QuadraticProblem& p, const Vector& x);

/// Local gradient norm sqrt( grad' [hessian(x)]^-1 grad ).
double lambda_general(const Objective& o, const Vector& x);

/// ||grad||_h for an SPD weight h (h is the inverse approximation).
double g_norm(const Vector& grad, const SymMatrix& h);

}  // namespace sr1lab
