#include "sr1lab/potentials.hpp"

#include <cmath>

#include "sr1lab/errors.hpp"

namespace sr1lab {

double trace_potential(const SymMatrix& a, const SymMatrix& g) {
    if (a.order() != g.order()) throw DimensionMismatch("trace_potential: orders differ");
    return g.trace() - a.trace();
}

double logdet_potential(const SymMatrix& a, const SymMatrix& g) {
    if (a.order() != g.order()) throw DimensionMismatch("logdet_potential: orders differ");
    return logdet_spd(g) - logdet_spd(a);
}

double nu_measure(const SymMatrix& a, const SymMatrix& g, const Vector& u) {
    if (a.order() != g.order()) throw DimensionMismatch("nu_measure: orders differ");
    if (!psd_dominates(a, g, 1e-9)) throw OrderViolated("nu_measure: g >= a required");

    const SymMatrix diff = sym_difference(g, a);
    const Vector w = diff.matvec(u);
    if (norm(w) <= 1e-12 * std::max(1.0, diff.frobenius_norm() * norm(u))) return 0.0;

    const LowerTriangular gl = cholesky(g);
    const double num = dot(w, chol_solve(gl, w));
    const Vector au = a.matvec(u);
    const double den = dot(u, au) - dot(au, chol_solve(gl, au));
    if (den <= 0.0)
        throw DegenerateDirection("nu_measure: denominator vanished with nonzero residual");
    return std::sqrt(std::max(0.0, num / den));
}

double theta_measure(const SymMatrix& j, const SymMatrix& g, const Vector& u) {
    if (j.order() != g.order()) throw DimensionMismatch("theta_measure: orders differ");
    if (norm(u) == 0.0) throw ZeroDirection("theta_measure: u must be nonzero");

    const SymMatrix diff = sym_difference(g, j);
    const Vector w = diff.matvec(u);
    const Vector gu = g.matvec(u);
    const LowerTriangular jl = cholesky(j);
    const double num = dot(w, chol_solve(jl, w));
    const double den = dot(gu, chol_solve(jl, gu));
    if (den <= 0.0) throw DegenerateDirection("theta_measure: g u lies in the kernel");
    return std::sqrt(std::max(0.0, num / den));
}

double lambda_quadratic(const QuadraticProblem& p, const Vector& x) {
    const Vector grad = p.gradient(x);
    return std::sqrt(std::max(0.0, dot(grad, solve_spd(p.matrix(), grad))));
}

double lambda_general(const Objective& o, const Vector& x) {
    const Vector grad = o.gradient(x);
    return std::sqrt(std::max(0.0, dot(grad, solve_spd(o.hessian(x), grad))));
}

double g_norm(const Vector& grad, const SymMatrix& h) {
    return weighted_norm(grad, h);
}

}  // namespace sr1lab
