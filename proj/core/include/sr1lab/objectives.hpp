#pragma once

#include <utility>
#include <vector>

#include "sr1lab/linalg.hpp"

namespace sr1lab {

/// Evaluation contract shared by every problem: value, gradient, Hessian,
/// Hessian-vector product, plus the strong-convexity constant mu and the
/// gradient Lipschitz constant lip (mu I <= hessian(x) <= lip I).
class Objective {
  public:
    virtual ~Objective() = default;
    virtual int dimension() const = 0;
    virtual double value(const Vector& x) const = 0;
    virtual Vector gradient(const Vector& x) const = 0;
    virtual SymMatrix hessian(const Vector& x) const = 0;
    virtual Vector hvp(const Vector& x, const Vector& v) const = 0;
    virtual double mu() const = 0;
    virtual double lip() const = 0;
};

/// f(x) = 1/2 x'Ax - b'x with SPD A.
class QuadraticProblem final : public Objective {
  public:
    QuadraticProblem(SymMatrix a, Vector b);

    const SymMatrix& matrix() const { return a_; }
    const Vector& rhs() const { return b_; }
    Vector minimizer() const { return solve_spd(a_, b_); }

    int dimension() const override { return a_.order(); }
    double value(const Vector& x) const override;
    Vector gradient(const Vector& x) const override;
    SymMatrix hessian(const Vector&) const override { return a_; }
    Vector hvp(const Vector&, const Vector& v) const override { return a_.matvec(v); }
    double mu() const override { return mu_; }
    double lip() const override { return lip_; }

  private:
    SymMatrix a_;
    Vector b_;
    double mu_ = 0.0;
    double lip_ = 0.0;
};

/// L2-regularized logistic regression,
///   f(x) = 1/m sum_i log(1 + exp(-b_i <a_i, x>)) + gamma/2 ||x||^2,
/// with labels b_i in {-1,+1}. Evaluation is overflow-safe for large margins.
class LogisticProblem final : public Objective {
  public:
    LogisticProblem(DenseMatrix features, Vector labels, double gamma);

    const DenseMatrix& features() const { return z_; }
    const Vector& labels() const { return b_; }
    double gamma() const { return gamma_; }
    int sample_count() const { return z_.rows(); }

    int dimension() const override { return z_.cols(); }
    double value(const Vector& x) const override;
    Vector gradient(const Vector& x) const override;
    SymMatrix hessian(const Vector& x) const override;
    Vector hvp(const Vector& x, const Vector& v) const override;
    double mu() const override { return gamma_; }
    double lip() const override { return lip_; }

  private:
    DenseMatrix z_;
    Vector b_;
    double gamma_ = 0.0;
    double lip_ = 0.0;
};

struct EvalTriple {
    double value;
    Vector gradient;
    SymMatrix hessian;
};

EvalTriple quad_eval(const QuadraticProblem& p, const Vector& x);
EvalTriple logistic_eval(const LogisticProblem& p, const Vector& x);

/// (mu, lip) = (gamma, lambda_max(Z'Z)/(4m) + gamma).
/// Throws NonconvexConfiguration when gamma <= 0.
std::pair<double, double> logistic_constants(const LogisticProblem& p);

/// Gauss-Legendre quadrature of the Hessian along the segment [x, x+u].
/// Diagnostic only; the solvers never evaluate it inside the iteration.
SymMatrix averaged_hessian(const Objective& o, const Vector& x, const Vector& u, int nodes);

/// gradient(x+u) - gradient(x); equals the averaged Hessian applied to u.
Vector secant_vector(const Objective& o, const Vector& x, const Vector& u);

struct FdReport {
    double grad_err;
    double hess_err;
};

/// Max relative error of the analytic gradient against central differences
/// of the value, and of the analytic Hessian against central differences
/// of the gradient.
FdReport fd_check(const Objective& o, const Vector& x, double h);

/// Gauss-Legendre nodes/weights on [0, 1].
std::vector<std::pair<double, double>> gauss_legendre_01(int nodes);

}  // namespace sr1lab
