#include "sr1lab/objectives.hpp"

#include <algorithm>
#include <cmath>

#include "sr1lab/errors.hpp"

namespace sr1lab {

namespace {

double stable_sigmoid(double t) {
    if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
    const double e = std::exp(t);
    return e / (1.0 + e);
}

// log(1 + exp(-t)) without overflow for very negative t.
double log1p_exp_neg(double t) {
    if (t >= 0.0) return std::log1p(std::exp(-t));
    return -t + std::log1p(std::exp(t));
}

void require_dim(const Vector& x, int n, const char* who) {
    if (static_cast<int>(x.size()) != n)
        throw DimensionMismatch(std::string(who) + ": point has wrong dimension");
}

}  // namespace

QuadraticProblem::QuadraticProblem(SymMatrix a, Vector b) : a_(std::move(a)), b_(std::move(b)) {
    if (static_cast<int>(b_.size()) != a_.order())
        throw DimensionMismatch("QuadraticProblem: rhs length");
    const std::vector<double> eigs = eigvals_sym(a_);
    if (eigs.front() <= 0.0)
        throw NotPositiveDefinite("QuadraticProblem: matrix is not SPD");
    mu_ = eigs.front();
    lip_ = eigs.back();
}

double QuadraticProblem::value(const Vector& x) const {
    require_dim(x, dimension(), "quadratic value");
    return 0.5 * a_.quad_form(x) - dot(b_, x);
}

Vector QuadraticProblem::gradient(const Vector& x) const {
    require_dim(x, dimension(), "quadratic gradient");
    Vector g = a_.matvec(x);
    axpy(g, -1.0, b_);
    return g;
}

EvalTriple quad_eval(const QuadraticProblem& p, const Vector& x) {
    return {p.value(x), p.gradient(x), p.hessian(x)};
}

LogisticProblem::LogisticProblem(DenseMatrix features, Vector labels, double gamma)
    : z_(std::move(features)), b_(std::move(labels)), gamma_(gamma) {
    if (static_cast<int>(b_.size()) != z_.rows())
        throw DimensionMismatch("LogisticProblem: label count");
    if (gamma_ < 0.0) throw NonconvexConfiguration("LogisticProblem: gamma < 0");
    for (double l : b_)
        if (l != 1.0 && l != -1.0)
            throw NonconvexConfiguration("LogisticProblem: labels must be -1 or +1");
    const std::vector<double> ztz = eigvals_sym(gram(z_));
    lip_ = ztz.back() / (4.0 * z_.rows()) + gamma_;
}

double LogisticProblem::value(const Vector& x) const {
    require_dim(x, dimension(), "logistic value");
    const int m = z_.rows();
    double s = 0.0;
    for (int i = 0; i < m; ++i) {
        double margin = 0.0;
        for (int j = 0; j < z_.cols(); ++j) margin += z_(i, j) * x[j];
        s += log1p_exp_neg(b_[i] * margin);
    }
    return s / m + 0.5 * gamma_ * dot(x, x);
}

Vector LogisticProblem::gradient(const Vector& x) const {
    require_dim(x, dimension(), "logistic gradient");
    const int m = z_.rows();
    const int n = z_.cols();
    Vector g(n, 0.0);
    for (int i = 0; i < m; ++i) {
        double margin = 0.0;
        for (int j = 0; j < n; ++j) margin += z_(i, j) * x[j];
        // d/dm log(1+exp(-b m)) = -b sigmoid(-b m)
        const double w = -b_[i] * stable_sigmoid(-b_[i] * margin);
        for (int j = 0; j < n; ++j) g[j] += w * z_(i, j);
    }
    for (int j = 0; j < n; ++j) g[j] = g[j] / m + gamma_ * x[j];
    return g;
}

SymMatrix LogisticProblem::hessian(const Vector& x) const {
    require_dim(x, dimension(), "logistic hessian");
    const int m = z_.rows();
    const int n = z_.cols();
    SymMatrix h(n);
    for (int i = 0; i < m; ++i) {
        double margin = 0.0;
        for (int j = 0; j < n; ++j) margin += z_(i, j) * x[j];
        const double s = stable_sigmoid(b_[i] * margin);
        const double w = s * (1.0 - s) / m;
        for (int p = 0; p < n; ++p)
            for (int q = 0; q <= p; ++q) h.add(p, q, w * z_(i, p) * z_(i, q));
    }
    for (int p = 0; p < n; ++p) h.add(p, p, gamma_);
    return h;
}

Vector LogisticProblem::hvp(const Vector& x, const Vector& v) const {
    require_dim(x, dimension(), "logistic hvp");
    require_dim(v, dimension(), "logistic hvp");
    const int m = z_.rows();
    const int n = z_.cols();
    Vector out(n, 0.0);
    for (int i = 0; i < m; ++i) {
        double margin = 0.0;
        double av = 0.0;
        for (int j = 0; j < n; ++j) {
            margin += z_(i, j) * x[j];
            av += z_(i, j) * v[j];
        }
        const double s = stable_sigmoid(b_[i] * margin);
        const double w = s * (1.0 - s) / m * av;
        for (int j = 0; j < n; ++j) out[j] += w * z_(i, j);
    }
    for (int j = 0; j < n; ++j) out[j] += gamma_ * v[j];
    return out;
}

EvalTriple logistic_eval(const LogisticProblem& p, const Vector& x) {
    return {p.value(x), p.gradient(x), p.hessian(x)};
}

std::pair<double, double> logistic_constants(const LogisticProblem& p) {
    if (p.gamma() <= 0.0)
        throw NonconvexConfiguration("logistic_constants: gamma must be > 0");
    return {p.gamma(), p.lip()};
}

std::vector<std::pair<double, double>> gauss_legendre_01(int nodes) {
    if (nodes < 1) throw DimensionMismatch("gauss_legendre_01: nodes >= 1 required");
    const int n = nodes;
    std::vector<std::pair<double, double>> out(n);
    // Roots of the Legendre polynomial on [-1,1] by Newton iteration.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        out[i] = {(1.0 - x) / 2.0, w / 2.0};
        out[n - 1 - i] = {(1.0 + x) / 2.0, w / 2.0};
    }
    if (n == 1) out[0] = {0.5, 1.0};
    return out;
}

SymMatrix averaged_hessian(const Objective& o, const Vector& x, const Vector& u, int nodes) {
    if (static_cast<int>(x.size()) != o.dimension() || x.size() != u.size())
        throw DimensionMismatch("averaged_hessian: dimensions");
    const auto rule = gauss_legendre_01(nodes);
    SymMatrix acc(o.dimension());
    Vector xt(x.size());
    for (const auto& [t, w] : rule) {
        for (std::size_t i = 0; i < x.size(); ++i) xt[i] = x[i] + t * u[i];
        acc.add_scaled(o.hessian(xt), w);
    }
    return acc;
}

Vector secant_vector(const Objective& o, const Vector& x, const Vector& u) {
    Vector xu(x);
    axpy(xu, 1.0, u);
    return subtract(o.gradient(xu), o.gradient(x));
}

FdReport fd_check(const Objective& o, const Vector& x, double h) {
    if (h <= 0.0) throw NegativeArgument("fd_check: h must be > 0");
    const int n = o.dimension();
    const Vector g = o.gradient(x);
    const SymMatrix hess = o.hessian(x);

    double gmax = 1.0;
    for (double v : g) gmax = std::max(gmax, std::abs(v));
    double hmax = 1.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) hmax = std::max(hmax, std::abs(hess(i, j)));

    double grad_err = 0.0;
    double hess_err = 0.0;
    Vector xp(x), xm(x);
    for (int j = 0; j < n; ++j) {
        xp[j] = x[j] + h;
        xm[j] = x[j] - h;
        const double fd = (o.value(xp) - o.value(xm)) / (2.0 * h);
        grad_err = std::max(grad_err, std::abs(fd - g[j]) / gmax);

        const Vector gp = o.gradient(xp);
        const Vector gm = o.gradient(xm);
        for (int i = 0; i < n; ++i) {
            const double fd_h = (gp[i] - gm[i]) / (2.0 * h);
            hess_err = std::max(hess_err, std::abs(fd_h - hess(i, j)) / hmax);
        }
        xp[j] = x[j];
        xm[j] = x[j];
    }
    return {grad_err, hess_err};
}

}  // namespace sr1lab
