#include "sr1lab/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "sr1lab/errors.hpp"
#include "sr1lab/potentials.hpp"

namespace sr1lab {

namespace {

void check_config(const SolverConfig& cfg) {
    if (cfg.max_iters < 1) throw NegativeArgument("SolverConfig: max_iters >= 1");
    if (cfg.grad_tol <= 0.0) throw NegativeArgument("SolverConfig: grad_tol > 0");
    if (cfg.m_const < 0.0) throw NegativeArgument("SolverConfig: m_const >= 0");
    if (cfg.quadrature_nodes < 1) throw NegativeArgument("SolverConfig: quadrature_nodes >= 1");
}

DenomSign classify(bool skipped, double denom) {
    if (skipped || denom == 0.0) return DenomSign::Zero;
    return denom > 0.0 ? DenomSign::Pos : DenomSign::Neg;
}

/// Steps below the resolution of a gradient difference carry no usable
/// secant information: y is dominated by evaluation round-off and a
/// rank-one update from it would only inject noise into the state.
bool below_secant_resolution(const Vector& x, const Vector& u) {
    constexpr double kSqrtEps = 1.4901161193847656e-08;
    return norm(u) <= kSqrtEps * (1.0 + norm(x));
}

IterationRecord base_record(int k, double f, double gn, double lambda, double gnorm) {
    IterationRecord rec;
    rec.k = k;
    rec.f_value = f;
    rec.grad_norm = gn;
    rec.lambda_f = lambda;
    rec.g_norm = gnorm;
    return rec;
}

template <typename F>
std::optional<double> try_measure(F&& f) {
    try {
        return std::forward<F>(f)();
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace

namespace {

/// The difference G_k - A held as B B' (columns of B). Annihilating the
/// step direction is a Householder rotation and a column drop in the
/// factor, so the rank decrease and the kernel of the difference are
/// exact by representation; rounding noise cannot re-open a direction
/// that an update has closed.
class FactoredResidual {
  public:
    FactoredResidual(const SymMatrix& a, double scale) {
        auto [eigs, vectors] = eig_sym(a);
        const int n = a.order();
        for (int j = 0; j < n; ++j) {
            const double d = scale - eigs[j];
            if (d <= 1e-12 * scale) continue;  // direction already matched
            Vector col(n);
            const double s = std::sqrt(d);
            for (int i = 0; i < n; ++i) col[i] = s * vectors(i, j);
            cols_.push_back(std::move(col));
        }
        spectrum_.assign(n, 0.0);
        for (int j = 0; j < n; ++j) spectrum_[j] = std::max(0.0, scale - eigs[j]);
        std::sort(spectrum_.begin(), spectrum_.end());
    }

    int rank() const { return static_cast<int>(cols_.size()); }

    Vector coefficients(const Vector& u) const {
        Vector c(cols_.size());
        for (std::size_t j = 0; j < cols_.size(); ++j) c[j] = dot(cols_[j], u);
        return c;
    }

    Vector apply_coefficients(const Vector& c) const {
        Vector w(cols_.empty() ? 0 : cols_[0].size(), 0.0);
        if (cols_.empty()) return w;
        for (std::size_t j = 0; j < cols_.size(); ++j) axpy(w, c[j], cols_[j]);
        return w;
    }

    /// Removes the component along c = B'u: B <- B H with the Householder
    /// H mapping c to a coordinate axis, then drops that column.
    void annihilate(const Vector& c) {
        const double cn = norm(c);
        Vector v = scaled(c, 1.0 / cn);
        v[0] += v[0] >= 0.0 ? 1.0 : -1.0;
        const double vv = dot(v, v);

        // B H = B - (2/v'v) (B v) v'
        Vector bv(cols_[0].size(), 0.0);
        for (std::size_t j = 0; j < cols_.size(); ++j) axpy(bv, v[j], cols_[j]);
        std::vector<Vector> next;
        next.reserve(cols_.size() - 1);
        for (std::size_t j = 1; j < cols_.size(); ++j) {
            Vector col = cols_[j];
            axpy(col, -2.0 * v[j] / vv, bv);
            next.push_back(std::move(col));
        }
        cols_ = std::move(next);
    }

    SymMatrix materialize(const SymMatrix& a) const {
        SymMatrix g = a;
        const int n = a.order();
        for (const Vector& col : cols_)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j <= i; ++j) g.add(i, j, col[i] * col[j]);
        return g;
    }

    /// Eigenvalues of B B' (squared singular values of B), zero-padded to n.
    std::vector<double> spectrum(int n) const {
        if (cols_.empty()) return std::vector<double>(n, 0.0);
        SymMatrix gramB(static_cast<int>(cols_.size()));
        for (std::size_t i = 0; i < cols_.size(); ++i)
            for (std::size_t j = 0; j <= i; ++j)
                gramB.set(static_cast<int>(i), static_cast<int>(j), dot(cols_[i], cols_[j]));
        const std::vector<double> eigs = eigvals_sym(gramB);
        std::vector<double> padded(n, 0.0);
        for (std::size_t i = 0; i < eigs.size(); ++i)
            padded[n - eigs.size() + i] = std::max(0.0, eigs[i]);
        return padded;
    }

    const std::vector<double>& initial_spectrum() const { return spectrum_; }

  private:
    std::vector<Vector> cols_;
    std::vector<double> spectrum_;
};

}  // namespace

SolveResult solve_quadratic_sr1(const QuadraticProblem& p, const Vector& x0,
                                const SolverConfig& cfg) {
    check_config(cfg);
    const SymMatrix& a = p.matrix();
    const int n = a.order();
    const double scale = cfg.initial_scale.value_or(p.lip());

    FactoredResidual residual(a, scale);
    SymMatrix h0 = SymMatrix::identity(n);
    h0.scale(1.0 / scale);
    HessianApprox ha{residual.materialize(a), std::move(h0)};

    const LowerTriangular la = cholesky(a);

    SolveResult out;
    out.initial_diff_spectrum = residual.initial_spectrum();

    Vector x = x0;
    bool last_skipped = false;
    for (int k = 0;; ++k) {
        const Vector grad = p.gradient(x);
        const double gn = norm(grad);
        const double lambda = std::sqrt(std::max(0.0, dot(grad, chol_solve(la, grad))));
        IterationRecord rec = base_record(k, p.value(x), gn, lambda,
                                          std::sqrt(std::max(0.0, ha.h.quad_form(grad))));

        if (gn <= cfg.grad_tol) {
            out.termination = last_skipped ? Termination::ExactOptimum : Termination::GradTol;
            out.records.push_back(rec);
            break;
        }
        if (k >= cfg.max_iters) {
            out.termination = Termination::MaxIters;
            out.records.push_back(rec);
            break;
        }

        const Vector u = scaled(ha.h.matvec(grad), -1.0);
        rec.r_k = std::sqrt(std::max(0.0, dot(u, a.matvec(u))));
        rec.a_k = 1.0;

        StepSnapshot snap;
        if (cfg.record_diagnostics) {
            snap.x = x;
            snap.u = u;
            snap.g_before = ha.g;
            snap.g_tilde = ha.g;
            snap.diff_spectrum = residual.spectrum(n);
            rec.sigma = trace_potential(a, ha.g);
            rec.v_potential = try_measure([&] { return logdet_potential(a, ha.g); });
            rec.nu = try_measure([&] { return nu_measure(a, ha.g, u); });
            rec.theta = try_measure([&] { return theta_measure(a, ha.g, u); });
        }

        axpy(x, 1.0, u);

        // u'(G-A)u = ||c||^2 and (G-A)u = B c through the factor.
        const Vector c = residual.coefficients(u);
        const Vector w = residual.apply_coefficients(c);
        const double denom = dot(c, c);
        const bool apply = residual.rank() > 0 &&
                           denom > cfg.skip_tol * norm(u) * norm(w) &&
                           out.applied_updates < n;
        if (apply) {
            residual.annihilate(c);
            ha.g = residual.materialize(a);
            const Vector y = a.matvec(u);
            auto [h_next, hout] = sr1_inverse_update(ha.h, u, y, 0.0);
            if (hout.kind == UpdateKind::Applied) ha.h = std::move(h_next);
            ha.ensure_consistent();
            ++out.applied_updates;
            if (cfg.record_diagnostics) snap.denom_inverse = hout.denominator;
        } else {
            ++out.skip_events;
        }
        rec.skipped = !apply;
        rec.denom_sign = classify(!apply, denom);
        last_skipped = !apply;

        if (cfg.record_diagnostics) {
            snap.g_after = ha.g;
            snap.denom_direct = denom;
            out.steps.push_back(std::move(snap));
        }
        out.records.push_back(rec);
    }
    out.final_x = std::move(x);
    return out;
}

namespace {

SolveResult solve_general_sr1(const Objective& o, const Vector& x0, const SolverConfig& cfg,
                              bool with_correction) {
    check_config(cfg);
    const int n = o.dimension();
    const double scale = cfg.initial_scale.value_or(o.lip());

    SymMatrix g0 = SymMatrix::identity(n);
    g0.scale(scale);
    SymMatrix h0 = SymMatrix::identity(n);
    h0.scale(1.0 / scale);
    HessianApprox ha{std::move(g0), std::move(h0)};

    SolveResult out;
    Vector x = x0;
    double r_prev = 0.0;
    for (int k = 0;; ++k) {
        const Vector grad = o.gradient(x);
        const double gn = norm(grad);
        IterationRecord rec = base_record(k, o.value(x), gn, lambda_general(o, x),
                                          std::sqrt(std::max(0.0, ha.h.quad_form(grad))));

        if (gn <= cfg.grad_tol) {
            out.termination = Termination::GradTol;
            out.records.push_back(rec);
            break;
        }
        if (k >= cfg.max_iters) {
            out.termination = Termination::MaxIters;
            out.records.push_back(rec);
            break;
        }

        const Vector u = scaled(ha.h.matvec(grad), -1.0);
        const double r_k = std::sqrt(std::max(0.0, dot(u, o.hvp(x, u))));
        const double a_k = with_correction ? correction_factor(r_prev, r_k, cfg.m_const) : 1.0;

        StepSnapshot snap;
        if (cfg.record_diagnostics) {
            snap.x = x;
            snap.u = u;
            snap.g_before = ha.g;
        }

        ha = apply_correction(std::move(ha), a_k);
        rec.r_k = r_k;
        rec.a_k = a_k;
        if (cfg.record_diagnostics) snap.g_tilde = ha.g;

        Vector x_next = x;
        axpy(x_next, 1.0, u);
        const Vector y = subtract(o.gradient(x_next), grad);

        const Vector w = subtract(ha.g.matvec(u), y);
        const double denom = dot(u, w);
        const bool skip = std::abs(denom) <= cfg.skip_tol * norm(u) * norm(w) ||
                          below_secant_resolution(x, u);
        double denom_inv = 0.0;
        if (!skip) {
            SymMatrix g_after = rank_one_update(ha.g, -1.0 / denom, w);
            const Vector z = subtract(u, ha.h.matvec(y));
            denom_inv = dot(y, z);
            if (denom_inv != 0.0) ha.h = rank_one_update(ha.h, 1.0 / denom_inv, z);
            ha.g = std::move(g_after);
            ha.ensure_consistent();
            ++out.applied_updates;
            if (denom < 0.0) ++out.negative_denominator_events;
        } else {
            ++out.skip_events;
        }
        rec.skipped = skip;
        rec.denom_sign = classify(skip, denom);

        if (cfg.record_diagnostics) {
            const SymMatrix j = averaged_hessian(o, x, u, cfg.quadrature_nodes);
            rec.sigma = trace_potential(j, snap.g_tilde);
            rec.v_potential = try_measure([&] { return logdet_potential(j, snap.g_tilde); });
            rec.nu = try_measure([&] { return nu_measure(j, snap.g_tilde, u); });
            rec.theta = try_measure([&] { return theta_measure(j, snap.g_before, u); });
            snap.g_after = ha.g;
            snap.j_quad = j;
            snap.denom_direct = denom;
            snap.denom_inverse = denom_inv;
            out.steps.push_back(std::move(snap));
        }
        out.records.push_back(rec);

        x = std::move(x_next);
        r_prev = r_k;
    }
    out.final_x = std::move(x);
    return out;
}

}  // namespace

SolveResult solve_sr1_cs(const Objective& o, const Vector& x0, const SolverConfig& cfg) {
    return solve_general_sr1(o, x0, cfg, true);
}

SolveResult solve_sr1_vanilla(const Objective& o, const Vector& x0, const SolverConfig& cfg) {
    return solve_general_sr1(o, x0, cfg, false);
}

Vector newton_warm_start(const Objective& o, const Vector& x0, int steps) {
    if (steps < 0) throw NegativeArgument("newton_warm_start: steps >= 0");
    Vector x = x0;
    for (int j = 0; j < steps; ++j) {
        const Vector step = solve_spd(o.hessian(x), o.gradient(x));
        axpy(x, -1.0, step);
    }
    return x;
}

SolveResult solve_bfgs(const Objective& o, const Vector& x0, const SolverConfig& cfg) {
    check_config(cfg);
    const int n = o.dimension();
    const double scale = cfg.initial_scale.value_or(o.lip());

    SymMatrix g0 = SymMatrix::identity(n);
    g0.scale(scale);
    SymMatrix h0 = SymMatrix::identity(n);
    h0.scale(1.0 / scale);
    HessianApprox ha{std::move(g0), std::move(h0)};

    SolveResult out;
    Vector x = x0;
    for (int k = 0;; ++k) {
        const Vector grad = o.gradient(x);
        const double gn = norm(grad);
        IterationRecord rec = base_record(k, o.value(x), gn, lambda_general(o, x),
                                          std::sqrt(std::max(0.0, ha.h.quad_form(grad))));

        if (gn <= cfg.grad_tol) {
            out.termination = Termination::GradTol;
            out.records.push_back(rec);
            break;
        }
        if (k >= cfg.max_iters) {
            out.termination = Termination::MaxIters;
            out.records.push_back(rec);
            break;
        }

        const Vector u = scaled(ha.h.matvec(grad), -1.0);
        rec.r_k = std::sqrt(std::max(0.0, dot(u, o.hvp(x, u))));
        rec.a_k = 1.0;

        Vector x_next = x;
        axpy(x_next, 1.0, u);
        const Vector y = subtract(o.gradient(x_next), grad);
        const double c = dot(u, y);
        const bool skip = c <= cfg.skip_tol * norm(u) * norm(y);

        StepSnapshot snap;
        if (cfg.record_diagnostics) {
            snap.x = x;
            snap.u = u;
            snap.g_before = ha.g;
            snap.g_tilde = ha.g;
        }

        if (!skip) {
            const Vector gu = ha.g.matvec(u);
            const double ugu = dot(u, gu);
            ha.g = rank_one_update(rank_one_update(ha.g, -1.0 / ugu, gu), 1.0 / c, y);

            const Vector hy = ha.h.matvec(y);
            const double yhy = dot(y, hy);
            const double rho = 1.0 / c;
            SymMatrix h_next = ha.h;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j <= i; ++j)
                    h_next.add(i, j, -rho * (u[i] * hy[j] + hy[i] * u[j]) +
                                         (rho + rho * rho * yhy) * u[i] * u[j]);
            ha.h = std::move(h_next);
            ha.ensure_consistent();
            ++out.applied_updates;
        } else {
            ++out.skip_events;
        }
        rec.skipped = skip;
        rec.denom_sign = classify(skip, c);

        if (cfg.record_diagnostics) {
            snap.g_after = ha.g;
            snap.denom_direct = c;
            out.steps.push_back(std::move(snap));
        }
        out.records.push_back(rec);
        x = std::move(x_next);
    }
    out.final_x = std::move(x);
    return out;
}

SolveResult solve_newton(const Objective& o, const Vector& x0, const SolverConfig& cfg) {
    check_config(cfg);
    SolveResult out;
    Vector x = x0;
    for (int k = 0;; ++k) {
        const Vector grad = o.gradient(x);
        const double gn = norm(grad);
        const SymMatrix hess = o.hessian(x);
        const LowerTriangular hl = cholesky(hess);
        const double lambda = std::sqrt(std::max(0.0, dot(grad, chol_solve(hl, grad))));
        IterationRecord rec = base_record(k, o.value(x), gn, lambda, lambda);

        if (gn <= cfg.grad_tol) {
            out.termination = Termination::GradTol;
            out.records.push_back(rec);
            break;
        }
        if (k >= cfg.max_iters) {
            out.termination = Termination::MaxIters;
            out.records.push_back(rec);
            break;
        }

        const Vector u = scaled(chol_solve(hl, grad), -1.0);
        rec.r_k = std::sqrt(std::max(0.0, dot(u, o.hvp(x, u))));
        out.records.push_back(rec);
        axpy(x, 1.0, u);
    }
    out.final_x = std::move(x);
    return out;
}

}  // namespace sr1lab
