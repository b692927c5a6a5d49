#include "sr1lab/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "sr1lab/errors.hpp"

namespace sr1lab {

namespace {

void require_same_order(const SymMatrix& a, const SymMatrix& b) {
    if (a.order() != b.order())
        throw DimensionMismatch("matrix orders differ");
}

void require_length(const Vector& v, int n) {
    if (static_cast<int>(v.size()) != n)
        throw DimensionMismatch("vector length does not match matrix order");
}

}  // namespace

double dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: lengths differ");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vector& v) { return std::sqrt(dot(v, v)); }

void axpy(Vector& y, double alpha, const Vector& x) {
    if (y.size() != x.size()) throw DimensionMismatch("axpy: lengths differ");
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

Vector subtract(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("subtract: lengths differ");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector scaled(const Vector& v, double c) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

SymMatrix::SymMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * (n + 1) / 2, 0.0) {
    if (n < 1) throw DimensionMismatch("SymMatrix order must be >= 1");
}

SymMatrix SymMatrix::identity(int n) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
}

SymMatrix SymMatrix::diagonal(const Vector& d) {
    SymMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.order(); ++i) m.set(i, i, d[i]);
    return m;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) {
        s += (*this)(i, i) * (*this)(i, i);
        for (int j = 0; j < i; ++j) s += 2.0 * (*this)(i, j) * (*this)(i, j);
    }
    return std::sqrt(s);
}

Vector SymMatrix::matvec(const Vector& x) const {
    require_length(x, n_);
    Vector y(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
        double s = e_[idx(i, i)] * x[i];
        for (int j = 0; j < i; ++j) {
            const double v = e_[idx(i, j)];
            s += v * x[j];
            y[j] += v * x[i];
        }
        y[i] += s;
    }
    return y;
}

double SymMatrix::quad_form(const Vector& x) const {
    require_length(x, n_);
    double s = 0.0;
    for (int i = 0; i < n_; ++i) {
        s += e_[idx(i, i)] * x[i] * x[i];
        for (int j = 0; j < i; ++j) s += 2.0 * e_[idx(i, j)] * x[i] * x[j];
    }
    return s;
}

SymMatrix& SymMatrix::scale(double c) {
    for (double& v : e_) v *= c;
    return *this;
}

SymMatrix& SymMatrix::add_scaled(const SymMatrix& other, double c) {
    require_same_order(*this, other);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += c * other.e_[i];
    return *this;
}

SymMatrix sym_difference(const SymMatrix& a, const SymMatrix& b) {
    SymMatrix r = a;
    r.add_scaled(b, -1.0);
    return r;
}

SymMatrix sym_add_scaled(const SymMatrix& a, const SymMatrix& b, double c) {
    SymMatrix r = a;
    r.add_scaled(b, c);
    return r;
}

LowerTriangular::LowerTriangular(int n)
    : n_(n), e_(static_cast<std::size_t>(n) * (n + 1) / 2, 0.0) {}

Vector LowerTriangular::forward_solve(const Vector& b) const {
    if (static_cast<int>(b.size()) != n_) throw DimensionMismatch("forward_solve: length");
    Vector y(n_);
    for (int i = 0; i < n_; ++i) {
        double s = b[i];
        for (int j = 0; j < i; ++j) s -= e_[idx(i, j)] * y[j];
        y[i] = s / e_[idx(i, i)];
    }
    return y;
}

Vector LowerTriangular::backward_solve(const Vector& b) const {
    if (static_cast<int>(b.size()) != n_) throw DimensionMismatch("backward_solve: length");
    Vector x(n_);
    for (int i = n_ - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n_; ++j) s -= e_[idx(j, i)] * x[j];
        x[i] = s / e_[idx(i, i)];
    }
    return x;
}

double LowerTriangular::logdet() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += std::log(e_[idx(i, i)]);
    return s;
}

SymMatrix LowerTriangular::multiply_transposed() const {
    SymMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j <= i; ++j) {
            double s = 0.0;
            for (int k = 0; k <= j; ++k) s += e_[idx(i, k)] * e_[idx(j, k)];
            m.set(i, j, s);
        }
    return m;
}

LowerTriangular cholesky(const SymMatrix& m) {
    const int n = m.order();
    LowerTriangular L(n);
    for (int j = 0; j < n; ++j) {
        double pivot = m(j, j);
        for (int k = 0; k < j; ++k) pivot -= L(j, k) * L(j, k);
        if (pivot <= 0.0 || !std::isfinite(pivot))
            throw NotPositiveDefinite("cholesky: pivot <= 0 at column " + std::to_string(j));
        const double d = std::sqrt(pivot);
        L.set(j, j, d);
        for (int i = j + 1; i < n; ++i) {
            double s = m(i, j);
            for (int k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
            L.set(i, j, s / d);
        }
    }
    return L;
}

Vector chol_solve(const LowerTriangular& L, const Vector& v) {
    return L.backward_solve(L.forward_solve(v));
}

Vector solve_spd(const SymMatrix& m, const Vector& v) {
    const LowerTriangular L = cholesky(m);
    Vector x = chol_solve(L, v);
    // One refinement step keeps the residual near machine precision even
    // for moderately ill-conditioned systems.
    Vector r = subtract(v, m.matvec(x));
    axpy(x, 1.0, chol_solve(L, r));
    return x;
}

namespace {

std::vector<double> jacobi_eigs(const SymMatrix& m, std::vector<double>* vectors) {
    const int n = m.order();
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m(i, j);

    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    if (vectors) {
        vectors->assign(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) (*vectors)[static_cast<std::size_t>(i) * n + i] = 1.0;
    }

    const double total = m.frobenius_norm();
    if (total > 0.0) {
        const int max_sweeps = 50;
        for (int sweep = 0; sweep < max_sweeps; ++sweep) {
            double off = 0.0;
            for (int p = 0; p < n; ++p)
                for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
            if (std::sqrt(2.0 * off) <= 5e-15 * total) break;

            for (int p = 0; p < n - 1; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    const double apq = at(p, q);
                    if (apq == 0.0) continue;
                    const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                    const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                     (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;

                    for (int k = 0; k < n; ++k) {
                        const double akp = at(k, p);
                        const double akq = at(k, q);
                        at(k, p) = c * akp - s * akq;
                        at(k, q) = s * akp + c * akq;
                    }
                    for (int k = 0; k < n; ++k) {
                        const double apk = at(p, k);
                        const double aqk = at(q, k);
                        at(p, k) = c * apk - s * aqk;
                        at(q, k) = s * apk + c * aqk;
                    }
                    if (vectors) {
                        for (int k = 0; k < n; ++k) {
                            double& vkp = (*vectors)[static_cast<std::size_t>(k) * n + p];
                            double& vkq = (*vectors)[static_cast<std::size_t>(k) * n + q];
                            const double tp = vkp;
                            vkp = c * tp - s * vkq;
                            vkq = s * tp + c * vkq;
                        }
                    }
                }
            }
        }
    }

    std::vector<double> eigs(n);
    for (int i = 0; i < n; ++i) eigs[i] = at(i, i);
    return eigs;
}

}  // namespace

std::vector<double> eigvals_sym(const SymMatrix& m) {
    std::vector<double> eigs = jacobi_eigs(m, nullptr);
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

std::pair<std::vector<double>, DenseMatrix> eig_sym(const SymMatrix& m) {
    const int n = m.order();
    std::vector<double> v;
    const std::vector<double> raw = jacobi_eigs(m, &v);

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return raw[a] < raw[b]; });

    std::vector<double> eigs(n);
    DenseMatrix vectors(n, n);
    for (int j = 0; j < n; ++j) {
        eigs[j] = raw[order[j]];
        for (int i = 0; i < n; ++i) vectors(i, j) = v[static_cast<std::size_t>(i) * n + order[j]];
    }
    return {std::move(eigs), std::move(vectors)};
}

bool psd_dominates(const SymMatrix& a, const SymMatrix& b, double tol) {
    require_same_order(a, b);
    const SymMatrix diff = sym_difference(b, a);
    const std::vector<double> eigs = eigvals_sym(diff);
    const double top = std::max(std::abs(eigs.front()), std::abs(eigs.back()));
    return eigs.front() >= -tol * std::max(1.0, top);
}

SymMatrix rank_one_update(const SymMatrix& m, double c, const Vector& v) {
    if (static_cast<int>(v.size()) != m.order())
        throw DimensionMismatch("rank_one_update: vector length");
    SymMatrix r = m;
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j <= i; ++j) r.add(i, j, c * v[i] * v[j]);
    return r;
}

double weighted_norm(const Vector& v, const SymMatrix& m) {
    const double q = m.quad_form(v);
    if (q < 0.0) {
        const double scale = dot(v, v) * m.frobenius_norm();
        if (q < -1e-10 * std::max(1.0, scale))
            throw IndefiniteWeight("weighted_norm: quadratic form is negative");
        return 0.0;
    }
    return std::sqrt(q);
}

double logdet_spd(const SymMatrix& m) { return 2.0 * cholesky(m).logdet(); }

int numerical_rank(const SymMatrix& m, double rel_tol) {
    const std::vector<double> eigs = eigvals_sym(m);
    double top = 0.0;
    for (double e : eigs) top = std::max(top, std::abs(e));
    if (top == 0.0) return 0;
    int r = 0;
    for (double e : eigs)
        if (std::abs(e) > rel_tol * top) ++r;
    return r;
}

SymMatrix spd_inverse(const SymMatrix& m) {
    const int n = m.order();
    const LowerTriangular L = cholesky(m);
    SymMatrix inv(n);
    Vector e(n, 0.0);
    for (int j = 0; j < n; ++j) {
        e[j] = 1.0;
        const Vector col = chol_solve(L, e);
        e[j] = 0.0;
        for (int i = j; i < n; ++i) inv.set(i, j, col[i]);
    }
    return inv;
}

double spectral_norm(const SymMatrix& m) {
    const std::vector<double> eigs = eigvals_sym(m);
    return std::max(std::abs(eigs.front()), std::abs(eigs.back()));
}

std::vector<double> relative_eigs(const SymMatrix& a, const SymMatrix& g) {
    require_same_order(a, g);
    const int n = a.order();
    const LowerTriangular L = cholesky(a);
    // Columns of L^-1 G L^-T assembled through triangular solves.
    std::vector<Vector> cols(n);
    for (int j = 0; j < n; ++j) {
        Vector e(n, 0.0);
        e[j] = 1.0;
        cols[j] = L.backward_solve(e);  // j-th column of L^-T
    }
    SymMatrix rel(n);
    for (int j = 0; j < n; ++j) {
        const Vector gj = L.forward_solve(g.matvec(cols[j]));
        for (int i = j; i < n; ++i) {
            // gj[i] is e_i' L^-1 G L^-T e_j
            rel.set(i, j, gj[i]);
        }
    }
    return eigvals_sym(rel);
}

double product_residual(const SymMatrix& g, const SymMatrix& h) {
    require_same_order(g, h);
    const int n = g.order();
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double v = 0.0;
            for (int k = 0; k < n; ++k) v += g(i, k) * h(k, j);
            if (i == j) v -= 1.0;
            s += v * v;
        }
    }
    return std::sqrt(s);
}

SymMatrix gram(const DenseMatrix& z) {
    const int n = z.cols();
    SymMatrix g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            double s = 0.0;
            for (int r = 0; r < z.rows(); ++r) s += z(r, i) * z(r, j);
            g.set(i, j, s);
        }
    return g;
}

}  // namespace sr1lab
