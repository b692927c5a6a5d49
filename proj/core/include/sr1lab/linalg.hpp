#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace sr1lab {

using Vector = std::vector<double>;

double dot(const Vector& a, const Vector& b);
double norm(const Vector& v);
/// y += alpha * x
void axpy(Vector& y, double alpha, const Vector& x);
Vector subtract(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, double c);

/// Dense symmetric matrix of order n. Only the lower triangle is stored,
/// so entries(i,j) == entries(j,i) holds exactly by construction.
class SymMatrix {
  public:
    SymMatrix() = default;
    explicit SymMatrix(int n);
    static SymMatrix identity(int n);
    static SymMatrix diagonal(const Vector& d);

    int order() const { return n_; }

    double operator()(int i, int j) const {
        return e_[i >= j ? idx(i, j) : idx(j, i)];
    }
    void set(int i, int j, double v) { e_[i >= j ? idx(i, j) : idx(j, i)] = v; }
    void add(int i, int j, double v) { e_[i >= j ? idx(i, j) : idx(j, i)] += v; }

    double trace() const;
    double frobenius_norm() const;
    Vector matvec(const Vector& x) const;
    double quad_form(const Vector& x) const;  // x' M x

    SymMatrix& scale(double c);
    SymMatrix& add_scaled(const SymMatrix& other, double c);  // *this += c*other

    bool operator==(const SymMatrix& other) const = default;

  private:
    static std::size_t idx(int i, int j) {
        return static_cast<std::size_t>(i) * (i + 1) / 2 + j;
    }
    int n_ = 0;
    std::vector<double> e_;  // packed lower triangle, row by row
};

/// a - b
SymMatrix sym_difference(const SymMatrix& a, const SymMatrix& b);
/// a + b scaled: a + c*b
SymMatrix sym_add_scaled(const SymMatrix& a, const SymMatrix& b, double c);

/// Lower-triangular Cholesky factor; diagonal is strictly positive.
class LowerTriangular {
  public:
    LowerTriangular() = default;
    explicit LowerTriangular(int n);

    int order() const { return n_; }
    double operator()(int i, int j) const { return e_[idx(i, j)]; }
    void set(int i, int j, double v) { e_[idx(i, j)] = v; }

    Vector forward_solve(const Vector& b) const;   // L y = b
    Vector backward_solve(const Vector& b) const;  // L' x = b
    double logdet() const;                         // sum of log(diag)
    SymMatrix multiply_transposed() const;         // L L'

  private:
    static std::size_t idx(int i, int j) {
        return static_cast<std::size_t>(i) * (i + 1) / 2 + j;
    }
    int n_ = 0;
    std::vector<double> e_;
};

/// Cholesky factorization of a numerically SPD matrix.
/// Throws NotPositiveDefinite when a pivot <= 0 is encountered.
LowerTriangular cholesky(const SymMatrix& m);

/// Solve m x = v for SPD m (factorize + one step of iterative refinement).
Vector solve_spd(const SymMatrix& m, const Vector& v);

/// Solve with an existing factor (two triangular solves).
Vector chol_solve(const LowerTriangular& L, const Vector& v);

/// Plain dense row-major matrix (feature matrices, eigenvector bases).
class DenseMatrix {
  public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, 0.0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    double& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const DenseMatrix& other) const = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> e_;
};

/// All eigenvalues of a symmetric matrix, sorted ascending (cyclic Jacobi).
std::vector<double> eigvals_sym(const SymMatrix& m);

/// Eigenvalues (ascending) with the matching orthonormal eigenvectors as
/// the columns of the returned matrix.
std::pair<std::vector<double>, DenseMatrix> eig_sym(const SymMatrix& m);

/// Loewner order test: true iff min eig(b - a) >= -tol * max(1, ||b - a||_2).
bool psd_dominates(const SymMatrix& a, const SymMatrix& b, double tol);

/// m + c * v v'
SymMatrix rank_one_update(const SymMatrix& m, double c, const Vector& v);

/// sqrt(v' m v) for PSD m; negative quadratic values beyond
/// -1e-10 * ||v||^2 * ||m||_F throw IndefiniteWeight, small negatives clamp to 0.
double weighted_norm(const Vector& v, const SymMatrix& m);

/// log det of an SPD matrix via its Cholesky factor.
double logdet_spd(const SymMatrix& m);

/// Number of eigenvalues with |lambda| > rel_tol * max|lambda| (0 for m = 0).
int numerical_rank(const SymMatrix& m, double rel_tol = 1e-8);

/// Explicit inverse of an SPD matrix (column-by-column Cholesky solves).
SymMatrix spd_inverse(const SymMatrix& m);

/// max |eig|
double spectral_norm(const SymMatrix& m);

/// Eigenvalues of L^-1 g L^-T where a = L L'; these are the eigenvalues of
/// g relative to a, so a <= g <= eta a iff they lie in [1, eta].
std::vector<double> relative_eigs(const SymMatrix& a, const SymMatrix& g);

/// ||g h - I||_F
double product_residual(const SymMatrix& g, const SymMatrix& h);

/// Z' Z as a symmetric matrix.
SymMatrix gram(const DenseMatrix& z);

}  // namespace sr1lab
