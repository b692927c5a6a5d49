#pragma once

#include <utility>

#include "sr1lab/linalg.hpp"

namespace sr1lab {

enum class UpdateKind { Applied, Skipped };

struct UpdateOutcome {
    UpdateKind kind = UpdateKind::Skipped;
    /// The curvature value u'(G-A)u (direct forms) or y'(u-Hy) (inverse
    /// form) that was used or rejected.
    double denominator = 0.0;
};

/// Paired approximation state: g tracks the target, h = g^-1 is the matrix
/// the solvers actually apply. Both are carried through every update; when
/// the product drifts past 1e-8 * n, h is re-factorized from g.
struct HessianApprox {
    SymMatrix g;
    SymMatrix h;

    static HessianApprox from_matrix(const SymMatrix& g0);

    double product_drift() const { return product_residual(g, h); }
    /// Re-inverts h from g when the product invariant is violated.
    /// Throws NotPositiveDefinite if g has lost definiteness.
    void ensure_consistent();
};

/// The rank-one update of g toward the target a along direction u:
///   g - (g-a)uu'(g-a) / (u'(g-a)u),
/// skipped when |u'(g-a)u| <= skip_tol * ||u|| * ||(g-a)u||.
std::pair<SymMatrix, UpdateOutcome> sr1_update_matrix(const SymMatrix& a, const SymMatrix& g,
                                                      const Vector& u, double skip_tol = 1e-8);

/// Same update with the target known only through the secant value y = A u.
std::pair<SymMatrix, UpdateOutcome> sr1_update_secant(const SymMatrix& g, const Vector& u,
                                                      const Vector& y, double skip_tol = 1e-8);

/// Inverse-form update of h = g^-1:
///   h + (u-hy)(u-hy)' / (y'(u-hy)),
/// the Sherman-Morrison image of the direct update; O(n^2) per step.
std::pair<SymMatrix, UpdateOutcome> sr1_inverse_update(const SymMatrix& h, const Vector& u,
                                                       const Vector& y, double skip_tol = 1e-8);

/// a_k = (1 + m r_prev / 2)(1 + m r_cur / 2) >= 1.
double correction_factor(double r_prev, double r_cur, double m_const);

/// Scales g by a_k and h by 1/a_k. Requires a_k >= 1.
HessianApprox apply_correction(HessianApprox ha, double a_k);

}  // namespace sr1lab
