#include "sr1lab/sr1_update.hpp"

#include <cmath>

#include "sr1lab/errors.hpp"

namespace sr1lab {

HessianApprox HessianApprox::from_matrix(const SymMatrix& g0) {
    return {g0, spd_inverse(g0)};
}

void HessianApprox::ensure_consistent() {
    // Refresh well before the 1e-8 * n consistency bound so that the step
    // direction stays at fresh-inverse accuracy.
    if (product_drift() > 1e-12 * g.order()) h = spd_inverse(g);
}

namespace {

std::pair<SymMatrix, UpdateOutcome> residual_update(const SymMatrix& g, const Vector& u,
                                                    const Vector& w, double skip_tol) {
    const double denom = dot(u, w);
    if (std::abs(denom) <= skip_tol * norm(u) * norm(w))
        return {g, {UpdateKind::Skipped, denom}};
    return {rank_one_update(g, -1.0 / denom, w), {UpdateKind::Applied, denom}};
}

}  // namespace

std::pair<SymMatrix, UpdateOutcome> sr1_update_matrix(const SymMatrix& a, const SymMatrix& g,
                                                      const Vector& u, double skip_tol) {
    if (a.order() != g.order()) throw DimensionMismatch("sr1_update_matrix: orders differ");
    if (static_cast<int>(u.size()) != g.order())
        throw DimensionMismatch("sr1_update_matrix: direction length");
    const SymMatrix diff = sym_difference(g, a);
    return residual_update(g, u, diff.matvec(u), skip_tol);
}

std::pair<SymMatrix, UpdateOutcome> sr1_update_secant(const SymMatrix& g, const Vector& u,
                                                      const Vector& y, double skip_tol) {
    if (static_cast<int>(u.size()) != g.order() || u.size() != y.size())
        throw DimensionMismatch("sr1_update_secant: lengths");
    return residual_update(g, u, subtract(g.matvec(u), y), skip_tol);
}

std::pair<SymMatrix, UpdateOutcome> sr1_inverse_update(const SymMatrix& h, const Vector& u,
                                                       const Vector& y, double skip_tol) {
    if (static_cast<int>(u.size()) != h.order() || u.size() != y.size())
        throw DimensionMismatch("sr1_inverse_update: lengths");
    const Vector z = subtract(u, h.matvec(y));
    const double denom = dot(y, z);
    if (std::abs(denom) <= skip_tol * norm(y) * norm(z))
        return {h, {UpdateKind::Skipped, denom}};
    return {rank_one_update(h, 1.0 / denom, z), {UpdateKind::Applied, denom}};
}

double correction_factor(double r_prev, double r_cur, double m_const) {
    if (r_prev < 0.0 || r_cur < 0.0 || m_const < 0.0)
        throw NegativeArgument("correction_factor: arguments must be >= 0");
    return (1.0 + m_const * r_prev / 2.0) * (1.0 + m_const * r_cur / 2.0);
}

HessianApprox apply_correction(HessianApprox ha, double a_k) {
    if (a_k < 1.0) throw InvalidFactor("apply_correction: factor must be >= 1");
    ha.g.scale(a_k);
    ha.h.scale(1.0 / a_k);
    return ha;
}

}  // namespace sr1lab
