#pragma once

#include "su11/maps.hpp"

namespace su11 {

/// Fixed-step integration parameters for the connecting flow.
/// The flow runs over [t_start, 1]; fd_step is the central-difference
/// step used for the flow Jacobian in verify_gw.
struct FlowConfig {
    double t_start = 1e-6;
    int steps = 2000;
    double fd_step = 1e-5;
};

/// Scaled structure pi_t at p: (t lambda coth(t lambda) + t z) times the
/// linear coefficients. Defined for t > 0 and t*p in the closed cone.
Bivector3 pi_t_tensor(double t, const QStarPoint& p);

/// d/dt pi_t at t = 1: coefficient lambda coth(lambda) + z - lambda^2/sinh^2(lambda).
Bivector3 pi_dot_tensor(const QStarPoint& p);

/// Coefficient f(s) of the connecting field f(s) d/ds in hyperbolic
/// coordinates. Quartic Taylor expansion below s = 1e-3 where the closed
/// form cancels catastrophically; f(0) = 0.
double gw_field_hyp(const HypCoords& h);

/// The connecting field in rectangular coordinates:
/// f(s) * (z x / r, z y / r, r) with r = hypot(x, y); identically zero on
/// the positive z-axis. Requires an admissible or on-axis point.
Vec3 gw_field_rect(const QStarPoint& p);

/// Time-scaled field X_t(p) = X(t p) / t^2.
Vec3 scaled_field(double t, const QStarPoint& p);

/// The connecting isomorphism in its numerically stable direction:
/// classical RK4 of dp/dt = -X_t(p) from t = 1 down to cfg.t_start.
/// Pushes pi onto pi0; its inverse pushes pi0 onto pi. Leaf parameter
/// lambda is conserved. Throws with the failing time if the trajectory
/// leaves the admissible cone.
QStarPoint gw_flow(const QStarPoint& p, const FlowConfig& cfg);

/// The same field integrated from cfg.t_start up to 1: the inverse of
/// gw_flow. Leafwise it stretches doubly exponentially, so it is
/// representable only for small lambda * cosh(s).
QStarPoint gw_flow_forward(const QStarPoint& p, const FlowConfig& cfg);

/// Relative transport defect of the isomorphism at p:
/// | J pi(p) J^T - pi0(gw_flow(p)) |_inf / max(1, |pi0|_inf), with the
/// flow Jacobian by central differences of gw_flow (step cfg.fd_step).
double verify_gw(const QStarPoint& p, const FlowConfig& cfg);

/// | L_X pi - pi_dot |_inf at p, with analytic tensor coefficients and
/// central-difference derivatives of the field.
double commutator_residual(const QStarPoint& p);

} // namespace su11
