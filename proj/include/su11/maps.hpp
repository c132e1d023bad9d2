#pragma once

#include "su11/spaces.hpp"
#include "su11/tensors.hpp"

namespace su11 {

/// Outcome of the right dressing action a . g = g' b' with
/// a = diag(e^{z/2}, e^{-z/2}).
struct DressResult {
    GElement g_prime;
    ANPoint b_prime;
};

/// Symmetrization AN -> Q, M -> dagger(M) M. In coordinates
/// a = x e^{z/2}, b = y e^{z/2}, c = e^z.
QPoint sym(const ANPoint& p);

/// Jacobian of sym in chart order (a, b, c) x (z, x, y).
Mat3 sym_jacobian(const ANPoint& p);

/// Matrix exponential q_adm -> Q_adm via the closed form
/// cosh(lambda) I + (sinh(lambda)/lambda) M.
QPoint exp_q(const QStarPoint& p);

/// Inverse of exp_q: (a, b, c) -> (a, b, c) * lambda/sinh(lambda) with the
/// z-component shifted by -lambda coth(lambda); lambda = arccosh(trace/2).
QStarPoint log_q(const QPoint& q);

/// Right dressing of g by diag(e^{z/2}, e^{-z/2}), z > 0:
/// rho = sqrt(|u|^2 e^z - |v|^2 e^{-z}), u' = u e^{z/2}/rho,
/// v' = v e^{-z/2}/rho, m = 2 conj(u) v sinh(z)/rho.
DressResult dress(double z, const GElement& g);

/// Leafwise exponential q_adm -> Q_adm: (z, lambda, theta) -> (w = z, lambda, theta).
/// In rectangular coordinates c = e^z and a + ib is the phase of x + iy
/// scaled by sqrt((e^z - e^lambda)(e^z - e^{-lambda})); a = b = 0 on the axis.
QPoint fr_map(const QStarPoint& p);

/// Admissible spectrum gamma > 0 of an admissible AN element:
/// gamma = log((Delta + sqrt(Delta^2 - 4))/2), Delta = e^z + e^{-z} - x^2 - y^2.
/// Rejects points with Delta <= 2 + 1e-12 or z <= 0.
double adm_spectrum_an(const ANPoint& p);

/// Admissible spectrum of M in SL(2,C) from the spectrum (e^gamma, e^{-gamma})
/// of dagger(M) M; requires det M = 1 to 1e-10 and an admissible dagger(M) M.
double adm_spectrum_slc(const Mat2C& m);

// Map handles for pushforward verification.
DiffMap map_sym();       // RectAN -> RectQ, analytic Jacobian
DiffMap map_log_sym();   // RectAN -> RectQStar
DiffMap map_fr();        // RectQStar -> RectQ
DiffMap map_gtstar();    // RectQStar -> GTStar
DiffMap map_gtq();       // RectQ -> GTQ
DiffMap map_hyp();       // RectQStar -> Hyperbolic

} // namespace su11
