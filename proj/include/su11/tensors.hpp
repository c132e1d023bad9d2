#pragma once

#include "su11/spaces.hpp"

#include <functional>
#include <optional>

namespace su11 {

/// Names one of the Poisson structures treated by the library.
///   Pi0   linear structure on q*            charts: RectQStar, GTStar
///   PiAN  dual-group structure on AN        charts: RectAN
///   PiQ   pushed-down structure on Q        charts: RectQ, GTQ
///   PiAdm (lambda coth lambda + z) * Pi0    charts: RectQStar, Hyperbolic
///   PiT   scaled family, coefficient t*lambda*coth(t*lambda) + t*z
///         charts: RectQStar, t > 0
struct StructureId {
    enum class Kind { Pi0, PiAN, PiQ, PiAdm, PiT };
    Kind kind = Kind::Pi0;
    double t = 1.0;

    static StructureId pi0() { return {Kind::Pi0, 1.0}; }
    static StructureId pi_an() { return {Kind::PiAN, 1.0}; }
    static StructureId pi_q() { return {Kind::PiQ, 1.0}; }
    static StructureId pi_adm() { return {Kind::PiAdm, 1.0}; }
    static StructureId pi_t(double t);

    [[nodiscard]] const char* name() const;
};

/// Scalar function of chart coordinates with an optional analytic gradient.
struct ScalarField {
    std::function<double(const Vec3&)> eval;
    std::function<Vec3(const Vec3&)> grad; // may be empty -> finite differences
};

/// Bivector coefficients of structure `s` at point `p` of `chart`.
/// Throws on unsupported (structure, chart) pairs and on points outside
/// the structure's domain.
Bivector3 tensor_at(const StructureId& s, Chart chart, const Vec3& p);

/// Hand-coded first partials of the coefficients: partials[l] holds the
/// derivative of (p12, p13, p23) along coordinate l.
std::array<Bivector3, 3> tensor_partials(const StructureId& s, Chart chart, const Vec3& p);

/// Default chart of a structure (the one its Casimir is registered in).
Chart default_chart(const StructureId& s);

/// Poisson bracket pi(df, dg) at p. Analytic gradients are used when both
/// fields carry one; otherwise central differences with step
/// 1e-6 * max(1, |p|).
double bracket(const StructureId& s, Chart chart, const ScalarField& f,
               const ScalarField& g, const Vec3& p);

/// Cyclic Jacobi sum over the coordinate functions, computed from the
/// analytic coefficient partials. Exact zero for constant-coefficient charts.
double jacobi_defect(const StructureId& s, Chart chart, const Vec3& p);

/// The Casimir registered for a structure, in its default chart.
ScalarField registered_casimir(const StructureId& s);

enum class GradientMode { Analytic, FiniteDifference };

/// max_i |{C, x_i}| at p for the registered Casimir.
double casimir_defect(const StructureId& s, const Vec3& p, GradientMode mode);

/// Differentiable map between charts, with optional analytic Jacobian.
struct DiffMap {
    Chart from = Chart::RectQStar;
    Chart to = Chart::RectQStar;
    std::function<Vec3(const Vec3&)> apply;
    std::function<Mat3(const Vec3&)> jacobian; // may be empty -> fd only
};

enum class JacobianMode { Analytic, FiniteDifference };

/// Jacobian of `apply` by central differences with one Richardson level
/// (steps h and h/2, h = 1e-5 * max(1, |p|)).
Mat3 fd_jacobian(const std::function<Vec3(const Vec3&)>& apply, const Vec3& p);

/// Pushforward J pi J^T of structure `s` under `map`, expressed at map(p).
Bivector3 pushforward(const DiffMap& map, const StructureId& s, const Vec3& p,
                      JacobianMode mode);

// --- quadratic Poisson-Lie structure on G -------------------------------

/// Real chart (Re u, Im u, Re v, Im v) on G; antisymmetric 4x4 coefficients.
using Vec4 = std::array<double, 4>;
using Mat4 = std::array<Vec4, 4>;

double norm_inf(const Mat4& m);

enum class PigEntry { U, UBar, V, VBar };

/// Bracket table on matrix entries, extended by antisymmetry:
/// {u,ubar} = -2i|v|^2, {u,v} = -iuv, {u,vbar} = -iuvbar,
/// {ubar,v} = i ubar v, {ubar,vbar} = i ubar vbar, {v,vbar} = 0.
Complex pig_bracket(PigEntry i, PigEntry j, const GElement& g);

/// Bivector (r_g)_* Lambda - (l_g)_* Lambda with Lambda = X^Y/2, via exact
/// 4x4 tangent pushforwards of the basis bivector.
Mat4 pig_tensor(const GElement& g);

/// Bracket of two matrix-entry functions read off a 4x4 coefficient matrix.
Complex pig_tensor_bracket(const Mat4& p, PigEntry i, PigEntry j);

/// Tangent map of left translation h -> g h in the real chart.
Mat4 left_translation_jacobian(const GElement& g);
/// Tangent map of right translation h -> h g in the real chart.
Mat4 right_translation_jacobian(const GElement& g);

/// | pi_G(gh) - (l_g)_* pi_G(h) - (r_h)_* pi_G(g) |_inf.
double pig_multiplicativity_defect(const GElement& g, const GElement& h);

/// Coefficient (1-|w|^2)|w|^2 + tau (1-|w|^2)^2 of the sphere family.
double sphere_family_coeff(Complex w, double tau);

// --- closed-form coefficient helpers ------------------------------------

/// u coth u, continued by 1 + u^2/3 near zero.
double ucothu(double u);
/// d(u coth u)/du = coth u - u/sinh^2 u, continued by 2u/3 near zero.
double ducothu(double u);

} // namespace su11
