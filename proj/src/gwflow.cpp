#include "su11/gwflow.hpp"

#include <cmath>
#include <sstream>

namespace su11 {

namespace {

constexpr double kTaylorSwitch = 1e-3;

bool on_axis(const QStarPoint& p) { return p.x == 0.0 && p.y == 0.0; }

// f(s) for leaf parameter lambda, direct closed form. Stable for
// s >= kTaylorSwitch: the logarithm is taken via log1p of
// (cosh s - 1)/A and cosh s - 1 is computed as 2 sinh^2(s/2).
double field_direct(double lambda, double s) {
    const double a = 1.0 / std::tanh(lambda) + 1.0; // coth(lambda) + 1
    const double sh_lam = std::sinh(lambda);
    const double kappa = lambda / (sh_lam * sh_lam);
    const double half = std::sinh(0.5 * s);
    const double delta = 2.0 * half * half; // cosh s - 1
    const double u = a + delta;             // coth(lambda) + cosh s
    const double term_log = std::log1p(delta / a);
    const double term_rat = -kappa * delta / (u * a);
    return -(u / std::sinh(s)) * (term_log + term_rat);
}

// Odd Taylor expansion f(s) = c1 s + c3 s^3 + O(s^5) about s = 0.
double field_taylor(double lambda, double s) {
    const double a = 1.0 / std::tanh(lambda) + 1.0;
    const double sh_lam = std::sinh(lambda);
    const double kappa = lambda / (sh_lam * sh_lam);
    const double c1 = -(a - kappa) / (2.0 * a);
    const double c3 = (a - 3.0 - kappa) / (24.0 * a);
    return c1 * s + c3 * s * s * s;
}

} // namespace

Bivector3 pi_t_tensor(double t, const QStarPoint& p) {
    if (!(t > 0.0)) throw domain_error("pi_t_tensor: t must be positive");
    return tensor_at(StructureId::pi_t(t), Chart::RectQStar, p.coords());
}

Bivector3 pi_dot_tensor(const QStarPoint& p) {
    if (!p.admissible()) throw domain_error("pi_dot_tensor: point is not admissible");
    const double lam = p.lambda();
    const double sh = std::sinh(lam);
    const double coeff = ucothu(lam) + p.z - lam * lam / (sh * sh);
    return {Chart::RectQStar, -coeff * p.z, -coeff * p.y, coeff * p.x};
}

double gw_field_hyp(const HypCoords& h) {
    if (h.s == 0.0) return 0.0;
    return (h.s < kTaylorSwitch) ? field_taylor(h.lambda, h.s)
                                 : field_direct(h.lambda, h.s);
}

Vec3 gw_field_rect(const QStarPoint& p) {
    if (on_axis(p)) {
        if (!(p.z > 0.0)) throw domain_error("gw_field_rect: axis point needs z > 0");
        return {0.0, 0.0, 0.0};
    }
    if (!p.admissible()) throw domain_error("gw_field_rect: point is not admissible");
    const double lam = p.lambda();
    const double r = std::hypot(p.x, p.y);
    const double s = std::acosh(std::max(p.z / lam, 1.0));
    const double f = (s < kTaylorSwitch) ? field_taylor(lam, s) : field_direct(lam, s);
    // f(s) d/ds with d/ds = (z x / r, z y / r, r); the z-component uses r
    // itself so leaf tangency z X_z = x X_x + y X_y holds exactly.
    return {f * p.z * p.x / r, f * p.z * p.y / r, f * r};
}

Vec3 scaled_field(double t, const QStarPoint& p) {
    if (!(t > 0.0)) throw domain_error("scaled_field: t must be positive");
    const Vec3 x = gw_field_rect(QStarPoint{t * p.x, t * p.y, t * p.z});
    return (1.0 / (t * t)) * x;
}

namespace {

// Classical RK4 for dp/dt = -X_t(p) from t_from to t_to, monitoring the
// admissible cone. cfg.steps fixed steps; t_to < t_from integrates backward.
QStarPoint integrate_reversed_field(const QStarPoint& p, const FlowConfig& cfg,
                                    double t_from, double t_to, const char* who) {
    if (!p.admissible() && !(on_axis(p) && p.z > 0.0))
        throw domain_error(std::string(who) + ": point is not admissible");
    if (cfg.steps <= 0 || !(cfg.t_start > 0.0) || cfg.t_start > 0.01)
        throw std::invalid_argument(std::string(who) + ": invalid FlowConfig");
    const double h = (t_to - t_from) / cfg.steps;
    Vec3 q = p.coords();
    double t = t_from;
    const auto rhs = [](double time, const Vec3& v) {
        return -1.0 * scaled_field(time, QStarPoint{v[0], v[1], v[2]});
    };
    for (int i = 0; i < cfg.steps; ++i) {
        const Vec3 k1 = rhs(t, q);
        const Vec3 k2 = rhs(t + 0.5 * h, q + (0.5 * h) * k1);
        const Vec3 k3 = rhs(t + 0.5 * h, q + (0.5 * h) * k2);
        const Vec3 k4 = rhs(t + h, q + h * k3);
        q = q + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t = t_from + (i + 1) * h;
        const QStarPoint state{q[0], q[1], q[2]};
        if (!state.admissible() && !(on_axis(state) && state.z > 0.0)) {
            std::ostringstream os;
            os << who << ": trajectory left the admissible cone at t = " << t;
            throw domain_error(os.str());
        }
    }
    return {q[0], q[1], q[2]};
}

} // namespace

QStarPoint gw_flow(const QStarPoint& p, const FlowConfig& cfg) {
    // The transported structure (phi_t)_* pi0 obeys d/dt = -L_{X_t}, and
    // the field satisfies L_{X_t} pi_t = d/dt pi_t, so the transporter is
    // the flow of -X_t. Leafwise the forward transport stretches doubly
    // exponentially (cosh of the image s-coordinate grows like
    // e^{lambda cosh s}), which overflows doubles for moderate inputs;
    // the inverse isomorphism contracts. gw_flow therefore integrates
    // -X_t backward from t = 1, realizing the inverse transport
    // (it pushes pi onto pi0); verify_gw checks the isomorphism there.
    return integrate_reversed_field(p, cfg, 1.0, cfg.t_start, "gw_flow");
}

QStarPoint gw_flow_forward(const QStarPoint& p, const FlowConfig& cfg) {
    return integrate_reversed_field(p, cfg, cfg.t_start, 1.0, "gw_flow_forward");
}

double verify_gw(const QStarPoint& p, const FlowConfig& cfg) {
    // The flow sends (q_adm, pi) to (q_adm, pi0); its Jacobian must carry
    // pi at p onto pi0 at the image. This is the same isomorphism
    // statement as pushing pi0 forward along the inverse map, checked at
    // the preimage points, where every quantity is representable.
    const auto flow = [&cfg](const Vec3& v) {
        return gw_flow(QStarPoint{v[0], v[1], v[2]}, cfg).coords();
    };
    const Vec3 p0 = p.coords();
    Mat3 j{};
    for (int col = 0; col < 3; ++col) {
        Vec3 hi = p0, lo = p0;
        hi[col] += cfg.fd_step;
        lo[col] -= cfg.fd_step;
        const Vec3 d = flow(hi) - flow(lo);
        for (int row = 0; row < 3; ++row) j[row][col] = d[row] / (2.0 * cfg.fd_step);
    }
    const Mat3 source = tensor_at(StructureId::pi_adm(), Chart::RectQStar, p0).to_matrix();
    Mat3 pushed{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            double acc = 0.0;
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) acc += j[r][k] * source[k][l] * j[c][l];
            pushed[r][c] = acc;
        }
    const Vec3 image = flow(p0);
    const Bivector3 target = tensor_at(StructureId::pi0(), Chart::RectQStar, image);
    const Bivector3 got = Bivector3::from_matrix(Chart::RectQStar, pushed);
    return distance_inf(got, target) / std::max(1.0, norm_inf(target));
}

double commutator_residual(const QStarPoint& p) {
    if (!p.admissible()) throw domain_error("commutator_residual: point is not admissible");
    const Vec3 p0 = p.coords();
    // dX[l][i] = d X^i / d x_l, central differences with one Richardson level.
    const Mat3 jac = fd_jacobian(
        [](const Vec3& v) { return gw_field_rect(QStarPoint{v[0], v[1], v[2]}); }, p0);
    Mat3 dx{};
    for (int l = 0; l < 3; ++l)
        for (int i = 0; i < 3; ++i) dx[l][i] = jac[i][l];
    const Vec3 x = gw_field_rect(p);
    const StructureId pi = StructureId::pi_adm();
    const Mat3 pim = tensor_at(pi, Chart::RectQStar, p0).to_matrix();
    const auto dpi = tensor_partials(pi, Chart::RectQStar, p0);
    const Mat3 target = pi_dot_tensor(p).to_matrix();
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int jj = i + 1; jj < 3; ++jj) {
            // (L_X pi)^{ij} = X^l d_l pi^{ij} - pi^{lj} d_l X^i - pi^{il} d_l X^j
            double lie = 0.0;
            for (int l = 0; l < 3; ++l) {
                const Mat3 dm = dpi[l].to_matrix();
                lie += x[l] * dm[i][jj] - pim[l][jj] * dx[l][i] - pim[i][l] * dx[l][jj];
            }
            worst = std::max(worst, std::abs(lie - target[i][jj]));
        }
    return worst;
}

} // namespace su11
