#include "su11/spaces.hpp"

#include <cmath>
#include <sstream>

namespace su11 {

namespace {

void require_finite(std::initializer_list<double> values, const char* who) {
    for (double v : values)
        if (!std::isfinite(v))
            throw std::invalid_argument(std::string(who) + ": non-finite coordinate");
}

[[noreturn]] void shape_error(const char* space, const char* what, double residual) {
    std::ostringstream os;
    os << "from_matrix(" << space << "): " << what << " residual " << residual
       << " exceeds 1e-10";
    throw domain_error(os.str());
}

constexpr double kShapeTol = 1e-10;

} // namespace

QStarPoint::QStarPoint(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
    require_finite({x, y, z}, "QStarPoint");
}

double QStarPoint::lambda() const {
    const double r2 = z * z - x * x - y * y;
    if (r2 <= 0.0) throw domain_error("QStarPoint::lambda: point is not timelike");
    return std::sqrt(r2);
}

bool QStarPoint::admissible() const {
    return z > 0.0 && z * z - x * x - y * y > 0.0;
}

ANPoint::ANPoint(double z_, double x_, double y_) : z(z_), x(x_), y(y_) {
    require_finite({z, x, y}, "ANPoint");
}

double ANPoint::delta() const {
    return std::exp(z) + std::exp(-z) - (x * x + y * y);
}

bool ANPoint::admissible() const { return z > 0.0 && delta() > 2.0; }

QPoint::QPoint(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
    require_finite({a, b, c}, "QPoint");
    if (c <= 0.0) throw std::invalid_argument("QPoint: c must be positive");
}

bool QPoint::admissible() const {
    const double t = trace();
    return t > 2.0 && c > 0.5 * t;
}

double QPoint::lambda() const {
    if (!admissible()) throw domain_error("QPoint::lambda: point is not admissible");
    return std::acosh(0.5 * trace());
}

GElement::GElement(Complex u_, Complex v_) : u(u_), v(v_) {
    if (!is_finite(u) || !is_finite(v))
        throw std::invalid_argument("GElement: non-finite entry");
    const double unit = std::norm(u) - std::norm(v);
    if (std::abs(unit - 1.0) > 1e-12)
        throw domain_error("GElement: |u|^2 - |v|^2 = " + std::to_string(unit) +
                           " is not 1 within 1e-12");
}

GElement GElement::boost(double r, double alpha, double beta) {
    return {std::polar(std::cosh(r), alpha), std::polar(std::sinh(r), beta)};
}

HypCoords::HypCoords(double lambda_, double phi_, double s_, bool on_axis_)
    : lambda(lambda_), phi(phi_), s(s_), on_axis(on_axis_) {
    require_finite({lambda, phi, s}, "HypCoords");
    if (lambda <= 0.0) throw std::invalid_argument("HypCoords: lambda must be positive");
    if (phi < 0.0 || phi >= two_pi) throw std::invalid_argument("HypCoords: phi outside [0, 2pi)");
    if (s < 0.0) throw std::invalid_argument("HypCoords: s must be nonnegative");
}

GTStarCoords::GTStarCoords(double z_, double lambda_, double theta_, bool on_axis_)
    : z(z_), lambda(lambda_), theta(theta_), on_axis(on_axis_) {
    require_finite({z, lambda, theta}, "GTStarCoords");
    if (!(lambda > 0.0) || z < lambda)
        throw std::invalid_argument("GTStarCoords: need z >= lambda > 0");
    if (theta < 0.0 || theta >= two_pi)
        throw std::invalid_argument("GTStarCoords: theta outside [0, 2pi)");
}

GTQCoords::GTQCoords(double w_, double lambda_, double theta_, bool on_axis_)
    : w(w_), lambda(lambda_), theta(theta_), on_axis(on_axis_) {
    require_finite({w, lambda, theta}, "GTQCoords");
    if (!(lambda > 0.0) || w < lambda)
        throw std::invalid_argument("GTQCoords: need w >= lambda > 0");
    if (theta < 0.0 || theta >= two_pi)
        throw std::invalid_argument("GTQCoords: theta outside [0, 2pi)");
}

Mat2C to_matrix(const QStarPoint& p) {
    return {Complex(p.z, 0.0), Complex(p.x, p.y), Complex(-p.x, p.y), Complex(-p.z, 0.0)};
}

Mat2C to_matrix(const ANPoint& p) {
    return {Complex(std::exp(0.5 * p.z), 0.0), Complex(p.x, p.y),
            Complex(0.0, 0.0), Complex(std::exp(-0.5 * p.z), 0.0)};
}

Mat2C to_matrix(const QPoint& q) {
    return {Complex(q.c, 0.0), Complex(q.a, q.b), Complex(-q.a, q.b), Complex(q.d(), 0.0)};
}

Mat2C to_matrix(const GElement& g) {
    return {g.u, g.v, std::conj(g.v), std::conj(g.u)};
}

QStarPoint qstar_from_matrix(const Mat2C& m) {
    const double fix = norm_inf(dagger(m) - m);
    if (fix > kShapeTol) shape_error("QStar", "dagger-fixed", fix);
    const double tr = std::abs(m.trace());
    if (tr > kShapeTol) shape_error("QStar", "traceless", tr);
    return {m.m12.real(), m.m12.imag(), m.m11.real()};
}

ANPoint an_from_matrix(const Mat2C& m) {
    if (std::abs(m.m21) > kShapeTol) shape_error("AN", "lower-left zero", std::abs(m.m21));
    if (std::abs(m.m11.imag()) > kShapeTol || std::abs(m.m22.imag()) > kShapeTol)
        shape_error("AN", "real diagonal", std::max(std::abs(m.m11.imag()), std::abs(m.m22.imag())));
    const double p = m.m11.real();
    if (p <= 0.0) shape_error("AN", "positive diagonal", p);
    const double unit = std::abs(p * m.m22.real() - 1.0);
    if (unit > kShapeTol) shape_error("AN", "unit determinant diagonal", unit);
    return {2.0 * std::log(p), m.m12.real(), m.m12.imag()};
}

QPoint qpoint_from_matrix(const Mat2C& m) {
    const double fix = norm_inf(dagger(m) - m);
    if (fix > kShapeTol) shape_error("Q", "dagger-fixed", fix);
    const double det1 = std::abs(m.det() - Complex(1.0, 0.0));
    if (det1 > kShapeTol) shape_error("Q", "unit determinant", det1);
    const double c = m.m11.real();
    if (c <= 0.0) shape_error("Q", "positive upper-left entry", c);
    return {m.m12.real(), m.m12.imag(), c};
}

GElement g_from_matrix(const Mat2C& m) {
    const double conj_res = std::max(std::abs(m.m21 - std::conj(m.m12)),
                                     std::abs(m.m22 - std::conj(m.m11)));
    if (conj_res > kShapeTol) shape_error("G", "conjugate symmetry", conj_res);
    return {m.m11, m.m12};
}

double wrap_angle(double a) {
    double w = std::fmod(a, two_pi);
    if (w < 0.0) w += two_pi;
    if (w >= two_pi) w = 0.0;
    return w;
}

HypCoords hyp_of_rect(const QStarPoint& p) {
    if (!p.admissible()) throw domain_error("hyp_of_rect: point is not admissible");
    const double lam = p.lambda();
    if (p.x == 0.0 && p.y == 0.0) return {lam, 0.0, 0.0, true};
    const double ratio = std::max(p.z / lam, 1.0);
    return {lam, wrap_angle(std::atan2(p.y, p.x)), std::acosh(ratio), false};
}

QStarPoint rect_of_hyp(const HypCoords& h) {
    const double r = h.lambda * std::sinh(h.s);
    return {r * std::cos(h.phi), r * std::sin(h.phi), h.lambda * std::cosh(h.s)};
}

GTStarCoords gtstar_of_rect(const QStarPoint& p) {
    if (!p.admissible()) throw domain_error("gtstar_of_rect: point is not admissible");
    // sqrt(z*z) can land an ulp above z; the chart needs z >= lambda.
    const double lam = std::min(p.lambda(), p.z);
    if (p.x == 0.0 && p.y == 0.0) return {p.z, lam, 0.0, true};
    return {p.z, lam, wrap_angle(std::atan2(p.y, p.x)), false};
}

QStarPoint rect_of_gtstar(const GTStarCoords& c) {
    // Factored radicand: z^2 - lambda^2 loses digits when z ~ lambda.
    const double r = std::sqrt(std::max((c.z - c.lambda) * (c.z + c.lambda), 0.0));
    return {r * std::cos(c.theta), r * std::sin(c.theta), c.z};
}

GTQCoords gtq_of_qpoint(const QPoint& q) {
    if (!q.admissible()) throw domain_error("gtq_of_qpoint: point is not admissible");
    const double w = std::log(q.c);
    // acosh can land an ulp above w on the axis; the chart needs w >= lambda.
    const double lam = std::min(q.lambda(), w);
    if (q.a == 0.0 && q.b == 0.0) return {w, lam, 0.0, true};
    return {w, lam, wrap_angle(std::atan2(q.b, q.a)), false};
}

QPoint qpoint_of_gtq(const GTQCoords& c) {
    const double ew = std::exp(c.w);
    const double rad = (ew - std::exp(c.lambda)) * (ew - std::exp(-c.lambda));
    const double r = std::sqrt(std::max(rad, 0.0));
    return {r * std::cos(c.theta), r * std::sin(c.theta), ew};
}

bool is_admissible(const QStarPoint& p) { return p.admissible(); }
bool is_admissible(const ANPoint& p) { return p.admissible(); }
bool is_admissible(const QPoint& p) { return p.admissible(); }

} // namespace su11
