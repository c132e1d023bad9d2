#include "su11/maps.hpp"

#include <cmath>
#include <sstream>

namespace su11 {

namespace {

constexpr double kBoundaryMargin = 1e-12;

double acosh_half_trace(double trace) {
    return std::acosh(0.5 * trace);
}

} // namespace

QPoint sym(const ANPoint& p) {
    const double half = std::exp(0.5 * p.z);
    return {p.x * half, p.y * half, std::exp(p.z)};
}

Mat3 sym_jacobian(const ANPoint& p) {
    const double half = std::exp(0.5 * p.z);
    const double full = std::exp(p.z);
    return {{{0.5 * p.x * half, half, 0.0},
             {0.5 * p.y * half, 0.0, half},
             {full, 0.0, 0.0}}};
}

QPoint exp_q(const QStarPoint& p) {
    if (!p.admissible()) throw domain_error("exp_q: point is not admissible");
    const double lam = p.lambda();
    const double sinhc = std::sinh(lam) / lam;
    return {p.x * sinhc, p.y * sinhc, std::cosh(lam) + p.z * sinhc};
}

QStarPoint log_q(const QPoint& q) {
    const double t = q.trace();
    if (!(t > 2.0) || !(q.c > 0.5 * t)) {
        std::ostringstream os;
        os << "log_q: point is not admissible (trace " << t << ", c " << q.c << ")";
        throw domain_error(os.str());
    }
    const double lam = acosh_half_trace(t);
    const double scale = lam / std::sinh(lam);
    return {q.a * scale, q.b * scale, q.c * scale - lam / std::tanh(lam)};
}

DressResult dress(double z, const GElement& g) {
    if (!(z > 0.0)) throw domain_error("dress: z must be positive");
    const double ez = std::exp(z);
    const double rho = std::sqrt(std::norm(g.u) * ez - std::norm(g.v) / ez);
    const double halfz = std::exp(0.5 * z);
    const GElement g_prime{g.u * halfz / rho, g.v / (halfz * rho)};
    const Complex m = 2.0 * std::conj(g.u) * g.v * std::sinh(z) / rho;
    return {g_prime, ANPoint{2.0 * std::log(rho), m.real(), m.imag()}};
}

QPoint fr_map(const QStarPoint& p) {
    if (!p.admissible()) throw domain_error("fr_map: point is not admissible");
    const double c = std::exp(p.z);
    const double r = std::hypot(p.x, p.y);
    if (r == 0.0) return {0.0, 0.0, c};
    const double lam = p.lambda();
    // Factored radicand (e^z - e^lambda)(e^z - e^{-lambda}); the expanded
    // form e^{2z} - 2 e^z cosh(lambda) + 1 cancels catastrophically near
    // the axis z ~ lambda. Rounding can leave a tiny negative value.
    const double rad = (c - std::exp(lam)) * (c - std::exp(-lam));
    const double scale = std::sqrt(std::max(rad, 0.0)) / r;
    return {scale * p.x, scale * p.y, c};
}

double adm_spectrum_an(const ANPoint& p) {
    const double delta = p.delta();
    if (!(p.z > 0.0) || !(delta > 2.0 + kBoundaryMargin)) {
        std::ostringstream os;
        os << "adm_spectrum_an: not admissible (Delta " << delta << ", z " << p.z << ")";
        throw domain_error(os.str());
    }
    return std::log(0.5 * (delta + std::sqrt(delta * delta - 4.0)));
}

double adm_spectrum_slc(const Mat2C& m) {
    const double det_res = std::abs(m.det() - Complex(1.0, 0.0));
    if (det_res > 1e-10)
        throw domain_error("adm_spectrum_slc: determinant differs from 1 by " +
                           std::to_string(det_res));
    const Mat2C s = dagger(m) * m;
    const double trace = s.trace().real();
    const double c = s.m11.real();
    if (!(trace > 2.0 + kBoundaryMargin) || !(c > 0.5 * trace)) {
        std::ostringstream os;
        os << "adm_spectrum_slc: dagger(M)M is not admissible (trace " << trace
           << ", upper-left " << c << ")";
        throw domain_error(os.str());
    }
    return std::log(0.5 * (trace + std::sqrt(trace * trace - 4.0)));
}

DiffMap map_sym() {
    return {Chart::RectAN, Chart::RectQ,
            [](const Vec3& p) { return sym(ANPoint{p[0], p[1], p[2]}).coords(); },
            [](const Vec3& p) { return sym_jacobian(ANPoint{p[0], p[1], p[2]}); }};
}

DiffMap map_log_sym() {
    return {Chart::RectAN, Chart::RectQStar,
            [](const Vec3& p) { return log_q(sym(ANPoint{p[0], p[1], p[2]})).coords(); },
            nullptr};
}

DiffMap map_fr() {
    return {Chart::RectQStar, Chart::RectQ,
            [](const Vec3& p) { return fr_map(QStarPoint{p[0], p[1], p[2]}).coords(); },
            nullptr};
}

DiffMap map_gtstar() {
    return {Chart::RectQStar, Chart::GTStar,
            [](const Vec3& p) { return gtstar_of_rect(QStarPoint{p[0], p[1], p[2]}).coords(); },
            nullptr};
}

DiffMap map_gtq() {
    return {Chart::RectQ, Chart::GTQ,
            [](const Vec3& p) { return gtq_of_qpoint(QPoint{p[0], p[1], p[2]}).coords(); },
            nullptr};
}

DiffMap map_hyp() {
    return {Chart::RectQStar, Chart::Hyperbolic,
            [](const Vec3& p) { return hyp_of_rect(QStarPoint{p[0], p[1], p[2]}).coords(); },
            nullptr};
}

} // namespace su11
