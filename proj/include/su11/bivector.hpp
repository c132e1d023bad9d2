#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace su11 {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

inline double norm2(const Vec3& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

inline double norm_inf(const Vec3& v) {
    return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Vec3 operator*(double s, const Vec3& a) {
    return {s * a[0], s * a[1], s * a[2]};
}

/// Coordinate charts in which tensors and maps are expressed.
/// Coordinate order per chart:
///   RectQStar  (x, y, z)        linear dual space q ~ su(1,1)*
///   RectAN     (z, x, y)        upper-triangular group AN
///   RectQ      (a, b, c)        symmetric space Q, c > 0
///   Hyperbolic (lambda, phi, s) leaf-adapted coordinates on q_adm
///   GTStar     (z, lambda, theta)
///   GTQ        (w, lambda, theta)
enum class Chart { RectQStar, RectAN, RectQ, Hyperbolic, GTStar, GTQ };

inline const char* chart_name(Chart c) {
    switch (c) {
        case Chart::RectQStar: return "RectQStar";
        case Chart::RectAN: return "RectAN";
        case Chart::RectQ: return "RectQ";
        case Chart::Hyperbolic: return "Hyperbolic";
        case Chart::GTStar: return "GTStar";
        case Chart::GTQ: return "GTQ";
    }
    return "?";
}

/// Antisymmetric 2-tensor at a point of a 3-dimensional chart.
/// Only the independent coefficients are stored: p12, p13, p23 are the
/// components on dx1^dx2, dx1^dx3, dx2^dx3 in the chart's coordinate
/// order (duals of the coordinate bivectors d/dx_i ^ d/dx_j).
struct Bivector3 {
    Chart chart = Chart::RectQStar;
    double p12 = 0.0, p13 = 0.0, p23 = 0.0;

    /// Signed coefficient pi^{ij}; i, j in {0,1,2}.
    [[nodiscard]] double coeff(int i, int j) const {
        if (i == j) return 0.0;
        if (i > j) return -coeff(j, i);
        if (i == 0) return (j == 1) ? p12 : p13;
        return p23;
    }

    [[nodiscard]] Mat3 to_matrix() const {
        return {{{0.0, p12, p13}, {-p12, 0.0, p23}, {-p13, -p23, 0.0}}};
    }

    [[nodiscard]] static Bivector3 from_matrix(Chart chart, const Mat3& m) {
        return {chart, m[0][1], m[0][2], m[1][2]};
    }
};

inline double norm_inf(const Bivector3& b) {
    return std::max({std::abs(b.p12), std::abs(b.p13), std::abs(b.p23)});
}

/// Max-abs coefficient difference; requires matching charts.
inline double distance_inf(const Bivector3& a, const Bivector3& b) {
    if (a.chart != b.chart)
        throw std::invalid_argument(std::string("bivector chart mismatch: ") +
                                    chart_name(a.chart) + " vs " + chart_name(b.chart));
    return std::max({std::abs(a.p12 - b.p12), std::abs(a.p13 - b.p13),
                     std::abs(a.p23 - b.p23)});
}

inline Bivector3 operator-(const Bivector3& a, const Bivector3& b) {
    if (a.chart != b.chart) throw std::invalid_argument("bivector chart mismatch");
    return {a.chart, a.p12 - b.p12, a.p13 - b.p13, a.p23 - b.p23};
}

inline Bivector3 operator*(double s, const Bivector3& b) {
    return {b.chart, s * b.p12, s * b.p13, s * b.p23};
}

} // namespace su11
