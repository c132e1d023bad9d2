#pragma once

#include "su11/algebra.hpp"
#include "su11/bivector.hpp"

namespace su11 {

constexpr double two_pi = 6.28318530717958647692;

/// Point of the linear dual space q ~ su(1,1)*, matrix
/// [[z, x+iy], [-x+iy, -z]]. Admissible iff z > 0 and z^2 > x^2 + y^2.
struct QStarPoint {
    double x = 0.0, y = 0.0, z = 0.0;

    QStarPoint() = default;
    QStarPoint(double x_, double y_, double z_);

    [[nodiscard]] Vec3 coords() const { return {x, y, z}; }
    /// sqrt(z^2 - x^2 - y^2); requires a timelike point.
    [[nodiscard]] double lambda() const;
    [[nodiscard]] bool admissible() const;
};

/// Element of the dual group AN, matrix [[e^{z/2}, x+iy], [0, e^{-z/2}]].
struct ANPoint {
    double z = 0.0, x = 0.0, y = 0.0;

    ANPoint() = default;
    ANPoint(double z_, double x_, double y_);

    [[nodiscard]] Vec3 coords() const { return {z, x, y}; }
    /// Trace of b^dagger b: e^z + e^{-z} - (x^2 + y^2).
    [[nodiscard]] double delta() const;
    [[nodiscard]] bool admissible() const;
};

/// Element of the symmetric space Q with c > 0, matrix
/// [[c, a+ib], [-a+ib, d]] where d = (1-a^2-b^2)/c keeps det = 1.
struct QPoint {
    double a = 0.0, b = 0.0, c = 1.0;

    QPoint() = default;
    QPoint(double a_, double b_, double c_);

    [[nodiscard]] Vec3 coords() const { return {a, b, c}; }
    [[nodiscard]] double d() const { return (1.0 - a * a - b * b) / c; }
    [[nodiscard]] double trace() const { return c + d(); }
    [[nodiscard]] bool admissible() const;
    /// arccosh(trace/2); requires an admissible point.
    [[nodiscard]] double lambda() const;
};

/// Element of G = SU(1,1), matrix [[u, v], [conj v, conj u]] with
/// |u|^2 - |v|^2 = 1 (checked to 1e-12 at construction).
struct GElement {
    Complex u{1.0, 0.0}, v{0.0, 0.0};

    GElement() = default;
    GElement(Complex u_, Complex v_);

    /// u = cosh(r) e^{i alpha}, v = sinh(r) e^{i beta}.
    [[nodiscard]] static GElement boost(double r, double alpha, double beta);

    [[nodiscard]] GElement inverse() const { return GElement(std::conj(u), -v); }

    friend GElement operator*(const GElement& g, const GElement& h) {
        return {g.u * h.u + g.v * std::conj(h.v), g.u * h.v + g.v * std::conj(h.u)};
    }
};

/// Hyperbolic coordinates (lambda, phi, s) on the admissible cone:
/// x = lambda sinh(s) cos(phi), y = lambda sinh(s) sin(phi), z = lambda cosh(s).
struct HypCoords {
    double lambda = 1.0, phi = 0.0, s = 0.0;
    bool on_axis = false; // set by conversions when x = y = 0 (phi defaulted to 0)

    HypCoords() = default;
    HypCoords(double lambda_, double phi_, double s_, bool on_axis_ = false);

    [[nodiscard]] Vec3 coords() const { return {lambda, phi, s}; }
};

/// Gelfand-Tsetlin coordinates (z, lambda, theta) on q_adm:
/// upper-right matrix entry sqrt(z^2-lambda^2) e^{i theta}, z >= lambda > 0.
struct GTStarCoords {
    double z = 1.0, lambda = 1.0, theta = 0.0;
    bool on_axis = false;

    GTStarCoords() = default;
    GTStarCoords(double z_, double lambda_, double theta_, bool on_axis_ = false);

    [[nodiscard]] Vec3 coords() const { return {z, lambda, theta}; }
};

/// Gelfand-Tsetlin coordinates (w, lambda, theta) on Q_adm:
/// upper-left entry e^w, trace 2 cosh(lambda), w >= lambda > 0.
struct GTQCoords {
    double w = 1.0, lambda = 1.0, theta = 0.0;
    bool on_axis = false;

    GTQCoords() = default;
    GTQCoords(double w_, double lambda_, double theta_, bool on_axis_ = false);

    [[nodiscard]] Vec3 coords() const { return {w, lambda, theta}; }
};

enum class Space { QStar, AN, Q, G };

// Matrix realizations and their inverses. from_matrix_* validates the
// shape within 1e-10 and reports the offending residual on failure.
Mat2C to_matrix(const QStarPoint& p);
Mat2C to_matrix(const ANPoint& p);
Mat2C to_matrix(const QPoint& p);
Mat2C to_matrix(const GElement& g);

QStarPoint qstar_from_matrix(const Mat2C& m);
ANPoint an_from_matrix(const Mat2C& m);
QPoint qpoint_from_matrix(const Mat2C& m);
GElement g_from_matrix(const Mat2C& m);

// Chart conversions. The forward maps require admissible input; on the
// axis x = y = 0 the angle is set to 0 and the result is flagged.
HypCoords hyp_of_rect(const QStarPoint& p);
QStarPoint rect_of_hyp(const HypCoords& h);
GTStarCoords gtstar_of_rect(const QStarPoint& p);
QStarPoint rect_of_gtstar(const GTStarCoords& c);
GTQCoords gtq_of_qpoint(const QPoint& q);
QPoint qpoint_of_gtq(const GTQCoords& c);

bool is_admissible(const QStarPoint& p);
bool is_admissible(const ANPoint& p);
bool is_admissible(const QPoint& p);

/// Wrap an angle into [0, 2*pi).
double wrap_angle(double a);

} // namespace su11
