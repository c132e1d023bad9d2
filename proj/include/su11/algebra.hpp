#pragma once

#include <complex>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace su11 {

using Complex = std::complex<double>;

/// Raised when an input lies outside the mathematical domain of an
/// operation (non-admissible point, wrong matrix shape, ...).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// 2x2 complex matrix. The ambient arena for SU(1,1), AN, Q, SL(2,C)
/// and their Lie algebras. Entries are validated finite on
/// construction so that defect maxima stay meaningful.
struct Mat2C {
    Complex m11, m12, m21, m22;

    Mat2C() : m11(0.0), m12(0.0), m21(0.0), m22(0.0) {}

    Mat2C(Complex a11, Complex a12, Complex a21, Complex a22)
        : m11(a11), m12(a12), m21(a21), m22(a22) {
        if (!is_finite(m11) || !is_finite(m12) || !is_finite(m21) || !is_finite(m22))
            throw std::invalid_argument("Mat2C: non-finite entry");
    }

    [[nodiscard]] Complex trace() const { return m11 + m22; }
    [[nodiscard]] Complex det() const { return m11 * m22 - m12 * m21; }

    /// Inverse via the adjugate; requires det != 0.
    [[nodiscard]] Mat2C inverse() const {
        const Complex d = det();
        if (std::abs(d) == 0.0) throw domain_error("Mat2C::inverse: singular matrix");
        return {m22 / d, -m12 / d, -m21 / d, m11 / d};
    }

    [[nodiscard]] static Mat2C identity() { return {1.0, 0.0, 0.0, 1.0}; }

    friend Mat2C operator*(const Mat2C& a, const Mat2C& b) {
        return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
                a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
    }

    friend Mat2C operator+(const Mat2C& a, const Mat2C& b) {
        return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
    }

    friend Mat2C operator-(const Mat2C& a, const Mat2C& b) {
        return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
    }

    friend Mat2C operator*(Complex s, const Mat2C& a) {
        return {s * a.m11, s * a.m12, s * a.m21, s * a.m22};
    }
};

/// Entrywise max-modulus norm.
inline double norm_inf(const Mat2C& m) {
    return std::max(std::max(std::abs(m.m11), std::abs(m.m12)),
                    std::max(std::abs(m.m21), std::abs(m.m22)));
}

inline Mat2C matmul(const Mat2C& a, const Mat2C& b) { return a * b; }

// Basis of su(1,1) and the signature matrix. [X,Y]=2H, [X,H]=-2Y, [Y,H]=2X.
inline const Mat2C& basis_X() {
    static const Mat2C m{0.0, 1.0, 1.0, 0.0};
    return m;
}
inline const Mat2C& basis_Y() {
    static const Mat2C m{0.0, Complex(0.0, 1.0), Complex(0.0, -1.0), 0.0};
    return m;
}
inline const Mat2C& basis_H() {
    static const Mat2C m{Complex(0.0, 1.0), 0.0, 0.0, Complex(0.0, -1.0)};
    return m;
}
inline const Mat2C& matrix_J() {
    static const Mat2C m{1.0, 0.0, 0.0, -1.0};
    return m;
}

/// Anti-linear involution M -> J * conj(M)^T * J.
/// Entrywise this is conjugation plus sign flips on the off-diagonal,
/// so dagger(dagger(M)) == M holds bitwise.
inline Mat2C dagger(const Mat2C& m) {
    return {std::conj(m.m11), -std::conj(m.m21),
            -std::conj(m.m12), std::conj(m.m22)};
}

/// Both roots of mu^2 - tr(M) mu + det(M), ordered by descending real
/// part, ties broken by descending imaginary part. Uses the
/// cancellation-free quadratic formula.
inline std::pair<Complex, Complex> eig2(const Mat2C& m) {
    const Complex tr = m.trace();
    const Complex dt = m.det();
    const Complex disc = tr * tr - 4.0 * dt;
    Complex sq = std::sqrt(disc);
    // Pick the sign that avoids subtracting nearly equal quantities.
    if (std::real(std::conj(tr) * sq) < 0.0) sq = -sq;
    const Complex r1 = 0.5 * (tr + sq);
    const Complex r2 = (std::abs(r1) > 0.0) ? dt / r1 : 0.5 * (tr - sq);
    const bool swap = (r1.real() < r2.real()) ||
                      (r1.real() == r2.real() && r1.imag() < r2.imag());
    return swap ? std::make_pair(r2, r1) : std::make_pair(r1, r2);
}

/// factor * Im tr(A B). factor 1 pairs g with g*; factor 2 pairs g with a+n.
inline double pairing(const Mat2C& a, const Mat2C& b, double factor) {
    if (factor != 1.0 && factor != 2.0)
        throw std::invalid_argument("pairing: factor must be 1 or 2");
    return factor * std::imag((a * b).trace());
}

/// Matrix commutator [A, B] = AB - BA.
inline Mat2C commutator(const Mat2C& a, const Mat2C& b) {
    return a * b - b * a;
}

} // namespace su11
