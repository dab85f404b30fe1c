#pragma once

#include <cmath>

namespace cpc::channel {

/// Real 2x2 matrix, row-major.
struct Mat2 {
    double a = 0.0, b = 0.0;  // row 0
    double c = 0.0, d = 0.0;  // row 1

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 diagonal(double p, double q) { return {p, 0.0, 0.0, q}; }
    static Mat2 rotation(double angle) {
        const double co = std::cos(angle), si = std::sin(angle);
        return {co, -si, si, co};
    }

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }
    Mat2 transpose() const { return {a, c, b, d}; }
    Mat2 scaled(double f) const { return {a * f, b * f, c * f, d * f}; }

    double max_abs() const {
        return std::max(std::max(std::fabs(a), std::fabs(b)),
                        std::max(std::fabs(c), std::fabs(d)));
    }
    double max_abs_diff(const Mat2& o) const {
        return std::max(std::max(std::fabs(a - o.a), std::fabs(b - o.b)),
                        std::max(std::fabs(c - o.c), std::fabs(d - o.d)));
    }

    friend Mat2 operator*(const Mat2& l, const Mat2& r) {
        return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
    }
};

/// Inverse via the adjugate. Callers guarantee det != 0.
inline Mat2 inverse(const Mat2& m) {
    const double inv_det = 1.0 / m.det();
    return {m.d * inv_det, -m.b * inv_det, -m.c * inv_det, m.a * inv_det};
}

/// Symmetric positive square root of an SPD matrix, by Cayley-Hamilton:
/// sqrt(A) = (A + sqrt(det A) I) / sqrt(tr A + 2 sqrt(det A)).
inline Mat2 sqrt_spd(const Mat2& m) {
    const double sd = std::sqrt(m.det());
    const double norm = std::sqrt(m.trace() + 2.0 * sd);
    return {(m.a + sd) / norm, m.b / norm, m.c / norm, (m.d + sd) / norm};
}

struct SymEigen2 {
    double lambda_max;
    double lambda_min;
    double angle;  // R(angle)^T S R(angle) = diag(lambda_max, lambda_min)
};

/// Closed-form eigendecomposition of a symmetric 2x2 matrix; the rotation
/// angle always puts the larger eigenvalue first.
inline SymEigen2 sym_eigen(const Mat2& s) {
    const double mid = 0.5 * (s.a + s.d);
    const double half_diff = 0.5 * (s.a - s.d);
    const double off = 0.5 * (s.b + s.c);
    const double radius = std::hypot(half_diff, off);
    return {mid + radius, mid - radius, 0.5 * std::atan2(2.0 * off, 2.0 * half_diff)};
}

}  // namespace cpc::channel
