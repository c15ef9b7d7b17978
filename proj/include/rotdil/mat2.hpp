#pragma once

#include <algorithm>
#include <cmath>

namespace rotdil {

struct Vec2 {
    double x = 0.0, y = 0.0;
};

inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }
inline Vec2 operator+(Vec2 u, Vec2 v) { return {u.x + v.x, u.y + v.y}; }
inline Vec2 operator-(Vec2 u, Vec2 v) { return {u.x - v.x, u.y - v.y}; }
inline double norm2(Vec2 v) { return std::hypot(v.x, v.y); }

// Dense 2x2 real matrix [[a11, a12], [a21, a22]].
struct Mat2 {
    double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 rotation(double theta) {
        const double c = std::cos(theta), s = std::sin(theta);
        return {c, -s, s, c};
    }

    double det() const { return a11 * a22 - a12 * a21; }
    double trace() const { return a11 + a22; }
    Mat2 transposed() const { return {a11, a21, a12, a22}; }
    Mat2 inverse() const {
        const double d = det();
        return {a22 / d, -a12 / d, -a21 / d, a11 / d};
    }
    double inf_norm() const {
        return std::max(std::max(std::abs(a11), std::abs(a12)),
                        std::max(std::abs(a21), std::abs(a22)));
    }
};

inline Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a11 * r.a11 + l.a12 * r.a21, l.a11 * r.a12 + l.a12 * r.a22,
            l.a21 * r.a11 + l.a22 * r.a21, l.a21 * r.a12 + l.a22 * r.a22};
}
inline Vec2 operator*(const Mat2& m, Vec2 v) {
    return {m.a11 * v.x + m.a12 * v.y, m.a21 * v.x + m.a22 * v.y};
}
inline Mat2 operator*(double s, const Mat2& m) {
    return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
}
inline Mat2 operator*(const Mat2& m, double s) { return s * m; }
inline Mat2 operator+(const Mat2& l, const Mat2& r) {
    return {l.a11 + r.a11, l.a12 + r.a12, l.a21 + r.a21, l.a22 + r.a22};
}
inline Mat2 operator-(const Mat2& l, const Mat2& r) {
    return {l.a11 - r.a11, l.a12 - r.a12, l.a21 - r.a21, l.a22 - r.a22};
}

// M^n for n >= 0 by repeated multiplication.
inline Mat2 mat_pow(const Mat2& m, int n) {
    Mat2 p = Mat2::identity();
    for (int i = 0; i < n; ++i) p = m * p;
    return p;
}

}  // namespace rotdil
