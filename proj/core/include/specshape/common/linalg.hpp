#pragma once

#include <array>
#include <cmath>

namespace specshape {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    double& operator[](int i) {
        return i == 0 ? x : (i == 1 ? y : z);
    }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    Vec3 normalized() const {
        const double n = norm();
        return {x / n, y / n, z / n};
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double dot(const Vec3& a, const Vec3& b) { return a.dot(b); }
inline Vec3 cross(const Vec3& a, const Vec3& b) { return a.cross(b); }

/// Row-major 3x3 matrix. Small enough that everything stays inline.
struct Mat3 {
    std::array<std::array<double, 3>, 3> m{{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}};

    double operator()(int r, int c) const { return m[r][c]; }
    double& operator()(int r, int c) { return m[r][c]; }

    static Mat3 identity() {
        Mat3 I;
        I(0, 0) = I(1, 1) = I(2, 2) = 1.0;
        return I;
    }

    static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
        Mat3 a;
        for (int c = 0; c < 3; ++c) {
            a(0, c) = r0[c];
            a(1, c) = r1[c];
            a(2, c) = r2[c];
        }
        return a;
    }

    static Mat3 from_cols(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
        Mat3 a;
        for (int r = 0; r < 3; ++r) {
            a(r, 0) = c0[r];
            a(r, 1) = c1[r];
            a(r, 2) = c2[r];
        }
        return a;
    }

    Vec3 row(int r) const { return {m[r][0], m[r][1], m[r][2]}; }
    Vec3 col(int c) const { return {m[0][c], m[1][c], m[2][c]}; }

    Mat3 transpose() const {
        Mat3 t;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) t(r, c) = m[c][r];
        return t;
    }

    Mat3 operator+(const Mat3& o) const {
        Mat3 s;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) s(r, c) = m[r][c] + o(r, c);
        return s;
    }

    Mat3 operator-(const Mat3& o) const {
        Mat3 s;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) s(r, c) = m[r][c] - o(r, c);
        return s;
    }

    Mat3 operator*(double s) const {
        Mat3 a;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) a(r, c) = m[r][c] * s;
        return a;
    }

    Vec3 operator*(const Vec3& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 p;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                p(r, c) = m[r][0] * o(0, c) + m[r][1] * o(1, c) + m[r][2] * o(2, c);
        return p;
    }

    double det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) s += m[r][c] * m[r][c];
        return std::sqrt(s);
    }

    double max_abs() const {
        double s = 0.0;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) s = std::max(s, std::abs(m[r][c]));
        return s;
    }

    /// Adjugate-based inverse; callers must check det() themselves when the
    /// matrix can legitimately be singular.
    Mat3 inverse() const {
        const double d = det();
        Mat3 inv;
        inv(0, 0) = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
        inv(0, 1) = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
        inv(0, 2) = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
        inv(1, 0) = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
        inv(1, 1) = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
        inv(1, 2) = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
        inv(2, 0) = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
        inv(2, 1) = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
        inv(2, 2) = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
        return inv;
    }
};

/// Rodrigues rotation from an axis-angle vector (axis * angle, radians).
inline Mat3 rotation_from_axis_angle(const Vec3& aa) {
    const double angle = aa.norm();
    if (angle < 1e-300) return Mat3::identity();
    const Vec3 k = aa / angle;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double t = 1.0 - c;
    Mat3 r;
    r(0, 0) = c + k.x * k.x * t;
    r(0, 1) = k.x * k.y * t - k.z * s;
    r(0, 2) = k.x * k.z * t + k.y * s;
    r(1, 0) = k.y * k.x * t + k.z * s;
    r(1, 1) = c + k.y * k.y * t;
    r(1, 2) = k.y * k.z * t - k.x * s;
    r(2, 0) = k.z * k.x * t - k.y * s;
    r(2, 1) = k.z * k.y * t + k.x * s;
    r(2, 2) = c + k.z * k.z * t;
    return r;
}

}  // namespace specshape
