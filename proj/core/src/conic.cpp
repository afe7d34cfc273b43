#include "specshape/geometry/conic.hpp"

#include <cmath>
#include <numbers>

#include "specshape/geometry/eig3.hpp"

namespace specshape::geom {

namespace {

double wrap_angle_half_turn(double theta) {
    const double pi = std::numbers::pi;
    double t = std::fmod(theta, pi);
    if (t < 0.0) t += pi;
    if (t >= pi) t -= pi;
    return t;
}

}  // namespace

GeometricEllipse::GeometricEllipse(const Vec2& c, double a, double b, double theta)
    : center(c), semi_major(a), semi_minor(b), angle(wrap_angle_half_turn(theta)) {
    if (!(b > 0.0) || !(a >= b))
        raise(ErrorCode::InvalidParams, "ellipse axes must satisfy a >= b > 0");
}

Conic sign_normalize(const Conic& c) {
    const double norm = c.m.frobenius_norm();
    if (!(norm > 0.0) || !std::isfinite(norm))
        raise(ErrorCode::ZeroMatrix, "conic matrix is zero or non-finite");
    Mat3 scaled = c.m * (1.0 / norm);
    const SymEig3 eig = eig_sym3(scaled);
    const int negatives = (eig.lambda1 < 0.0) + (eig.lambda2 < 0.0) + (eig.lambda3 < 0.0);
    if (negatives == 2) scaled = scaled * -1.0;
    return Conic{scaled};
}

bool is_real_ellipse(const Conic& c) {
    const Mat3& m = c.m;
    const double det2 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return det2 > 0.0 && m(0, 0) > 0.0 && m.det() < 0.0;
}

GeometricEllipse conic_to_geometric(const Conic& c) {
    const Conic n = sign_normalize(c);
    if (!is_real_ellipse(n))
        raise(ErrorCode::NotAnEllipse, "conic signature is not a real ellipse");
    const Mat3& m = n.m;

    // Center: pole of the line at infinity, i.e. solve the 2x2 system
    // [a b/1][x0 y0]^T = -[d e]^T built from the bordered entries.
    const double det2 = m(0, 0) * m(1, 1) - m(0, 1) * m(0, 1);
    const double x0 = (m(0, 1) * m(1, 2) - m(1, 1) * m(0, 2)) / det2;
    const double y0 = (m(0, 1) * m(0, 2) - m(0, 0) * m(1, 2)) / det2;

    // Value at the center; negative for a real ellipse.
    const Vec3 hc{x0, y0, 1.0};
    const double fc = hc.dot(m * hc);

    const SymEig2 eig = eig_sym2(m(0, 0), m(0, 1), m(1, 1));
    const double a = std::sqrt(-fc / eig.lambda1);
    const double b = std::sqrt(-fc / eig.lambda2);
    const double theta = std::atan2(eig.v1.y, eig.v1.x);
    return GeometricEllipse{{x0, y0}, a, b, theta};
}

Conic geometric_to_conic(const GeometricEllipse& e) {
    const double ca = std::cos(e.angle), sa = std::sin(e.angle);
    const Vec2 u{ca, sa};
    const Vec2 v{-sa, ca};
    const double ia = 1.0 / (e.semi_major * e.semi_major);
    const double ib = 1.0 / (e.semi_minor * e.semi_minor);

    // Q = u u^T / a^2 + v v^T / b^2, then border with the center shift.
    const double q00 = ia * u.x * u.x + ib * v.x * v.x;
    const double q01 = ia * u.x * u.y + ib * v.x * v.y;
    const double q11 = ia * u.y * u.y + ib * v.y * v.y;
    const double cx = e.center.x, cy = e.center.y;

    Mat3 m;
    m(0, 0) = q00;
    m(0, 1) = m(1, 0) = q01;
    m(1, 1) = q11;
    m(0, 2) = m(2, 0) = -(q00 * cx + q01 * cy);
    m(1, 2) = m(2, 1) = -(q01 * cx + q11 * cy);
    m(2, 2) = q00 * cx * cx + 2.0 * q01 * cx * cy + q11 * cy * cy - 1.0;
    return sign_normalize(Conic{m});
}

Conic transfer_to_normalized(const Conic& c, const CameraIntrinsics& k) {
    const Mat3 kk = k.matrix();
    return sign_normalize(Conic{kk.transpose() * c.m * kk});
}

}  // namespace specshape::geom
