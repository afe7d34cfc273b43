#include "specshape/geometry/ellipse_fit.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "specshape/geometry/conic.hpp"

namespace specshape::geom {

namespace {

/// Real roots of x^3 + c2 x^2 + c1 x + c0, polished with two Newton steps.
int solve_cubic(double c2, double c1, double c0, std::array<double, 3>& roots) {
    const double p = c1 - c2 * c2 / 3.0;
    const double q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
    const double shift = -c2 / 3.0;
    int count = 0;

    const double disc = -4.0 * p * p * p - 27.0 * q * q;
    if (disc >= 0.0) {
        // Three real roots (possibly repeated); trigonometric form.
        if (p >= 0.0) {
            // p == 0 up to roundoff: triple root.
            roots[0] = roots[1] = roots[2] = shift + std::cbrt(-q);
            count = 3;
        } else {
            const double r = 2.0 * std::sqrt(-p / 3.0);
            double arg = 3.0 * q / (p * r);
            arg = std::clamp(arg, -1.0, 1.0);
            const double phi = std::acos(arg) / 3.0;
            for (int k = 0; k < 3; ++k)
                roots[count++] = shift + r * std::cos(phi - 2.0 * std::numbers::pi_v<double> * k / 3.0);
        }
    } else {
        const double s = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
        const double u = std::cbrt(-q / 2.0 + s);
        const double v = std::cbrt(-q / 2.0 - s);
        roots[0] = shift + u + v;
        count = 1;
    }

    for (int i = 0; i < count; ++i) {
        double x = roots[i];
        for (int it = 0; it < 2; ++it) {
            const double f = ((x + c2) * x + c1) * x + c0;
            const double df = (3.0 * x + 2.0 * c2) * x + c1;
            if (df != 0.0) x -= f / df;
        }
        roots[i] = x;
    }
    return count;
}

/// Null vector of a (near) rank-2 3x3 matrix via the largest row cross
/// product.
Vec3 null_vector(const Mat3& a) {
    const Vec3 r0 = a.row(0), r1 = a.row(1), r2 = a.row(2);
    const Vec3 c01 = r0.cross(r1);
    const Vec3 c02 = r0.cross(r2);
    const Vec3 c12 = r1.cross(r2);
    Vec3 best = c01;
    if (c02.norm() > best.norm()) best = c02;
    if (c12.norm() > best.norm()) best = c12;
    return best;
}

}  // namespace

EllipseFit fit_ellipse(std::span<const Vec2> points) {
    const std::size_t n = points.size();
    if (n < 6) raise(ErrorCode::TooFewPoints, "ellipse fit needs at least 6 points");

    // Condition the coordinates: mean-center, isotropic scale to RMS sqrt(2).
    Vec2 mean{0.0, 0.0};
    for (const Vec2& p : points) mean += p;
    mean = mean / static_cast<double>(n);
    double rms = 0.0;
    for (const Vec2& p : points) {
        const Vec2 d = p - mean;
        rms += d.x * d.x + d.y * d.y;
    }
    rms = std::sqrt(rms / static_cast<double>(n));
    if (!(rms > 0.0))
        raise(ErrorCode::DegenerateConfiguration, "all points coincide");
    const double scale = std::numbers::sqrt2_v<double> / rms;

    // Scatter blocks of the design [x^2, xy, y^2 | x, y, 1].
    double s1[3][3] = {};
    double s2[3][3] = {};
    double s3[3][3] = {};
    for (const Vec2& p : points) {
        const double x = (p.x - mean.x) * scale;
        const double y = (p.y - mean.y) * scale;
        const double q[3] = {x * x, x * y, y * y};
        const double l[3] = {x, y, 1.0};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                s1[i][j] += q[i] * q[j];
                s2[i][j] += q[i] * l[j];
                s3[i][j] += l[i] * l[j];
            }
    }

    Mat3 S3;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) S3(i, j) = s3[i][j];
    const double det3 = S3.det();
    // With conditioned coordinates the linear scatter has entries O(n), so a
    // determinant this small means rank deficiency (collinear input).
    if (std::abs(det3) < 1e-9 * static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n))
        raise(ErrorCode::DegenerateConfiguration, "rank-deficient point configuration");
    const Mat3 S3inv = S3.inverse();

    Mat3 S2, S1;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            S2(i, j) = s2[i][j];
            S1(i, j) = s1[i][j];
        }

    // T = -S3^-1 S2^T;  M = S1 + S2 T, then premultiplied by C1^-1 where C1
    // encodes the ellipse constraint 4ac - b^2 = 1.
    const Mat3 T = (S3inv * S2.transpose()) * -1.0;
    const Mat3 M = S1 + S2 * T;
    Mat3 Mc;
    for (int j = 0; j < 3; ++j) {
        Mc(0, j) = M(2, j) / 2.0;
        Mc(1, j) = -M(1, j);
        Mc(2, j) = M(0, j) / 2.0;
    }

    // Characteristic polynomial of Mc: x^3 - tr x^2 + m2 x - det.
    const double tr = Mc(0, 0) + Mc(1, 1) + Mc(2, 2);
    const double m2 = Mc(0, 0) * Mc(1, 1) - Mc(0, 1) * Mc(1, 0) +
                      Mc(0, 0) * Mc(2, 2) - Mc(0, 2) * Mc(2, 0) +
                      Mc(1, 1) * Mc(2, 2) - Mc(1, 2) * Mc(2, 1);
    const double det = Mc.det();
    std::array<double, 3> roots{};
    const int nroots = solve_cubic(-tr, m2, -det, roots);

    // Exactly one eigenvector satisfies the ellipse condition 4ac - b^2 > 0.
    Vec3 a1;
    double best_margin = 0.0;
    for (int i = 0; i < nroots; ++i) {
        Mat3 A = Mc;
        A(0, 0) -= roots[i];
        A(1, 1) -= roots[i];
        A(2, 2) -= roots[i];
        const Vec3 v = null_vector(A);
        const double nv = v.norm();
        if (!(nv > 0.0)) continue;
        const Vec3 cand = v / nv;
        const double margin = 4.0 * cand.x * cand.z - cand.y * cand.y;
        if (margin > best_margin) {
            best_margin = margin;
            a1 = cand;
        }
    }
    if (!(best_margin > 0.0))
        raise(ErrorCode::DegenerateConfiguration, "no elliptical solution found");

    const Vec3 a2 = T * a1;

    // Conic in conditioned coordinates.
    Mat3 cn;
    cn(0, 0) = a1.x;
    cn(0, 1) = cn(1, 0) = a1.y / 2.0;
    cn(1, 1) = a1.z;
    cn(0, 2) = cn(2, 0) = a2.x / 2.0;
    cn(1, 2) = cn(2, 1) = a2.y / 2.0;
    cn(2, 2) = a2.z;

    // Undo the conditioning: x_n = Tn x with Tn = [[s,0,-s mx],[0,s,-s my],[0,0,1]].
    Mat3 Tn;
    Tn(0, 0) = scale;
    Tn(1, 1) = scale;
    Tn(0, 2) = -scale * mean.x;
    Tn(1, 2) = -scale * mean.y;
    Tn(2, 2) = 1.0;
    Conic conic = sign_normalize(Conic{Tn.transpose() * cn * Tn});
    if (!is_real_ellipse(conic))
        raise(ErrorCode::NotAnEllipse, "fit produced a non-elliptical conic");

    const GeometricEllipse geo = conic_to_geometric(conic);
    return EllipseFit{conic, geometric_residual(geo, points)};
}

double point_ellipse_distance(const GeometricEllipse& e, const Vec2& p) {
    // Move into the ellipse frame, fold into the first quadrant.
    const double ca = std::cos(e.angle), sa = std::sin(e.angle);
    const Vec2 d = p - e.center;
    const double y0 = std::abs(ca * d.x + sa * d.y);
    const double y1 = std::abs(-sa * d.x + ca * d.y);
    const double a = e.semi_major, b = e.semi_minor;

    if (y1 == 0.0) {
        // On the major axis: the closest point is interior to the arc when
        // |y0| is small enough, otherwise the vertex.
        const double crit = (a * a - b * b) / a;
        if (y0 < crit) {
            const double x0 = a * a * y0 / (a * a - b * b);
            const double x1 = b * std::sqrt(std::max(0.0, 1.0 - (x0 / a) * (x0 / a)));
            return std::hypot(x0 - y0, x1);
        }
        return std::abs(y0 - a);
    }

    // Eberly's root find: F(t) = (a y0/(t+a^2))^2 + (b y1/(t+b^2))^2 - 1 is
    // strictly decreasing on (-b^2, inf) with a sign change in [t0, t1].
    const auto F = [&](double t) {
        const double u = a * y0 / (t + a * a);
        const double v = b * y1 / (t + b * b);
        return u * u + v * v - 1.0;
    };
    double t0 = -b * b + b * y1;
    double t1 = std::max(t0, -b * b + std::hypot(a * y0, b * y1));
    double f1 = F(t1);
    int guard = 0;
    while (f1 > 0.0 && guard++ < 200) {
        t1 = t0 + 2.0 * (t1 - t0) + b * b;
        f1 = F(t1);
    }
    for (int it = 0; it < 120; ++it) {
        const double tm = 0.5 * (t0 + t1);
        if (tm == t0 || tm == t1) break;
        if (F(tm) > 0.0)
            t0 = tm;
        else
            t1 = tm;
    }
    const double t = 0.5 * (t0 + t1);
    const double x0 = a * a * y0 / (t + a * a);
    const double x1 = b * b * y1 / (t + b * b);
    return std::hypot(x0 - y0, x1 - y1);
}

double geometric_residual(const GeometricEllipse& e, std::span<const Vec2> points) {
    if (points.empty()) return 0.0;
    double ss = 0.0;
    for (const Vec2& p : points) {
        const double d = point_ellipse_distance(e, p);
        ss += d * d;
    }
    return std::sqrt(ss / static_cast<double>(points.size())) / e.semi_major;
}

}  // namespace specshape::geom
