#include "specshape/geometry/eig3.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace specshape::geom {

namespace {

double off_diagonal_norm(const Mat3& a) {
    return std::sqrt(a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2));
}

/// Apply the deterministic sign rule: largest-magnitude component positive,
/// ties broken by the lowest index.
Vec3 canonical_sign(const Vec3& v) {
    int best = 0;
    double mag = std::abs(v.x);
    for (int i = 1; i < 3; ++i) {
        const double m = std::abs(v[i]);
        if (m > mag) {
            mag = m;
            best = i;
        }
    }
    return v[best] < 0.0 ? -v : v;
}

}  // namespace

SymEig3 eig_sym3(const Mat3& m) {
    const double scale = std::max(1.0, m.frobenius_norm());
    double asym = 0.0;
    for (int r = 0; r < 3; ++r)
        for (int c = r + 1; c < 3; ++c)
            asym = std::max(asym, std::abs(m(r, c) - m(c, r)));
    if (asym > 1e-12 * scale)
        raise(ErrorCode::NotSymmetric, "matrix is not symmetric");

    // Work on the symmetrized copy; Jacobi rotations preserve symmetry.
    Mat3 a;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) a(r, c) = 0.5 * (m(r, c) + m(c, r));

    Mat3 v = Mat3::identity();
    const double eps = 1e-15 * std::max(1.0, a.frobenius_norm());
    for (int sweep = 0; sweep < 64 && off_diagonal_norm(a) > eps; ++sweep) {
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= eps * 1e-2) continue;
                const double theta = 0.5 * std::atan2(2.0 * apq, a(q, q) - a(p, p));
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                // A <- J^T A J with J the (p,q) rotation.
                for (int k = 0; k < 3; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < 3; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < 3; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::array<int, 3> order{0, 1, 2};
    const std::array<double, 3> lam{a(0, 0), a(1, 1), a(2, 2)};
    std::sort(order.begin(), order.end(), [&](int i, int j) { return lam[i] < lam[j]; });

    SymEig3 out;
    out.lambda1 = lam[order[0]];
    out.lambda2 = lam[order[1]];
    out.lambda3 = lam[order[2]];
    out.v1 = canonical_sign(v.col(order[0]).normalized());
    out.v2 = canonical_sign(v.col(order[1]).normalized());
    out.v3 = out.v1.cross(out.v2);
    return out;
}

SymEig2 eig_sym2(double a, double b, double c) {
    SymEig2 out;
    if (b == 0.0) {
        if (a <= c) {
            out.lambda1 = a;
            out.lambda2 = c;
            out.v1 = {1.0, 0.0};
            out.v2 = {0.0, 1.0};
        } else {
            out.lambda1 = c;
            out.lambda2 = a;
            out.v1 = {0.0, 1.0};
            out.v2 = {1.0, 0.0};
        }
        return out;
    }
    const double tr = a + c;
    const double diff = a - c;
    const double disc = std::sqrt(diff * diff + 4.0 * b * b);
    out.lambda1 = 0.5 * (tr - disc);
    out.lambda2 = 0.5 * (tr + disc);
    // Eigenvector for lambda1: pick the better-conditioned expression.
    Vec2 v{b, out.lambda1 - a};
    Vec2 alt{out.lambda1 - c, b};
    if (alt.norm() > v.norm()) v = alt;
    const double n = v.norm();
    out.v1 = {v.x / n, v.y / n};
    out.v2 = {-out.v1.y, out.v1.x};
    return out;
}

}  // namespace specshape::geom
