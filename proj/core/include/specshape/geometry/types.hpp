#pragma once

#include "specshape/common/error.hpp"
#include "specshape/common/linalg.hpp"

namespace specshape::geom {

/// Pinhole calibration. Builds the upper-triangular K mapping normalized
/// image coordinates to pixels.
struct CameraIntrinsics {
    double fx = 1.0;
    double fy = 1.0;
    double cx = 0.0;
    double cy = 0.0;
    double skew = 0.0;

    CameraIntrinsics() = default;
    CameraIntrinsics(double fx_, double fy_, double cx_, double cy_, double skew_ = 0.0)
        : fx(fx_), fy(fy_), cx(cx_), cy(cy_), skew(skew_) {
        if (!(fx > 0.0) || !(fy > 0.0))
            raise(ErrorCode::InvalidParams, "focal lengths must be positive");
    }

    Mat3 matrix() const {
        Mat3 k;
        k(0, 0) = fx;
        k(0, 1) = skew;
        k(0, 2) = cx;
        k(1, 1) = fy;
        k(1, 2) = cy;
        k(2, 2) = 1.0;
        return k;
    }

    /// Closed-form inverse of the upper-triangular K.
    Mat3 inverse_matrix() const {
        Mat3 ki;
        ki(0, 0) = 1.0 / fx;
        ki(0, 1) = -skew / (fx * fy);
        ki(0, 2) = (skew * cy - cx * fy) / (fx * fy);
        ki(1, 1) = 1.0 / fy;
        ki(1, 2) = -cy / fy;
        ki(2, 2) = 1.0;
        return ki;
    }
};

/// 3x3 symmetric matrix form of a conic: boundary points satisfy
/// (x, y, 1) m (x, y, 1)^T = 0. Defined up to nonzero scale.
struct Conic {
    Mat3 m;

    Conic() = default;
    explicit Conic(const Mat3& mat) : m(mat) {}

    double evaluate(const Vec2& p) const {
        const Vec3 h{p.x, p.y, 1.0};
        return h.dot(m * h);
    }
};

/// Center/axes/angle form. angle is the major-axis direction from +x,
/// normalized to [0, pi).
struct GeometricEllipse {
    Vec2 center;
    double semi_major = 1.0;
    double semi_minor = 1.0;
    double angle = 0.0;

    GeometricEllipse() = default;
    GeometricEllipse(const Vec2& c, double a, double b, double theta);

    Vec2 point_at(double t) const {
        const double ca = std::cos(angle), sa = std::sin(angle);
        const double ex = semi_major * std::cos(t), ey = semi_minor * std::sin(t);
        return {center.x + ca * ex - sa * ey, center.y + sa * ex + ca * ey};
    }
};

/// Eigendecomposition of a symmetric 3x3 matrix, eigenvalues ascending.
/// v1 and v2 carry the deterministic sign convention (largest-magnitude
/// component positive, ties to the lowest index); v3 = v1 x v2 pins the
/// frame right-handed.
struct SymEig3 {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
    Vec3 v1, v2, v3;

    Mat3 rotation() const { return Mat3::from_rows(v1, v2, v3); }
};

/// Per-specularity reconstruction output, camera frame.
struct SurfacePatchEstimate {
    Vec2 bp;              ///< brightest point, pixels (fitted ellipse center)
    Vec3 normal;          ///< unit, positive z (into the scene along the sightline)
    Vec3 u1;              ///< major-axis / minimal-curvature direction, unit
    Vec3 u2;              ///< minor-axis direction, unit; (u1, u2, normal) right-handed
    Vec3 v3;              ///< negative-eigenvalue eigenvector (= u1 x u2)
    double axis_ratio = 1.0;     ///< rho = minor/major = sqrt(mu1/mu2), in (0, 1]
    double eccentricity = 0.0;   ///< sqrt(1 - rho^2), in [0, 1)
    double fit_residual = 0.0;   ///< dimensionless RMS residual of the ellipse fit
    bool circle_degenerate = false;  ///< eccentricity < 0.05: directions unreliable
};

}  // namespace specshape::geom
