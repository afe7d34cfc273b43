#pragma once

#include "specshape/geometry/types.hpp"

namespace specshape::geom {

/// Threshold below which the ellipse is treated as a circle and the
/// principal directions flagged unreliable.
inline constexpr double kCircleDegenerateEccentricity = 0.05;

/// Reconstruct the local surface frame from a specular isophote conic in
/// pixel coordinates:
///   bp  = fitted ellipse center (pixels),
///   N   = unit K^-1 (bp, 1), positive z,
///   C'  = sign_normalize(K^T C K), eigendecomposed with ascending
///         eigenvalues; the two positive eigenvalues mu1 <= mu2 give
///   u1  = eigenvector of mu1 (major axis, minimal-curvature direction),
///   u2  = eigenvector of mu2, re-signed so (u1, u2, N) is right-handed,
///   rho = sqrt(mu1/mu2), eccentricity = sqrt(1 - rho^2).
/// `fit_residual` is carried through to the output untouched.
/// Throws NotAnEllipse when the conic fails the ellipse signature test.
SurfacePatchEstimate reconstruct_patch(const Conic& c, const CameraIntrinsics& k,
                                       double fit_residual = 0.0);

}  // namespace specshape::geom
