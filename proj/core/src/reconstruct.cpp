#include "specshape/geometry/reconstruct.hpp"

#include <cmath>

#include "specshape/geometry/camera.hpp"
#include "specshape/geometry/conic.hpp"
#include "specshape/geometry/eig3.hpp"

namespace specshape::geom {

SurfacePatchEstimate reconstruct_patch(const Conic& c, const CameraIntrinsics& k,
                                       double fit_residual) {
    const Conic pixel_conic = sign_normalize(c);
    if (!is_real_ellipse(pixel_conic))
        raise(ErrorCode::NotAnEllipse, "conic is not a real ellipse");

    const GeometricEllipse pixel_ellipse = conic_to_geometric(pixel_conic);

    SurfacePatchEstimate out;
    out.bp = pixel_ellipse.center;
    out.normal = normal_from_center(k, out.bp);

    const Conic normalized = transfer_to_normalized(pixel_conic, k);
    const SymEig3 eig = eig_sym3(normalized.m);
    // Signature (2,1) with ascending eigenvalues: lambda1 < 0 carries the
    // normal-aligned eigenvector, lambda2 <= lambda3 are the positive pair.
    if (!(eig.lambda1 < 0.0 && eig.lambda2 > 0.0))
        raise(ErrorCode::NotAnEllipse, "normalized conic lost the ellipse signature");

    const double mu1 = eig.lambda2;
    const double mu2 = eig.lambda3;
    out.u1 = eig.v2;
    out.u2 = eig.v3;
    out.v3 = out.u1.cross(out.u2);
    if (out.v3.dot(out.normal) < 0.0) {
        // Flip u2 so (u1, u2, N) is right-handed; v3 follows.
        out.u2 = -out.u2;
        out.v3 = -out.v3;
    }

    out.axis_ratio = std::sqrt(mu1 / mu2);
    out.eccentricity = std::sqrt(1.0 - out.axis_ratio * out.axis_ratio);
    out.fit_residual = fit_residual;
    out.circle_degenerate = out.eccentricity < kCircleDegenerateEccentricity;
    return out;
}

}  // namespace specshape::geom
