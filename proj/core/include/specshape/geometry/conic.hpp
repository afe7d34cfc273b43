#pragma once

#include "specshape/geometry/types.hpp"

namespace specshape::geom {

/// Scale to unit Frobenius norm and orient the sign so a real ellipse ends
/// up with signature (2 positive, 1 negative): when two eigenvalues are
/// negative the matrix is flipped. Throws ZeroMatrix.
Conic sign_normalize(const Conic& c);

/// True when the sign-normalized conic is a real ellipse: positive-definite
/// leading 2x2 block and negative determinant.
bool is_real_ellipse(const Conic& c);

/// Matrix form -> center/axes/angle. Throws NotAnEllipse.
GeometricEllipse conic_to_geometric(const Conic& c);

/// Center/axes/angle -> sign-normalized matrix form.
Conic geometric_to_conic(const GeometricEllipse& e);

/// Map a pixel-plane conic to the normalized image plane:
/// sign_normalize(K^T C K).
Conic transfer_to_normalized(const Conic& c, const CameraIntrinsics& k);

}  // namespace specshape::geom
