#pragma once

#include "specshape/geometry/types.hpp"

namespace specshape::geom {

/// Cyclic Jacobi eigendecomposition of a symmetric 3x3 matrix. Eigenvalues
/// come back ascending; eigenvectors orthonormal and right-handed with the
/// deterministic sign convention described on SymEig3. Throws NotSymmetric
/// when max |m_ij - m_ji| exceeds 1e-12 * max(1, ||m||_F).
SymEig3 eig_sym3(const Mat3& m);

/// Closed-form eigendecomposition of a symmetric 2x2 [[a, b], [b, c]].
/// Returns eigenvalues ascending with unit eigenvectors as columns of a
/// 2x2 rotation-ish pair; deterministic for the b == 0 branch.
struct SymEig2 {
    double lambda1 = 0.0;  ///< smaller
    double lambda2 = 0.0;
    Vec2 v1, v2;
};

SymEig2 eig_sym2(double a, double b, double c);

}  // namespace specshape::geom
