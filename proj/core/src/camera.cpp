#include "specshape/geometry/camera.hpp"

namespace specshape::geom {

Vec3 backproject(const CameraIntrinsics& k, const Vec2& pixel) {
    const Vec3 dir = k.inverse_matrix() * Vec3{pixel.x, pixel.y, 1.0};
    return dir.normalized();
}

Vec2 project(const CameraIntrinsics& k, const Vec3& point) {
    if (!(point.z > 0.0))
        raise(ErrorCode::BehindCamera, "point has non-positive depth");
    const Vec3 h = k.matrix() * point;
    return {h.x / h.z, h.y / h.z};
}

Vec3 normal_from_center(const CameraIntrinsics& k, const Vec2& bp) {
    // K^-1 (x, y, 1) keeps its third component at 1, so the normalized
    // vector already points into the scene.
    return backproject(k, bp);
}

}  // namespace specshape::geom
