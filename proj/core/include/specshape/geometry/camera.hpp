#pragma once

#include "specshape/geometry/types.hpp"

namespace specshape::geom {

/// Pixel -> ray direction through the camera center, unit length, z > 0.
Vec3 backproject(const CameraIntrinsics& k, const Vec2& pixel);

/// Camera-frame point -> pixel. Throws BehindCamera for z <= 0.
Vec2 project(const CameraIntrinsics& k, const Vec3& point);

/// Sightline-based normal at a brightest point: the unit vector along
/// K^-1 (x0, y0, 1)^T, third component positive.
Vec3 normal_from_center(const CameraIntrinsics& k, const Vec2& bp);

}  // namespace specshape::geom
