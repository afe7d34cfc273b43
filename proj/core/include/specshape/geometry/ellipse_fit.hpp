#pragma once

#include <span>
#include <vector>

#include "specshape/geometry/types.hpp"

namespace specshape::geom {

struct EllipseFit {
    Conic conic;        ///< sign-normalized, pixel coordinates
    double residual;    ///< RMS geometric distance / semi-major axis
};

/// Direct ellipse-specific least-squares fit on mean-centered, scaled
/// coordinates, followed by one geometric-distance residual pass.
/// Throws TooFewPoints (< 6), DegenerateConfiguration (rank-deficient
/// scatter, e.g. collinear input) and NotAnEllipse (numerically degenerate
/// output that fails the ellipse signature).
EllipseFit fit_ellipse(std::span<const Vec2> points);

/// Orthogonal distance from a point to the ellipse boundary (robust
/// bisection in the ellipse frame; exact on-axis cases handled separately).
double point_ellipse_distance(const GeometricEllipse& e, const Vec2& p);

/// RMS of point-to-ellipse geometric distances divided by the semi-major
/// axis; the scale-free residual thresholded by the pipeline.
double geometric_residual(const GeometricEllipse& e, std::span<const Vec2> points);

}  // namespace specshape::geom
