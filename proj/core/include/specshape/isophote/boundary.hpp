#pragma once

#include <vector>

#include "specshape/isophote/detect.hpp"

namespace specshape::iso {

/// Moore-neighbor trace of the outer boundary of an 8-connected component,
/// starting at its top-most/left-most pixel. The closed loop is returned
/// without the repeated closing vertex; 1-pixel-wide sections are traversed
/// once per side, so pixels may repeat. Consecutive entries are 8-adjacent
/// and the loop has positive (shoelace) orientation in (x, y) coordinates.
std::vector<PixelCoord> trace_outer_boundary(const Component& comp);

}  // namespace specshape::iso
