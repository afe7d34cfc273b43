#pragma once

#include <cstdint>
#include <vector>

#include "specshape/image.hpp"

namespace specshape::iso {

/// Saturation detector settings. Stands in for a learned specularity
/// segmenter behind the same interface.
struct DetectorParams {
    double intensity_threshold = 0.92;  ///< unit interval, min over channels
    int min_area = 20;                  ///< pixels^2, inclusive
    int max_area = 5000;                ///< pixels^2, inclusive
    int border_margin = 2;              ///< components this close to the border are dropped

    void validate() const {
        if (!(intensity_threshold > 0.0) || intensity_threshold > 1.0)
            raise(ErrorCode::InvalidParams, "intensity_threshold must be in (0, 1]");
        if (min_area <= 0 || max_area <= min_area)
            raise(ErrorCode::InvalidParams, "need 0 < min_area < max_area");
        if (border_margin < 0)
            raise(ErrorCode::InvalidParams, "border_margin must be >= 0");
    }
};

struct Mask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> on;  ///< 0/1 per pixel, row-major

    bool at(int x, int y) const {
        return on[static_cast<std::size_t>(y) * width + x] != 0;
    }
    void set(int x, int y, bool v = true) {
        on[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0;
    }
    std::size_t count() const {
        std::size_t n = 0;
        for (auto v : on) n += v;
        return n;
    }
};

struct PixelCoord {
    int x = 0;
    int y = 0;
    bool operator==(const PixelCoord&) const = default;
};

/// One 8-connected blob. `seed` is its top-most, then left-most pixel.
struct Component {
    std::vector<PixelCoord> pixels;  ///< row-major scan order
    PixelCoord seed;
    int min_x = 0, min_y = 0, max_x = 0, max_y = 0;

    int area() const { return static_cast<int>(pixels.size()); }
};

/// Pixel is set iff min over channels >= intensity_threshold.
/// Throws EmptyImage.
Mask specular_mask(const Image& img, const DetectorParams& p);

/// 8-connected labeling. Components touching the border within
/// border_margin or with area outside [min_area, max_area] are discarded.
/// Output sorted by (top-most, then left-most) seed pixel.
std::vector<Component> connected_components(const Mask& mask, const DetectorParams& p);

}  // namespace specshape::iso
