#pragma once

#include <cstdint>
#include <vector>

#include "specshape/common/error.hpp"

namespace specshape {

/// Row-major 8-bit raster, 1 (gray) or 3 (RGB) channels. Samples are stored
/// as bytes and promoted to [0,1] on access.
struct Image {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<std::uint8_t> data;

    Image() = default;
    Image(int w, int h, int ch, std::uint8_t fill = 0)
        : width(w), height(h), channels(ch),
          data(static_cast<std::size_t>(w) * h * ch, fill) {
        if (w <= 0 || h <= 0 || (ch != 1 && ch != 3))
            raise(ErrorCode::InvalidParams, "image dimensions/channels invalid");
    }

    bool empty() const { return width == 0 || height == 0 || data.empty(); }

    std::size_t index(int x, int y, int c = 0) const {
        return (static_cast<std::size_t>(y) * width + x) * channels + c;
    }

    std::uint8_t byte_at(int x, int y, int c = 0) const { return data[index(x, y, c)]; }
    std::uint8_t& byte_at(int x, int y, int c = 0) { return data[index(x, y, c)]; }

    /// Sample promoted to the unit interval.
    double value(int x, int y, int c = 0) const {
        return static_cast<double>(data[index(x, y, c)]) / 255.0;
    }

    /// Minimum over channels, promoted to [0,1]. Specularities are white, so
    /// the detector thresholds this.
    double min_channel(int x, int y) const {
        std::uint8_t v = data[index(x, y, 0)];
        for (int c = 1; c < channels; ++c) v = std::min(v, data[index(x, y, c)]);
        return static_cast<double>(v) / 255.0;
    }

    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width && y >= 0 && y < height;
    }

    /// Gray or per-channel copy promoted to 3 channels.
    Image to_rgb() const {
        if (channels == 3) return *this;
        Image out(width, height, 3);
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < width; ++x) {
                const std::uint8_t v = byte_at(x, y);
                out.byte_at(x, y, 0) = v;
                out.byte_at(x, y, 1) = v;
                out.byte_at(x, y, 2) = v;
            }
        return out;
    }

    bool operator==(const Image& o) const {
        return width == o.width && height == o.height && channels == o.channels &&
               data == o.data;
    }
};

}  // namespace specshape
