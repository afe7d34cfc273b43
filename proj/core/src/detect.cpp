#include "specshape/isophote/detect.hpp"

#include <algorithm>

namespace specshape::iso {

Mask specular_mask(const Image& img, const DetectorParams& p) {
    if (img.empty()) raise(ErrorCode::EmptyImage, "cannot detect on an empty image");
    p.validate();
    Mask mask;
    mask.width = img.width;
    mask.height = img.height;
    mask.on.assign(static_cast<std::size_t>(img.width) * img.height, 0);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            if (img.min_channel(x, y) >= p.intensity_threshold) mask.set(x, y);
    return mask;
}

std::vector<Component> connected_components(const Mask& mask, const DetectorParams& p) {
    p.validate();
    const int w = mask.width, h = mask.height;
    std::vector<int> label(static_cast<std::size_t>(w) * h, -1);
    std::vector<Component> out;
    std::vector<PixelCoord> stack;

    // Row-major scan guarantees each component's first-seen pixel is its
    // top-most then left-most one, which fixes the output order.
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t idx = static_cast<std::size_t>(y) * w + x;
            if (!mask.on[idx] || label[idx] >= 0) continue;
            const int id = static_cast<int>(out.size());
            Component comp;
            comp.seed = {x, y};
            comp.min_x = comp.max_x = x;
            comp.min_y = comp.max_y = y;
            stack.clear();
            stack.push_back({x, y});
            label[idx] = id;
            while (!stack.empty()) {
                const PixelCoord c = stack.back();
                stack.pop_back();
                comp.pixels.push_back(c);
                comp.min_x = std::min(comp.min_x, c.x);
                comp.max_x = std::max(comp.max_x, c.x);
                comp.min_y = std::min(comp.min_y, c.y);
                comp.max_y = std::max(comp.max_y, c.y);
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx) {
                        if (dx == 0 && dy == 0) continue;
                        const int nx = c.x + dx, ny = c.y + dy;
                        if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                        const std::size_t nidx = static_cast<std::size_t>(ny) * w + nx;
                        if (mask.on[nidx] && label[nidx] < 0) {
                            label[nidx] = id;
                            stack.push_back({nx, ny});
                        }
                    }
            }
            out.push_back(std::move(comp));
        }
    }

    std::vector<Component> kept;
    kept.reserve(out.size());
    for (auto& comp : out) {
        const int area = comp.area();
        if (area < p.min_area || area > p.max_area) continue;
        if (comp.min_x < p.border_margin || comp.min_y < p.border_margin ||
            comp.max_x >= w - p.border_margin || comp.max_y >= h - p.border_margin)
            continue;
        std::sort(comp.pixels.begin(), comp.pixels.end(),
                  [](const PixelCoord& a, const PixelCoord& b) {
                      return a.y != b.y ? a.y < b.y : a.x < b.x;
                  });
        kept.push_back(std::move(comp));
    }
    // Scan order already yields (top-most, left-most) seed ordering.
    return kept;
}

}  // namespace specshape::iso
