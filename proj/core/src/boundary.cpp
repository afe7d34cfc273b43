#include "specshape/isophote/boundary.hpp"

namespace specshape::iso {

namespace {

// Clockwise Moore ring (screen orientation, y down), starting west.
constexpr int kRingX[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
constexpr int kRingY[8] = {0, -1, -1, -1, 0, 1, 1, 1};

struct Bitmap {
    int ox, oy, w, h;
    std::vector<std::uint8_t> on;

    explicit Bitmap(const Component& comp) {
        // One-pixel apron so neighbor probes never leave the bitmap.
        ox = comp.min_x - 1;
        oy = comp.min_y - 1;
        w = comp.max_x - comp.min_x + 3;
        h = comp.max_y - comp.min_y + 3;
        on.assign(static_cast<std::size_t>(w) * h, 0);
        for (const PixelCoord& p : comp.pixels)
            on[static_cast<std::size_t>(p.y - oy) * w + (p.x - ox)] = 1;
    }

    bool at(int x, int y) const {
        const int lx = x - ox, ly = y - oy;
        if (lx < 0 || lx >= w || ly < 0 || ly >= h) return false;
        return on[static_cast<std::size_t>(ly) * w + lx] != 0;
    }
};

int ring_index(const PixelCoord& p, const PixelCoord& neighbor) {
    for (int i = 0; i < 8; ++i)
        if (p.x + kRingX[i] == neighbor.x && p.y + kRingY[i] == neighbor.y) return i;
    return 0;
}

/// One Moore step: scan clockwise from just after `backtrack`; returns
/// false when the pixel has no set neighbors.
bool moore_step(const Bitmap& bm, const PixelCoord& p, PixelCoord& backtrack,
                PixelCoord& next) {
    const int start = ring_index(p, backtrack);
    PixelCoord last_empty = backtrack;
    for (int k = 1; k <= 8; ++k) {
        const int i = (start + k) % 8;
        const PixelCoord cand{p.x + kRingX[i], p.y + kRingY[i]};
        if (bm.at(cand.x, cand.y)) {
            next = cand;
            backtrack = last_empty;
            return true;
        }
        last_empty = cand;
    }
    return false;
}

}  // namespace

std::vector<PixelCoord> trace_outer_boundary(const Component& comp) {
    std::vector<PixelCoord> path;
    if (comp.pixels.empty()) return path;
    const Bitmap bm(comp);
    const PixelCoord start = comp.seed;

    PixelCoord backtrack{start.x - 1, start.y};
    PixelCoord first_next;
    PixelCoord bt = backtrack;
    if (!moore_step(bm, start, bt, first_next)) {
        path.push_back(start);
        return path;
    }

    path.push_back(start);
    PixelCoord prev = start;
    PixelCoord cur = first_next;
    const std::size_t cap = 4 * comp.pixels.size() + 8;
    std::size_t steps = 1;
    while (!(prev == start && cur == first_next && steps > 1) && steps <= cap) {
        path.push_back(cur);
        PixelCoord next;
        if (!moore_step(bm, cur, bt, next)) break;
        prev = cur;
        cur = next;
        ++steps;
    }
    if (path.size() > 1 && path.back() == path.front()) path.pop_back();
    return path;
}

}  // namespace specshape::iso
