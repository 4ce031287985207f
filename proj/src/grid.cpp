#include "hideseek/grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hideseek {

Rect Grid::cell_rect(u64 i, u64 j) const {
  return {i * cell_w, std::min((i + 1) * cell_w, a), j * cell_h, std::min((j + 1) * cell_h, a)};
}

Grid make_grid(u64 a, u64 cell_w, u64 cell_h) {
  if (a == 0 || cell_w == 0 || cell_h == 0 || cell_w > a || cell_h > a) {
    throw std::invalid_argument("make_grid: need 1 <= cell_w, cell_h <= a (a=" + std::to_string(a) +
                                ", cell_w=" + std::to_string(cell_w) +
                                ", cell_h=" + std::to_string(cell_h) + ")");
  }
  return {a, cell_w, cell_h, (a + cell_w - 1) / cell_w, (a + cell_h - 1) / cell_h};
}

namespace {

u64 cell_index_of(const Grid& g, const HyperbolaPoint& p) {
  if (p.x >= g.a || p.y >= g.a) {
    throw std::out_of_range("bucket: point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                            ") outside [0, " + std::to_string(g.a) + ")^2");
  }
  return g.index(p.x / g.cell_w, p.y / g.cell_h);
}

}  // namespace

CellCounts::CellCounts(Grid grid, std::span<const HyperbolaPoint> points) : grid_(grid) {
  const u64 cells = grid_.cell_count();
  offsets_.assign(cells + 1, 0);
  std::vector<u64> idx(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    idx[k] = cell_index_of(grid_, points[k]);
    ++offsets_[idx[k] + 1];
  }
  for (u64 c = 0; c < cells; ++c) offsets_[c + 1] += offsets_[c];
  points_.resize(points.size());
  std::vector<u64> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t k = 0; k < points.size(); ++k) points_[fill[idx[k]]++] = points[k];
}

std::span<const HyperbolaPoint> CellCounts::cell(u64 i, u64 j) const {
  const u64 c = grid_.index(i, j);
  return std::span<const HyperbolaPoint>(points_).subspan(offsets_[c], offsets_[c + 1] - offsets_[c]);
}

u64 CellCounts::count(u64 i, u64 j) const {
  const u64 c = grid_.index(i, j);
  return offsets_[c + 1] - offsets_[c];
}

CellTally::CellTally(Grid grid) : grid_(grid), counts_(grid.cell_count(), 0) {}

void CellTally::add(const HyperbolaPoint& p) {
  ++counts_[cell_index_of(grid_, p)];
  ++total_;
}

CellCounts bucket(std::span<const HyperbolaPoint> points, const Grid& grid) {
  return CellCounts(grid, points);
}

std::vector<NeighborLine> neighbor_lines(u64 extent, u64 size, u64 count, u64 line, u64 radius) {
  if (line >= count) throw std::out_of_range("neighbor_lines: line index out of range");
  const i128 start = static_cast<i128>(line) * size;
  const i128 end = std::min<i128>(start + size, extent);
  const i128 lo = start - static_cast<i128>(radius) * size;
  const i128 hi = end + static_cast<i128>(radius) * size;
  const i128 ext = extent;

  auto line_of = [&](i128 pixel) { return static_cast<u64>(pixel / size); };
  std::vector<NeighborLine> out;

  if (hi - lo >= ext) {
    // The band covers the whole ring.
    const i128 dlo = std::max<i128>(lo, 0), dhi = std::min<i128>(hi, ext);
    for (u64 c = 0; c < count; ++c) {
      const i128 cs = static_cast<i128>(c) * size;
      const i128 ce = std::min<i128>(cs + size, ext);
      out.push_back({c, !(cs < dhi && ce > dlo)});
    }
    return out;
  }

  auto mark = [&](i128 from, i128 to, bool wrapped) {
    if (from >= to) return;
    for (u64 c = line_of(from); c <= line_of(to - 1); ++c) {
      out.push_back({c, wrapped});
    }
  };
  mark(std::max<i128>(lo, 0), std::min<i128>(hi, ext), false);
  if (lo < 0) mark(lo + ext, ext, true);
  if (hi > ext) mark(0, hi - ext, true);

  std::sort(out.begin(), out.end(), [](const NeighborLine& l, const NeighborLine& r) {
    return l.index != r.index ? l.index < r.index : l.wrapped < r.wrapped;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const NeighborLine& l, const NeighborLine& r) { return l.index == r.index; }),
            out.end());
  return out;
}

}  // namespace hideseek
