#pragma once

// Uniform cell grid over the a x a square, point bucketing, and the
// neighbouring-cell pair scan at the heart of the factoring search.

#include <span>
#include <vector>

#include "hideseek/solutions.hpp"

namespace hideseek {

/// Cell (i, j) covers [i*cell_w, min((i+1)*cell_w, a)) x [j*cell_h, min((j+1)*cell_h, a)).
struct Grid {
  u64 a = 0;
  u64 cell_w = 0;
  u64 cell_h = 0;
  u64 cols = 0;
  u64 rows = 0;

  u64 cell_count() const { return cols * rows; }
  u64 index(u64 i, u64 j) const { return i * rows + j; }
  Rect cell_rect(u64 i, u64 j) const;
  friend bool operator==(const Grid&, const Grid&) = default;
};

/// Throws std::invalid_argument unless 1 <= cell_w, cell_h <= a.
Grid make_grid(u64 a, u64 cell_w, u64 cell_h);

/// Points grouped by cell. Storage is column-major (cell (i, j) at
/// index i*rows + j); within a cell the input order is preserved.
class CellCounts {
 public:
  CellCounts() = default;
  CellCounts(Grid grid, std::span<const HyperbolaPoint> points);

  const Grid& grid() const { return grid_; }
  std::span<const HyperbolaPoint> cell(u64 i, u64 j) const;
  u64 count(u64 i, u64 j) const;
  u64 total() const { return points_.size(); }

 private:
  Grid grid_;
  std::vector<u64> offsets_;
  std::vector<HyperbolaPoint> points_;
};

/// Counting-only variant: per-cell tallies without storing the points.
class CellTally {
 public:
  CellTally() = default;
  explicit CellTally(Grid grid);

  void add(const HyperbolaPoint& p);
  const Grid& grid() const { return grid_; }
  u64 count(u64 i, u64 j) const { return counts_[grid_.index(i, j)]; }
  u64 total() const { return total_; }
  const std::vector<u64>& counts() const { return counts_; }

 private:
  Grid grid_;
  std::vector<u64> counts_;
  u64 total_ = 0;
};

/// Throws std::out_of_range if any point lies outside [0, a)^2.
CellCounts bucket(std::span<const HyperbolaPoint> points, const Grid& grid);

/// A neighbouring column (or row) index and whether reaching it crossed the
/// edge of the square.
struct NeighborLine {
  u64 index = 0;
  bool wrapped = false;
  friend bool operator==(const NeighborLine&, const NeighborLine&) = default;
};

/// Distinct lines meeting the band [start - radius*size, end + radius*size)
/// taken modulo `extent`, where [start, end) is line `line`. Ascending index;
/// a line reachable both directly and across the edge is reported unwrapped.
/// Any two coordinates at cyclic distance <= radius*size therefore lie in
/// mutually neighbouring lines, even when the last line is truncated.
std::vector<NeighborLine> neighbor_lines(u64 extent, u64 size, u64 count, u64 line, u64 radius);

inline std::vector<NeighborLine> neighbor_columns(const Grid& g, u64 i, u64 radius) {
  return neighbor_lines(g.a, g.cell_w, g.cols, i, radius);
}
inline std::vector<NeighborLine> neighbor_rows(const Grid& g, u64 j, u64 radius) {
  return neighbor_lines(g.a, g.cell_h, g.rows, j, radius);
}

struct WrapFlags {
  bool col = false;
  bool row = false;
};

enum class ScanControl { kContinue, kStop };

/// Calls fn(p, q, wrap) for every p in cell (i, j) of `base` and q in a
/// neighbouring cell of `shifted` (columns within dx_cells, rows within
/// dy_cells, cyclically). Order: base column, base row, neighbour column,
/// neighbour row, then point order within each cell. fn returns a
/// ScanControl; kStop ends the scan early. Returns the number of pairs
/// visited. Throws std::invalid_argument when the grids differ.
template <class Fn>
u64 neighbor_pairs(const CellCounts& base, const CellCounts& shifted, u64 dx_cells, u64 dy_cells,
                   Fn&& fn);

}  // namespace hideseek

#include "hideseek/grid_impl.hpp"
