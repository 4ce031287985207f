#pragma once

#include <stdexcept>

namespace hideseek {

template <class Fn>
u64 neighbor_pairs(const CellCounts& base, const CellCounts& shifted, u64 dx_cells, u64 dy_cells,
                   Fn&& fn) {
  const Grid& g = base.grid();
  if (!(g == shifted.grid())) throw std::invalid_argument("neighbor_pairs: grids differ");

  std::vector<std::vector<NeighborLine>> row_nbrs(g.rows);
  for (u64 j = 0; j < g.rows; ++j) row_nbrs[j] = neighbor_rows(g, j, dy_cells);

  u64 visited = 0;
  for (u64 i = 0; i < g.cols; ++i) {
    const std::vector<NeighborLine> col_nbrs = neighbor_columns(g, i, dx_cells);
    for (u64 j = 0; j < g.rows; ++j) {
      auto here = base.cell(i, j);
      if (here.empty()) continue;
      for (const NeighborLine& c : col_nbrs) {
        for (const NeighborLine& r : row_nbrs[j]) {
          auto there = shifted.cell(c.index, r.index);
          if (there.empty()) continue;
          const WrapFlags wrap{c.wrapped, r.wrapped};
          for (const HyperbolaPoint& p : here) {
            for (const HyperbolaPoint& q : there) {
              ++visited;
              if (fn(p, q, wrap) == ScanControl::kStop) return visited;
            }
          }
        }
      }
    }
  }
  return visited;
}

}  // namespace hideseek
