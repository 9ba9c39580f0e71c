#pragma once

// Random assignments and exhaustive-enumeration helpers for the suites.

#include "cardzk/oracle.hpp"

namespace helpers {

inline cardzk::Filling random_filling(const cardzk::Puzzle& p, int width,
                                      cardzk::Rng& rng) {
  cardzk::Filling f = cardzk::Filling::constant(p.rows(), p.cols(), 1);
  for (int i = 1; i <= p.rows(); ++i) {
    for (int j = 1; j <= p.cols(); ++j) {
      cardzk::Cell c{i, j};
      auto t = p.terminal_at(c);
      f.set(c, t ? *t : 1 + static_cast<int>(rng.below(
                              static_cast<uint64_t>(width))));
    }
  }
  return f;
}

inline cardzk::Labeling random_labeling(const cardzk::DppInstance& g,
                                        cardzk::Rng& rng) {
  int width = cardzk::encoding_width(g);
  cardzk::Labeling l;
  l.value.assign(static_cast<size_t>(g.vertex_count()), 1);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    auto t = g.terminal_number(v);
    l.set(v, t ? *t : 1 + static_cast<int>(rng.below(
                             static_cast<uint64_t>(width))));
  }
  return l;
}

// Calls fn with every filling of the non-terminal cells over 1..width.
template <typename Fn>
void for_each_filling(const cardzk::Puzzle& p, int width, Fn&& fn) {
  std::vector<cardzk::Cell> free_cells;
  for (int i = 1; i <= p.rows(); ++i)
    for (int j = 1; j <= p.cols(); ++j)
      if (!p.is_terminal({i, j})) free_cells.push_back({i, j});
  cardzk::Filling f = cardzk::Filling::constant(p.rows(), p.cols(), 1);
  for (const auto& [cell, x] : p.terminals()) f.set(cell, x);
  std::vector<int> digits(free_cells.size(), 1);
  for (;;) {
    for (size_t i = 0; i < free_cells.size(); ++i)
      f.set(free_cells[i], digits[i]);
    fn(f);
    size_t pos = 0;
    while (pos < digits.size() && digits[pos] == width) {
      digits[pos] = 1;
      ++pos;
    }
    if (pos == digits.size()) break;
    ++digits[pos];
  }
}

// Every k=1 puzzle on grids up to the given shape list.
template <typename Fn>
void for_each_small_puzzle(Fn&& fn) {
  const std::pair<int, int> shapes[] = {{1, 2}, {1, 3}, {2, 2}, {2, 3}};
  for (auto [m, n] : shapes) {
    std::vector<cardzk::Cell> cells;
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j) cells.push_back({i, j});
    for (size_t a = 0; a < cells.size(); ++a) {
      for (size_t b = a + 1; b < cells.size(); ++b) {
        std::map<cardzk::Cell, int> terminals{{cells[a], 1}, {cells[b], 1}};
        fn(cardzk::Puzzle(m, n, 1, std::move(terminals)));
      }
    }
  }
}

}  // namespace helpers
