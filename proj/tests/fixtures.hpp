#pragma once

// Worked 5x5 instances shared across the test suites.

#include <string>

#include "cardzk/numberlink.hpp"

namespace fixtures {

// Four-pair puzzle whose unique solution covers the whole grid.
inline std::string covered_puzzle_text() {
  return "5 5 4\n"
         ". . . . 4\n"
         "3 1 . . 3\n"
         "2 . . 4 .\n"
         ". . . . .\n"
         "2 . . . 1\n";
}

inline cardzk::Puzzle covered_puzzle() {
  return cardzk::parse_puzzle(covered_puzzle_text());
}

// The fully covering solution of that puzzle.
inline cardzk::PathSet covered_solution() {
  using cardzk::Cell;
  return {
      {{2, 2}, {3, 2}, {4, 2}, {5, 2}, {5, 3}, {5, 4}, {5, 5}},
      {{3, 1}, {4, 1}, {5, 1}},
      {{2, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}, {4, 3}, {4, 4},
       {4, 5}, {3, 5}, {2, 5}},
      {{1, 5}, {1, 4}, {2, 4}, {3, 4}},
  };
}

// The per-cell numbers that solution induces.
inline cardzk::Filling covered_filling() {
  return cardzk::Filling(5, 5,
                         {3, 3, 3, 4, 4,
                          3, 1, 3, 4, 3,
                          2, 1, 3, 4, 3,
                          2, 1, 3, 3, 3,
                          2, 1, 1, 1, 1});
}

// Two-pair puzzle whose solution leaves most of the grid uncovered.
inline std::string sparse_puzzle_text() {
  return "5 5 2\n"
         ". . . . 2\n"
         ". . 1 . .\n"
         ". . . . 2\n"
         ". . . . .\n"
         ". . 1 . .\n";
}

inline cardzk::Puzzle sparse_puzzle() {
  return cardzk::parse_puzzle(sparse_puzzle_text());
}

inline cardzk::PathSet sparse_solution() {
  using cardzk::Cell;
  return {
      {{2, 3}, {3, 3}, {4, 3}, {5, 3}},
      {{1, 5}, {2, 5}, {3, 5}},
  };
}

// Parity fillers 3 and 4 on every uncovered cell.
inline cardzk::Filling sparse_filling() {
  return cardzk::Filling(5, 5,
                         {3, 4, 3, 4, 2,
                          4, 3, 1, 3, 2,
                          3, 4, 1, 4, 2,
                          4, 3, 1, 3, 4,
                          3, 4, 1, 4, 3});
}

// Three-pair puzzle with straight-line paths that do not cover the grid.
inline std::string straight_puzzle_text() {
  return "5 5 3\n"
         "1 2 . . .\n"
         ". . . 3 .\n"
         ". . . . .\n"
         ". . . 3 .\n"
         "1 2 . . .\n";
}

inline cardzk::Puzzle straight_puzzle() {
  return cardzk::parse_puzzle(straight_puzzle_text());
}

// A hand-built filling that floods the uncovered area with spurious paths
// of number 1 yet still passes every neighbor-count check.
inline cardzk::Filling straight_overfill() {
  return cardzk::Filling(5, 5,
                         {1, 2, 1, 1, 1,
                          1, 2, 1, 3, 1,
                          1, 2, 1, 3, 1,
                          1, 2, 1, 3, 1,
                          1, 2, 1, 1, 1});
}

}  // namespace fixtures
