#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cardzk/variant.hpp"

namespace cardzk {

// Grid coordinates, 1-indexed from the top-left.
struct Cell {
  int row = 0;
  int col = 0;

  auto operator<=>(const Cell&) const = default;
};

inline bool cells_adjacent(Cell a, Cell b) {
  int dr = a.row - b.row;
  int dc = a.col - b.col;
  return (dr == 0 && (dc == 1 || dc == -1)) ||
         (dc == 0 && (dr == 1 || dr == -1));
}

std::string cell_name(Cell c);

// An m x n Numberlink grid with k terminal pairs. Each number 1..k sits on
// exactly two distinct cells.
class Puzzle {
 public:
  Puzzle(int m, int n, int k, std::map<Cell, int> terminals);

  int rows() const { return m_; }
  int cols() const { return n_; }
  int pairs() const { return k_; }
  bool in_grid(Cell c) const {
    return c.row >= 1 && c.row <= m_ && c.col >= 1 && c.col <= n_;
  }
  bool is_terminal(Cell c) const { return terminals_.count(c) != 0; }
  std::optional<int> terminal_at(Cell c) const;
  // The two terminals of number x, lexicographically ordered.
  std::pair<Cell, Cell> terminal_pair(int x) const;
  const std::map<Cell, int>& terminals() const { return terminals_; }

  // On-grid neighbors of c in the fixed order up, down, left, right.
  std::vector<Cell> neighbors(Cell c) const;

 private:
  int m_, n_, k_;
  std::map<Cell, int> terminals_;
};

using Path = std::vector<Cell>;
// paths[x-1] joins the two terminals of number x.
using PathSet = std::vector<Path>;

// A complete per-cell assignment of numbers in 1..k+2.
class Filling {
 public:
  Filling(int m, int n, std::vector<int> values);
  static Filling constant(int m, int n, int value);

  int rows() const { return m_; }
  int cols() const { return n_; }
  int at(Cell c) const;
  void set(Cell c, int value);
  const std::vector<int>& values() const { return values_; }

  bool operator==(const Filling&) const = default;

 private:
  int m_, n_;
  std::vector<int> values_;  // row-major
};

// --- text formats ------------------------------------------------------
// Puzzle: first line "m n k", then m lines of n tokens, '.' or a number.
// Filling: m lines of n integers.
// Paths:   k lines, line x listing "r c r c ..." along the path of x.

Puzzle parse_puzzle(const std::string& text);
std::string serialize_puzzle(const Puzzle& p);

Filling parse_filling(const std::string& text, const Puzzle& p);
std::string serialize_filling(const Filling& f);

PathSet parse_paths(const std::string& text, const Puzzle& p);
std::string serialize_paths(const PathSet& ps);

// Checks endpoints, adjacency, interior non-terminality, and disjointness.
void validate_paths(const Puzzle& p, const PathSet& ps);

// Repeatedly shortcuts non-simple paths: while some c_i is adjacent to a
// later c_j with j > i+1, replace the stretch between them. Scans i
// ascending and takes the largest such j, so the fixpoint is deterministic.
PathSet simplify_paths(PathSet ps, const Puzzle& p);

bool path_is_simple(const Path& path);

// Writes each path's number onto its cells. Uncovered cells get the parity
// filler k+1 (row+col even) or k+2 (odd) under the general variant and are
// an error under the well-designed variant.
Filling fill_from_solution(const Puzzle& p, const PathSet& ps, Variant v);

// Follows same-number chains from one terminal of each pair; returns the
// recovered paths, or nullopt when some chain lacks a unique continuation.
std::optional<PathSet> extract_solution(const Puzzle& p, const Filling& f);

// Orients every path so the lexicographically smaller endpoint comes first.
PathSet normalize_paths(PathSet ps);

// Raises InstanceError unless the filling matches the grid and pins every
// terminal to its number; width is k (well-designed) or k+2 (general).
void validate_filling(const Puzzle& p, const Filling& f, Variant v);

int encoding_width(const Puzzle& p, Variant v);

}  // namespace cardzk
