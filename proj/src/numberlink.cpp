#include "cardzk/numberlink.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cardzk {

Variant variant_from_name(const std::string& name) {
  if (name == "well-designed") return Variant::WellDesigned;
  if (name == "general") return Variant::General;
  if (name == "ukdpp") return Variant::Ukdpp;
  if (name == "dkdpp") return Variant::Dkdpp;
  throw FormatError("unknown variant '" + name + "'");
}

std::string cell_name(Cell c) {
  return "cell " + std::to_string(c.row) + " " + std::to_string(c.col);
}

Puzzle::Puzzle(int m, int n, int k, std::map<Cell, int> terminals)
    : m_(m), n_(n), k_(k), terminals_(std::move(terminals)) {
  if (m_ < 1 || n_ < 1 || k_ < 1)
    throw InstanceError("puzzle needs m >= 1, n >= 1, k >= 1");
  std::vector<int> seen(static_cast<size_t>(k_) + 1, 0);
  for (const auto& [cell, x] : terminals_) {
    if (!in_grid(cell))
      throw InstanceError("terminal " + cell_name(cell) + " outside the grid");
    if (x < 1 || x > k_)
      throw InstanceError("terminal number " + std::to_string(x) +
                          " outside 1.." + std::to_string(k_));
    ++seen[static_cast<size_t>(x)];
  }
  for (int x = 1; x <= k_; ++x)
    if (seen[static_cast<size_t>(x)] != 2)
      throw InstanceError("number " + std::to_string(x) + " appears " +
                          std::to_string(seen[static_cast<size_t>(x)]) +
                          " times; each number must appear exactly twice");
}

std::optional<int> Puzzle::terminal_at(Cell c) const {
  auto it = terminals_.find(c);
  if (it == terminals_.end()) return std::nullopt;
  return it->second;
}

std::pair<Cell, Cell> Puzzle::terminal_pair(int x) const {
  std::vector<Cell> found;
  for (const auto& [cell, v] : terminals_)
    if (v == x) found.push_back(cell);
  if (found.size() != 2)
    throw InstanceError("number " + std::to_string(x) + " has no pair");
  return {found[0], found[1]};  // map iteration is already ordered
}

std::vector<Cell> Puzzle::neighbors(Cell c) const {
  std::vector<Cell> out;
  const Cell candidates[4] = {{c.row - 1, c.col},
                              {c.row + 1, c.col},
                              {c.row, c.col - 1},
                              {c.row, c.col + 1}};
  for (const Cell& nb : candidates)
    if (in_grid(nb)) out.push_back(nb);
  return out;
}

Filling::Filling(int m, int n, std::vector<int> values)
    : m_(m), n_(n), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != m_ * n_)
    throw InstanceError("filling size does not match the grid");
}

Filling Filling::constant(int m, int n, int value) {
  return Filling(m, n, std::vector<int>(static_cast<size_t>(m * n), value));
}

int Filling::at(Cell c) const {
  return values_[static_cast<size_t>((c.row - 1) * n_ + (c.col - 1))];
}

void Filling::set(Cell c, int value) {
  values_[static_cast<size_t>((c.row - 1) * n_ + (c.col - 1))] = value;
}

// --- parsing -------------------------------------------------------------

namespace {

std::vector<std::vector<std::string>> tokenize_lines(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    lines.push_back(std::move(toks));
  }
  return lines;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw FormatError("line " + std::to_string(line_no) + ": expected " +
                      std::string(what) + ", got '" + tok + "'");
  }
}

}  // namespace

Puzzle parse_puzzle(const std::string& text) {
  auto lines = tokenize_lines(text);
  size_t li = 0;
  while (li < lines.size() && lines[li].empty()) ++li;
  if (li >= lines.size()) throw FormatError("empty puzzle file");
  if (lines[li].size() != 3)
    throw FormatError("line " + std::to_string(li + 1) +
                      ": expected header 'm n k'");
  int m = parse_int(lines[li][0], static_cast<int>(li + 1), "row count");
  int n = parse_int(lines[li][1], static_cast<int>(li + 1), "column count");
  int k = parse_int(lines[li][2], static_cast<int>(li + 1), "pair count");
  ++li;

  std::map<Cell, int> terminals;
  for (int i = 1; i <= m; ++i, ++li) {
    while (li < lines.size() && lines[li].empty()) ++li;
    if (li >= lines.size())
      throw FormatError("grid row " + std::to_string(i) + " missing");
    const auto& toks = lines[li];
    if (static_cast<int>(toks.size()) != n)
      throw FormatError("line " + std::to_string(li + 1) + ": expected " +
                        std::to_string(n) + " tokens, got " +
                        std::to_string(toks.size()));
    for (int j = 1; j <= n; ++j) {
      const std::string& tok = toks[static_cast<size_t>(j - 1)];
      if (tok == ".") continue;
      int x = parse_int(tok, static_cast<int>(li + 1), "number or '.'");
      terminals[{i, j}] = x;
    }
  }
  return Puzzle(m, n, k, std::move(terminals));
}

std::string serialize_puzzle(const Puzzle& p) {
  std::ostringstream out;
  out << p.rows() << ' ' << p.cols() << ' ' << p.pairs() << '\n';
  for (int i = 1; i <= p.rows(); ++i) {
    for (int j = 1; j <= p.cols(); ++j) {
      if (j > 1) out << ' ';
      auto t = p.terminal_at({i, j});
      if (t)
        out << *t;
      else
        out << '.';
    }
    out << '\n';
  }
  return out.str();
}

Filling parse_filling(const std::string& text, const Puzzle& p) {
  auto lines = tokenize_lines(text);
  std::vector<int> values;
  size_t li = 0;
  for (int i = 1; i <= p.rows(); ++i, ++li) {
    while (li < lines.size() && lines[li].empty()) ++li;
    if (li >= lines.size())
      throw FormatError("filling row " + std::to_string(i) + " missing");
    const auto& toks = lines[li];
    if (static_cast<int>(toks.size()) != p.cols())
      throw FormatError("line " + std::to_string(li + 1) + ": expected " +
                        std::to_string(p.cols()) + " values");
    for (const std::string& tok : toks)
      values.push_back(parse_int(tok, static_cast<int>(li + 1), "a number"));
  }
  return Filling(p.rows(), p.cols(), std::move(values));
}

std::string serialize_filling(const Filling& f) {
  std::ostringstream out;
  for (int i = 1; i <= f.rows(); ++i) {
    for (int j = 1; j <= f.cols(); ++j) {
      if (j > 1) out << ' ';
      out << f.at({i, j});
    }
    out << '\n';
  }
  return out.str();
}

PathSet parse_paths(const std::string& text, const Puzzle& p) {
  auto lines = tokenize_lines(text);
  PathSet ps;
  size_t li = 0;
  for (int x = 1; x <= p.pairs(); ++x, ++li) {
    while (li < lines.size() && lines[li].empty()) ++li;
    if (li >= lines.size())
      throw FormatError("path for number " + std::to_string(x) + " missing");
    const auto& toks = lines[li];
    if (toks.size() % 2 != 0)
      throw FormatError("line " + std::to_string(li + 1) +
                        ": expected 'r c' pairs");
    Path path;
    for (size_t t = 0; t < toks.size(); t += 2) {
      int r = parse_int(toks[t], static_cast<int>(li + 1), "a row");
      int c = parse_int(toks[t + 1], static_cast<int>(li + 1), "a column");
      path.push_back({r, c});
    }
    ps.push_back(std::move(path));
  }
  return ps;
}

std::string serialize_paths(const PathSet& ps) {
  std::ostringstream out;
  for (const Path& path : ps) {
    for (size_t i = 0; i < path.size(); ++i) {
      if (i > 0) out << ' ';
      out << path[i].row << ' ' << path[i].col;
    }
    out << '\n';
  }
  return out.str();
}

// --- path machinery ------------------------------------------------------

void validate_paths(const Puzzle& p, const PathSet& ps) {
  if (static_cast<int>(ps.size()) != p.pairs())
    throw InstanceError("expected " + std::to_string(p.pairs()) + " paths");
  std::set<Cell> used;
  for (int x = 1; x <= p.pairs(); ++x) {
    const Path& path = ps[static_cast<size_t>(x - 1)];
    if (path.size() < 2)
      throw InstanceError("path " + std::to_string(x) + " too short");
    auto [s, t] = p.terminal_pair(x);
    Cell front = path.front(), back = path.back();
    if (!((front == s && back == t) || (front == t && back == s)))
      throw InstanceError("path " + std::to_string(x) +
                          " does not join its terminals");
    for (size_t i = 0; i < path.size(); ++i) {
      Cell c = path[i];
      if (!p.in_grid(c))
        throw InstanceError("path " + std::to_string(x) + " leaves the grid");
      if (i > 0 && !cells_adjacent(path[i - 1], c))
        throw InstanceError("path " + std::to_string(x) +
                            " has non-adjacent consecutive cells");
      if (i > 0 && i + 1 < path.size() && p.is_terminal(c))
        throw InstanceError("path " + std::to_string(x) +
                            " passes through a terminal cell");
      if (!used.insert(c).second)
        throw InstanceError("paths share " + cell_name(c));
    }
  }
}

bool path_is_simple(const Path& path) {
  for (size_t i = 0; i + 2 < path.size(); ++i)
    for (size_t j = i + 2; j < path.size(); ++j)
      if (cells_adjacent(path[i], path[j])) return false;
  return true;
}

PathSet simplify_paths(PathSet ps, const Puzzle&) {
  for (Path& path : ps) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; !changed && i + 2 < path.size(); ++i) {
        for (size_t j = path.size(); j-- > i + 2;) {
          if (cells_adjacent(path[i], path[j])) {
            path.erase(path.begin() + static_cast<long>(i + 1),
                       path.begin() + static_cast<long>(j));
            changed = true;
            break;
          }
        }
      }
    }
  }
  return ps;
}

Filling fill_from_solution(const Puzzle& p, const PathSet& ps, Variant v) {
  if (!is_grid_variant(v))
    throw VariantMismatchError("fill_from_solution needs a grid variant");
  validate_paths(p, ps);
  Filling f = Filling::constant(p.rows(), p.cols(), 0);
  for (int x = 1; x <= p.pairs(); ++x)
    for (Cell c : ps[static_cast<size_t>(x - 1)]) f.set(c, x);
  for (int i = 1; i <= p.rows(); ++i) {
    for (int j = 1; j <= p.cols(); ++j) {
      Cell c{i, j};
      if (f.at(c) != 0) continue;
      if (v == Variant::WellDesigned)
        throw VariantMismatchError(
            cell_name(c) +
            " is not covered; the well-designed variant requires full cover");
      f.set(c, (i + j) % 2 == 0 ? p.pairs() + 1 : p.pairs() + 2);
    }
  }
  return f;
}

std::optional<PathSet> extract_solution(const Puzzle& p, const Filling& f) {
  PathSet out;
  for (int x = 1; x <= p.pairs(); ++x) {
    auto [start, goal] = p.terminal_pair(x);
    Path path{start};
    std::set<Cell> visited{start};
    Cell current = start;
    Cell previous{0, 0};
    bool done = false;
    int steps = 0;
    const int step_limit = p.rows() * p.cols() + 1;
    while (!done) {
      if (++steps > step_limit) return std::nullopt;
      std::vector<Cell> same;
      for (Cell nb : p.neighbors(current))
        if (f.at(nb) == x) same.push_back(nb);
      Cell next{0, 0};
      if (current == start) {
        if (same.size() != 1) return std::nullopt;
        next = same[0];
      } else {
        // interior cells need exactly two matches, one being where we came from
        if (same.size() != 2) return std::nullopt;
        if (same[0] != previous && same[1] != previous) return std::nullopt;
        next = same[0] == previous ? same[1] : same[0];
      }
      if (visited.count(next)) return std::nullopt;
      visited.insert(next);
      path.push_back(next);
      if (p.is_terminal(next)) {
        if (next != goal) return std::nullopt;
        done = true;
      } else {
        previous = current;
        current = next;
      }
    }
    out.push_back(std::move(path));
  }
  // distinct numbers cannot collide, but guard against shared cells anyway
  try {
    validate_paths(p, out);
  } catch (const InstanceError&) {
    return std::nullopt;
  }
  return out;
}

PathSet normalize_paths(PathSet ps) {
  for (Path& path : ps)
    if (!path.empty() && path.back() < path.front())
      std::reverse(path.begin(), path.end());
  return ps;
}

int encoding_width(const Puzzle& p, Variant v) {
  if (v == Variant::WellDesigned) return p.pairs();
  if (v == Variant::General) return p.pairs() + 2;
  throw VariantMismatchError("grid width asked for a graph variant");
}

void validate_filling(const Puzzle& p, const Filling& f, Variant v) {
  if (f.rows() != p.rows() || f.cols() != p.cols())
    throw InstanceError("filling dimensions do not match the puzzle");
  int width = encoding_width(p, v);
  for (int i = 1; i <= p.rows(); ++i) {
    for (int j = 1; j <= p.cols(); ++j) {
      Cell c{i, j};
      int value = f.at(c);
      if (value < 1 || value > width)
        throw RangeError(cell_name(c) + " holds " + std::to_string(value) +
                         ", outside 1.." + std::to_string(width));
      auto t = p.terminal_at(c);
      if (t && *t != value)
        throw InstanceError(cell_name(c) + " must hold its terminal number " +
                            std::to_string(*t));
    }
  }
}

}  // namespace cardzk
