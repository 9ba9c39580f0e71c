#include "cardzk/oracle.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

namespace cardzk {

// --- local acceptance predicates -----------------------------------------

bool local_accept_numberlink(const Puzzle& p, const Filling& f, Variant v) {
  validate_filling(p, f, v);
  bool general = v == Variant::General;
  for (int i = 1; i <= p.rows(); ++i) {
    for (int j = 1; j <= p.cols(); ++j) {
      Cell c{i, j};
      int value = f.at(c);
      int matches = 0;
      for (Cell nb : p.neighbors(c))
        if (f.at(nb) == value) ++matches;
      if (p.is_terminal(c)) {
        if (matches != 1) return false;
      } else {
        int bonus = 0;
        if (general) {
          int filler = (i + j) % 2 == 0 ? p.pairs() + 1 : p.pairs() + 2;
          if (value == filler) bonus = 2;
        }
        if (matches + bonus != 2) return false;
      }
    }
  }
  return true;
}

bool local_accept_ukdpp(const DppInstance& g, const Labeling& l,
                        const Coloring& c) {
  if (g.directed())
    throw VariantMismatchError("ukdpp predicate needs an undirected instance");
  validate_labeling(g, l);
  validate_coloring(g, c);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    int value = l.of(v);
    int matches = 0;
    for (int nb : g.neighbors(v))
      if (l.of(nb) == value) ++matches;
    if (g.is_terminal(v)) {
      if (matches != 1) return false;
    } else {
      int bonus = value == g.pairs() + c.of(v) ? 2 : 0;
      if (matches + bonus != 2) return false;
    }
  }
  return true;
}

bool local_accept_dkdpp(const DppInstance& g, const Labeling& l,
                        const Coloring& c) {
  if (!g.directed())
    throw VariantMismatchError("dkdpp predicate needs a directed instance");
  validate_labeling(g, l);
  validate_coloring(g, c);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    int value = l.of(v);
    int in_matches = 0, out_matches = 0;
    for (int nb : g.in_neighbors(v))
      if (l.of(nb) == value) ++in_matches;
    for (int nb : g.out_neighbors(v))
      if (l.of(nb) == value) ++out_matches;
    if (g.is_source(v)) {
      if (in_matches != 0 || out_matches != 1) return false;
    } else if (g.is_sink(v)) {
      if (in_matches != 1 || out_matches != 0) return false;
    } else {
      int bonus = value == g.pairs() + c.of(v) ? 1 : 0;
      if (in_matches + bonus != 1 || out_matches + bonus != 1) return false;
    }
  }
  return true;
}

// --- brute-force solvers ---------------------------------------------------

namespace {

class NumberlinkSearch {
 public:
  NumberlinkSearch(const Puzzle& p, bool require_cover)
      : p_(p),
        require_cover_(require_cover),
        used_(static_cast<size_t>(p.rows() * p.cols()), false) {}

  std::vector<PathSet> run() {
    route_pair(1);
    return std::move(results_);
  }

 private:
  size_t idx(Cell c) const {
    return static_cast<size_t>((c.row - 1) * p_.cols() + (c.col - 1));
  }

  bool reachable(Cell from, Cell to) const {
    if (from == to) return true;
    std::vector<bool> seen(used_.size(), false);
    std::queue<Cell> queue;
    queue.push(from);
    seen[idx(from)] = true;
    while (!queue.empty()) {
      Cell c = queue.front();
      queue.pop();
      for (Cell nb : p_.neighbors(c)) {
        if (nb == to) return true;
        if (seen[idx(nb)] || used_[idx(nb)] || p_.is_terminal(nb)) continue;
        seen[idx(nb)] = true;
        queue.push(nb);
      }
    }
    return false;
  }

  bool viable(int routing_pair, Cell head, Cell target) const {
    if (!reachable(head, target)) return false;
    for (int x = routing_pair + 1; x <= p_.pairs(); ++x) {
      auto [s, t] = p_.terminal_pair(x);
      if (!reachable(s, t)) return false;
    }
    if (require_cover_ && has_dead_cell(routing_pair, head)) return false;
    return true;
  }

  // A free cell with no free neighbor can only be covered through the
  // current head or by a path leaving a still-unrouted terminal.
  bool has_dead_cell(int routing_pair, Cell head) const {
    for (int i = 1; i <= p_.rows(); ++i) {
      for (int j = 1; j <= p_.cols(); ++j) {
        Cell c{i, j};
        if (used_[idx(c)] || p_.is_terminal(c)) continue;
        bool escapable = false;
        for (Cell nb : p_.neighbors(c)) {
          if (nb == head) {
            escapable = true;
          } else if (!used_[idx(nb)] && !p_.is_terminal(nb)) {
            escapable = true;
          } else if (p_.is_terminal(nb)) {
            auto x = p_.terminal_at(nb);
            if (*x > routing_pair) escapable = true;  // pair not routed yet
          }
          if (escapable) break;
        }
        if (!escapable) return true;
      }
    }
    return false;
  }

  void route_pair(int x) {
    if (x > p_.pairs()) {
      if (require_cover_ &&
          std::find(used_.begin(), used_.end(), false) != used_.end())
        return;
      results_.push_back(current_);
      return;
    }
    auto [s, t] = p_.terminal_pair(x);
    used_[idx(s)] = true;
    current_.push_back({s});
    extend(x, s, t);
    current_.pop_back();
    used_[idx(s)] = false;
  }

  void extend(int x, Cell head, Cell target) {
    if (!viable(x, head, target)) return;
    for (Cell nb : p_.neighbors(head)) {
      if (nb == target) {
        used_[idx(nb)] = true;
        current_.back().push_back(nb);
        route_pair(x + 1);
        current_.back().pop_back();
        used_[idx(nb)] = false;
        continue;
      }
      if (used_[idx(nb)] || p_.is_terminal(nb)) continue;
      used_[idx(nb)] = true;
      current_.back().push_back(nb);
      extend(x, nb, target);
      current_.back().pop_back();
      used_[idx(nb)] = false;
    }
  }

  const Puzzle& p_;
  bool require_cover_;
  std::vector<bool> used_;
  PathSet current_;
  std::vector<PathSet> results_;
};

}  // namespace

std::vector<PathSet> brute_force_numberlink(const Puzzle& p,
                                            bool require_cover,
                                            bool allow_large) {
  if (p.rows() * p.cols() > 20 && !allow_large)
    throw SizeGuardError(
        "grid has more than 20 cells; pass the override to search anyway");
  return NumberlinkSearch(p, require_cover).run();
}

namespace {

class DppSearch {
 public:
  explicit DppSearch(const DppInstance& g)
      : g_(g), used_(static_cast<size_t>(g.vertex_count()) + 1, false) {}

  std::vector<VertexPathSet> run() {
    route_pair(1);
    return std::move(results_);
  }

 private:
  void route_pair(int x) {
    if (x > g_.pairs()) {
      results_.push_back(current_);
      return;
    }
    auto [s, t] = g_.terminal_pairs()[static_cast<size_t>(x - 1)];
    used_[static_cast<size_t>(s)] = true;
    current_.push_back({s});
    extend(x, s, t);
    current_.pop_back();
    used_[static_cast<size_t>(s)] = false;
  }

  void extend(int x, int head, int target) {
    const auto& nbs =
        g_.directed() ? g_.out_neighbors(head) : g_.neighbors(head);
    for (int nb : nbs) {
      if (nb == target) {
        used_[static_cast<size_t>(nb)] = true;
        current_.back().push_back(nb);
        route_pair(x + 1);
        current_.back().pop_back();
        used_[static_cast<size_t>(nb)] = false;
        continue;
      }
      if (used_[static_cast<size_t>(nb)] || g_.is_terminal(nb)) continue;
      used_[static_cast<size_t>(nb)] = true;
      current_.back().push_back(nb);
      extend(x, nb, target);
      current_.back().pop_back();
      used_[static_cast<size_t>(nb)] = false;
    }
  }

  const DppInstance& g_;
  std::vector<bool> used_;
  VertexPathSet current_;
  std::vector<VertexPathSet> results_;
};

}  // namespace

std::vector<VertexPathSet> brute_force_dpp(const DppInstance& g,
                                           bool allow_large) {
  if (g.vertex_count() > 10 && !allow_large)
    throw SizeGuardError(
        "graph has more than 10 vertices; pass the override to search anyway");
  return DppSearch(g).run();
}

// --- public view and transcript simulator ---------------------------------

PublicBoard public_view(const BoardSpec& spec) {
  PublicBoard board;
  board.width = spec.width;
  board.slot_names = spec.slot_names;
  board.checks = spec.checks;
  board.public_values.assign(spec.slot_values.size(), 0);
  for (size_t s = 0; s < spec.slot_values.size(); ++s)
    if (spec.slot_public[s]) board.public_values[s] = spec.slot_values[s];
  return board;
}

PublicBoard numberlink_public_board(const Puzzle& p, Variant v) {
  Filling f = Filling::constant(p.rows(), p.cols(), 1);
  for (const auto& [cell, x] : p.terminals()) f.set(cell, x);
  return public_view(numberlink_board(p, f, v));
}

namespace {

Labeling placeholder_labeling(const DppInstance& g) {
  Labeling l;
  l.value.assign(static_cast<size_t>(g.vertex_count()), 1);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    auto t = g.terminal_number(v);
    if (t) l.set(v, *t);
  }
  return l;
}

}  // namespace

PublicBoard ukdpp_public_board(const DppInstance& g, const Coloring& c) {
  return public_view(ukdpp_board(g, placeholder_labeling(g), c));
}

PublicBoard dkdpp_public_board(const DppInstance& g, const Coloring& c) {
  return public_view(dkdpp_board(g, placeholder_labeling(g), c));
}

namespace {

std::vector<std::string> heart_pattern(int width, int heart_at) {
  std::vector<std::string> faces(static_cast<size_t>(width), "club");
  if (heart_at >= 1) faces[static_cast<size_t>(heart_at - 1)] = "heart";
  return faces;
}

}  // namespace

Transcript simulate_transcript(const PublicBoard& board, Rng& rng) {
  Transcript t;
  for (size_t s = 0; s < board.slot_names.size(); ++s) {
    if (board.public_values[s] != 0)
      t.place(board.slot_names[s],
              heart_pattern(board.width, board.public_values[s]));
    else
      t.place(board.slot_names[s]);
  }
  for (const CheckPlan& plan : board.checks) {
    int a = plan.matrix_rows();
    if (plan.expected_hearts > a - 1)
      throw InstanceError("check at " + plan.location +
                          " can never pass; nothing to simulate");
    t.place("matrix " + plan.location, {}, plan.group());
    for (int i = 0; i < plan.filler_rows; ++i)
      t.place("supply", heart_pattern(plan.width, plan.filler_value));

    t.shuffle("matrix " + plan.location, "double-scramble");
    int j = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(plan.width)));
    t.reveal("matrix row 1", heart_pattern(plan.width, j));

    std::vector<int> rows = random_subset(2, a, plan.expected_hearts, rng);
    std::vector<std::string> column(static_cast<size_t>(a - 1), "club");
    for (int r : rows) column[static_cast<size_t>(r - 2)] = "heart";
    t.reveal("matrix column " + std::to_string(j), column);

    t.shuffle("matrix " + plan.location, "double-scramble");
    std::vector<std::string> col0, row0;
    for (int v : random_permutation(2, a, rng)) col0.push_back(std::to_string(v));
    for (int v : random_permutation(1, plan.width, rng))
      row0.push_back(std::to_string(v));
    t.reveal("matrix column 0", col0);
    t.reveal("matrix row 0", row0);
  }
  t.decide(true);
  return t;
}

// --- transcript observables ------------------------------------------------

namespace {

int parse_face_int(const std::string& face) {
  return std::stoi(face);
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

}  // namespace

std::vector<CheckObservables> extract_observables(const Transcript& t) {
  std::vector<CheckObservables> out;
  for (const Event& e : t.events()) {
    if (e.kind == Event::Kind::Place && starts_with(e.note, "check ")) {
      CheckObservables obs;
      obs.location = starts_with(e.location, "matrix ")
                         ? e.location.substr(7)
                         : e.location;
      obs.group = e.note;
      out.push_back(std::move(obs));
      continue;
    }
    if (e.kind != Event::Kind::Reveal || out.empty()) continue;
    CheckObservables& obs = out.back();
    if (e.location == "matrix row 1") {
      for (size_t i = 0; i < e.faces.size(); ++i)
        if (e.faces[i] == "heart") obs.j = static_cast<int>(i) + 1;
    } else if (e.location == "matrix column 0") {
      for (const std::string& f : e.faces)
        obs.p.push_back(parse_face_int(f));
    } else if (e.location == "matrix row 0") {
      for (const std::string& f : e.faces)
        obs.q.push_back(parse_face_int(f));
      obs.completed = true;
    } else if (starts_with(e.location, "matrix column ")) {
      for (size_t i = 0; i < e.faces.size(); ++i)
        if (e.faces[i] == "heart")
          obs.heart_rows.push_back(static_cast<int>(i) + 2);
    }
  }
  return out;
}

namespace {

std::string join_ints(const std::vector<int>& values) {
  std::ostringstream out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ',';
    out << values[i];
  }
  return out.str();
}

}  // namespace

void ObservableHistograms::add(const Transcript& t) {
  for (const CheckObservables& obs : extract_observables(t)) {
    ++reveal[obs.group]["j=" + std::to_string(obs.j) +
                        " rows=" + join_ints(obs.heart_rows)];
    if (obs.completed) {
      ++row_perm[obs.group][join_ints(obs.p)];
      ++col_perm[obs.group][join_ints(obs.q)];
    }
  }
}

// --- distribution comparison -----------------------------------------------

ComparisonReport compare_distributions(const Histogram& a, const Histogram& b,
                                       double significance) {
  ComparisonReport report;
  for (const auto& [key, count] : a) report.n_a += count;
  for (const auto& [key, count] : b) report.n_b += count;

  std::set<std::string> keys;
  for (const auto& [key, count] : a) keys.insert(key);
  for (const auto& [key, count] : b) keys.insert(key);
  report.support_equal = true;
  for (const std::string& key : keys) {
    bool in_a = a.count(key) != 0 && a.at(key) > 0;
    bool in_b = b.count(key) != 0 && b.at(key) > 0;
    if (in_a != in_b) report.support_equal = false;
  }

  long long total = report.n_a + report.n_b;
  if (total == 0 || report.n_a == 0 || report.n_b == 0 || keys.size() < 2) {
    report.consistent = true;
    return report;
  }

  double stat = 0.0;
  for (const std::string& key : keys) {
    double col = static_cast<double>((a.count(key) ? a.at(key) : 0) +
                                     (b.count(key) ? b.at(key) : 0));
    for (int side = 0; side < 2; ++side) {
      const Histogram& h = side == 0 ? a : b;
      double n = static_cast<double>(side == 0 ? report.n_a : report.n_b);
      double expected = col * n / static_cast<double>(total);
      double observed = static_cast<double>(h.count(key) ? h.at(key) : 0);
      stat += (observed - expected) * (observed - expected) / expected;
    }
  }
  report.statistic = stat;
  report.dof = static_cast<long>(keys.size()) - 1;
  report.p_value =
      boost::math::gamma_q(static_cast<double>(report.dof) / 2.0, stat / 2.0);
  report.consistent = report.p_value >= significance;
  return report;
}

// --- exact shuffle enumeration ----------------------------------------------

Histogram enumerate_reveal_distribution(const std::vector<int>& row_values,
                                        int width) {
  int a = static_cast<int>(row_values.size());
  if (a < 1) throw DimensionError("need at least Row 1");
  std::vector<int> p(static_cast<size_t>(std::max(0, a - 1)));
  for (int i = 0; i < a - 1; ++i) p[static_cast<size_t>(i)] = i + 2;
  Histogram hist;
  do {
    std::vector<int> q(static_cast<size_t>(width));
    for (int i = 0; i < width; ++i) q[static_cast<size_t>(i)] = i + 1;
    do {
      UidSource uids;
      Sequence row1 = encode(row_values[0], width, uids);
      std::vector<Sequence> others;
      for (int i = 1; i < a; ++i)
        others.push_back(encode(row_values[static_cast<size_t>(i)], width, uids));
      ProofMatrix m = build_matrix(std::move(row1), std::move(others), width, uids);
      ScriptedPermutationSource script;
      script.push(p);
      script.push(q);
      m.double_scramble(script);
      int j = m.reveal_row1();
      ColumnReveal col = m.reveal_column_others(j);
      ++hist["j=" + std::to_string(j) + " rows=" + join_ints(col.heart_rows)];
    } while (std::next_permutation(q.begin(), q.end()));
  } while (std::next_permutation(p.begin(), p.end()));
  return hist;
}

bool reveals_exactly_uniform(const std::vector<int>& row_values, int width) {
  Histogram hist = enumerate_reveal_distribution(row_values, width);
  int a = static_cast<int>(row_values.size());
  int c = 0;
  for (int i = 1; i < a; ++i)
    if (row_values[static_cast<size_t>(i)] == row_values[0]) ++c;
  long long subsets = 1;
  for (int i = 0; i < c; ++i)
    subsets = subsets * (a - 1 - i) / (i + 1);
  long long support = static_cast<long long>(width) * subsets;
  long long total = 0;
  for (const auto& [key, count] : hist) total += count;
  if (static_cast<long long>(hist.size()) != support) return false;
  if (total % support != 0) return false;
  long long each = total / support;
  for (const auto& [key, count] : hist)
    if (count != each) return false;
  return true;
}

// --- transcript hygiene ------------------------------------------------------

HygieneReport scan_transcript(const Transcript& t,
                              const std::set<std::string>& allowed) {
  HygieneReport report;
  auto flag = [&](const std::string& note) {
    ++report.violations;
    if (report.notes.size() < 20) report.notes.push_back(note);
  };
  size_t decisions = 0;
  bool in_check = false;
  for (const Event& e : t.events()) {
    switch (e.kind) {
      case Event::Kind::Place:
        if (starts_with(e.note, "check ")) in_check = true;
        if (!e.faces.empty() && allowed.count(e.location) == 0)
          flag("faces shown while placing at secret location '" + e.location +
               "'");
        break;
      case Event::Kind::Reveal:
        if (!starts_with(e.location, "matrix "))
          flag("reveal outside the matrix at '" + e.location + "'");
        else if (!in_check)
          flag("reveal before any check started");
        break;
      case Event::Kind::Shuffle:
        if (!e.faces.empty()) flag("shuffle event carries faces");
        break;
      case Event::Kind::Decision:
        ++decisions;
        break;
    }
  }
  if (decisions != 1) flag("expected exactly one decision event");
  if (!t.events().empty() &&
      t.events().back().kind != Event::Kind::Decision)
    flag("decision is not the last event");
  return report;
}

std::set<std::string> public_locations(const PublicBoard& board) {
  std::set<std::string> allowed{"supply"};
  for (size_t s = 0; s < board.slot_names.size(); ++s)
    if (board.public_values[s] != 0) allowed.insert(board.slot_names[s]);
  return allowed;
}

// --- instance generators -----------------------------------------------------

GeneratedPuzzle gen_numberlink(int m, int n, int k, Rng& rng) {
  if (m < 1 || n < 1 || k < 1 || m * n < 2 * k)
    throw InstanceError("grid too small for " + std::to_string(k) + " pairs");
  const int max_attempts = 500;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<bool> used(static_cast<size_t>(m * n), false);
    auto idx = [&](Cell c) {
      return static_cast<size_t>((c.row - 1) * n + (c.col - 1));
    };
    PathSet paths;
    bool failed = false;
    for (int x = 1; x <= k && !failed; ++x) {
      std::vector<Cell> free_cells;
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
          if (!used[idx({i, j})]) free_cells.push_back({i, j});
      if (free_cells.size() < 2) {
        failed = true;
        break;
      }
      Cell start = free_cells[rng.below(free_cells.size())];
      used[idx(start)] = true;
      Path path{start};
      int want = 2 + static_cast<int>(rng.below(
                         static_cast<uint64_t>(std::max(1, m * n / k - 1))));
      Cell head = start;
      while (static_cast<int>(path.size()) < want) {
        std::vector<Cell> options;
        for (Cell nb : {Cell{head.row - 1, head.col}, Cell{head.row + 1, head.col},
                        Cell{head.row, head.col - 1}, Cell{head.row, head.col + 1}})
          if (nb.row >= 1 && nb.row <= m && nb.col >= 1 && nb.col <= n &&
              !used[idx(nb)])
            options.push_back(nb);
        if (options.empty()) break;
        head = options[rng.below(options.size())];
        used[idx(head)] = true;
        path.push_back(head);
      }
      if (path.size() < 2) {
        failed = true;
        break;
      }
      paths.push_back(std::move(path));
    }
    if (failed) continue;
    std::map<Cell, int> terminals;
    for (int x = 1; x <= k; ++x) {
      terminals[paths[static_cast<size_t>(x - 1)].front()] = x;
      terminals[paths[static_cast<size_t>(x - 1)].back()] = x;
    }
    Puzzle puzzle(m, n, k, std::move(terminals));
    validate_paths(puzzle, paths);
    return {std::move(puzzle), std::move(paths)};
  }
  throw InstanceError("could not place " + std::to_string(k) +
                      " disjoint paths on the grid");
}

GeneratedPuzzle gen_numberlink_covered(int m, int n, Rng& rng) {
  bool by_columns;
  if (m >= 2 && n >= 2)
    by_columns = rng.below(2) == 0;
  else if (m >= 2)
    by_columns = true;
  else if (n >= 2)
    by_columns = false;
  else
    throw InstanceError("cannot cover a single cell with paths");

  PathSet paths;
  int lines = by_columns ? n : m;
  int len = by_columns ? m : n;
  for (int line = 1; line <= lines; ++line) {
    int at = 1;
    while (at <= len) {
      int remaining = len - at + 1;
      int part = 2 + static_cast<int>(rng.below(
                         static_cast<uint64_t>(std::min(remaining - 2, 2)) + 1));
      if (remaining - part == 1) ++part;
      Path path;
      for (int off = 0; off < part; ++off)
        path.push_back(by_columns ? Cell{at + off, line}
                                  : Cell{line, at + off});
      paths.push_back(std::move(path));
      at += part;
    }
  }
  int k = static_cast<int>(paths.size());
  std::map<Cell, int> terminals;
  for (int x = 1; x <= k; ++x) {
    terminals[paths[static_cast<size_t>(x - 1)].front()] = x;
    terminals[paths[static_cast<size_t>(x - 1)].back()] = x;
  }
  Puzzle puzzle(m, n, k, std::move(terminals));
  validate_paths(puzzle, paths);
  return {std::move(puzzle), std::move(paths)};
}

GeneratedDpp gen_dpp(bool directed, int vertices, int k, int extra_edges,
                     Rng& rng) {
  if (vertices < 2 * k || k < 1)
    throw InstanceError("graph too small for " + std::to_string(k) + " pairs");
  const int max_attempts = 200;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<int> order = random_permutation(1, vertices, rng);
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> path_of(static_cast<size_t>(vertices) + 1, 0);
    std::vector<int> pos_of(static_cast<size_t>(vertices) + 1, 0);
    VertexPathSet paths;
    size_t cursor = 0;
    bool failed = false;
    for (int x = 1; x <= k; ++x) {
      int remaining = vertices - static_cast<int>(cursor);
      int reserve = 2 * (k - x);
      int longest = std::min(remaining - reserve, 5);
      if (longest < 2) {
        failed = true;
        break;
      }
      int len = 2 + static_cast<int>(
                        rng.below(static_cast<uint64_t>(longest - 1)));
      VertexPath path;
      for (int i = 0; i < len; ++i) {
        int v = order[cursor++];
        path.push_back(v);
        path_of[static_cast<size_t>(v)] = x;
        pos_of[static_cast<size_t>(v)] = i;
        if (i > 0) edges.emplace_back(path[static_cast<size_t>(i - 1)], v);
      }
      pairs.emplace_back(path.front(), path.back());
      paths.push_back(std::move(path));
    }
    if (failed) continue;

    auto edge_present = [&](int u, int v) {
      for (auto [a, b] : edges) {
        if (a == u && b == v) return true;
        if (!directed && a == v && b == u) return true;
        if (directed && a == v && b == u) return true;  // no anti-parallel arcs
      }
      return false;
    };
    for (int e = 0; e < extra_edges; ++e) {
      int u = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(vertices)));
      int v = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(vertices)));
      if (u == v || edge_present(u, v)) continue;
      if (directed && path_of[static_cast<size_t>(u)] != 0 &&
          path_of[static_cast<size_t>(u)] == path_of[static_cast<size_t>(v)] &&
          pos_of[static_cast<size_t>(u)] > pos_of[static_cast<size_t>(v)])
        continue;  // a backward chord would break the directed checks
      edges.emplace_back(u, v);
    }
    DppInstance instance(directed, vertices, std::move(edges),
                         std::move(pairs));
    validate_graph_paths(instance, paths);
    return {std::move(instance), std::move(paths)};
  }
  throw InstanceError("could not plant " + std::to_string(k) +
                      " disjoint paths in the graph");
}

}  // namespace cardzk
