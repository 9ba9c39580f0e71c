#include "cardzk/dpp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cardzk {

DppInstance::DppInstance(bool directed, int vertices,
                         std::vector<std::pair<int, int>> edges,
                         std::vector<std::pair<int, int>> terminal_pairs)
    : directed_(directed),
      vertices_(vertices),
      edges_(std::move(edges)),
      terminal_pairs_(std::move(terminal_pairs)) {
  if (vertices_ < 1) throw InstanceError("graph needs at least one vertex");
  adj_.assign(static_cast<size_t>(vertices_), {});
  in_.assign(static_cast<size_t>(vertices_), {});
  out_.assign(static_cast<size_t>(vertices_), {});
  terminal_of_.assign(static_cast<size_t>(vertices_), 0);

  auto check_vertex = [&](int v) {
    if (v < 1 || v > vertices_)
      throw InstanceError("vertex " + std::to_string(v) + " outside 1.." +
                          std::to_string(vertices_));
  };

  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges_) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InstanceError("self-loop at vertex " + std::to_string(u));
    if (!directed_ && u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw InstanceError("duplicate edge " + std::to_string(u) + " " +
                          std::to_string(v));
    if (directed_ && seen.count({v, u}))
      throw InstanceError("anti-parallel arcs between " + std::to_string(u) +
                          " and " + std::to_string(v) + " are not supported");
    adj_[static_cast<size_t>(u - 1)].push_back(v);
    adj_[static_cast<size_t>(v - 1)].push_back(u);
    if (directed_) {
      out_[static_cast<size_t>(u - 1)].push_back(v);
      in_[static_cast<size_t>(v - 1)].push_back(u);
    }
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
  for (auto& list : in_) std::sort(list.begin(), list.end());
  for (auto& list : out_) std::sort(list.begin(), list.end());

  for (int v = 1; v <= vertices_; ++v)
    max_degree_ = std::max(
        max_degree_, static_cast<int>(adj_[static_cast<size_t>(v - 1)].size()));

  int x = 0;
  for (auto [s, t] : terminal_pairs_) {
    ++x;
    check_vertex(s);
    check_vertex(t);
    if (s == t)
      throw InstanceError("pair " + std::to_string(x) +
                          " has identical endpoints");
    for (int v : {s, t}) {
      if (terminal_of_[static_cast<size_t>(v - 1)] != 0)
        throw InstanceError("vertex " + std::to_string(v) +
                            " is a terminal of two pairs");
      terminal_of_[static_cast<size_t>(v - 1)] = x;
    }
  }
}

bool DppInstance::has_edge(int u, int v) const {
  const auto& list = adj_[static_cast<size_t>(u - 1)];
  return std::binary_search(list.begin(), list.end(), v);
}

bool DppInstance::has_arc(int u, int v) const {
  if (!directed_) return has_edge(u, v);
  const auto& list = out_[static_cast<size_t>(u - 1)];
  return std::binary_search(list.begin(), list.end(), v);
}

const std::vector<int>& DppInstance::neighbors(int v) const {
  return adj_[static_cast<size_t>(v - 1)];
}

const std::vector<int>& DppInstance::in_neighbors(int v) const {
  return in_[static_cast<size_t>(v - 1)];
}

const std::vector<int>& DppInstance::out_neighbors(int v) const {
  return out_[static_cast<size_t>(v - 1)];
}

std::optional<int> DppInstance::terminal_number(int v) const {
  int x = terminal_of_[static_cast<size_t>(v - 1)];
  if (x == 0) return std::nullopt;
  return x;
}

bool DppInstance::is_source(int v) const {
  auto x = terminal_number(v);
  return x && terminal_pairs_[static_cast<size_t>(*x - 1)].first == v;
}

bool DppInstance::is_sink(int v) const {
  auto x = terminal_number(v);
  return x && terminal_pairs_[static_cast<size_t>(*x - 1)].second == v;
}

Coloring greedy_coloring(const DppInstance& g) {
  Coloring c;
  c.color.assign(static_cast<size_t>(g.vertex_count()), 0);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    std::set<int> taken;
    for (int nb : g.neighbors(v))
      if (nb < v) taken.insert(c.of(nb));
    int color = 1;
    while (taken.count(color)) ++color;
    c.color[static_cast<size_t>(v - 1)] = color;
  }
  return c;
}

void validate_coloring(const DppInstance& g, const Coloring& c) {
  if (static_cast<int>(c.color.size()) != g.vertex_count())
    throw InstanceError("coloring size does not match the graph");
  int limit = g.max_degree() + 1;
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (c.of(v) < 1 || c.of(v) > limit)
      throw InstanceError("color of vertex " + std::to_string(v) +
                          " outside 1.." + std::to_string(limit));
  for (auto [u, v] : g.edges())
    if (c.of(u) == c.of(v))
      throw InstanceError("edge " + std::to_string(u) + " " +
                          std::to_string(v) + " joins equal colors");
}

bool graph_path_is_simple(const DppInstance& g, const VertexPath& path) {
  for (size_t i = 0; i + 2 < path.size(); ++i)
    for (size_t j = i + 2; j < path.size(); ++j)
      if (g.has_edge(path[i], path[j])) return false;
  return true;
}

VertexPathSet simplify_graph_paths(VertexPathSet paths, const DppInstance& g) {
  for (VertexPath& path : paths) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; !changed && i + 2 < path.size(); ++i) {
        for (size_t j = path.size(); j-- > i + 2;) {
          if (g.has_arc(path[i], path[j])) {
            path.erase(path.begin() + static_cast<long>(i + 1),
                       path.begin() + static_cast<long>(j));
            changed = true;
            break;
          }
        }
      }
    }
  }
  return paths;
}

void validate_graph_paths(const DppInstance& g, const VertexPathSet& paths) {
  if (static_cast<int>(paths.size()) != g.pairs())
    throw InstanceError("expected " + std::to_string(g.pairs()) + " paths");
  std::set<int> used;
  for (int x = 1; x <= g.pairs(); ++x) {
    const VertexPath& path = paths[static_cast<size_t>(x - 1)];
    auto [s, t] = g.terminal_pairs()[static_cast<size_t>(x - 1)];
    if (path.size() < 2)
      throw InstanceError("path " + std::to_string(x) + " too short");
    bool ok = g.directed() ? (path.front() == s && path.back() == t)
                           : ((path.front() == s && path.back() == t) ||
                              (path.front() == t && path.back() == s));
    if (!ok)
      throw InstanceError("path " + std::to_string(x) +
                          " does not join its terminals");
    for (size_t i = 0; i < path.size(); ++i) {
      int v = path[i];
      if (v < 1 || v > g.vertex_count())
        throw InstanceError("path " + std::to_string(x) + " leaves the graph");
      if (i > 0 && !g.has_arc(path[i - 1], v))
        throw InstanceError("path " + std::to_string(x) +
                            " uses a missing edge");
      if (i > 0 && i + 1 < path.size() && g.is_terminal(v))
        throw InstanceError("path " + std::to_string(x) +
                            " passes through a terminal vertex");
      if (!used.insert(v).second)
        throw InstanceError("paths share vertex " + std::to_string(v));
    }
  }
}

Labeling fill_from_paths_graph(const DppInstance& g,
                               const VertexPathSet& paths, const Coloring& c) {
  validate_graph_paths(g, paths);
  validate_coloring(g, c);
  Labeling l;
  l.value.assign(static_cast<size_t>(g.vertex_count()), 0);
  for (int x = 1; x <= g.pairs(); ++x)
    for (int v : paths[static_cast<size_t>(x - 1)]) l.set(v, x);
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (l.of(v) == 0) l.set(v, g.pairs() + c.of(v));
  return l;
}

std::optional<VertexPathSet> extract_graph_paths(const DppInstance& g,
                                                 const Labeling& l) {
  VertexPathSet out;
  for (int x = 1; x <= g.pairs(); ++x) {
    auto [start, goal] = g.terminal_pairs()[static_cast<size_t>(x - 1)];
    VertexPath path{start};
    std::set<int> visited{start};
    int current = start;
    int previous = 0;
    bool done = false;
    int steps = 0;
    while (!done) {
      if (++steps > g.vertex_count() + 1) return std::nullopt;
      int next = 0;
      if (g.directed()) {
        std::vector<int> out_same;
        for (int nb : g.out_neighbors(current))
          if (l.of(nb) == x) out_same.push_back(nb);
        if (out_same.size() != 1) return std::nullopt;
        if (current != start) {
          std::vector<int> in_same;
          for (int nb : g.in_neighbors(current))
            if (l.of(nb) == x) in_same.push_back(nb);
          if (in_same.size() != 1 || in_same[0] != previous)
            return std::nullopt;
        }
        next = out_same[0];
      } else {
        std::vector<int> same;
        for (int nb : g.neighbors(current))
          if (l.of(nb) == x) same.push_back(nb);
        if (current == start) {
          if (same.size() != 1) return std::nullopt;
          next = same[0];
        } else {
          if (same.size() != 2) return std::nullopt;
          if (same[0] != previous && same[1] != previous) return std::nullopt;
          next = same[0] == previous ? same[1] : same[0];
        }
      }
      if (visited.count(next)) return std::nullopt;
      visited.insert(next);
      path.push_back(next);
      if (g.is_terminal(next)) {
        if (next != goal) return std::nullopt;
        done = true;
      } else {
        previous = current;
        current = next;
      }
    }
    out.push_back(std::move(path));
  }
  try {
    validate_graph_paths(g, out);
  } catch (const InstanceError&) {
    return std::nullopt;
  }
  return out;
}

int encoding_width(const DppInstance& g) {
  return g.pairs() + g.max_degree() + 1;
}

void validate_labeling(const DppInstance& g, const Labeling& l) {
  if (static_cast<int>(l.value.size()) != g.vertex_count())
    throw InstanceError("labeling size does not match the graph");
  int width = encoding_width(g);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    int value = l.of(v);
    if (value < 1 || value > width)
      throw RangeError("vertex " + std::to_string(v) + " holds " +
                       std::to_string(value) + ", outside 1.." +
                       std::to_string(width));
    auto t = g.terminal_number(v);
    if (t && *t != value)
      throw InstanceError("vertex " + std::to_string(v) +
                          " must hold its terminal number " +
                          std::to_string(*t));
  }
}

// --- text formats -------------------------------------------------------

namespace {

std::vector<std::string> tokenize(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

int to_int(const std::string& tok, const char* what) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw FormatError("expected " + std::string(what) + ", got '" + tok + "'");
  }
}

}  // namespace

DppInstance parse_dpp(const std::string& text) {
  auto toks = tokenize(text);
  size_t pos = 0;
  auto next = [&](const char* what) -> std::string {
    if (pos >= toks.size())
      throw FormatError("graph file ended early; expected " +
                        std::string(what));
    return toks[pos++];
  };
  std::string kind = next("'directed' or 'undirected'");
  bool directed;
  if (kind == "directed")
    directed = true;
  else if (kind == "undirected")
    directed = false;
  else
    throw FormatError("expected 'directed' or 'undirected', got '" + kind +
                      "'");
  int vertices = to_int(next("vertex count"), "vertex count");
  int edge_count = to_int(next("edge count"), "edge count");
  int k = to_int(next("pair count"), "pair count");
  if (edge_count < 0 || k < 0) throw FormatError("negative count in header");
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < edge_count; ++e) {
    int u = to_int(next("edge endpoint"), "edge endpoint");
    int v = to_int(next("edge endpoint"), "edge endpoint");
    edges.emplace_back(u, v);
  }
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < k; ++x) {
    int s = to_int(next("terminal"), "terminal");
    int t = to_int(next("terminal"), "terminal");
    pairs.emplace_back(s, t);
  }
  if (pos != toks.size()) throw FormatError("trailing tokens in graph file");
  return DppInstance(directed, vertices, std::move(edges), std::move(pairs));
}

std::string serialize_dpp(const DppInstance& g) {
  std::ostringstream out;
  out << (g.directed() ? "directed" : "undirected") << ' ' << g.vertex_count()
      << ' ' << g.edges().size() << ' ' << g.pairs() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  for (auto [s, t] : g.terminal_pairs()) out << s << ' ' << t << '\n';
  return out.str();
}

Labeling parse_labeling(const std::string& text, const DppInstance& g) {
  auto toks = tokenize(text);
  if (static_cast<int>(toks.size()) != g.vertex_count())
    throw FormatError("expected " + std::to_string(g.vertex_count()) +
                      " labels, got " + std::to_string(toks.size()));
  Labeling l;
  for (const std::string& tok : toks)
    l.value.push_back(to_int(tok, "a label"));
  return l;
}

std::string serialize_labeling(const Labeling& l) {
  std::ostringstream out;
  for (size_t i = 0; i < l.value.size(); ++i) {
    if (i > 0) out << ' ';
    out << l.value[i];
  }
  out << '\n';
  return out.str();
}

VertexPathSet parse_vertex_paths(const std::string& text,
                                 const DppInstance& g) {
  std::istringstream in(text);
  std::string line;
  VertexPathSet paths;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    VertexPath path;
    std::string tok;
    while (ls >> tok) path.push_back(to_int(tok, "a vertex id"));
    if (!path.empty()) paths.push_back(std::move(path));
  }
  if (static_cast<int>(paths.size()) != g.pairs())
    throw FormatError("expected " + std::to_string(g.pairs()) + " paths");
  return paths;
}

std::string serialize_vertex_paths(const VertexPathSet& paths) {
  std::ostringstream out;
  for (const VertexPath& path : paths) {
    for (size_t i = 0; i < path.size(); ++i) {
      if (i > 0) out << ' ';
      out << path[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace cardzk
