#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cardzk/variant.hpp"

namespace cardzk {

// A (di)graph with k terminal pairs. Vertex ids are dense, 1..|V|.
// Self-loops, duplicate edges, and (when directed) anti-parallel arc pairs
// are rejected: a 2-cycle touching a solution path would defeat the
// same-number neighbor counts the checks rely on.
class DppInstance {
 public:
  DppInstance(bool directed, int vertices,
              std::vector<std::pair<int, int>> edges,
              std::vector<std::pair<int, int>> terminal_pairs);

  bool directed() const { return directed_; }
  int vertex_count() const { return vertices_; }
  int pairs() const { return static_cast<int>(terminal_pairs_.size()); }
  int max_degree() const { return max_degree_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::pair<int, int>>& terminal_pairs() const {
    return terminal_pairs_;
  }

  bool has_edge(int u, int v) const;  // ignores direction
  bool has_arc(int u, int v) const;   // directed only

  // Ascending-id neighbor lists. neighbors() ignores direction.
  const std::vector<int>& neighbors(int v) const;
  const std::vector<int>& in_neighbors(int v) const;
  const std::vector<int>& out_neighbors(int v) const;

  std::optional<int> terminal_number(int v) const;
  bool is_terminal(int v) const { return terminal_number(v).has_value(); }
  bool is_source(int v) const;
  bool is_sink(int v) const;

 private:
  bool directed_;
  int vertices_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::pair<int, int>> terminal_pairs_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> in_;
  std::vector<std::vector<int>> out_;
  std::vector<int> terminal_of_;  // 0 when not a terminal
  int max_degree_ = 0;
};

// color[v-1] in 1..d+1; no edge joins two vertices of the same color.
struct Coloring {
  std::vector<int> color;

  int of(int v) const { return color[static_cast<size_t>(v - 1)]; }
};

// value[v-1] in 1..k+d+1.
struct Labeling {
  std::vector<int> value;

  int of(int v) const { return value[static_cast<size_t>(v - 1)]; }
  void set(int v, int x) { value[static_cast<size_t>(v - 1)] = x; }

  bool operator==(const Labeling&) const = default;
};

using VertexPath = std::vector<int>;
// paths[x-1] joins terminal pair x.
using VertexPathSet = std::vector<VertexPath>;

// Colors vertices in ascending id order with the lowest color unused by
// already-colored neighbors; never needs more than d+1 colors.
Coloring greedy_coloring(const DppInstance& g);

void validate_coloring(const DppInstance& g, const Coloring& c);

// Graph analogue of the grid shortcutting pass. A shortcut at (i, j) is
// taken when v_i and v_j are joined by an edge usable in path direction;
// on digraphs a reverse-only chord cannot be shortcut and is left in place.
VertexPathSet simplify_graph_paths(VertexPathSet paths, const DppInstance& g);

bool graph_path_is_simple(const DppInstance& g, const VertexPath& path);

void validate_graph_paths(const DppInstance& g, const VertexPathSet& paths);

// Path vertices get their pair number; an uncovered vertex v gets
// k + color(v), which no neighbor of v can share.
Labeling fill_from_paths_graph(const DppInstance& g,
                               const VertexPathSet& paths, const Coloring& c);

// Chain-following recovery of a path set from a labeling, or nullopt when
// some chain lacks a unique continuation.
std::optional<VertexPathSet> extract_graph_paths(const DppInstance& g,
                                                 const Labeling& l);

int encoding_width(const DppInstance& g);

void validate_labeling(const DppInstance& g, const Labeling& l);

// --- text formats -------------------------------------------------------
// Graph: first line "directed|undirected |V| |E| k", then |E| lines "u v",
// then k lines "s t". Labeling: |V| whitespace-separated integers.

DppInstance parse_dpp(const std::string& text);
std::string serialize_dpp(const DppInstance& g);

Labeling parse_labeling(const std::string& text, const DppInstance& g);
std::string serialize_labeling(const Labeling& l);

VertexPathSet parse_vertex_paths(const std::string& text,
                                 const DppInstance& g);
std::string serialize_vertex_paths(const VertexPathSet& paths);

}  // namespace cardzk
