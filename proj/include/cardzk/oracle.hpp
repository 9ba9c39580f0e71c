#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cardzk/protocol.hpp"

namespace cardzk {

// --- local acceptance predicates -----------------------------------------
// Card-free ground truth for the protocol decision: a run accepts exactly
// when the predicate holds, for every seed.

bool local_accept_numberlink(const Puzzle& p, const Filling& f, Variant v);
bool local_accept_ukdpp(const DppInstance& g, const Labeling& l,
                        const Coloring& c);
bool local_accept_dkdpp(const DppInstance& g, const Labeling& l,
                        const Coloring& c);

// --- brute-force solvers ---------------------------------------------------
// Exhaustive desk-scale search. Sizes beyond m*n = 20 cells or 10 vertices
// are refused unless allow_large is set.

std::vector<PathSet> brute_force_numberlink(const Puzzle& p,
                                            bool require_cover,
                                            bool allow_large = false);
std::vector<VertexPathSet> brute_force_dpp(const DppInstance& g,
                                           bool allow_large = false);

// --- public view and transcript simulator ---------------------------------

// Everything about a board the verifier knows before the run starts.
struct PublicBoard {
  int width = 0;
  std::vector<std::string> slot_names;
  std::vector<int> public_values;  // 0 where the value is hidden
  std::vector<CheckPlan> checks;

  bool operator==(const PublicBoard&) const = default;
};

PublicBoard public_view(const BoardSpec& spec);
PublicBoard numberlink_public_board(const Puzzle& p, Variant v);
PublicBoard ukdpp_public_board(const DppInstance& g, const Coloring& c);
PublicBoard dkdpp_public_board(const DppInstance& g, const Coloring& c);

// Emits an accepting transcript with the same event schema as a real run,
// sampling every reveal from its public distribution: a uniform heart
// column, a uniform heart-row subset of the expected size, and uniform
// marking permutations. Knows no filling or labeling.
Transcript simulate_transcript(const PublicBoard& board, Rng& rng);

// --- transcript observables ------------------------------------------------

struct CheckObservables {
  std::string location;
  std::string group;
  int j = 0;
  std::vector<int> heart_rows;
  std::vector<int> p;  // empty until the check passed and rearranged
  std::vector<int> q;
  bool completed = false;
};

std::vector<CheckObservables> extract_observables(const Transcript& t);

using Histogram = std::map<std::string, long long>;

// Frequency tables of every random observable, grouped by check shape.
struct ObservableHistograms {
  std::map<std::string, Histogram> reveal;    // (j, heart-row set) joint
  std::map<std::string, Histogram> row_perm;  // rearrange column-0 marks
  std::map<std::string, Histogram> col_perm;  // rearrange row-0 marks

  void add(const Transcript& t);
};

// --- distribution comparison -----------------------------------------------

struct ComparisonReport {
  bool consistent = true;
  double statistic = 0.0;
  double p_value = 1.0;
  long dof = 0;
  bool support_equal = true;
  long long n_a = 0;
  long long n_b = 0;
};

// Two-sample chi-square homogeneity test over a discrete outcome space.
ComparisonReport compare_distributions(const Histogram& a, const Histogram& b,
                                       double significance);

// --- exact shuffle enumeration ----------------------------------------------

// Counts the (j, heart-row set) observable over every one of the
// (a-1)!*b! double-scramble outcomes, driving the real matrix machinery
// with scripted permutations. row_values[0] is Row 1.
Histogram enumerate_reveal_distribution(const std::vector<int>& row_values,
                                        int width);

// True when that distribution is exactly uniform-over-columns times
// uniform-over-size-c-subsets, checked in integer arithmetic.
bool reveals_exactly_uniform(const std::vector<int>& row_values, int width);

// --- transcript hygiene ------------------------------------------------------

struct HygieneReport {
  long violations = 0;
  std::vector<std::string> notes;

  bool ok() const { return violations == 0; }
};

// Structural scan: faces may appear only in public placements (named
// locations and the filler supply) and in matrix reveals; exactly one
// decision, last.
HygieneReport scan_transcript(const Transcript& t,
                              const std::set<std::string>& public_locations);

std::set<std::string> public_locations(const PublicBoard& board);

// --- instance generators -----------------------------------------------------

struct GeneratedPuzzle {
  Puzzle puzzle;
  PathSet solution;
};

// Random disjoint self-avoiding paths with terminals at their endpoints;
// solvable by construction.
GeneratedPuzzle gen_numberlink(int m, int n, int k, Rng& rng);

// Partitions the grid into short straight runs, so the solution is made of
// simple disjoint paths covering every cell. The pair count falls out of
// the partition.
GeneratedPuzzle gen_numberlink_covered(int m, int n, Rng& rng);

struct GeneratedDpp {
  DppInstance instance;
  VertexPathSet solution;
};

GeneratedDpp gen_dpp(bool directed, int vertices, int k, int extra_edges,
                     Rng& rng);

}  // namespace cardzk
