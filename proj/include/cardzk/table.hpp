#pragma once

#include <utility>
#include <vector>

#include "cardzk/deck.hpp"
#include "cardzk/random.hpp"

namespace cardzk {

// Wrapper for values that stay hidden from every party during a run.
// Tests may open it; verifier-facing code never receives one it can use.
template <typename T>
class Sealed {
 public:
  explicit Sealed(T value) : value_(std::move(value)) {}
  const T& open_for_testing() const { return value_; }

 private:
  T value_;
};

// The hidden permutations one double-scramble draws: p over rows {2..a}
// (p[i-2] is the destination of Row i) and q over columns {1..b}.
struct HiddenPermutations {
  std::vector<int> p;
  std::vector<int> q;
};

struct ColumnReveal {
  int heart_count = 0;
  std::vector<int> heart_rows;  // row indices in {2..a}, ascending
};

// Mark values opened while rearranging: col0 top-to-bottom, row0
// left-to-right, each a permutation of its index set.
struct RearrangeReveals {
  std::vector<int> col0_values;
  std::vector<int> row0_values;
};

// The incomplete (a+1) x (b+1) proof matrix: a encoding rows (Row 1 on top),
// a marking Row 0 over Columns 1..b, and a marking Column 0 at Rows 2..a.
// The two top-left positions are absent.
class ProofMatrix {
 public:
  // Builds with caller-supplied marking cards; row0 must hold marks 1..b in
  // order, col0 marks 2..a. Encoding rows go in face-down and unchecked.
  ProofMatrix(Sequence row1, std::vector<Sequence> other_rows, int b,
              std::vector<Card> row0_marks, std::vector<Card> col0_marks);

  int rows() const { return a_; }
  int cols() const { return b_; }

  // Applies a double-scramble shuffle: Rows 2..a by a hidden uniform p,
  // Columns 1..b by a hidden uniform q; marking cards travel along.
  // All cards must be face-down.
  Sealed<HiddenPermutations> double_scramble(PermutationSource& perms);

  // Column-only special case of the double-scramble shuffle.
  Sealed<std::vector<int>> pile_scramble(PermutationSource& perms);

  // Turns Row 1 face-up and returns the column holding its heart.
  int reveal_row1();

  // Turns the Rows 2..a cards of Column j face-up; counts hearts there.
  ColumnReveal reveal_column_others(int j);

  // Public flip of every face-up card back down.
  void turn_all_face_down();

  // Runs the rearrangement protocol: one more double-scramble, then the
  // marking cards are opened and the rows/columns publicly moved back.
  // Afterwards every card is face-down at its build position.
  RearrangeReveals rearrange(PermutationSource& perms);

  // Dismantles the matrix, handing the encoding rows back in Row 1..a order
  // followed by the marking cards. Further operations are refused.
  std::pair<std::vector<Sequence>, std::vector<Card>> take_apart();

  // uids in a fixed scan order (rows, then row0, then col0); restoration
  // compares this against the snapshot taken at build time.
  std::vector<uint32_t> uid_layout() const;
  const std::vector<uint32_t>& built_uid_layout() const { return built_; }
  bool all_face_down() const;

  const Sequence& row(int i) const;             // i in 1..a
  const std::vector<Card>& row0_marks() const { return row0_; }
  const std::vector<Card>& col0_marks() const { return col0_; }

 private:
  void require_live(const char* op) const;
  void apply_row_permutation(const std::vector<int>& p);
  void apply_col_permutation(const std::vector<int>& q);

  int a_;
  int b_;
  std::vector<Sequence> rows_;  // rows_[i-1] is Row i
  std::vector<Card> row0_;      // marks over Columns 1..b
  std::vector<Card> col0_;      // marks at Rows 2..a
  std::vector<uint32_t> built_;
  bool consumed_ = false;
};

// Convenience builder that manufactures fresh marking cards.
ProofMatrix build_matrix(Sequence row1, std::vector<Sequence> other_rows,
                         int b, UidSource& uids);

}  // namespace cardzk
