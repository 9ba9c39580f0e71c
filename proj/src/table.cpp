#include "cardzk/table.hpp"

#include <algorithm>

namespace cardzk {

ProofMatrix::ProofMatrix(Sequence row1, std::vector<Sequence> other_rows,
                         int b, std::vector<Card> row0_marks,
                         std::vector<Card> col0_marks)
    : a_(1 + static_cast<int>(other_rows.size())),
      b_(b),
      row0_(std::move(row0_marks)),
      col0_(std::move(col0_marks)) {
  if (b_ < 1) throw DimensionError("matrix needs at least one column");
  if (static_cast<int>(row1.size()) != b_)
    throw DimensionError("Row 1 width " + std::to_string(row1.size()) +
                         " does not match b=" + std::to_string(b_));
  rows_.reserve(static_cast<size_t>(a_));
  rows_.push_back(std::move(row1));
  for (Sequence& r : other_rows) {
    if (static_cast<int>(r.size()) != b_)
      throw DimensionError("row width " + std::to_string(r.size()) +
                           " does not match b=" + std::to_string(b_));
    rows_.push_back(std::move(r));
  }
  if (static_cast<int>(row0_.size()) != b_)
    throw DimensionError("Row 0 needs exactly b marking cards");
  if (static_cast<int>(col0_.size()) != a_ - 1)
    throw DimensionError("Column 0 needs exactly a-1 marking cards");
  // Placement order is public, so checking the mark values breaks no hiding.
  for (int j = 1; j <= b_; ++j) {
    const CardFace& f = row0_[static_cast<size_t>(j - 1)].face_sealed();
    if (f.kind != Suit::Mark || f.mark_value != j)
      throw DimensionError("Row 0 must hold marks 1.." + std::to_string(b_) +
                           " in order");
  }
  for (int i = 2; i <= a_; ++i) {
    const CardFace& f = col0_[static_cast<size_t>(i - 2)].face_sealed();
    if (f.kind != Suit::Mark || f.mark_value != i)
      throw DimensionError("Column 0 must hold marks 2.." + std::to_string(a_) +
                           " in order");
  }
  built_ = uid_layout();
}

ProofMatrix build_matrix(Sequence row1, std::vector<Sequence> other_rows,
                         int b, UidSource& uids) {
  int a = 1 + static_cast<int>(other_rows.size());
  std::vector<Card> row0;
  for (int j = 1; j <= b; ++j) row0.push_back(make_mark(j, uids));
  std::vector<Card> col0;
  for (int i = 2; i <= a; ++i) col0.push_back(make_mark(i, uids));
  return ProofMatrix(std::move(row1), std::move(other_rows), b,
                     std::move(row0), std::move(col0));
}

void ProofMatrix::require_live(const char* op) const {
  if (consumed_)
    throw ProtocolOrderError(std::string(op) +
                             ": matrix was already taken apart");
}

bool ProofMatrix::all_face_down() const {
  for (const Sequence& r : rows_)
    for (const Card& c : r)
      if (!c.face_down()) return false;
  for (const Card& c : row0_)
    if (!c.face_down()) return false;
  for (const Card& c : col0_)
    if (!c.face_down()) return false;
  return true;
}

std::vector<uint32_t> ProofMatrix::uid_layout() const {
  std::vector<uint32_t> out;
  out.reserve(static_cast<size_t>(a_) * static_cast<size_t>(b_) +
              row0_.size() + col0_.size());
  for (const Sequence& r : rows_)
    for (const Card& c : r) out.push_back(c.uid());
  for (const Card& c : row0_) out.push_back(c.uid());
  for (const Card& c : col0_) out.push_back(c.uid());
  return out;
}

void ProofMatrix::apply_row_permutation(const std::vector<int>& p) {
  // p[i-2] is the destination of Row i; Row 1 and Row 0 stay put.
  std::vector<Sequence> moved(rows_.size());
  std::vector<Card> moved_marks;
  moved_marks.reserve(col0_.size());
  moved_marks = col0_;
  moved[0] = std::move(rows_[0]);
  for (int i = 2; i <= a_; ++i) {
    int dest = p[static_cast<size_t>(i - 2)];
    if (dest < 2 || dest > a_)
      throw DimensionError("row permutation out of range");
    moved[static_cast<size_t>(dest - 1)] = std::move(rows_[static_cast<size_t>(i - 1)]);
    moved_marks[static_cast<size_t>(dest - 2)] = col0_[static_cast<size_t>(i - 2)];
  }
  rows_ = std::move(moved);
  col0_ = std::move(moved_marks);
}

void ProofMatrix::apply_col_permutation(const std::vector<int>& q) {
  // q[j-1] is the destination of Column j; Column 0 stays put.
  for (Sequence& r : rows_) {
    Sequence moved(r.size(), Card({Suit::Club, 0}, 0));
    for (int j = 1; j <= b_; ++j) {
      int dest = q[static_cast<size_t>(j - 1)];
      if (dest < 1 || dest > b_)
        throw DimensionError("column permutation out of range");
      moved[static_cast<size_t>(dest - 1)] = r[static_cast<size_t>(j - 1)];
    }
    r = std::move(moved);
  }
  std::vector<Card> moved_marks = row0_;
  for (int j = 1; j <= b_; ++j)
    moved_marks[static_cast<size_t>(q[static_cast<size_t>(j - 1)] - 1)] =
        row0_[static_cast<size_t>(j - 1)];
  row0_ = std::move(moved_marks);
}

Sealed<HiddenPermutations> ProofMatrix::double_scramble(
    PermutationSource& perms) {
  require_live("double_scramble");
  if (!all_face_down())
    throw ProtocolOrderError("double_scramble: a face-up card is present");
  HiddenPermutations hidden{perms.draw(2, a_), perms.draw(1, b_)};
  apply_row_permutation(hidden.p);
  apply_col_permutation(hidden.q);
  return Sealed<HiddenPermutations>(hidden);
}

Sealed<std::vector<int>> ProofMatrix::pile_scramble(PermutationSource& perms) {
  require_live("pile_scramble");
  if (!all_face_down())
    throw ProtocolOrderError("pile_scramble: a face-up card is present");
  std::vector<int> q = perms.draw(1, b_);
  apply_col_permutation(q);
  return Sealed<std::vector<int>>(q);
}

int ProofMatrix::reveal_row1() {
  require_live("reveal_row1");
  for (Card& c : rows_[0]) c.flip_up();
  try {
    return decode(rows_[0]);
  } catch (const MalformedSequenceError&) {
    throw MalformedSequenceError(
        "Row 1 does not hold exactly one heart; prover placement corrupt");
  }
}

ColumnReveal ProofMatrix::reveal_column_others(int j) {
  require_live("reveal_column_others");
  if (j < 1 || j > b_)
    throw DimensionError("column index " + std::to_string(j) +
                         " outside 1.." + std::to_string(b_));
  ColumnReveal out;
  for (int i = 2; i <= a_; ++i) {
    Card& c = rows_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
    c.flip_up();
    if (c.face().kind == Suit::Heart) {
      ++out.heart_count;
      out.heart_rows.push_back(i);
    }
  }
  return out;
}

void ProofMatrix::turn_all_face_down() {
  require_live("turn_all_face_down");
  for (Sequence& r : rows_)
    for (Card& c : r) c.flip_down();
  for (Card& c : row0_) c.flip_down();
  for (Card& c : col0_) c.flip_down();
}

RearrangeReveals ProofMatrix::rearrange(PermutationSource& perms) {
  require_live("rearrange");
  if (!all_face_down())
    throw ProtocolOrderError(
        "rearrange: turn revealed cards face-down before rearranging");

  double_scramble(perms);

  RearrangeReveals opened;
  for (Card& c : col0_) {
    c.flip_up();
    opened.col0_values.push_back(c.face().mark_value);
  }
  apply_row_permutation(opened.col0_values);
  for (Card& c : row0_) {
    c.flip_up();
    opened.row0_values.push_back(c.face().mark_value);
  }
  apply_col_permutation(opened.row0_values);
  turn_all_face_down();

  if (uid_layout() != built_)
    throw std::logic_error("rearrange failed to restore the build layout");
  return opened;
}

std::pair<std::vector<Sequence>, std::vector<Card>> ProofMatrix::take_apart() {
  require_live("take_apart");
  consumed_ = true;
  std::vector<Card> marks;
  marks.reserve(row0_.size() + col0_.size());
  for (Card& c : row0_) marks.push_back(c);
  for (Card& c : col0_) marks.push_back(c);
  return {std::move(rows_), std::move(marks)};
}

const Sequence& ProofMatrix::row(int i) const {
  if (i < 1 || i > a_) throw DimensionError("row index outside 1..a");
  return rows_[static_cast<size_t>(i - 1)];
}

}  // namespace cardzk
