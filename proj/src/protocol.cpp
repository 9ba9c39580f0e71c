#include "cardzk/protocol.hpp"

#include <algorithm>

namespace cardzk {

CardCount card_requirements(Variant v, GridDims d) {
  switch (v) {
    case Variant::WellDesigned:
      return {static_cast<long>(d.k) * d.m * d.n, static_cast<long>(d.k) + 4};
    case Variant::General:
      return {static_cast<long>(d.k + 2) * (d.m * d.n + 2),
              static_cast<long>(d.k) + 8};
    default:
      throw VariantMismatchError("grid dimensions given for a graph variant");
  }
}

CardCount card_requirements(Variant v, GraphDims d) {
  long width = static_cast<long>(d.pairs) + d.degree + 1;
  switch (v) {
    case Variant::Ukdpp:
      return {width * (d.vertices + 2),
              static_cast<long>(d.pairs) + 2 * d.degree + 3};
    case Variant::Dkdpp:
      return {width * (d.vertices + 1),
              static_cast<long>(d.pairs) + 2 * d.degree + 2};
    default:
      throw VariantMismatchError("graph dimensions given for a grid variant");
  }
}

std::string CheckPlan::group() const {
  return "check " + tag + " a=" + std::to_string(matrix_rows()) +
         " b=" + std::to_string(width) +
         " c=" + std::to_string(expected_hearts);
}

// --- board construction ---------------------------------------------------

BoardSpec numberlink_board(const Puzzle& p, const Filling& f, Variant v) {
  if (!is_grid_variant(v))
    throw VariantMismatchError("numberlink board needs a grid variant");
  validate_filling(p, f, v);
  BoardSpec spec;
  spec.variant = v;
  spec.width = encoding_width(p, v);
  bool general = v == Variant::General;
  spec.max_matrix_rows = general ? 7 : 5;
  spec.filler_sequences = general ? 2 : 0;

  auto slot_of = [&](Cell c) {
    return (c.row - 1) * p.cols() + (c.col - 1);
  };
  for (int i = 1; i <= p.rows(); ++i) {
    for (int j = 1; j <= p.cols(); ++j) {
      Cell c{i, j};
      spec.slot_names.push_back(cell_name(c));
      spec.slot_values.push_back(f.at(c));
      spec.slot_public.push_back(p.is_terminal(c));

      CheckPlan plan;
      plan.location = cell_name(c);
      plan.width = spec.width;
      plan.row1_slot = slot_of(c);
      for (Cell nb : p.neighbors(c)) plan.neighbor_slots.push_back(slot_of(nb));
      if (p.is_terminal(c)) {
        plan.tag = "terminal";
        plan.expected_hearts = 1;
      } else {
        plan.tag = "nonterminal";
        plan.expected_hearts = 2;
        if (general) {
          plan.filler_rows = 2;
          plan.filler_value =
              (i + j) % 2 == 0 ? p.pairs() + 1 : p.pairs() + 2;
        }
      }
      spec.checks.push_back(std::move(plan));
    }
  }
  return spec;
}

namespace {

std::string vertex_name(int v) { return "vertex " + std::to_string(v); }

BoardSpec graph_board_common(const DppInstance& g, const Labeling& l,
                             const Coloring& c, Variant v) {
  validate_labeling(g, l);
  validate_coloring(g, c);
  BoardSpec spec;
  spec.variant = v;
  spec.width = encoding_width(g);
  for (int vertex = 1; vertex <= g.vertex_count(); ++vertex) {
    spec.slot_names.push_back(vertex_name(vertex));
    spec.slot_values.push_back(l.of(vertex));
    spec.slot_public.push_back(g.is_terminal(vertex));
  }
  return spec;
}

}  // namespace

BoardSpec ukdpp_board(const DppInstance& g, const Labeling& l,
                      const Coloring& c) {
  if (g.directed())
    throw VariantMismatchError("ukdpp needs an undirected instance");
  BoardSpec spec = graph_board_common(g, l, c, Variant::Ukdpp);
  spec.max_matrix_rows = g.max_degree() + 3;
  spec.filler_sequences = 2;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    CheckPlan plan;
    plan.location = vertex_name(v);
    plan.width = spec.width;
    plan.row1_slot = v - 1;
    for (int nb : g.neighbors(v)) plan.neighbor_slots.push_back(nb - 1);
    if (g.is_terminal(v)) {
      plan.tag = "terminal";
      plan.expected_hearts = 1;
    } else {
      plan.tag = "nonterminal";
      plan.expected_hearts = 2;
      plan.filler_rows = 2;
      plan.filler_value = g.pairs() + c.of(v);
    }
    spec.checks.push_back(std::move(plan));
  }
  return spec;
}

BoardSpec dkdpp_board(const DppInstance& g, const Labeling& l,
                      const Coloring& c) {
  if (!g.directed())
    throw VariantMismatchError("dkdpp needs a directed instance");
  BoardSpec spec = graph_board_common(g, l, c, Variant::Dkdpp);
  spec.max_matrix_rows = g.max_degree() + 2;
  spec.filler_sequences = 1;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    for (bool incoming : {true, false}) {
      CheckPlan plan;
      plan.location = vertex_name(v) + (incoming ? " in" : " out");
      plan.tag = incoming ? "in-round" : "out-round";
      plan.width = spec.width;
      plan.row1_slot = v - 1;
      const auto& nbs = incoming ? g.in_neighbors(v) : g.out_neighbors(v);
      for (int nb : nbs) plan.neighbor_slots.push_back(nb - 1);
      if (g.is_source(v)) {
        plan.expected_hearts = incoming ? 0 : 1;
      } else if (g.is_sink(v)) {
        plan.expected_hearts = incoming ? 1 : 0;
      } else {
        plan.filler_rows = 1;
        plan.filler_value = g.pairs() + c.of(v);
        plan.expected_hearts = 1;
      }
      spec.checks.push_back(std::move(plan));
    }
  }
  return spec;
}

std::vector<CheckPlan> plan_checks(const BoardSpec& spec) {
  return spec.checks;
}

// --- run machinery ----------------------------------------------------------

ProtocolRun::ProtocolRun(BoardSpec spec, PermutationSource& perms,
                         RunOptions opts)
    : spec_(std::move(spec)),
      perms_(perms),
      transcript_(opts.record_hidden) {
  deal_board();
}

void ProtocolRun::deal_board() {
  const int w = spec_.width;
  for (size_t s = 0; s < spec_.slot_values.size(); ++s) {
    int value = spec_.slot_values[s];
    if (value < 1 || value > w)
      throw RangeError(spec_.slot_names[s] + " holds " +
                       std::to_string(value) + ", outside 1.." +
                       std::to_string(w));
    Sequence seq = encode(value, w, uids_);
    cards_used_.encoding += w;
    if (spec_.slot_public[s])
      transcript_.place(spec_.slot_names[s], face_labels_of(seq));
    else
      transcript_.place(spec_.slot_names[s]);
    board_.push_back(std::move(seq));
  }
  for (int i = 0; i < spec_.filler_sequences; ++i) {
    filler_hearts_.push_back(make_heart(uids_));
    for (int j = 0; j < w - 1; ++j) filler_clubs_.push_back(make_club(uids_));
    cards_used_.encoding += w;
  }
  for (int v = 1; v <= w; ++v) {
    row_marks_.push_back(make_mark(v, uids_));
    ++cards_used_.marking;
  }
  for (int i = 2; i <= spec_.max_matrix_rows; ++i) {
    col_marks_.push_back(make_mark(i, uids_));
    ++cards_used_.marking;
  }
}

std::vector<std::string> ProtocolRun::face_labels_of(const Sequence& seq) {
  std::vector<std::string> out;
  out.reserve(seq.size());
  for (const Card& c : seq) out.push_back(face_label(c.face_sealed()));
  return out;
}

Sequence ProtocolRun::arrange_filler_row(int copy, int value) const {
  const int w = spec_.width;
  Sequence seq;
  seq.reserve(static_cast<size_t>(w));
  size_t club = static_cast<size_t>(copy) * static_cast<size_t>(w - 1);
  for (int pos = 1; pos <= w; ++pos) {
    if (pos == value)
      seq.push_back(filler_hearts_[static_cast<size_t>(copy)]);
    else
      seq.push_back(filler_clubs_[club++]);
  }
  return seq;
}

std::vector<uint32_t> ProtocolRun::board_uids() const {
  std::vector<uint32_t> out;
  for (const Sequence& seq : board_)
    for (const Card& c : seq) out.push_back(c.uid());
  return out;
}

void ProtocolRun::verify_restored(const CheckPlan& plan,
                                  const std::vector<uint32_t>& board_before) {
  if (board_uids() != board_before)
    throw std::logic_error("check at " + plan.location +
                           " did not restore the board layout");
  for (const Sequence& seq : board_)
    for (const Card& c : seq)
      if (!c.face_down())
        throw std::logic_error("check at " + plan.location +
                               " left a card face-up");
  ++completed_phases_;
}

bool ProtocolRun::run_check(const CheckPlan& plan) {
  const int w = spec_.width;
  std::vector<uint32_t> board_before = board_uids();

  transcript_.place("matrix " + plan.location, {}, plan.group());

  Sequence row1 = std::move(board_[static_cast<size_t>(plan.row1_slot)]);
  std::vector<Sequence> others;
  for (int slot : plan.neighbor_slots)
    others.push_back(std::move(board_[static_cast<size_t>(slot)]));
  for (int i = 0; i < plan.filler_rows; ++i) {
    Sequence filler = arrange_filler_row(i, plan.filler_value);
    transcript_.place("supply", face_labels_of(filler));
    others.push_back(std::move(filler));
  }

  int a = plan.matrix_rows();
  if (a - 1 > static_cast<int>(col_marks_.size()))
    throw std::logic_error("marking-card kit too small for " + plan.location);
  std::vector<Card> row0(row_marks_.begin(), row_marks_.begin() + w);
  std::vector<Card> col0(col_marks_.begin(), col_marks_.begin() + (a - 1));
  ProofMatrix matrix(std::move(row1), std::move(others), w, std::move(row0),
                     std::move(col0));

  auto hidden = matrix.double_scramble(perms_);
  transcript_.shuffle("matrix " + plan.location, "double-scramble");
  transcript_.seal(plan.location, hidden.open_for_testing().p,
                   hidden.open_for_testing().q);

  bool malformed = false;
  int j = 0;
  try {
    j = matrix.reveal_row1();
  } catch (const MalformedSequenceError&) {
    malformed = true;
  }
  std::vector<std::string> row1_faces;
  for (const Card& c : matrix.row(1)) row1_faces.push_back(face_label(c.face()));
  transcript_.reveal("matrix row 1", std::move(row1_faces));
  if (malformed) return false;

  ColumnReveal column = matrix.reveal_column_others(j);
  std::vector<std::string> column_faces;
  for (int i = 2; i <= a; ++i)
    column_faces.push_back(
        face_label(matrix.row(i)[static_cast<size_t>(j - 1)].face()));
  transcript_.reveal("matrix column " + std::to_string(j), column_faces);

  if (column.heart_count != plan.expected_hearts) return false;

  matrix.turn_all_face_down();
  RearrangeReveals opened = matrix.rearrange(perms_);
  transcript_.shuffle("matrix " + plan.location, "double-scramble");
  std::vector<std::string> col0_faces, row0_faces;
  for (int v : opened.col0_values) col0_faces.push_back(std::to_string(v));
  for (int v : opened.row0_values) row0_faces.push_back(std::to_string(v));
  transcript_.reveal("matrix column 0", col0_faces);
  transcript_.reveal("matrix row 0", row0_faces);

  auto [rows, marks] = matrix.take_apart();
  board_[static_cast<size_t>(plan.row1_slot)] = std::move(rows[0]);
  for (size_t i = 0; i < plan.neighbor_slots.size(); ++i)
    board_[static_cast<size_t>(plan.neighbor_slots[i])] =
        std::move(rows[i + 1]);
  // filler rows and marking cards go back to the supply; they are the same
  // physical cards, so only their uids need checking
  std::vector<uint32_t> returned;
  for (size_t i = 1 + plan.neighbor_slots.size(); i < rows.size(); ++i)
    for (const Card& c : rows[i]) returned.push_back(c.uid());
  std::vector<uint32_t> expected;
  for (int i = 0; i < plan.filler_rows; ++i) {
    expected.push_back(filler_hearts_[static_cast<size_t>(i)].uid());
    for (int p = 0; p < w - 1; ++p)
      expected.push_back(
          filler_clubs_[static_cast<size_t>(i) * static_cast<size_t>(w - 1) +
                        static_cast<size_t>(p)].uid());
  }
  std::sort(returned.begin(), returned.end());
  std::sort(expected.begin(), expected.end());
  if (returned != expected)
    throw std::logic_error("filler cards were not returned intact");
  for (size_t i = 0; i < marks.size(); ++i) {
    uint32_t want = i < static_cast<size_t>(w)
                        ? row_marks_[i].uid()
                        : col_marks_[i - static_cast<size_t>(w)].uid();
    if (marks[i].uid() != want)
      throw std::logic_error("marking cards were not returned intact");
  }

  verify_restored(plan, board_before);
  return true;
}

bool ProtocolRun::run_check_at(const std::string& location) {
  for (const CheckPlan& plan : spec_.checks)
    if (plan.location == location) return run_check(plan);
  throw InstanceError("no check planned at '" + location + "'");
}

RunResult ProtocolRun::run() {
  RunResult result;
  for (const CheckPlan& plan : spec_.checks) {
    if (!run_check(plan)) {
      transcript_.decide(false, plan.location);
      result.accepted = false;
      result.failing_location = plan.location;
      result.cards_used = cards_used_;
      result.completed_phases = completed_phases_;
      result.transcript = std::move(transcript_);
      return result;
    }
  }
  transcript_.decide(true);
  result.accepted = true;
  result.cards_used = cards_used_;
  result.completed_phases = completed_phases_;
  result.transcript = std::move(transcript_);
  return result;
}

int ProtocolRun::sealed_slot_value(int slot) const {
  return decode_sealed(board_[static_cast<size_t>(slot)]);
}

void ProtocolRun::corrupt_slot_for_testing(int slot, Sequence seq) {
  board_[static_cast<size_t>(slot)] = std::move(seq);
}

RunResult run_numberlink(const Puzzle& p, const Filling& f, Variant v,
                         PermutationSource& perms, RunOptions opts) {
  ProtocolRun run(numberlink_board(p, f, v), perms, opts);
  return run.run();
}

RunResult run_ukdpp(const DppInstance& g, const Labeling& l, const Coloring& c,
                    PermutationSource& perms, RunOptions opts) {
  ProtocolRun run(ukdpp_board(g, l, c), perms, opts);
  return run.run();
}

RunResult run_dkdpp(const DppInstance& g, const Labeling& l, const Coloring& c,
                    PermutationSource& perms, RunOptions opts) {
  ProtocolRun run(dkdpp_board(g, l, c), perms, opts);
  return run.run();
}

}  // namespace cardzk
