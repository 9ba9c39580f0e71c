#pragma once

#include <string>
#include <vector>

#include "cardzk/dpp.hpp"
#include "cardzk/numberlink.hpp"
#include "cardzk/table.hpp"
#include "cardzk/transcript.hpp"

namespace cardzk {

struct GridDims {
  int m = 0;
  int n = 0;
  int k = 0;
};

struct GraphDims {
  int vertices = 0;
  int pairs = 0;
  int degree = 0;
};

struct CardCount {
  long encoding = 0;
  long marking = 0;

  bool operator==(const CardCount&) const = default;
};

// The deck each protocol variant needs. Runs never use more.
CardCount card_requirements(Variant v, GridDims d);
CardCount card_requirements(Variant v, GraphDims d);

// One cell/vertex verification, fully determined by public data.
struct CheckPlan {
  std::string location;            // "cell 2 3" or "vertex 4 in"
  std::string tag;                 // terminal / nonterminal / in-round / out-round
  int row1_slot = 0;               // board slot under test
  std::vector<int> neighbor_slots; // rows 2.. in fixed public order
  int filler_rows = 0;
  int filler_value = 0;            // public: parity or color based
  int width = 0;                   // b
  int expected_hearts = 0;         // c

  int matrix_rows() const {
    return 1 + static_cast<int>(neighbor_slots.size()) + filler_rows;
  }
  // Group key for distribution comparisons; doubles as the note on the
  // check's build event.
  std::string group() const;

  bool operator==(const CheckPlan&) const = default;
};

// Everything a run needs: per-slot sequences to deal, the supply sizes, and
// the ordered check list. slot_values is the prover's secret input; the
// rest is public.
struct BoardSpec {
  Variant variant = Variant::General;
  int width = 0;
  int max_matrix_rows = 0;
  int filler_sequences = 0;
  std::vector<std::string> slot_names;
  std::vector<int> slot_values;
  std::vector<bool> slot_public;
  std::vector<CheckPlan> checks;
};

BoardSpec numberlink_board(const Puzzle& p, const Filling& f, Variant v);
BoardSpec ukdpp_board(const DppInstance& g, const Labeling& l,
                      const Coloring& c);
BoardSpec dkdpp_board(const DppInstance& g, const Labeling& l,
                      const Coloring& c);

// Check plans alone (public data only) — shared with the simulator.
std::vector<CheckPlan> plan_checks(const BoardSpec& spec);

struct RunOptions {
  bool record_hidden = false;
};

struct RunResult {
  bool accepted = false;
  std::string failing_location;
  CardCount cards_used;
  long completed_phases = 0;
  Transcript transcript;
};

// A live protocol run: deals the board, then verifies every cell/vertex,
// rearranging the matrix after each passing check so all cards return to
// their dealt positions. Restoration is asserted after every phase.
class ProtocolRun {
 public:
  ProtocolRun(BoardSpec spec, PermutationSource& perms, RunOptions opts = {});

  RunResult run();

  // Runs a single check; the decision event is left to the caller.
  bool run_check(const CheckPlan& plan);
  bool run_check_at(const std::string& location);

  const BoardSpec& spec() const { return spec_; }
  Transcript& transcript() { return transcript_; }
  CardCount cards_used() const { return cards_used_; }
  long completed_phases() const { return completed_phases_; }

  // Test oracle: current value a board slot encodes, read through the seal.
  int sealed_slot_value(int slot) const;

  // Test hook: swaps in an arbitrary sequence, modeling a corrupted prover
  // placement that reveal_row1 must flag.
  void corrupt_slot_for_testing(int slot, Sequence seq);

 private:
  void deal_board();
  Sequence arrange_filler_row(int copy, int value) const;
  void verify_restored(const CheckPlan& plan,
                       const std::vector<uint32_t>& board_before);
  std::vector<uint32_t> board_uids() const;
  static std::vector<std::string> face_labels_of(const Sequence& seq);

  BoardSpec spec_;
  PermutationSource& perms_;
  Transcript transcript_;
  UidSource uids_;
  std::vector<Sequence> board_;
  std::vector<Card> filler_hearts_;
  std::vector<Card> filler_clubs_;
  std::vector<Card> row_marks_;
  std::vector<Card> col_marks_;
  CardCount cards_used_;
  long completed_phases_ = 0;
};

RunResult run_numberlink(const Puzzle& p, const Filling& f, Variant v,
                         PermutationSource& perms, RunOptions opts = {});
RunResult run_ukdpp(const DppInstance& g, const Labeling& l, const Coloring& c,
                    PermutationSource& perms, RunOptions opts = {});
RunResult run_dkdpp(const DppInstance& g, const Labeling& l, const Coloring& c,
                    PermutationSource& perms, RunOptions opts = {});

}  // namespace cardzk
