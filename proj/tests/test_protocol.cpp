#include <doctest.h>

#include "cardzk/oracle.hpp"
#include "fixtures.hpp"

using namespace cardzk;

namespace {

DppInstance path_plus_cycle() {
  // pair 1 joins 1-2-3; vertices 4..7 form a disjoint 4-cycle
  return DppInstance(
      false, 7, {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}}, {{1, 3}});
}

}  // namespace

TEST_CASE("card requirements match the published formulas") {
  CHECK(card_requirements(Variant::General, GridDims{5, 5, 4}) ==
        CardCount{162, 12});
  CHECK(card_requirements(Variant::WellDesigned, GridDims{5, 5, 4}) ==
        CardCount{100, 8});
  CHECK(card_requirements(Variant::Ukdpp, GraphDims{4, 1, 2}) ==
        CardCount{24, 8});
  CHECK(card_requirements(Variant::Dkdpp, GraphDims{4, 1, 2}) ==
        CardCount{20, 7});
  CHECK_THROWS_AS(card_requirements(Variant::Ukdpp, GridDims{2, 2, 1}),
                  VariantMismatchError);
  CHECK_THROWS_AS(card_requirements(Variant::General, GraphDims{4, 1, 2}),
                  VariantMismatchError);
}

TEST_CASE("the covering filling is accepted and fully restores the board") {
  SeededPermutationSource perms(42);
  RunResult r = run_numberlink(fixtures::covered_puzzle(),
                               fixtures::covered_filling(),
                               Variant::WellDesigned, perms);
  CHECK(r.accepted);
  CHECK(r.completed_phases == 25);
  CHECK(r.cards_used ==
        card_requirements(Variant::WellDesigned, GridDims{5, 5, 4}));
  CHECK(r.transcript.accepted());
  CHECK(r.transcript.events().back().note == "accept");
}

TEST_CASE("the sparse filling is accepted under the general variant") {
  SeededPermutationSource perms(42);
  RunResult r = run_numberlink(fixtures::sparse_puzzle(),
                               fixtures::sparse_filling(), Variant::General,
                               perms);
  CHECK(r.accepted);
  CHECK(r.cards_used ==
        card_requirements(Variant::General, GridDims{5, 5, 2}));
}

TEST_CASE("the straight-line over-filled grid is accepted despite no cover") {
  SeededPermutationSource perms(9);
  RunResult r = run_numberlink(fixtures::straight_puzzle(),
                               fixtures::straight_overfill(),
                               Variant::WellDesigned, perms);
  CHECK(r.accepted);
}

TEST_CASE("a broken path is rejected at its first failing cell") {
  Filling f = fixtures::covered_filling();
  f.set({4, 2}, 3);  // snap the path of 1s
  // first failing cell in row-major order per the card-free predicate
  Puzzle p = fixtures::covered_puzzle();
  std::string expected_fail;
  for (int i = 1; i <= 5 && expected_fail.empty(); ++i) {
    for (int j = 1; j <= 5 && expected_fail.empty(); ++j) {
      Cell c{i, j};
      int matches = 0;
      for (Cell nb : p.neighbors(c))
        if (f.at(nb) == f.at(c)) ++matches;
      int need = p.is_terminal(c) ? 1 : 2;
      if (matches != need) expected_fail = cell_name(c);
    }
  }
  REQUIRE(!expected_fail.empty());
  for (uint64_t seed : {1, 2, 3}) {
    SeededPermutationSource perms(seed);
    RunResult r =
        run_numberlink(p, f, Variant::WellDesigned, perms);
    CHECK(!r.accepted);
    CHECK(r.failing_location == expected_fail);
    CHECK(r.transcript.events().back().note == "reject");
    CHECK(r.transcript.events().back().location == expected_fail);
  }
}

TEST_CASE("single-cell checks behave per the worked examples") {
  SUBCASE("terminal cell with one matching neighbor passes") {
    SeededPermutationSource perms(5);
    ProtocolRun run(numberlink_board(fixtures::covered_puzzle(),
                                     fixtures::covered_filling(),
                                     Variant::WellDesigned),
                    perms);
    CHECK(run.run_check_at("cell 2 2"));
  }
  SUBCASE("terminal cell with two matching neighbors fails") {
    Puzzle p = parse_puzzle("2 2 1\n1 .\n. 1\n");
    Filling f(2, 2, {1, 1, 1, 1});
    SeededPermutationSource perms(5);
    ProtocolRun run(numberlink_board(p, f, Variant::WellDesigned), perms);
    CHECK(!run.run_check_at("cell 1 1"));
  }
  SUBCASE("outcome is identical across 50 seeds") {
    Filling broken = fixtures::sparse_filling();
    broken.set({4, 4}, 1);
    for (uint64_t seed = 1; seed <= 50; ++seed) {
      SeededPermutationSource perms(seed);
      ProtocolRun honest(numberlink_board(fixtures::sparse_puzzle(),
                                          fixtures::sparse_filling(),
                                          Variant::General),
                         perms);
      CHECK(honest.run_check_at("cell 3 3"));
      CHECK(honest.run_check_at("cell 1 1"));
      CHECK(honest.run_check_at("cell 2 3"));
      ProtocolRun tampered(
          numberlink_board(fixtures::sparse_puzzle(), broken,
                           Variant::General),
          perms);
      CHECK(!tampered.run_check_at("cell 4 4"));
    }
  }
}

TEST_CASE("a filler cell passes on the strength of the two supply rows") {
  // cell 1 1 holds 3 with neighbors 4, 4; the two extra rows encode 3
  SeededPermutationSource perms(77);
  ProtocolRun run(numberlink_board(fixtures::sparse_puzzle(),
                                   fixtures::sparse_filling(),
                                   Variant::General),
                  perms);
  CHECK(run.run_check_at("cell 1 1"));
}

TEST_CASE("a non-terminal with three matching neighbors fails") {
  Puzzle p = parse_puzzle("3 3 1\n. 1 .\n1 . .\n. . .\n");
  Filling f(3, 3, {2, 1, 2, 1, 1, 3, 2, 1, 2});
  SeededPermutationSource perms(3);
  ProtocolRun run(numberlink_board(p, f, Variant::General), perms);
  CHECK(!run.run_check_at("cell 2 2"));
}

TEST_CASE("a corrupted placement rejects as a malformed row") {
  Puzzle p = parse_puzzle("1 3 1\n1 . 1\n");
  Filling f(1, 3, {1, 1, 1});
  SeededPermutationSource perms(5);
  ProtocolRun run(numberlink_board(p, f, Variant::WellDesigned), perms);
  UidSource extra;
  run.corrupt_slot_for_testing(1, Sequence{make_club(extra)});
  CHECK(!run.run_check_at("cell 1 2"));
}

TEST_CASE("width mismatches surface before any shuffle") {
  Puzzle p = parse_puzzle("1 3 1\n1 . 1\n");
  CHECK_THROWS_AS(
      numberlink_board(p, Filling(1, 3, {1, 3, 1}), Variant::WellDesigned),
      RangeError);
  CHECK_THROWS_AS(
      numberlink_board(p, Filling(3, 1, {1, 1, 1}), Variant::WellDesigned),
      InstanceError);
}

TEST_CASE("ukdpp accepts an honest labeling on the 4-cycle") {
  DppInstance g(false, 4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {{1, 3}});
  Coloring c = greedy_coloring(g);
  Labeling l = fill_from_paths_graph(g, {{1, 2, 3}}, c);
  SeededPermutationSource perms(8);
  RunResult r = run_ukdpp(g, l, c, perms);
  CHECK(r.accepted);
  CHECK(r.completed_phases == 4);
  CHECK(r.cards_used == card_requirements(Variant::Ukdpp, GraphDims{4, 1, 2}));
}

TEST_CASE("ukdpp accepts a stray same-number cycle and still extracts") {
  DppInstance g = path_plus_cycle();
  Coloring c = greedy_coloring(g);
  Labeling l{{1, 1, 1, 1, 1, 1, 1}};  // the spare cycle also claims number 1
  SeededPermutationSource perms(13);
  RunResult r = run_ukdpp(g, l, c, perms);
  CHECK(r.accepted);
  auto recovered = extract_graph_paths(g, l);
  REQUIRE(recovered.has_value());
  CHECK((*recovered)[0] == VertexPath{1, 2, 3});
}

TEST_CASE("ukdpp rejects a labeling that breaks a terminal") {
  DppInstance g(false, 4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {{1, 3}});
  Coloring c = greedy_coloring(g);
  Labeling l{{1, 2, 1, 3}};  // terminal 1 has no matching neighbor
  SeededPermutationSource perms(8);
  RunResult r = run_ukdpp(g, l, c, perms);
  CHECK(!r.accepted);
  CHECK(r.failing_location == "vertex 1");
}

TEST_CASE("dkdpp accepts the directed three-vertex path") {
  DppInstance g(true, 3, {{1, 2}, {2, 3}}, {{1, 3}});
  Coloring c = greedy_coloring(g);
  Labeling l = fill_from_paths_graph(g, {{1, 2, 3}}, c);
  SeededPermutationSource perms(21);
  RunResult r = run_dkdpp(g, l, c, perms);
  CHECK(r.accepted);
  CHECK(r.completed_phases == 6);  // two rounds per vertex
  CHECK(r.cards_used == card_requirements(Variant::Dkdpp, GraphDims{3, 1, 2}));
}

TEST_CASE("dkdpp rejects a source with a matching incoming arc") {
  // arc 3->1 gives the source an incoming neighbor with its own number
  DppInstance g(true, 3, {{1, 2}, {2, 3}, {3, 1}}, {{1, 3}});
  Coloring c = greedy_coloring(g);
  Labeling l{{1, 1, 1}};
  SeededPermutationSource perms(21);
  RunResult r = run_dkdpp(g, l, c, perms);
  CHECK(!r.accepted);
  CHECK(r.failing_location == "vertex 1 in");
}

TEST_CASE("variant and instance kinds must agree") {
  DppInstance directed(true, 2, {{1, 2}}, {{1, 2}});
  DppInstance undirected(false, 2, {{1, 2}}, {{1, 2}});
  Coloring cd = greedy_coloring(directed);
  Coloring cu = greedy_coloring(undirected);
  Labeling l{{1, 1}};
  CHECK_THROWS_AS(ukdpp_board(directed, l, cd), VariantMismatchError);
  CHECK_THROWS_AS(dkdpp_board(undirected, l, cu), VariantMismatchError);
}

TEST_CASE("transcripts serialize deterministically for a fixed seed") {
  auto render = [] {
    SeededPermutationSource perms(1234);
    RunResult r = run_numberlink(fixtures::sparse_puzzle(),
                                 fixtures::sparse_filling(), Variant::General,
                                 perms);
    return r.transcript.to_text();
  };
  CHECK(render() == render());
}

TEST_CASE("the sealed shuffle log stays out of transcripts unless asked") {
  SeededPermutationSource perms(6);
  RunResult plain = run_numberlink(fixtures::sparse_puzzle(),
                                   fixtures::sparse_filling(),
                                   Variant::General, perms);
  CHECK(plain.transcript.sealed().empty());
  CHECK(!plain.transcript.to_json(true).contains("sealed"));

  SeededPermutationSource perms2(6);
  RunResult traced = run_numberlink(fixtures::sparse_puzzle(),
                                    fixtures::sparse_filling(),
                                    Variant::General, perms2,
                                    RunOptions{true});
  CHECK(!traced.transcript.sealed().empty());
  CHECK(!traced.transcript.to_json(false).contains("sealed"));
  CHECK(traced.transcript.to_json(true).contains("sealed"));
  // identical seeds give identical public events either way
  CHECK(traced.transcript.to_json(false) == plain.transcript.to_json(false));
}

TEST_CASE("every run passes the structural hygiene scan") {
  SeededPermutationSource perms(31);
  PublicBoard board =
      numberlink_public_board(fixtures::sparse_puzzle(), Variant::General);
  auto allowed = public_locations(board);

  RunResult good = run_numberlink(fixtures::sparse_puzzle(),
                                  fixtures::sparse_filling(),
                                  Variant::General, perms);
  CHECK(scan_transcript(good.transcript, allowed).ok());

  Filling broken = fixtures::sparse_filling();
  broken.set({4, 4}, 1);
  RunResult bad = run_numberlink(fixtures::sparse_puzzle(), broken,
                                 Variant::General, perms);
  CHECK(!bad.accepted);
  CHECK(scan_transcript(bad.transcript, allowed).ok());
}

TEST_CASE("terminal placements are public, the rest are hidden") {
  SeededPermutationSource perms(2);
  RunResult r = run_numberlink(fixtures::sparse_puzzle(),
                               fixtures::sparse_filling(), Variant::General,
                               perms);
  int with_faces = 0, without = 0;
  for (const Event& e : r.transcript.events()) {
    if (e.kind != Event::Kind::Place) continue;
    if (e.location.rfind("cell ", 0) != 0) continue;
    if (e.faces.empty())
      ++without;
    else
      ++with_faces;
  }
  CHECK(with_faces == 4);   // the four terminals
  CHECK(without == 21);
}
