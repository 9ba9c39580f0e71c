#include <doctest.h>

#include "fixtures.hpp"
#include "helpers.hpp"

using namespace cardzk;

TEST_CASE("the predicate accepts the worked fillings") {
  CHECK(local_accept_numberlink(fixtures::covered_puzzle(),
                                fixtures::covered_filling(),
                                Variant::WellDesigned));
  CHECK(local_accept_numberlink(fixtures::sparse_puzzle(),
                                fixtures::sparse_filling(),
                                Variant::General));
  CHECK(local_accept_numberlink(fixtures::straight_puzzle(),
                                fixtures::straight_overfill(),
                                Variant::WellDesigned));
}

TEST_CASE("a filler on the wrong parity needs real neighbors") {
  Filling f = fixtures::sparse_filling();
  f.set({1, 1}, 4);  // an even cell claiming the odd filler
  CHECK(!local_accept_numberlink(fixtures::sparse_puzzle(), f,
                                 Variant::General));
}

TEST_CASE("protocol decision equals the predicate on every tiny puzzle") {
  long runs = 0;
  helpers::for_each_small_puzzle([&](const Puzzle& p) {
    helpers::for_each_filling(p, 3, [&](const Filling& f) {
      bool expect = local_accept_numberlink(p, f, Variant::General);
      for (uint64_t seed = 1; seed <= 5; ++seed) {
        SeededPermutationSource perms(seed);
        RunResult r = run_numberlink(p, f, Variant::General, perms);
        CHECK(r.accepted == expect);
        ++runs;
      }
      if (expect) CHECK(extract_solution(p, f).has_value());
    });
  });
  CHECK(runs == 5 * (1 * 1 + 3 * 3 + 6 * 9 + 15 * 81));
}

TEST_CASE("protocol decision equals the predicate on random 4x4 fillings") {
  Puzzle p = parse_puzzle("4 4 2\n1 . . 2\n. . . .\n. . . .\n2 . . 1\n");
  Rng rng(321);
  for (int trial = 0; trial < 1000; ++trial) {
    Filling f = helpers::random_filling(p, 4, rng);
    bool expect = local_accept_numberlink(p, f, Variant::General);
    for (uint64_t seed = 1; seed <= 5; ++seed) {
      SeededPermutationSource perms(1000 * trial + seed);
      RunResult r = run_numberlink(p, f, Variant::General, perms);
      CHECK(r.accepted == expect);
    }
    if (expect) CHECK(extract_solution(p, f).has_value());
  }
}

TEST_CASE("graph decisions equal their predicates on random labelings") {
  Rng rng(55);
  for (int trial = 0; trial < 60; ++trial) {
    bool directed = trial % 2 == 0;
    GeneratedDpp gen = gen_dpp(directed, 7, 2, 4, rng);
    Coloring c = greedy_coloring(gen.instance);
    for (int round = 0; round < 8; ++round) {
      Labeling l = helpers::random_labeling(gen.instance, rng);
      bool expect = directed ? local_accept_dkdpp(gen.instance, l, c)
                             : local_accept_ukdpp(gen.instance, l, c);
      for (uint64_t seed = 1; seed <= 3; ++seed) {
        SeededPermutationSource perms(seed);
        RunResult r = directed ? run_dkdpp(gen.instance, l, c, perms)
                               : run_ukdpp(gen.instance, l, c, perms);
        CHECK(r.accepted == expect);
      }
    }
    // the honest labeling is always accepted
    VertexPathSet simple = simplify_graph_paths(gen.solution, gen.instance);
    Labeling honest = fill_from_paths_graph(gen.instance, simple, c);
    SeededPermutationSource perms(trial + 1);
    RunResult r = directed ? run_dkdpp(gen.instance, honest, c, perms)
                           : run_ukdpp(gen.instance, honest, c, perms);
    CHECK(r.accepted);
  }
}

TEST_CASE("ukdpp predicate worked examples") {
  DppInstance path4(false, 4, {{1, 2}, {2, 3}, {3, 4}}, {{1, 4}});
  Coloring c = greedy_coloring(path4);
  Labeling honest = fill_from_paths_graph(path4, {{1, 2, 3, 4}}, c);
  CHECK(local_accept_ukdpp(path4, honest, c));

  // an uncovered vertex wearing a neighbor's filler label
  DppInstance pair(false, 4, {{1, 2}, {3, 4}}, {{1, 2}});
  Coloring cp = greedy_coloring(pair);
  Labeling bad{{1, 1, 1 + cp.of(4), 1 + cp.of(4)}};
  CHECK(cp.of(3) != cp.of(4));
  CHECK(!local_accept_ukdpp(pair, bad, cp));

  // no pairs: every labeling by color is vacuously accepted
  DppInstance empty(false, 3, {}, {});
  Coloring ce = greedy_coloring(empty);
  Labeling le{{1, 1, 1}};
  CHECK(local_accept_ukdpp(empty, le, ce));
}

TEST_CASE("dkdpp predicate worked examples") {
  DppInstance g(true, 3, {{1, 2}, {2, 3}}, {{1, 3}});
  Coloring c = greedy_coloring(g);
  CHECK(local_accept_dkdpp(g, Labeling{{1, 1, 1}}, c));

  DppInstance loop(true, 3, {{1, 2}, {2, 3}, {3, 1}}, {{1, 3}});
  Coloring cl = greedy_coloring(loop);
  CHECK(!local_accept_dkdpp(loop, Labeling{{1, 1, 1}}, cl));

  // a filler-labeled vertex with a matching neighbor fails
  DppInstance h(true, 4, {{1, 2}, {2, 3}, {3, 4}}, {{1, 2}});
  Coloring ch = greedy_coloring(h);
  REQUIRE(ch.of(3) == 1);
  CHECK(local_accept_dkdpp(h, Labeling{{1, 1, 2, 3}}, ch));
  // vertex 3 carries its own filler (2) but vertex 4 now matches it
  CHECK(!local_accept_dkdpp(h, Labeling{{1, 1, 2, 2}}, ch));
}

TEST_CASE("brute force finds the documented solution sets") {
  SUBCASE("the covering search on the four-pair puzzle") {
    auto solutions =
        brute_force_numberlink(fixtures::covered_puzzle(), true, true);
    REQUIRE(solutions.size() == 1);
    CHECK(normalize_paths(solutions[0]) ==
          normalize_paths(fixtures::covered_solution()));
  }
  SUBCASE("a 1x2 grid has exactly the direct connection") {
    Puzzle p = parse_puzzle("1 2 1\n1 1\n");
    auto solutions = brute_force_numberlink(p, false);
    REQUIRE(solutions.size() == 1);
    CHECK(solutions[0] == PathSet{{{1, 1}, {1, 2}}});
  }
  SUBCASE("interleaved pairs on one row cannot be joined") {
    Puzzle p = parse_puzzle("1 4 2\n1 2 1 2\n");
    CHECK(brute_force_numberlink(p, false).empty());
  }
}

TEST_CASE("brute force on graphs") {
  DppInstance cycle(false, 4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {{1, 3}});
  CHECK(brute_force_dpp(cycle).size() == 2);

  DppInstance crossing(false, 4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}},
                       {{1, 3}, {2, 4}});
  CHECK(brute_force_dpp(crossing).empty());

  DppInstance edge(false, 2, {{1, 2}}, {{1, 2}});
  auto solutions = brute_force_dpp(edge);
  REQUIRE(solutions.size() == 1);
  CHECK(solutions[0] == VertexPathSet{{1, 2}});
}

TEST_CASE("size guards refuse big searches unless overridden") {
  Rng rng(3);
  GeneratedPuzzle big = gen_numberlink(5, 5, 2, rng);
  CHECK_THROWS_AS(brute_force_numberlink(big.puzzle, false), SizeGuardError);
  CHECK_NOTHROW(brute_force_numberlink(big.puzzle, false, true));

  GeneratedDpp gig = gen_dpp(false, 11, 1, 4, rng);
  CHECK_THROWS_AS(brute_force_dpp(gig.instance), SizeGuardError);
  CHECK_NOTHROW(brute_force_dpp(gig.instance, true));
}

TEST_CASE("solvability concordance on the canonical 2x3 instance") {
  Puzzle p = parse_puzzle("2 3 1\n1 . .\n. . 1\n");
  bool any_accepted = false;
  helpers::for_each_filling(p, 3, [&](const Filling& f) {
    any_accepted =
        any_accepted || local_accept_numberlink(p, f, Variant::General);
  });
  CHECK(any_accepted == !brute_force_numberlink(p, false).empty());
  CHECK(any_accepted);
}

TEST_CASE("compare_distributions") {
  SUBCASE("identical sample sets are consistent with statistic zero") {
    Histogram h{{"a", 500}, {"b", 250}, {"c", 250}};
    ComparisonReport r = compare_distributions(h, h, 0.001);
    CHECK(r.consistent);
    CHECK(r.statistic == doctest::Approx(0.0));
    CHECK(r.support_equal);
  }
  SUBCASE("uniform against point mass is inconsistent") {
    Histogram uniform{{"a", 250}, {"b", 250}, {"c", 250}, {"d", 250}};
    Histogram point{{"a", 1000}};
    ComparisonReport r = compare_distributions(uniform, point, 0.001);
    CHECK(!r.consistent);
    CHECK(!r.support_equal);
    CHECK(r.statistic > 100.0);
  }
  SUBCASE("empty histograms are trivially consistent") {
    ComparisonReport r = compare_distributions({}, {}, 0.001);
    CHECK(r.consistent);
    CHECK(r.statistic == doctest::Approx(0.0));
  }
  SUBCASE("independent uniform draws are consistent in 99% of meta-trials") {
    Rng rng(1010);
    int consistent = 0;
    const int meta_trials = 200;
    for (int t = 0; t < meta_trials; ++t) {
      Histogram a, b;
      for (int i = 0; i < 20000; ++i) {
        ++a[std::to_string(rng.below(6))];
        ++b[std::to_string(rng.below(6))];
      }
      if (compare_distributions(a, b, 0.001).consistent) ++consistent;
    }
    CHECK(consistent >= meta_trials * 99 / 100);
  }
}

TEST_CASE("generated puzzles prove with their own solutions") {
  Rng rng(888);
  for (int trial = 0; trial < 25; ++trial) {
    GeneratedPuzzle gen = gen_numberlink(3 + trial % 4, 3 + trial % 3,
                                         1 + trial % 3, rng);
    // text round trip
    Puzzle reparsed = parse_puzzle(serialize_puzzle(gen.puzzle));
    CHECK(serialize_puzzle(reparsed) == serialize_puzzle(gen.puzzle));
    PathSet simple = simplify_paths(gen.solution, gen.puzzle);
    Filling f = fill_from_solution(gen.puzzle, simple, Variant::General);
    SeededPermutationSource perms(trial);
    CHECK(run_numberlink(gen.puzzle, f, Variant::General, perms).accepted);
  }
}

TEST_CASE("the 1x2 generator output is the unique tiny instance") {
  Rng rng(1);
  GeneratedPuzzle gen = gen_numberlink(1, 2, 1, rng);
  CHECK(serialize_puzzle(gen.puzzle) == "1 2 1\n1 1\n");
  CHECK(gen.solution == PathSet{{{1, 1}, {1, 2}}});
}
