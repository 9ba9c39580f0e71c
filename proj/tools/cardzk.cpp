#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cardzk/oracle.hpp"

namespace {

using namespace cardzk;

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << content;
}

bool is_graph_file(const std::string& text) {
  std::istringstream in(text);
  std::string first;
  in >> first;
  return first == "directed" || first == "undirected";
}

struct ProveConfig {
  std::string instance_path;
  std::string solution_path;
  std::string variant = "general";
  uint64_t seed = 1;
  std::string out;
  bool unsafe_reveal_hidden = false;
};

int cmd_prove(const ProveConfig& cfg) {
  Variant variant = variant_from_name(cfg.variant);
  SeededPermutationSource perms(cfg.seed);
  RunOptions opts{cfg.unsafe_reveal_hidden};
  RunResult result;
  if (is_grid_variant(variant)) {
    Puzzle puzzle = parse_puzzle(read_file(cfg.instance_path));
    PathSet paths = parse_paths(read_file(cfg.solution_path), puzzle);
    paths = simplify_paths(std::move(paths), puzzle);
    Filling filling = fill_from_solution(puzzle, paths, variant);
    result = run_numberlink(puzzle, filling, variant, perms, opts);
  } else {
    DppInstance graph = parse_dpp(read_file(cfg.instance_path));
    VertexPathSet paths =
        parse_vertex_paths(read_file(cfg.solution_path), graph);
    paths = simplify_graph_paths(std::move(paths), graph);
    Coloring coloring = greedy_coloring(graph);
    Labeling labeling = fill_from_paths_graph(graph, paths, coloring);
    result = variant == Variant::Ukdpp
                 ? run_ukdpp(graph, labeling, coloring, perms, opts)
                 : run_dkdpp(graph, labeling, coloring, perms, opts);
  }
  if (!cfg.out.empty())
    write_file(cfg.out, result.transcript.to_text(cfg.unsafe_reveal_hidden));
  if (result.accepted) {
    std::cout << "accept\n";
    return kExitAccept;
  }
  std::cout << "reject at " << result.failing_location << "\n";
  return kExitReject;
}

struct CheckConfig {
  std::string instance_path;
  std::string assignment_path;
  std::string variant = "general";
};

int cmd_check(const CheckConfig& cfg) {
  Variant variant = variant_from_name(cfg.variant);
  bool ok;
  if (is_grid_variant(variant)) {
    Puzzle puzzle = parse_puzzle(read_file(cfg.instance_path));
    Filling filling = parse_filling(read_file(cfg.assignment_path), puzzle);
    ok = local_accept_numberlink(puzzle, filling, variant);
  } else {
    DppInstance graph = parse_dpp(read_file(cfg.instance_path));
    Labeling labeling = parse_labeling(read_file(cfg.assignment_path), graph);
    Coloring coloring = greedy_coloring(graph);
    ok = variant == Variant::Ukdpp
             ? local_accept_ukdpp(graph, labeling, coloring)
             : local_accept_dkdpp(graph, labeling, coloring);
  }
  std::cout << (ok ? "accept\n" : "reject\n");
  return ok ? kExitAccept : kExitReject;
}

struct SolveConfig {
  std::string instance_path;
  bool require_cover = false;
  bool force = false;
  std::string out;
};

int cmd_solve(const SolveConfig& cfg) {
  std::string text = read_file(cfg.instance_path);
  std::ostringstream body;
  size_t count = 0;
  if (is_graph_file(text)) {
    DppInstance graph = parse_dpp(text);
    auto solutions = brute_force_dpp(graph, cfg.force);
    count = solutions.size();
    for (size_t i = 0; i < solutions.size(); ++i) {
      if (i > 0) body << '\n';
      body << serialize_vertex_paths(solutions[i]);
    }
  } else {
    Puzzle puzzle = parse_puzzle(text);
    auto solutions =
        brute_force_numberlink(puzzle, cfg.require_cover, cfg.force);
    count = solutions.size();
    for (size_t i = 0; i < solutions.size(); ++i) {
      if (i > 0) body << '\n';
      body << serialize_paths(solutions[i]);
    }
  }
  if (!cfg.out.empty())
    write_file(cfg.out, body.str());
  else
    std::cout << body.str();
  std::cerr << count << " solution(s)\n";
  return count > 0 ? kExitAccept : kExitReject;
}

struct SimulateConfig {
  std::string instance_path;
  std::string variant = "general";
  std::string solution_path;
  uint64_t seed = 1;
  long trials = 20000;
  double significance = 0.001;
  std::string out;
  bool force = false;
  bool plant_bias = false;
};

nlohmann::ordered_json histograms_json(const ObservableHistograms& h) {
  nlohmann::ordered_json out;
  auto dump = [](const std::map<std::string, Histogram>& groups) {
    nlohmann::ordered_json obj;
    for (const auto& [group, hist] : groups) {
      nlohmann::ordered_json entries;
      for (const auto& [key, count] : hist) entries[key] = count;
      obj[group] = std::move(entries);
    }
    return obj;
  };
  out["reveal"] = dump(h.reveal);
  out["row_perm"] = dump(h.row_perm);
  out["col_perm"] = dump(h.col_perm);
  return out;
}

int cmd_simulate(const SimulateConfig& cfg) {
  Variant variant = variant_from_name(cfg.variant);
  std::string text = read_file(cfg.instance_path);

  PublicBoard board;
  std::optional<Puzzle> puzzle;
  std::optional<DppInstance> graph;
  std::optional<Coloring> coloring;
  BoardSpec honest_spec;

  if (is_grid_variant(variant)) {
    puzzle = parse_puzzle(text);
    PathSet paths;
    if (!cfg.solution_path.empty()) {
      paths = parse_paths(read_file(cfg.solution_path), *puzzle);
    } else {
      auto found = brute_force_numberlink(
          *puzzle, variant == Variant::WellDesigned, cfg.force);
      if (found.empty()) throw InstanceError("instance has no solution");
      paths = found.front();
    }
    paths = simplify_paths(std::move(paths), *puzzle);
    Filling filling = fill_from_solution(*puzzle, paths, variant);
    honest_spec = numberlink_board(*puzzle, filling, variant);
    board = numberlink_public_board(*puzzle, variant);
  } else {
    graph = parse_dpp(text);
    coloring = greedy_coloring(*graph);
    VertexPathSet paths;
    if (!cfg.solution_path.empty()) {
      paths = parse_vertex_paths(read_file(cfg.solution_path), *graph);
    } else {
      auto found = brute_force_dpp(*graph, cfg.force);
      if (found.empty()) throw InstanceError("instance has no solution");
      paths = found.front();
    }
    paths = simplify_graph_paths(std::move(paths), *graph);
    Labeling labeling = fill_from_paths_graph(*graph, paths, *coloring);
    honest_spec = variant == Variant::Ukdpp
                      ? ukdpp_board(*graph, labeling, *coloring)
                      : dkdpp_board(*graph, labeling, *coloring);
    board = variant == Variant::Ukdpp ? ukdpp_public_board(*graph, *coloring)
                                      : dkdpp_public_board(*graph, *coloring);
  }

  SeededPermutationSource perms(cfg.seed);
  Rng sim_rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  sim_rng.plant_bias(cfg.plant_bias);

  ObservableHistograms real, simulated;
  std::set<std::string> allowed = public_locations(board);
  long hygiene_violations = 0;
  nlohmann::ordered_json sample_real, sample_simulated;

  for (long trial = 0; trial < cfg.trials; ++trial) {
    ProtocolRun run(honest_spec, perms);
    RunResult result = run.run();
    if (!result.accepted)
      throw InstanceError("honest run rejected at " +
                          result.failing_location);
    real.add(result.transcript);
    hygiene_violations +=
        scan_transcript(result.transcript, allowed).violations;
    if (trial == 0) sample_real = result.transcript.to_json();

    Transcript sim = simulate_transcript(board, sim_rng);
    simulated.add(sim);
    hygiene_violations += scan_transcript(sim, allowed).violations;
    if (trial == 0) sample_simulated = sim.to_json();
  }

  nlohmann::ordered_json comparisons = nlohmann::ordered_json::array();
  bool consistent = true;
  auto compare_kind = [&](const char* kind,
                          const std::map<std::string, Histogram>& a,
                          const std::map<std::string, Histogram>& b) {
    std::set<std::string> groups;
    for (const auto& [g, h] : a) groups.insert(g);
    for (const auto& [g, h] : b) groups.insert(g);
    for (const std::string& group : groups) {
      static const Histogram empty;
      const Histogram& ha = a.count(group) ? a.at(group) : empty;
      const Histogram& hb = b.count(group) ? b.at(group) : empty;
      ComparisonReport r = compare_distributions(ha, hb, cfg.significance);
      consistent = consistent && r.consistent;
      nlohmann::ordered_json obj;
      obj["observable"] = kind;
      obj["group"] = group;
      obj["consistent"] = r.consistent;
      obj["statistic"] = r.statistic;
      obj["p_value"] = r.p_value;
      obj["dof"] = r.dof;
      obj["samples_real"] = r.n_a;
      obj["samples_simulated"] = r.n_b;
      comparisons.push_back(std::move(obj));
    }
  };
  compare_kind("reveal", real.reveal, simulated.reveal);
  compare_kind("row_perm", real.row_perm, simulated.row_perm);
  compare_kind("col_perm", real.col_perm, simulated.col_perm);

  nlohmann::ordered_json report;
  report["trials"] = cfg.trials;
  report["significance"] = cfg.significance;
  report["consistent"] = consistent;
  report["hygiene_violations"] = hygiene_violations;
  report["comparisons"] = std::move(comparisons);
  report["real"] = histograms_json(real);
  report["simulated"] = histograms_json(simulated);
  report["sample_real"] = std::move(sample_real);
  report["sample_simulated"] = std::move(sample_simulated);

  std::string dump = report.dump(2) + "\n";
  if (!cfg.out.empty())
    write_file(cfg.out, dump);
  else
    std::cout << dump;
  std::cerr << (consistent ? "consistent\n" : "inconsistent\n");
  return consistent && hygiene_violations == 0 ? kExitAccept : kExitReject;
}

struct GenConfig {
  int m = 5;
  int n = 5;
  int k = 2;
  uint64_t seed = 1;
  std::string out;
  std::string solution_out;
};

int cmd_gen(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  GeneratedPuzzle gen = gen_numberlink(cfg.m, cfg.n, cfg.k, rng);
  std::string puzzle_text = serialize_puzzle(gen.puzzle);
  std::string solution_text = serialize_paths(gen.solution);
  if (!cfg.out.empty())
    write_file(cfg.out, puzzle_text);
  else
    std::cout << puzzle_text;
  if (!cfg.solution_out.empty())
    write_file(cfg.solution_out, solution_text);
  else
    std::cout << '\n' << solution_text;
  return kExitAccept;
}

struct CardsConfig {
  std::string variant = "general";
  std::string instance_path;
  int m = 0, n = 0, k = 0;
  int vertices = 0, pairs = 0, degree = 0;
};

int cmd_cards(const CardsConfig& cfg) {
  Variant variant = variant_from_name(cfg.variant);
  CardCount count;
  if (!cfg.instance_path.empty()) {
    std::string text = read_file(cfg.instance_path);
    if (is_grid_variant(variant)) {
      Puzzle p = parse_puzzle(text);
      count = card_requirements(variant,
                                GridDims{p.rows(), p.cols(), p.pairs()});
    } else {
      DppInstance g = parse_dpp(text);
      count = card_requirements(
          variant, GraphDims{g.vertex_count(), g.pairs(), g.max_degree()});
    }
  } else if (is_grid_variant(variant)) {
    if (cfg.m < 1 || cfg.n < 1 || cfg.k < 1)
      throw FormatError("grid variants need --m, --n, and --k");
    count = card_requirements(variant, GridDims{cfg.m, cfg.n, cfg.k});
  } else {
    if (cfg.vertices < 1 || cfg.degree < 0)
      throw FormatError("graph variants need --vertices, --pairs, --degree");
    count = card_requirements(variant,
                              GraphDims{cfg.vertices, cfg.pairs, cfg.degree});
  }
  std::cout << "encoding " << count.encoding << "\nmarking " << count.marking
            << "\n";
  return kExitAccept;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"card-based zero-knowledge proofs for Numberlink and "
               "vertex-disjoint paths"};
  app.require_subcommand(1);

  ProveConfig prove;
  auto* prove_cmd =
      app.add_subcommand("prove", "run the full protocol on a solution");
  prove_cmd->add_option("instance", prove.instance_path)->required();
  prove_cmd->add_option("solution", prove.solution_path)->required();
  prove_cmd->add_option("--variant", prove.variant,
                        "well-designed|general|ukdpp|dkdpp");
  prove_cmd->add_option("--seed", prove.seed);
  prove_cmd->add_option("--out", prove.out, "transcript output path");
  prove_cmd->add_flag("--unsafe-reveal-hidden", prove.unsafe_reveal_hidden,
                      "write the sealed shuffle log into the transcript");

  CheckConfig check;
  auto* check_cmd = app.add_subcommand(
      "check", "evaluate the card-free acceptance predicate");
  check_cmd->add_option("instance", check.instance_path)->required();
  check_cmd->add_option("assignment", check.assignment_path,
                        "filling or labeling file")
      ->required();
  check_cmd->add_option("--variant", check.variant);

  SolveConfig solve;
  auto* solve_cmd =
      app.add_subcommand("solve", "brute-force all solutions (desk scale)");
  solve_cmd->add_option("instance", solve.instance_path)->required();
  solve_cmd->add_flag("--require-cover", solve.require_cover,
                      "only solutions covering every cell");
  solve_cmd->add_flag("--force", solve.force, "override the size guard");
  solve_cmd->add_option("--out", solve.out);

  SimulateConfig simulate;
  auto* sim_cmd = app.add_subcommand(
      "simulate", "compare real and simulated transcript observables");
  sim_cmd->add_option("instance", simulate.instance_path)->required();
  sim_cmd->add_option("--variant", simulate.variant);
  sim_cmd->add_option("--solution", simulate.solution_path,
                      "witness paths; brute-forced when omitted");
  sim_cmd->add_option("--seed", simulate.seed);
  sim_cmd->add_option("--trials", simulate.trials);
  sim_cmd->add_option("--significance", simulate.significance);
  sim_cmd->add_option("--out", simulate.out, "report output path");
  sim_cmd->add_flag("--force", simulate.force, "override the size guard");
  sim_cmd->add_flag("--plant-bias", simulate.plant_bias,
                    "test hook: bias the simulator's randomness");

  GenConfig gen;
  auto* gen_cmd =
      app.add_subcommand("gen", "generate a solvable puzzle and its solution");
  gen_cmd->add_option("--m", gen.m)->required();
  gen_cmd->add_option("--n", gen.n)->required();
  gen_cmd->add_option("--k", gen.k)->required();
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--out", gen.out, "puzzle output path");
  gen_cmd->add_option("--solution-out", gen.solution_out);

  CardsConfig cards;
  auto* cards_cmd =
      app.add_subcommand("cards", "card counts a variant requires");
  cards_cmd->add_option("instance", cards.instance_path,
                        "derive dimensions from an instance file");
  cards_cmd->add_option("--variant", cards.variant);
  cards_cmd->add_option("--m", cards.m);
  cards_cmd->add_option("--n", cards.n);
  cards_cmd->add_option("--k", cards.k);
  cards_cmd->add_option("--vertices", cards.vertices);
  cards_cmd->add_option("--pairs", cards.pairs);
  cards_cmd->add_option("--degree", cards.degree);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (prove_cmd->parsed()) return cmd_prove(prove);
    if (check_cmd->parsed()) return cmd_check(check);
    if (solve_cmd->parsed()) return cmd_solve(solve);
    if (sim_cmd->parsed()) return cmd_simulate(simulate);
    if (gen_cmd->parsed()) return cmd_gen(gen);
    if (cards_cmd->parsed()) return cmd_cards(cards);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
