#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "gridcycle/composer.hpp"
#include "gridcycle/game.hpp"
#include "gridcycle/grid.hpp"
#include "gridcycle/verifier.hpp"

namespace gc = gridcycle;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // verification failure / defeat
constexpr int kExitUsage = 2;    // usage or parse error

gc::Grid load_grid(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return gc::parse_grid(buf.str());
}

int cmd_detect(const std::string& input) {
  gc::Grid grid = load_grid(input);
  std::cout << (gc::has_cycle(grid) ? "cycle" : "no-cycle") << "\n";
  return kExitOk;
}

gc::AlgorithmFactory algorithm_by_name(const std::string& name,
                                       uint64_t seed) {
  if (name == "union-find") return gc::union_find_scanner();
  if (name == "dfs") return gc::dfs_region_detector();
  if (name == "random-order") return gc::random_order_scanner(seed);
  throw CLI::ValidationError("unknown algorithm: " + name);
}

int cmd_simulate(int rows, int cols, const std::string& algorithm,
                 uint64_t seed, const std::string& policy,
                 const std::string& trace_path) {
  gc::FinalChoicePolicy pol = policy == "cycle"
                                  ? gc::FinalChoicePolicy::ForceCycle
                              : policy == "acyclic"
                                  ? gc::FinalChoicePolicy::ForceAcyclic
                                  : gc::FinalChoicePolicy::ForkBoth;
  gc::GameTranscript t = gc::run_game(algorithm_by_name(algorithm, seed),
                                      {rows, cols}, pol);
  std::cout << t.query_count << " " << gc::verdict_name(t.verdict) << "\n";
  if (!trace_path.empty()) {
    std::ofstream out(trace_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + trace_path);
    out << gc::serialize_transcript(t) << "\n";
  }
  bool ok = t.verdict == gc::Verdict::CorrectBothBranches ||
            t.verdict == gc::Verdict::CorrectForcedBranch;
  return ok ? kExitOk : kExitFailure;
}

int report_outcome(const gc::SweepReport& report) {
  std::cout << gc::render_report(report);
  return report.ok() ? kExitOk : kExitFailure;
}

int cmd_verify_block(const std::string& size, const std::string& mode,
                     double sample, uint64_t seed) {
  gc::BlockKind kind;
  if (size == "2x2") kind = gc::BlockKind::B2x2;
  else if (size == "2x3") kind = gc::BlockKind::B2x3;
  else if (size == "3x2") kind = gc::BlockKind::B3x2;
  else if (size == "3x3") kind = gc::BlockKind::B3x3;
  else throw CLI::ValidationError("unknown block size: " + size);
  gc::VerifyMode m = mode == "witnesses" ? gc::VerifyMode::Witnesses
                     : mode == "oracle"  ? gc::VerifyMode::Oracle
                                         : gc::VerifyMode::Both;
  return report_outcome(gc::verify_block_exhaustive(kind, m, sample, seed));
}

int cmd_verify_grid(int rows, int cols, uint64_t orders, uint64_t seed,
                    bool oracle_crosscheck) {
  return report_outcome(gc::verify_grid_random({rows, cols}, orders, seed,
                                               oracle_crosscheck));
}

int cmd_tile(int rows, int cols) {
  gc::Tiling t = gc::Tiling::make({rows, cols});
  auto render_bands = [](const std::vector<int>& bands) {
    std::string out = "[";
    for (size_t i = 0; i < bands.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(bands[i]);
    }
    return out + "]";
  };
  std::cout << "rows " << rows << " = " << render_bands(t.row_bands())
            << "\ncols " << cols << " = " << render_bands(t.col_bands())
            << "\n";
  for (int br = 0; br < t.band_rows(); ++br) {
    for (int bc = 0; bc < t.band_cols(); ++bc) {
      const gc::BlockSpec& b = t.block_at(br, bc);
      if (bc) std::cout << "  ";
      std::cout << gc::block_kind_name(b.kind) << "@(" << b.origin.row << ","
                << b.origin.col << "){" << b.alphabet.primary << ","
                << b.alphabet.breaker << "}";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

void render_partial(const gc::PartialGrid& g) {
  for (int r = 0; r < g.dims().rows; ++r) {
    for (int c = 0; c < g.dims().cols; ++c) {
      auto s = g.at({r, c});
      std::cout << (s ? *s : '.');
    }
    std::cout << "\n";
  }
}

int cmd_play(int rows, int cols, uint64_t seed, const std::string& policy) {
  gc::ComposedAdversary adv{gc::Tiling::make({rows, cols})};
  gc::PartialGrid observed({rows, cols});
  std::mt19937_64 rng(seed);

  std::cout << "Cycle-detection game on a " << rows << "x" << cols
            << " grid.\n"
            << "Enter \"r c\" (0-based) to read a cell, \"yes\"/\"no\" to "
               "answer whether the grid has a cycle, \"q\" to quit.\n";
  std::string line;
  while (std::cout << "> " << std::flush, std::getline(std::cin, line)) {
    std::istringstream in(line);
    std::string word;
    if (!(in >> word)) continue;

    if (word == "q") break;

    if (word == "yes" || word == "no") {
      bool claim = word == "yes";
      if (observed.unread_count() > 0 && !adv.final_pending()) {
        auto w = adv.witnesses();
        const gc::Grid& counterexample = claim ? w.acyclic : w.cyclic;
        std::cout << "You are defeated by this completion:\n"
                  << gc::serialize_grid(counterexample)
                  << "(it has " << (claim ? "no cycle" : "a cycle")
                  << " but agrees with everything you read)\n";
        return kExitFailure;
      }
      bool truth = gc::has_cycle(adv.realized_grid());
      std::cout << "The grid " << (truth ? "has a" : "has no") << " cycle. You "
                << (claim == truth ? "are right." : "are wrong.") << "\n";
      return claim == truth ? kExitOk : kExitFailure;
    }

    int r, c;
    std::istringstream nums(line);
    if (!(nums >> r >> c)) {
      std::cout << "Could not parse that; try \"r c\", \"yes\", \"no\" or "
                   "\"q\".\n";
      continue;
    }
    if (r < 0 || r >= rows || c < 0 || c >= cols) {
      std::cout << "Cell out of range.\n";
      continue;
    }
    if (observed.is_read({r, c})) {
      std::cout << "Cell already read.\n";
      continue;
    }
    auto reply = adv.respond({r, c});
    gc::Symbol sym;
    if (const auto* s = std::get_if<gc::Symbol>(&reply)) {
      sym = *s;
    } else {
      bool cycle_branch = policy == "cycle" ||
                          (policy == "random" && rng() % 2 == 0);
      sym = adv.commit_final(cycle_branch ? gc::FinalDecision::Cycle
                                          : gc::FinalDecision::Acyclic);
      std::cout << "(final cell: the adversary settles the grid)\n";
    }
    observed.set({r, c}, sym);
    render_partial(observed);
  }
  std::cout << "Session over after " << observed.read_count() << " of "
            << rows * cols << " reads.\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive-adversary toolkit for grid-graph cycle detection"};
  app.require_subcommand(1);

  // detect
  auto* detect = app.add_subcommand("detect", "Decide cycle existence for a "
                                              "grid file");
  std::string detect_input;
  detect->add_option("--input", detect_input, "grid file")->required();

  // simulate
  auto* simulate =
      app.add_subcommand("simulate", "Play an algorithm against the adversary");
  int sim_rows = 0, sim_cols = 0;
  std::string sim_algorithm, sim_policy = "fork", sim_trace;
  uint64_t sim_seed = 0;
  simulate->add_option("--rows", sim_rows)->required();
  simulate->add_option("--cols", sim_cols)->required();
  simulate->add_option("--algorithm", sim_algorithm, "union-find|dfs|random-order")
      ->required();
  simulate->add_option("--seed", sim_seed);
  simulate->add_option("--policy", sim_policy, "fork|cycle|acyclic")
      ->check(CLI::IsMember({"fork", "cycle", "acyclic"}));
  simulate->add_option("--trace", sim_trace, "write transcript here");

  // verify block / verify grid
  auto* verify = app.add_subcommand("verify", "Certify the adversary property");
  verify->require_subcommand(1);
  auto* vblock = verify->add_subcommand("block", "Exhaustive per-block sweep");
  std::string vb_size, vb_mode = "both";
  double vb_sample = 1.0;
  uint64_t vb_seed = 0;
  vblock->add_option("--size", vb_size, "2x2|2x3|3x2|3x3")->required();
  vblock->add_option("--mode", vb_mode, "witnesses|oracle|both")
      ->check(CLI::IsMember({"witnesses", "oracle", "both"}));
  vblock->add_option("--sample", vb_sample,
                     "fraction of orders for oracle checks");
  vblock->add_option("--seed", vb_seed);
  auto* vgrid = verify->add_subcommand("grid", "Randomized composed sweep");
  int vg_rows = 0, vg_cols = 0;
  uint64_t vg_orders = 100, vg_seed = 0;
  bool vg_oracle = false;
  vgrid->add_option("--rows", vg_rows)->required();
  vgrid->add_option("--cols", vg_cols)->required();
  vgrid->add_option("--orders", vg_orders);
  vgrid->add_option("--seed", vg_seed);
  vgrid->add_flag("--oracle-crosscheck", vg_oracle,
                  "also brute-force small prefixes");

  // tile
  auto* tile = app.add_subcommand("tile", "Show band decomposition and block "
                                          "map");
  int tile_rows = 0, tile_cols = 0;
  tile->add_option("--rows", tile_rows)->required();
  tile->add_option("--cols", tile_cols)->required();

  // play
  auto* play = app.add_subcommand("play", "Interactive game against the "
                                          "adversary");
  int play_rows = 0, play_cols = 0;
  uint64_t play_seed = 0;
  std::string play_policy = "random";
  play->add_option("--rows", play_rows)->required();
  play->add_option("--cols", play_cols)->required();
  play->add_option("--seed", play_seed);
  play->add_option("--policy", play_policy, "random|cycle|acyclic")
      ->check(CLI::IsMember({"random", "cycle", "acyclic"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*detect) return cmd_detect(detect_input);
    if (*simulate)
      return cmd_simulate(sim_rows, sim_cols, sim_algorithm, sim_seed,
                          sim_policy, sim_trace);
    if (*vblock) return cmd_verify_block(vb_size, vb_mode, vb_sample, vb_seed);
    if (*vgrid)
      return cmd_verify_grid(vg_rows, vg_cols, vg_orders, vg_seed, vg_oracle);
    if (*tile) return cmd_tile(tile_rows, tile_cols);
    if (*play) return cmd_play(play_rows, play_cols, play_seed, play_policy);
  } catch (const gc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
