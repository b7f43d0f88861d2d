// End-to-end acceptance suite: one pass/fail line per criterion.
// Exit status is nonzero iff any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gridcycle/game.hpp"
#include "gridcycle/grid.hpp"
#include "gridcycle/verifier.hpp"

using namespace gridcycle;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", number,
              name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, value);
  return buf;
}

// Criterion 1: exhaustive block certification with time bounds.
void criterion_block_certification() {
  bool ok = true;
  std::string detail;

  struct Case {
    BlockKind kind;
    VerifyMode mode;
    double fraction;
    uint64_t orders;
    double limit;
  };
  const Case cases[] = {
      {BlockKind::B2x2, VerifyMode::Both, 1.0, 24, 1.0},
      {BlockKind::B2x3, VerifyMode::Both, 1.0, 720, 5.0},
      {BlockKind::B3x2, VerifyMode::Both, 1.0, 720, 5.0},
      {BlockKind::B3x3, VerifyMode::Witnesses, 1.0, 362880, 120.0},
      {BlockKind::B3x3, VerifyMode::Oracle, 0.01, 362880, 120.0},
  };
  for (const Case& c : cases) {
    SweepReport r = verify_block_exhaustive(c.kind, c.mode, c.fraction, 1);
    bool case_ok = r.ok() && r.orders_checked == c.orders &&
                   r.wall_seconds < c.limit;
    if (!case_ok) ok = false;
    if (!detail.empty()) detail += ", ";
    detail += std::string(block_kind_name(c.kind)) + " " +
              std::to_string(r.failures.size()) + "f/" +
              fmt("%.1fs", r.wall_seconds);
  }
  report(1, "exhaustive block certification", ok, detail);
}

// Criterion 2: composed certification over all dims in 2..7 x 2..7.
void criterion_composed_certification() {
  auto start = std::chrono::steady_clock::now();
  uint64_t failures = 0;
  for (int rows = 2; rows <= 7; ++rows)
    for (int cols = 2; cols <= 7; ++cols)
      failures += verify_grid_random({rows, cols}, 1000, 42).failures.size();
  double elapsed = seconds_since(start);
  report(2, "composed certification, 36 grids x 1000 orders",
         failures == 0 && elapsed < 600.0,
         std::to_string(failures) + " failures, " + fmt("%.1f s", elapsed));
}

// Criterion 3: every provided algorithm reads all m*n cells and is
// correct on both final branches.
void criterion_theorem_reproduction() {
  std::vector<std::pair<std::string, AlgorithmFactory>> algorithms;
  algorithms.emplace_back("union-find", union_find_scanner());
  algorithms.emplace_back("dfs", dfs_region_detector());
  for (uint64_t seed = 1; seed <= 5; ++seed)
    algorithms.emplace_back("random-order/" + std::to_string(seed),
                            random_order_scanner(seed));
  int games = 0, bad = 0;
  for (int rows = 2; rows <= 7; ++rows) {
    for (int cols = 2; cols <= 7; ++cols) {
      for (const auto& [name, factory] : algorithms) {
        GameTranscript t =
            run_game(factory, {rows, cols}, FinalChoicePolicy::ForkBoth);
        ++games;
        if (t.query_count != rows * cols ||
            t.verdict != Verdict::CorrectBothBranches)
          ++bad;
      }
    }
  }
  report(3, "theorem reproduction: query_count = m*n for all algorithms",
         bad == 0, std::to_string(games) + " games, " + std::to_string(bad) +
                       " deviations");
}

// Criterion 4: early answers lose for every k < m*n, both polarities,
// with a verified counterexample.
void criterion_defeat_demonstration() {
  int games = 0, bad = 0;
  for (int rows = 2; rows <= 5; ++rows) {
    for (int cols = 2; cols <= 5; ++cols) {
      for (int k = 0; k < rows * cols; ++k) {
        for (bool claim : {true, false}) {
          GameTranscript t = run_game(early_answer_scanner(k, claim),
                                      {rows, cols},
                                      FinalChoicePolicy::ForkBoth);
          ++games;
          bool game_ok = t.verdict == Verdict::DefeatedEarlyAnswer &&
                         t.query_count == k && t.witness_cyclic &&
                         t.witness_acyclic;
          if (game_ok) {
            const Grid& counterexample =
                claim ? *t.witness_acyclic : *t.witness_cyclic;
            game_ok = has_cycle(counterexample) != claim;
          }
          if (!game_ok) ++bad;
        }
      }
    }
  }
  report(4, "early answers defeated with verified counterexamples", bad == 0,
         std::to_string(games) + " games, " + std::to_string(bad) +
             " deviations");
}

// Criterion 5: dual-route cycle detection agreement plus oracle
// consistency on full grids.
void criterion_oracle_cross_validation() {
  uint64_t checks = 0, bad = 0;

  // Exhaustive: all two-symbol grids with at most nine cells.
  for (int rows = 1; rows <= 9; ++rows) {
    for (int cols = 1; rows * cols <= 9; ++cols) {
      int n = rows * cols;
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<Symbol> cells(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) cells[i] = (mask >> i) & 1 ? 'b' : 'a';
        Grid g({rows, cols}, cells);
        ++checks;
        if (has_cycle(g) != has_cycle_dfs(g)) ++bad;
      }
    }
  }

  // Randomized: 10,000 four-symbol grids up to 6x6.
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10000; ++trial) {
    GridDims d{2 + static_cast<int>(rng() % 5),
               2 + static_cast<int>(rng() % 5)};
    std::vector<Symbol> cells(static_cast<size_t>(d.cell_count()));
    for (auto& c : cells) c = static_cast<Symbol>('a' + rng() % 4);
    Grid g(d, std::move(cells));
    ++checks;
    if (has_cycle(g) != has_cycle_dfs(g)) ++bad;
  }

  // Oracle on a full grid equals has_cycle.
  for (int trial = 0; trial < 500; ++trial) {
    GridDims d{2 + static_cast<int>(rng() % 4),
               2 + static_cast<int>(rng() % 4)};
    PartialGrid p(d);
    for (int r = 0; r < d.rows; ++r)
      for (int c = 0; c < d.cols; ++c)
        p.set({r, c}, static_cast<Symbol>('a' + rng() % 3));
    Grid g = complete(p, {});
    AmbiguityReport rep = ambiguity_oracle(p, {});
    ++checks;
    if (rep.cyclic_completion_exists != has_cycle(g) ||
        rep.acyclic_completion_exists == has_cycle(g))
      ++bad;
  }

  report(5, "union-find vs dfs vs enumeration oracle agreement", bad == 0,
         std::to_string(checks) + " checks, " + std::to_string(bad) +
             " disagreements");
}

// Criterion 6: the six concrete figure grids.
void criterion_figure_fixtures() {
  const std::pair<const char*, bool> fixtures[] = {
      {"aa\naa", true},           // 2x2, all primary: cycle
      {"aa\nab", false},          // 2x2, one breaker: no cycle
      {"aaa\naba\naaa", true},    // 3x3 case 1, last boundary primary
      {"aaa\naba\naab", false},   // 3x3 case 1, last boundary breaker
      {"aaa\naaa\nbaa", true},    // 3x3 case 2, center primary
      {"aaa\naba\nbaa", false},   // 3x3 case 2, center breaker
      {"ab\naa\naa", true},       // 3x2, top pair done, last primary
      {"ab\naa\nab", false},      // 3x2, top pair done, last breaker
      {"aa\naa\nab", true},       // 3x2, bottom pair done, last primary
      {"ba\naa\nab", false},      // 3x2, bottom pair done, last breaker
  };
  int bad = 0;
  for (const auto& [text, expect] : fixtures)
    if (has_cycle(parse_grid(text)) != expect) ++bad;
  report(6, "figure fixtures reproduce their stated outcomes", bad == 0,
         std::to_string(std::size(fixtures)) + " fixtures, " +
             std::to_string(bad) + " mismatches");
}

// Criterion 7: tiling properties for all dims up to 12x12.
void criterion_tiling_properties() {
  int bad = 0, grids = 0;
  for (int rows = 2; rows <= 12; ++rows) {
    for (int cols = 2; cols <= 12; ++cols) {
      ++grids;
      Tiling t = Tiling::make({rows, cols});
      int row_sum = 0, col_sum = 0;
      for (int b : t.row_bands()) row_sum += b;
      for (int b : t.col_bands()) col_sum += b;
      bool ok = row_sum == rows && col_sum == cols;

      std::vector<int> cover(static_cast<size_t>(rows) * cols, 0);
      for (const BlockSpec& b : t.blocks()) {
        GridDims bd = block_dims(b.kind);
        for (int r = 0; r < bd.rows; ++r)
          for (int c = 0; c < bd.cols; ++c) {
            Cell g{b.origin.row + r, b.origin.col + c};
            if (!in_range(g, t.dims()))
              ok = false;
            else
              ++cover[cell_index(g, t.dims())];
          }
      }
      for (int count : cover)
        if (count != 1) ok = false;

      for (const BlockSpec& b : t.blocks()) {
        if (b.band_col + 1 < t.band_cols() &&
            b.alphabet == t.block_at(b.band_row, b.band_col + 1).alphabet)
          ok = false;
        if (b.band_row + 1 < t.band_rows() &&
            b.alphabet == t.block_at(b.band_row + 1, b.band_col).alphabet)
          ok = false;
      }
      if (!ok) ++bad;
    }
  }
  report(7, "tiling partition, band sums, and alphabet disjointness",
         bad == 0, std::to_string(grids) + " tilings, " + std::to_string(bad) +
                       " violations");
}

}  // namespace

int main() {
  criterion_block_certification();
  criterion_composed_certification();
  criterion_theorem_reproduction();
  criterion_defeat_demonstration();
  criterion_oracle_cross_validation();
  criterion_figure_fixtures();
  criterion_tiling_properties();
  std::printf("%s\n", g_failures == 0 ? "ALL CRITERIA PASSED"
                                      : "CRITERIA FAILED");
  return g_failures == 0 ? 0 : 1;
}
