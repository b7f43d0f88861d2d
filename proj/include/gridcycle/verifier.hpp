#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gridcycle/block_adversary.hpp"
#include "gridcycle/composer.hpp"
#include "gridcycle/grid.hpp"

namespace gridcycle {

/// Independent cycle check by depth-first search (back edge to a
/// non-parent vertex). Cross-validates the union-find route.
bool has_cycle_dfs(const Grid& grid);

/// Raised when an enumeration would exceed its completion budget; the
/// oracle never returns a partial answer.
class OracleBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AmbiguityReport {
  int prefix_length = 0;
  bool cyclic_completion_exists = false;
  bool acyclic_completion_exists = false;
  std::optional<Grid> cyclic_example;
  std::optional<Grid> acyclic_example;
};

/// Exhaustively enumerates every completion of the unread cells over
/// the given per-cell alphabets and reports whether cyclic and acyclic
/// completions exist. `per_cell_alphabet` must cover exactly the
/// unread cells.
AmbiguityReport ambiguity_oracle(
    const PartialGrid& partial,
    const std::map<Cell, std::vector<Symbol>>& per_cell_alphabet,
    uint64_t budget = uint64_t{1} << 20);

struct SweepFailure {
  uint64_t order_index = 0;
  int prefix_length = 0;
  std::string what;
};

struct SweepReport {
  std::string subject;
  uint64_t orders_checked = 0;
  uint64_t prefixes_checked = 0;
  std::vector<SweepFailure> failures;
  double wall_seconds = 0.0;

  bool ok() const { return failures.empty(); }
};

std::string render_report(const SweepReport& report);

enum class VerifyMode { Witnesses, Oracle, Both };

/// Sweeps every permutation of the block's cells (lexicographic over
/// row-major indices). Per proper prefix, Witnesses checks the
/// adversary's two fills under has_cycle and Oracle brute-forces all
/// {primary,breaker} completions; at the final cell both commit
/// branches are checked. `oracle_fraction` < 1 samples a seeded subset
/// of orders for the oracle checks.
SweepReport verify_block_exhaustive(BlockKind kind, VerifyMode mode,
                                    double oracle_fraction = 1.0,
                                    uint64_t seed = 0);

/// Plays `num_orders` seeded random query orders against fresh
/// composed adversaries, checking both witnesses after every proper
/// prefix, cross-block edge isolation, and both global final branches.
/// With `oracle_crosscheck`, prefixes small enough for the budget are
/// also checked by exhaustive enumeration.
SweepReport verify_grid_random(GridDims dims, uint64_t num_orders,
                               uint64_t seed, bool oracle_crosscheck = false,
                               uint64_t oracle_budget = uint64_t{1} << 16);

}  // namespace gridcycle
