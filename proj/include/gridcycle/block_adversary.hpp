#pragma once

#include <array>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "gridcycle/grid.hpp"

namespace gridcycle {

/// Block footprints, named rows x cols.
enum class BlockKind { B2x2, B2x3, B3x2, B3x3 };

GridDims block_dims(BlockKind kind);
const char* block_kind_name(BlockKind kind);

/// Two-symbol block alphabet: the "a" role and the "b" role.
struct BlockAlphabet {
  Symbol primary;
  Symbol breaker;

  bool operator==(const BlockAlphabet&) const = default;
};

enum class AdversaryPhase { State0, State1, State2Final, Committed };

enum class FinalDecision { Cycle, Acyclic };

struct Determined {
  Symbol symbol;
};

struct FinalChoice {
  Symbol cycle_symbol;
  Symbol acyclic_symbol;
};

using Response = std::variant<Determined, FinalChoice>;

/// The two on-demand witness completions of a block's unread cells.
struct WitnessFills {
  std::map<Cell, Symbol> cycle_fill;
  std::map<Cell, Symbol> acyclic_fill;
};

/// Adaptive per-block adversary. One instance plays one game; queries
/// arrive through respond(), the final cell resolves through commit().
///
/// Machine summary, all kinds: the last unread cell always returns
/// FinalChoice. Before that:
///   - 2x2 answers primary everywhere.
///   - 3x3 answers breaker on the center or on the 8th boundary read,
///     primary otherwise; after the one breaker, primary everywhere.
///   - 2x3 pairs its outer columns (3x2: its outer rows); completing a
///     pair draws the breaker, after which the surviving 2x2 sub-block
///     carries the ambiguity and everything is primary.
class BlockAdversary {
 public:
  BlockAdversary(BlockKind kind, BlockAlphabet alphabet);

  BlockKind kind() const { return kind_; }
  BlockAlphabet alphabet() const { return alphabet_; }
  AdversaryPhase phase() const { return phase_; }
  GridDims dims() const { return dims_; }

  bool is_read(Cell local) const;
  std::optional<Symbol> response_at(Cell local) const;

  /// Cells with no realized symbol, row-major. In State2Final this
  /// still includes the pending final cell.
  std::vector<Cell> unread_cells() const;
  int unread_count() const;

  Response respond(Cell local);

  /// Realizes the pending FinalChoice. Returns the emitted symbol.
  Symbol commit(FinalDecision choice);

  /// Witness completions of the current unread cells. The cycle fill is
  /// all-primary; the acyclic fill is kind- and phase-dependent. Their
  /// correctness is certified by the verifier sweeps, not assumed here.
  WitnessFills witnesses() const;

  /// Total block grid from the responses so far plus `fill` on the
  /// unread cells.
  Grid completed_with(const std::map<Cell, Symbol>& fill) const;

 private:
  Symbol state0_response(Cell local);

  BlockKind kind_;
  BlockAlphabet alphabet_;
  GridDims dims_;
  AdversaryPhase phase_ = AdversaryPhase::State0;
  std::array<Symbol, 9> responses_{};  // row-major, 0 = unread
  int responded_ = 0;
  std::optional<Cell> final_cell_;
  // 2x3 / 3x2 only: which pair triggered (0 or 1), once in State1.
  std::optional<int> triggered_pair_;
  int boundary_reads_ = 0;  // 3x3 only
};

/// The two partner pairs of a 2x3 or 3x2 block, in local coordinates.
/// For 2x3 these are the outer columns; for 3x2 the outer rows. The
/// middle line is unpaired.
std::array<std::array<Cell, 2>, 2> partner_pairs(BlockKind kind);

}  // namespace gridcycle
