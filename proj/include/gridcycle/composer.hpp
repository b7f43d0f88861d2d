#pragma once

#include <array>
#include <variant>
#include <vector>

#include "gridcycle/block_adversary.hpp"
#include "gridcycle/grid.hpp"

namespace gridcycle {

/// Ordered band widths, each 2 or 3, summing to the decomposed
/// dimension. Canonical form: all 2s, with a single trailing 3 when
/// the dimension is odd.
std::vector<int> decompose(int length);

/// Default global alphabet: even-parity blocks use {a,b}, odd-parity
/// blocks {c,d}.
struct AlphabetPalette {
  std::array<Symbol, 4> symbols{'a', 'b', 'c', 'd'};
};

struct BlockSpec {
  Cell origin;  // global top-left of the block
  BlockKind kind;
  int band_row = 0;
  int band_col = 0;
  BlockAlphabet alphabet;
};

/// Product tiling of the grid into 2/3 bands, with checkerboard
/// alphabets so no same-colour edge can cross a block boundary.
class Tiling {
 public:
  static Tiling make(GridDims dims, AlphabetPalette palette = {});

  GridDims dims() const { return dims_; }
  const std::vector<int>& row_bands() const { return row_bands_; }
  const std::vector<int>& col_bands() const { return col_bands_; }
  int band_rows() const { return static_cast<int>(row_bands_.size()); }
  int band_cols() const { return static_cast<int>(col_bands_.size()); }

  const BlockSpec& block_at(int band_row, int band_col) const;
  const std::vector<BlockSpec>& blocks() const { return blocks_; }

  /// The unique covering block and the cell's block-local coordinates.
  std::pair<const BlockSpec*, Cell> block_of(Cell cell) const;

 private:
  GridDims dims_;
  std::vector<int> row_bands_, col_bands_;
  std::vector<int> row_offsets_, col_offsets_;  // band start positions
  std::vector<BlockSpec> blocks_;               // band-row-major
};

/// Grid-wide adversary: routes each query to its block's adversary and
/// coordinates the single global final choice. Every block forced to a
/// decision before the grid's last cell is committed acyclic.
class ComposedAdversary {
 public:
  explicit ComposedAdversary(Tiling tiling);

  struct GlobalFinalChoice {
    Symbol cycle_symbol;
    Symbol acyclic_symbol;
  };
  using Reply = std::variant<Symbol, GlobalFinalChoice>;

  const Tiling& tiling() const { return tiling_; }
  int unread_count() const { return unread_total_; }
  bool final_pending() const { return final_pending_; }

  Reply respond(Cell cell);

  /// Realizes the surfaced GlobalFinalChoice. Returns the symbol.
  Symbol commit_final(FinalDecision choice);

  struct WitnessGrids {
    Grid cyclic;
    Grid acyclic;
  };

  /// Full-grid witness completions of the current prefix, verified
  /// against has_cycle before being returned.
  WitnessGrids witnesses() const;

  /// Responses so far as a partial grid (the pending final cell, if
  /// any, is unread).
  PartialGrid observed() const;

  /// The fully realized grid; requires every cell resolved.
  Grid realized_grid() const;

  const BlockAdversary& block_adversary(int band_row, int band_col) const;

 private:
  BlockAdversary& block_for(const BlockSpec& spec);

  Tiling tiling_;
  std::vector<BlockAdversary> block_advs_;  // parallel to tiling_.blocks()
  int unread_total_;
  bool final_pending_ = false;
};

}  // namespace gridcycle
