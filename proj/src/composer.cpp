#include "gridcycle/composer.hpp"

#include <stdexcept>

namespace gridcycle {

std::vector<int> decompose(int length) {
  if (length < 2)
    throw std::invalid_argument("band decomposition requires length >= 2");
  std::vector<int> bands;
  int rest = length;
  if (rest % 2 == 1) rest -= 3;
  bands.assign(static_cast<size_t>(rest / 2), 2);
  if (length % 2 == 1) bands.push_back(3);
  return bands;
}

namespace {

BlockKind kind_for(int band_height, int band_width) {
  if (band_height == 2) return band_width == 2 ? BlockKind::B2x2 : BlockKind::B2x3;
  return band_width == 2 ? BlockKind::B3x2 : BlockKind::B3x3;
}

std::vector<int> offsets_of(const std::vector<int>& bands) {
  std::vector<int> out;
  out.reserve(bands.size());
  int pos = 0;
  for (int b : bands) {
    out.push_back(pos);
    pos += b;
  }
  return out;
}

}  // namespace

Tiling Tiling::make(GridDims dims, AlphabetPalette palette) {
  if (dims.rows < 2 || dims.cols < 2)
    throw std::invalid_argument("tiling requires dims of at least 2x2");
  Tiling t;
  t.dims_ = dims;
  t.row_bands_ = decompose(dims.rows);
  t.col_bands_ = decompose(dims.cols);
  t.row_offsets_ = offsets_of(t.row_bands_);
  t.col_offsets_ = offsets_of(t.col_bands_);
  for (int br = 0; br < t.band_rows(); ++br) {
    for (int bc = 0; bc < t.band_cols(); ++bc) {
      BlockSpec spec;
      spec.origin = {t.row_offsets_[br], t.col_offsets_[bc]};
      spec.kind = kind_for(t.row_bands_[br], t.col_bands_[bc]);
      spec.band_row = br;
      spec.band_col = bc;
      spec.alphabet = (br + bc) % 2 == 0
                          ? BlockAlphabet{palette.symbols[0], palette.symbols[1]}
                          : BlockAlphabet{palette.symbols[2], palette.symbols[3]};
      t.blocks_.push_back(spec);
    }
  }
  return t;
}

const BlockSpec& Tiling::block_at(int band_row, int band_col) const {
  if (band_row < 0 || band_row >= band_rows() || band_col < 0 ||
      band_col >= band_cols())
    throw std::invalid_argument("band index out of range");
  return blocks_[static_cast<size_t>(band_row) * band_cols() + band_col];
}

std::pair<const BlockSpec*, Cell> Tiling::block_of(Cell cell) const {
  if (!in_range(cell, dims_))
    throw std::invalid_argument("cell out of range for tiling");
  auto locate = [](const std::vector<int>& offsets,
                   const std::vector<int>& bands, int x) {
    for (size_t i = offsets.size(); i-- > 0;)
      if (x >= offsets[i]) return static_cast<int>(i);
    (void)bands;
    throw std::logic_error("unreachable");
  };
  int br = locate(row_offsets_, row_bands_, cell.row);
  int bc = locate(col_offsets_, col_bands_, cell.col);
  const BlockSpec& spec = block_at(br, bc);
  return {&spec, Cell{cell.row - spec.origin.row, cell.col - spec.origin.col}};
}

ComposedAdversary::ComposedAdversary(Tiling tiling)
    : tiling_(std::move(tiling)), unread_total_(tiling_.dims().cell_count()) {
  block_advs_.reserve(tiling_.blocks().size());
  for (const BlockSpec& spec : tiling_.blocks())
    block_advs_.emplace_back(spec.kind, spec.alphabet);
}

BlockAdversary& ComposedAdversary::block_for(const BlockSpec& spec) {
  return block_advs_[static_cast<size_t>(spec.band_row) * tiling_.band_cols() +
                     spec.band_col];
}

const BlockAdversary& ComposedAdversary::block_adversary(int band_row,
                                                         int band_col) const {
  (void)tiling_.block_at(band_row, band_col);  // range check
  return block_advs_[static_cast<size_t>(band_row) * tiling_.band_cols() +
                     band_col];
}

ComposedAdversary::Reply ComposedAdversary::respond(Cell cell) {
  if (final_pending_)
    throw std::logic_error("game is awaiting the global final commitment");
  auto [spec, local] = tiling_.block_of(cell);
  BlockAdversary& adv = block_for(*spec);
  Response r = adv.respond(local);
  if (const auto* det = std::get_if<Determined>(&r)) {
    --unread_total_;
    return det->symbol;
  }
  const auto& fc = std::get<FinalChoice>(r);
  if (unread_total_ > 1) {
    // A block resolved before the grid's last cell reports no cycle.
    Symbol s = adv.commit(FinalDecision::Acyclic);
    --unread_total_;
    return s;
  }
  final_pending_ = true;
  return GlobalFinalChoice{fc.cycle_symbol, fc.acyclic_symbol};
}

Symbol ComposedAdversary::commit_final(FinalDecision choice) {
  if (!final_pending_)
    throw std::logic_error("no global final choice is pending");
  for (auto& adv : block_advs_) {
    if (adv.phase() == AdversaryPhase::State2Final) {
      Symbol s = adv.commit(choice);
      final_pending_ = false;
      unread_total_ = 0;
      return s;
    }
  }
  throw std::logic_error("pending final block not found");
}

ComposedAdversary::WitnessGrids ComposedAdversary::witnesses() const {
  if (unread_total_ == 0)
    throw std::logic_error("witnesses require at least one unread cell");

  // Designated cycle block: first band-row-major uncommitted block
  // with an unread cell.
  int designated = -1;
  for (size_t i = 0; i < block_advs_.size(); ++i) {
    const auto& adv = block_advs_[i];
    if (adv.phase() != AdversaryPhase::Committed && adv.unread_count() > 0) {
      designated = static_cast<int>(i);
      break;
    }
  }
  if (designated < 0) throw std::logic_error("no uncommitted block remains");

  GridDims d = tiling_.dims();
  std::vector<Symbol> cyclic(static_cast<size_t>(d.cell_count()), 0);
  std::vector<Symbol> acyclic(static_cast<size_t>(d.cell_count()), 0);

  for (size_t i = 0; i < block_advs_.size(); ++i) {
    const BlockSpec& spec = tiling_.blocks()[i];
    const BlockAdversary& adv = block_advs_[i];
    GridDims bd = adv.dims();
    auto place = [&](std::vector<Symbol>& buf, const Grid& g) {
      for (int r = 0; r < bd.rows; ++r)
        for (int c = 0; c < bd.cols; ++c)
          buf[(spec.origin.row + r) * d.cols + spec.origin.col + c] =
              g.at({r, c});
    };
    if (adv.phase() == AdversaryPhase::Committed) {
      Grid g = adv.completed_with({});
      place(cyclic, g);
      place(acyclic, g);
    } else {
      WitnessFills w = adv.witnesses();
      place(cyclic, adv.completed_with(static_cast<int>(i) == designated
                                           ? w.cycle_fill
                                           : w.acyclic_fill));
      place(acyclic, adv.completed_with(w.acyclic_fill));
    }
  }

  WitnessGrids out{Grid(d, std::move(cyclic)), Grid(d, std::move(acyclic))};
  if (!has_cycle(out.cyclic))
    throw std::logic_error("cycle witness failed verification");
  if (has_cycle(out.acyclic))
    throw std::logic_error("acyclic witness failed verification");
  return out;
}

PartialGrid ComposedAdversary::observed() const {
  PartialGrid p(tiling_.dims());
  for (size_t i = 0; i < block_advs_.size(); ++i) {
    const BlockSpec& spec = tiling_.blocks()[i];
    const BlockAdversary& adv = block_advs_[i];
    GridDims bd = adv.dims();
    for (int r = 0; r < bd.rows; ++r)
      for (int c = 0; c < bd.cols; ++c)
        if (auto s = adv.response_at({r, c}))
          p.set({spec.origin.row + r, spec.origin.col + c}, *s);
  }
  return p;
}

Grid ComposedAdversary::realized_grid() const {
  if (unread_total_ != 0)
    throw std::logic_error("grid is not fully realized");
  GridDims d = tiling_.dims();
  std::vector<Symbol> cells(static_cast<size_t>(d.cell_count()), 0);
  for (size_t i = 0; i < block_advs_.size(); ++i) {
    const BlockSpec& spec = tiling_.blocks()[i];
    const BlockAdversary& adv = block_advs_[i];
    GridDims bd = adv.dims();
    for (int r = 0; r < bd.rows; ++r)
      for (int c = 0; c < bd.cols; ++c)
        cells[(spec.origin.row + r) * d.cols + spec.origin.col + c] =
            *adv.response_at({r, c});
  }
  return Grid(d, std::move(cells));
}

}  // namespace gridcycle
