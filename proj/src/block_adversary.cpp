#include "gridcycle/block_adversary.hpp"

#include <stdexcept>

namespace gridcycle {

namespace {

constexpr Cell kCenter{1, 1};

bool is_boundary_3x3(Cell c) { return !(c == kCenter); }

}  // namespace

GridDims block_dims(BlockKind kind) {
  switch (kind) {
    case BlockKind::B2x2: return {2, 2};
    case BlockKind::B2x3: return {2, 3};
    case BlockKind::B3x2: return {3, 2};
    case BlockKind::B3x3: return {3, 3};
  }
  throw std::invalid_argument("unknown block kind");
}

const char* block_kind_name(BlockKind kind) {
  switch (kind) {
    case BlockKind::B2x2: return "2x2";
    case BlockKind::B2x3: return "2x3";
    case BlockKind::B3x2: return "3x2";
    case BlockKind::B3x3: return "3x3";
  }
  throw std::invalid_argument("unknown block kind");
}

std::array<std::array<Cell, 2>, 2> partner_pairs(BlockKind kind) {
  switch (kind) {
    case BlockKind::B2x3:
      return {{{Cell{0, 0}, Cell{1, 0}}, {Cell{0, 2}, Cell{1, 2}}}};
    case BlockKind::B3x2:
      return {{{Cell{0, 0}, Cell{0, 1}}, {Cell{2, 0}, Cell{2, 1}}}};
    default:
      throw std::invalid_argument("block kind has no partner pairs");
  }
}

BlockAdversary::BlockAdversary(BlockKind kind, BlockAlphabet alphabet)
    : kind_(kind), alphabet_(alphabet), dims_(block_dims(kind)) {
  if (alphabet.primary == alphabet.breaker)
    throw std::invalid_argument("block alphabet symbols must differ");
  if (alphabet.primary == 0 || alphabet.breaker == 0)
    throw std::invalid_argument("block alphabet symbols must be nonzero");
}

bool BlockAdversary::is_read(Cell local) const {
  if (!in_range(local, dims_))
    throw std::invalid_argument("local cell out of block range");
  if (final_cell_ && *final_cell_ == local) return true;
  return responses_[cell_index(local, dims_)] != 0;
}

std::optional<Symbol> BlockAdversary::response_at(Cell local) const {
  if (!in_range(local, dims_))
    throw std::invalid_argument("local cell out of block range");
  Symbol s = responses_[cell_index(local, dims_)];
  if (s == 0) return std::nullopt;
  return s;
}

std::vector<Cell> BlockAdversary::unread_cells() const {
  std::vector<Cell> out;
  for (int r = 0; r < dims_.rows; ++r)
    for (int c = 0; c < dims_.cols; ++c)
      if (responses_[r * dims_.cols + c] == 0) out.push_back({r, c});
  return out;
}

int BlockAdversary::unread_count() const {
  return dims_.cell_count() - responded_;
}

Symbol BlockAdversary::state0_response(Cell local) {
  switch (kind_) {
    case BlockKind::B2x2:
      return alphabet_.primary;
    case BlockKind::B3x3:
      if (local == kCenter) {
        phase_ = AdversaryPhase::State1;
        return alphabet_.breaker;
      }
      if (++boundary_reads_ == 8) {
        phase_ = AdversaryPhase::State1;
        return alphabet_.breaker;
      }
      return alphabet_.primary;
    case BlockKind::B2x3:
    case BlockKind::B3x2: {
      auto pairs = partner_pairs(kind_);
      for (int p = 0; p < 2; ++p) {
        for (int i = 0; i < 2; ++i) {
          if (pairs[p][i] == local) {
            if (response_at(pairs[p][1 - i]).has_value()) {
              phase_ = AdversaryPhase::State1;
              triggered_pair_ = p;
              return alphabet_.breaker;
            }
            return alphabet_.primary;
          }
        }
      }
      return alphabet_.primary;  // unpaired middle cell
    }
  }
  throw std::logic_error("unreachable");
}

Response BlockAdversary::respond(Cell local) {
  if (!in_range(local, dims_))
    throw std::invalid_argument("local cell out of block range");
  if (phase_ == AdversaryPhase::Committed)
    throw std::logic_error("query after block commitment");
  if (is_read(local)) throw std::invalid_argument("cell already queried");

  // The final unread cell always resolves to the explicit choice,
  // even when it would also be a trigger cell.
  if (unread_count() == 1) {
    phase_ = AdversaryPhase::State2Final;
    final_cell_ = local;
    return FinalChoice{alphabet_.primary, alphabet_.breaker};
  }

  Symbol out = phase_ == AdversaryPhase::State0 ? state0_response(local)
                                                : alphabet_.primary;
  responses_[cell_index(local, dims_)] = out;
  ++responded_;
  return Determined{out};
}

Symbol BlockAdversary::commit(FinalDecision choice) {
  if (phase_ != AdversaryPhase::State2Final)
    throw std::logic_error("commit requires a pending final choice");
  Symbol out = choice == FinalDecision::Cycle ? alphabet_.primary
                                              : alphabet_.breaker;
  responses_[cell_index(*final_cell_, dims_)] = out;
  ++responded_;
  phase_ = AdversaryPhase::Committed;
  return out;
}

WitnessFills BlockAdversary::witnesses() const {
  if (phase_ == AdversaryPhase::Committed || unread_count() == 0)
    throw std::logic_error("witnesses require at least one unread cell");

  std::vector<Cell> unread = unread_cells();
  WitnessFills w;
  for (Cell c : unread) {
    w.cycle_fill[c] = alphabet_.primary;
    w.acyclic_fill[c] = alphabet_.primary;
  }

  if (phase_ == AdversaryPhase::State2Final) {
    // Only the pending final cell remains; the breaker decides.
    w.acyclic_fill[*final_cell_] = alphabet_.breaker;
    return w;
  }

  auto lowest_unread = [&]() { return unread.front(); };

  switch (kind_) {
    case BlockKind::B2x2:
      w.acyclic_fill[lowest_unread()] = alphabet_.breaker;
      break;
    case BlockKind::B3x3:
      if (phase_ == AdversaryPhase::State0) {
        // The center is always unread in State0. Breaking only the
        // center leaves the outer ring intact, so a boundary breaker
        // is needed as well.
        w.acyclic_fill[kCenter] = alphabet_.breaker;
        for (Cell c : unread) {
          if (is_boundary_3x3(c)) {
            w.acyclic_fill[c] = alphabet_.breaker;
            break;
          }
        }
      } else {
        w.acyclic_fill[lowest_unread()] = alphabet_.breaker;
      }
      break;
    case BlockKind::B2x3:
    case BlockKind::B3x2: {
      auto pairs = partner_pairs(kind_);
      if (phase_ == AdversaryPhase::State0) {
        // No pair is complete yet, so each has an unread member; one
        // breaker per pair kills both 2x2 sub-squares.
        for (int p = 0; p < 2; ++p) {
          for (Cell c : unread) {
            if (c == pairs[p][0] || c == pairs[p][1]) {
              w.acyclic_fill[c] = alphabet_.breaker;
              break;
            }
          }
        }
      } else {
        // State1: break the surviving 2x2. Prefer the surviving pair;
        // if it is fully read, any unread (middle) cell still lies in
        // the surviving sub-square.
        auto surviving = pairs[1 - *triggered_pair_];
        Cell target = lowest_unread();
        for (Cell c : unread) {
          if (c == surviving[0] || c == surviving[1]) {
            target = c;
            break;
          }
        }
        w.acyclic_fill[target] = alphabet_.breaker;
      }
      break;
    }
  }
  return w;
}

Grid BlockAdversary::completed_with(const std::map<Cell, Symbol>& fill) const {
  std::vector<Symbol> cells(static_cast<size_t>(dims_.cell_count()), 0);
  for (int i = 0; i < dims_.cell_count(); ++i) cells[i] = responses_[i];
  for (const auto& [cell, sym] : fill) {
    if (!in_range(cell, dims_))
      throw std::invalid_argument("fill cell out of block range");
    if (cells[cell_index(cell, dims_)] != 0)
      throw std::invalid_argument("fill covers a responded cell");
    cells[cell_index(cell, dims_)] = sym;
  }
  for (Symbol s : cells)
    if (s == 0)
      throw std::invalid_argument("fill does not cover every unread cell");
  return Grid(dims_, std::move(cells));
}

}  // namespace gridcycle
