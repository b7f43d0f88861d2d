#include "gridcycle/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

namespace gridcycle {

bool has_cycle_dfs(const Grid& grid) {
  GridDims d = grid.dims();
  const int n = d.cell_count();
  std::vector<bool> visited(static_cast<size_t>(n), false);
  std::vector<int> parent(static_cast<size_t>(n), -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (visited[s]) continue;
    visited[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      Cell uc{u / d.cols, u % d.cols};
      for (Cell nc : neighbors(uc, d)) {
        if (grid.at(nc) != grid.at(uc)) continue;
        int v = cell_index(nc, d);
        if (!visited[v]) {
          visited[v] = true;
          parent[v] = u;
          stack.push_back(v);
        } else if (v != parent[u]) {
          return true;
        }
      }
    }
  }
  return false;
}

AmbiguityReport ambiguity_oracle(
    const PartialGrid& partial,
    const std::map<Cell, std::vector<Symbol>>& per_cell_alphabet,
    uint64_t budget) {
  GridDims d = partial.dims();
  std::vector<Cell> unread = partial.unread_cells();
  if (per_cell_alphabet.size() != unread.size())
    throw std::invalid_argument(
        "per-cell alphabet must cover exactly the unread cells");
  for (Cell c : unread)
    if (!per_cell_alphabet.contains(c))
      throw std::invalid_argument(
          "per-cell alphabet missing an unread cell");

  uint64_t combinations = 1;
  for (const auto& [cell, alpha] : per_cell_alphabet) {
    if (alpha.empty())
      throw std::invalid_argument("empty alphabet for an unread cell");
    if (combinations > budget / alpha.size() + 1) combinations = budget + 1;
    else combinations *= alpha.size();
    if (combinations > budget)
      throw OracleBudgetExceeded(
          "completion count exceeds the enumeration budget");
  }

  std::vector<Symbol> cells(static_cast<size_t>(d.cell_count()), 0);
  for (int r = 0; r < d.rows; ++r)
    for (int c = 0; c < d.cols; ++c)
      if (auto s = partial.at({r, c})) cells[r * d.cols + c] = *s;

  // Odometer over the unread cells, row-major.
  std::vector<const std::vector<Symbol>*> alphabets;
  std::vector<size_t> digits(unread.size(), 0);
  alphabets.reserve(unread.size());
  for (Cell c : unread) alphabets.push_back(&per_cell_alphabet.at(c));

  AmbiguityReport report;
  report.prefix_length = partial.read_count();
  for (;;) {
    for (size_t i = 0; i < unread.size(); ++i)
      cells[cell_index(unread[i], d)] = (*alphabets[i])[digits[i]];
    bool cyc = has_cycle(d, cells);
    if (cyc && !report.cyclic_completion_exists) {
      report.cyclic_completion_exists = true;
      report.cyclic_example = Grid(d, cells);
    } else if (!cyc && !report.acyclic_completion_exists) {
      report.acyclic_completion_exists = true;
      report.acyclic_example = Grid(d, cells);
    }
    if (report.cyclic_completion_exists && report.acyclic_completion_exists)
      break;
    size_t i = 0;
    while (i < digits.size() && ++digits[i] == alphabets[i]->size()) {
      digits[i] = 0;
      ++i;
    }
    if (i == digits.size()) break;
  }
  return report;
}

std::string render_report(const SweepReport& report) {
  std::ostringstream out;
  out << report.subject << ": " << report.orders_checked << " orders, "
      << report.prefixes_checked << " prefixes, " << report.failures.size()
      << " failures (" << report.wall_seconds << " s)\n";
  size_t shown = std::min<size_t>(report.failures.size(), 10);
  for (size_t i = 0; i < shown; ++i) {
    const SweepFailure& f = report.failures[i];
    out << "  order " << f.order_index << " prefix " << f.prefix_length
        << ": " << f.what << "\n";
  }
  if (report.failures.size() > shown)
    out << "  ... " << report.failures.size() - shown << " more\n";
  return out.str();
}

namespace {

// Checks the adversary's own witness fills for the current prefix.
void check_witnesses(const BlockAdversary& adv, uint64_t order_index,
                     int prefix_length, std::vector<SweepFailure>& failures) {
  WitnessFills w = adv.witnesses();
  if (!has_cycle(adv.completed_with(w.cycle_fill)))
    failures.push_back({order_index, prefix_length,
                        "cycle witness fill is not cyclic"});
  if (has_cycle(adv.completed_with(w.acyclic_fill)))
    failures.push_back({order_index, prefix_length,
                        "acyclic witness fill is not acyclic"});
}

// Brute-force existence check over {primary, breaker}^unread.
void check_oracle(const BlockAdversary& adv, uint64_t order_index,
                  int prefix_length, std::vector<SweepFailure>& failures) {
  PartialGrid partial(adv.dims());
  GridDims d = adv.dims();
  for (int r = 0; r < d.rows; ++r)
    for (int c = 0; c < d.cols; ++c)
      if (auto s = adv.response_at({r, c})) partial.set({r, c}, *s);
  std::map<Cell, std::vector<Symbol>> alphabets;
  for (Cell c : partial.unread_cells())
    alphabets[c] = {adv.alphabet().primary, adv.alphabet().breaker};
  AmbiguityReport rep = ambiguity_oracle(partial, alphabets);
  if (!rep.cyclic_completion_exists)
    failures.push_back({order_index, prefix_length,
                        "no cyclic completion exists"});
  if (!rep.acyclic_completion_exists)
    failures.push_back({order_index, prefix_length,
                        "no acyclic completion exists"});
}

}  // namespace

SweepReport verify_block_exhaustive(BlockKind kind, VerifyMode mode,
                                    double oracle_fraction, uint64_t seed) {
  auto start_time = std::chrono::steady_clock::now();
  GridDims d = block_dims(kind);
  const int n = d.cell_count();
  const bool want_witnesses =
      mode == VerifyMode::Witnesses || mode == VerifyMode::Both;
  const bool want_oracle =
      mode == VerifyMode::Oracle || mode == VerifyMode::Both;

  SweepReport report;
  report.subject = std::string("block ") + block_kind_name(kind) + " mode " +
                   (mode == VerifyMode::Witnesses
                        ? "witnesses"
                        : mode == VerifyMode::Oracle ? "oracle" : "both");

  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  uint64_t order_index = 0;
  do {
    // The draw happens for every order so sampling stays deterministic
    // in (seed, order index).
    bool sampled = !want_oracle || oracle_fraction >= 1.0 ||
                   unit(rng) < oracle_fraction;
    BlockAdversary adv(kind, {'a', 'b'});
    for (int prefix = 0; prefix < n; ++prefix) {
      if (want_witnesses)
        check_witnesses(adv, order_index, prefix, report.failures);
      if (want_oracle && sampled)
        check_oracle(adv, order_index, prefix, report.failures);
      ++report.prefixes_checked;

      Cell cell{perm[prefix] / d.cols, perm[prefix] % d.cols};
      Response r = adv.respond(cell);
      if (prefix + 1 < n) {
        if (!std::holds_alternative<Determined>(r))
          report.failures.push_back(
              {order_index, prefix + 1, "final choice surfaced early"});
      } else {
        if (!std::holds_alternative<FinalChoice>(r)) {
          report.failures.push_back(
              {order_index, prefix + 1, "last cell did not surface the "
                                        "final choice"});
          break;
        }
        BlockAdversary cyc = adv, acy = adv;
        cyc.commit(FinalDecision::Cycle);
        acy.commit(FinalDecision::Acyclic);
        if (!has_cycle(cyc.completed_with({})))
          report.failures.push_back(
              {order_index, n, "commit(cycle) block is not cyclic"});
        if (has_cycle(acy.completed_with({})))
          report.failures.push_back(
              {order_index, n, "commit(acyclic) block is not acyclic"});
      }
    }
    ++order_index;
  } while (std::next_permutation(perm.begin(), perm.end()));

  report.orders_checked = order_index;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                    start_time)
          .count();
  return report;
}

SweepReport verify_grid_random(GridDims dims, uint64_t num_orders,
                               uint64_t seed, bool oracle_crosscheck,
                               uint64_t oracle_budget) {
  auto start_time = std::chrono::steady_clock::now();
  SweepReport report;
  {
    std::ostringstream subject;
    subject << "grid " << dims.rows << "x" << dims.cols << " orders "
            << num_orders << " seed " << seed;
    report.subject = subject.str();
  }

  const int n = dims.cell_count();
  std::vector<Cell> cells;
  for (int r = 0; r < dims.rows; ++r)
    for (int c = 0; c < dims.cols; ++c) cells.push_back({r, c});

  std::mt19937_64 rng(seed);
  Tiling tiling = Tiling::make(dims);

  for (uint64_t order = 0; order < num_orders; ++order) {
    std::vector<Cell> query_order = cells;
    for (size_t i = query_order.size(); i > 1; --i)
      std::swap(query_order[i - 1], query_order[rng() % i]);

    ComposedAdversary adv{tiling};
    for (int prefix = 0; prefix < n; ++prefix) {
      try {
        auto w = adv.witnesses();  // self-verifying against has_cycle
        for (const auto& [p, q] : same_color_edges(w.cyclic)) {
          if (tiling.block_of(p).first != tiling.block_of(q).first) {
            report.failures.push_back(
                {order, prefix, "cycle witness has a cross-block edge"});
            break;
          }
        }
        for (const auto& [p, q] : same_color_edges(w.acyclic)) {
          if (tiling.block_of(p).first != tiling.block_of(q).first) {
            report.failures.push_back(
                {order, prefix, "acyclic witness has a cross-block edge"});
            break;
          }
        }
      } catch (const std::logic_error& e) {
        report.failures.push_back({order, prefix, e.what()});
        break;
      }

      if (oracle_crosscheck) {
        PartialGrid partial = adv.observed();
        std::map<Cell, std::vector<Symbol>> alphabets;
        for (Cell c : partial.unread_cells()) {
          BlockAlphabet a = tiling.block_of(c).first->alphabet;
          alphabets[c] = {a.primary, a.breaker};
        }
        try {
          AmbiguityReport rep =
              ambiguity_oracle(partial, alphabets, oracle_budget);
          if (!rep.cyclic_completion_exists)
            report.failures.push_back(
                {order, prefix, "oracle found no cyclic completion"});
          if (!rep.acyclic_completion_exists)
            report.failures.push_back(
                {order, prefix, "oracle found no acyclic completion"});
        } catch (const OracleBudgetExceeded&) {
          // Prefix too wide to enumerate; witness checks still ran.
        }
      }
      ++report.prefixes_checked;

      ComposedAdversary::Reply reply = adv.respond(query_order[prefix]);
      bool is_final =
          std::holds_alternative<ComposedAdversary::GlobalFinalChoice>(reply);
      if (is_final != (prefix + 1 == n)) {
        report.failures.push_back(
            {order, prefix + 1,
             is_final ? "global final choice surfaced early"
                      : "last cell did not surface the global final choice"});
        break;
      }
      if (is_final) {
        ComposedAdversary cyc = adv, acy = adv;
        cyc.commit_final(FinalDecision::Cycle);
        acy.commit_final(FinalDecision::Acyclic);
        if (!has_cycle(cyc.realized_grid()))
          report.failures.push_back(
              {order, n, "global cycle branch is not cyclic"});
        if (has_cycle(acy.realized_grid()))
          report.failures.push_back(
              {order, n, "global acyclic branch is not acyclic"});
      }
    }
  }

  report.orders_checked = num_orders;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                    start_time)
          .count();
  return report;
}

}  // namespace gridcycle
