#include "gridcycle/game.hpp"

#include <json.hpp>

#include <numeric>
#include <random>
#include <stdexcept>

namespace gridcycle {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::CorrectBothBranches: return "CorrectBothBranches";
    case Verdict::CorrectForcedBranch: return "CorrectForcedBranch";
    case Verdict::DefeatedEarlyAnswer: return "DefeatedEarlyAnswer";
    case Verdict::IncorrectOnCycleBranch: return "IncorrectOnCycleBranch";
    case Verdict::IncorrectOnAcyclicBranch: return "IncorrectOnAcyclicBranch";
  }
  throw std::invalid_argument("unknown verdict");
}

std::string serialize_transcript(const GameTranscript& t) {
  nlohmann::ordered_json j;
  j["dims"] = {{"rows", t.dims.rows}, {"cols", t.dims.cols}};
  auto queries = nlohmann::ordered_json::array();
  for (const auto& [cell, sym] : t.queries)
    queries.push_back({cell.row, cell.col, std::string(1, sym)});
  j["queries"] = std::move(queries);
  if (t.answer)
    j["answer"] = *t.answer;
  else
    j["answer"] = nullptr;
  j["query_count"] = t.query_count;
  j["verdict"] = verdict_name(t.verdict);
  if (t.witness_cyclic && t.witness_acyclic) {
    j["witnesses"] = {{"cyclic", serialize_grid(*t.witness_cyclic)},
                      {"acyclic", serialize_grid(*t.witness_acyclic)}};
  }
  return j.dump();
}

namespace {

// Replays a recorded query order against a fresh algorithm instance,
// substituting `final_symbol` for the last response, and returns the
// algorithm's answer. Determinism of the algorithm is checked: it must
// reissue exactly the recorded queries.
bool replay_branch(const AlgorithmFactory& make_algorithm, GridDims dims,
                   const std::vector<std::pair<Cell, Symbol>>& queries,
                   Symbol final_symbol) {
  auto algo = make_algorithm();
  PartialGrid observed(dims);
  for (size_t i = 0; i < queries.size(); ++i) {
    AlgorithmMove mv = algo->next_move(observed);
    const auto* q = std::get_if<QueryMove>(&mv);
    if (!q || !(q->cell == queries[i].first))
      throw std::logic_error("algorithm is not deterministic under replay");
    Symbol s = i + 1 == queries.size() ? final_symbol : queries[i].second;
    observed.set(q->cell, s);
  }
  AlgorithmMove mv = algo->next_move(observed);
  const auto* a = std::get_if<AnswerMove>(&mv);
  if (!a) throw std::logic_error("algorithm failed to answer after reading "
                                 "the whole grid");
  return a->has_cycle;
}

}  // namespace

GameTranscript run_game(const AlgorithmFactory& make_algorithm, GridDims dims,
                        FinalChoicePolicy policy) {
  ComposedAdversary adv{Tiling::make(dims)};
  auto algo = make_algorithm();
  PartialGrid observed(dims);
  GameTranscript t;
  t.dims = dims;
  const int total = dims.cell_count();

  for (int move_i = 0; move_i <= total; ++move_i) {
    AlgorithmMove mv = algo->next_move(observed);

    if (const auto* ans = std::get_if<AnswerMove>(&mv)) {
      t.answer = ans->has_cycle;
      t.query_count = observed.read_count();
      if (observed.read_count() < total) {
        auto w = adv.witnesses();
        const Grid& contradicting = ans->has_cycle ? w.acyclic : w.cyclic;
        if (has_cycle(contradicting) == ans->has_cycle)
          throw std::logic_error("adversary lost ambiguity before the last "
                                 "cell");
        t.verdict = Verdict::DefeatedEarlyAnswer;
        t.witness_cyclic = std::move(w.cyclic);
        t.witness_acyclic = std::move(w.acyclic);
        return t;
      }
      // Full read under a forced policy: judge the single realized grid.
      bool truth = has_cycle(adv.realized_grid());
      if (ans->has_cycle == truth)
        t.verdict = Verdict::CorrectForcedBranch;
      else
        t.verdict = truth ? Verdict::IncorrectOnCycleBranch
                          : Verdict::IncorrectOnAcyclicBranch;
      return t;
    }

    Cell cell = std::get<QueryMove>(mv).cell;
    ComposedAdversary::Reply reply = adv.respond(cell);

    if (const auto* sym = std::get_if<Symbol>(&reply)) {
      observed.set(cell, *sym);
      t.queries.emplace_back(cell, *sym);
      continue;
    }

    auto fc = std::get<ComposedAdversary::GlobalFinalChoice>(reply);
    if (policy != FinalChoicePolicy::ForkBoth) {
      Symbol s = adv.commit_final(policy == FinalChoicePolicy::ForceCycle
                                      ? FinalDecision::Cycle
                                      : FinalDecision::Acyclic);
      observed.set(cell, s);
      t.queries.emplace_back(cell, s);
      continue;
    }

    // ForkBoth: realize both branches by replaying the transcript.
    t.queries.emplace_back(cell, fc.cycle_symbol);
    t.query_count = total;
    bool cycle_answer =
        replay_branch(make_algorithm, dims, t.queries, fc.cycle_symbol);
    bool acyclic_answer =
        replay_branch(make_algorithm, dims, t.queries, fc.acyclic_symbol);
    if (!cycle_answer)
      t.verdict = Verdict::IncorrectOnCycleBranch;
    else if (acyclic_answer)
      t.verdict = Verdict::IncorrectOnAcyclicBranch;
    else
      t.verdict = Verdict::CorrectBothBranches;
    return t;
  }
  throw std::logic_error("algorithm exceeded the move budget");
}

std::pair<bool, int> run_against_grid(const AlgorithmFactory& make_algorithm,
                                      const Grid& grid) {
  auto algo = make_algorithm();
  PartialGrid observed(grid.dims());
  const int total = grid.dims().cell_count();
  for (int move_i = 0; move_i <= total; ++move_i) {
    AlgorithmMove mv = algo->next_move(observed);
    if (const auto* ans = std::get_if<AnswerMove>(&mv))
      return {ans->has_cycle, observed.read_count()};
    Cell cell = std::get<QueryMove>(mv).cell;
    observed.set(cell, grid.at(cell));
  }
  throw std::logic_error("algorithm exceeded the move budget");
}

namespace {

std::optional<Cell> first_unread(const PartialGrid& g) {
  GridDims d = g.dims();
  for (int r = 0; r < d.rows; ++r)
    for (int c = 0; c < d.cols; ++c)
      if (!g.is_read({r, c})) return Cell{r, c};
  return std::nullopt;
}

// Recomputes from the observed prefix on every call; determinism as a
// function of the observed history falls out for free.
class UnionFindScanner final : public DetectionAlgorithm {
 public:
  AlgorithmMove next_move(const PartialGrid& observed) override {
    GridDims d = observed.dims();
    std::vector<int> parent(static_cast<size_t>(d.cell_count()));
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int> size(static_cast<size_t>(d.cell_count()), 1);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int a, int b) {
      int ra = find(a), rb = find(b);
      if (ra == rb) return false;
      if (size[ra] < size[rb] || (size[ra] == size[rb] && rb < ra))
        std::swap(ra, rb);
      parent[rb] = ra;
      size[ra] += size[rb];
      return true;
    };
    for (int r = 0; r < d.rows; ++r) {
      for (int c = 0; c < d.cols; ++c) {
        auto s = observed.at({r, c});
        if (!s) continue;
        int i = r * d.cols + c;
        if (c + 1 < d.cols && observed.at({r, c + 1}) == s &&
            !unite(i, i + 1))
          return AnswerMove{true};
        if (r + 1 < d.rows && observed.at({r + 1, c}) == s &&
            !unite(i, i + d.cols))
          return AnswerMove{true};
      }
    }
    if (auto cell = first_unread(observed)) return QueryMove{*cell};
    return AnswerMove{false};
  }
};

class DfsRegionDetector final : public DetectionAlgorithm {
 public:
  AlgorithmMove next_move(const PartialGrid& observed) override {
    GridDims d = observed.dims();
    std::vector<bool> visited(static_cast<size_t>(d.cell_count()), false);
    std::vector<int> parent(static_cast<size_t>(d.cell_count()), -1);
    for (int sr = 0; sr < d.rows; ++sr) {
      for (int sc = 0; sc < d.cols; ++sc) {
        Cell start{sr, sc};
        if (!observed.is_read(start)) return QueryMove{start};
        if (visited[cell_index(start, d)]) continue;
        // Flood-fill the region of `start`, reading neighbours on
        // demand and watching for a back edge.
        struct Frame {
          Cell cell;
          std::vector<Cell> adj;
          size_t next = 0;
        };
        std::vector<Frame> stack;
        visited[cell_index(start, d)] = true;
        stack.push_back({start, neighbors(start, d)});
        Symbol color = *observed.at(start);
        while (!stack.empty()) {
          Frame& f = stack.back();
          if (f.next == f.adj.size()) {
            stack.pop_back();
            continue;
          }
          Cell n = f.adj[f.next++];
          if (!observed.is_read(n)) return QueryMove{n};
          if (*observed.at(n) != color) continue;
          int ni = cell_index(n, d);
          if (!visited[ni]) {
            visited[ni] = true;
            parent[ni] = cell_index(f.cell, d);
            stack.push_back({n, neighbors(n, d)});
          } else if (ni != parent[cell_index(f.cell, d)]) {
            return AnswerMove{true};
          }
        }
      }
    }
    return AnswerMove{false};
  }
};

class RandomOrderScanner final : public DetectionAlgorithm {
 public:
  explicit RandomOrderScanner(uint64_t seed) : seed_(seed) {}

  AlgorithmMove next_move(const PartialGrid& observed) override {
    GridDims d = observed.dims();
    if (order_.empty()) {
      for (int r = 0; r < d.rows; ++r)
        for (int c = 0; c < d.cols; ++c) order_.push_back({r, c});
      // Hand-rolled Fisher-Yates so the order is identical across
      // standard libraries.
      std::mt19937_64 rng(seed_);
      for (size_t i = order_.size(); i > 1; --i)
        std::swap(order_[i - 1], order_[rng() % i]);
    }
    for (Cell c : order_)
      if (!observed.is_read(c)) return QueryMove{c};
    std::vector<Symbol> cells(static_cast<size_t>(d.cell_count()));
    for (int i = 0; i < d.cell_count(); ++i)
      cells[i] = *observed.at({i / d.cols, i % d.cols});
    return AnswerMove{has_cycle(d, cells)};
  }

 private:
  uint64_t seed_;
  std::vector<Cell> order_;
};

class EarlyAnswerScanner final : public DetectionAlgorithm {
 public:
  EarlyAnswerScanner(int k, bool answer) : k_(k), answer_(answer) {}

  AlgorithmMove next_move(const PartialGrid& observed) override {
    if (observed.read_count() < k_)
      if (auto cell = first_unread(observed)) return QueryMove{*cell};
    return AnswerMove{answer_};
  }

 private:
  int k_;
  bool answer_;
};

}  // namespace

AlgorithmFactory union_find_scanner() {
  return [] { return std::make_unique<UnionFindScanner>(); };
}

AlgorithmFactory dfs_region_detector() {
  return [] { return std::make_unique<DfsRegionDetector>(); };
}

AlgorithmFactory random_order_scanner(uint64_t seed) {
  return [seed] { return std::make_unique<RandomOrderScanner>(seed); };
}

AlgorithmFactory early_answer_scanner(int k, bool answer) {
  return [k, answer] { return std::make_unique<EarlyAnswerScanner>(k, answer); };
}

}  // namespace gridcycle
