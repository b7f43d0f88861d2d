#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gridcycle/composer.hpp"
#include "gridcycle/grid.hpp"

namespace gridcycle {

struct QueryMove {
  Cell cell;
};

struct AnswerMove {
  bool has_cycle;
};

using AlgorithmMove = std::variant<QueryMove, AnswerMove>;

/// A deterministic lazy cycle-detection algorithm. next_move must be a
/// function of the observed partial grid and any construction-time
/// seed only, never query an already-read cell, and eventually answer.
class DetectionAlgorithm {
 public:
  virtual ~DetectionAlgorithm() = default;
  virtual AlgorithmMove next_move(const PartialGrid& observed) = 0;
};

/// Factory producing fresh instances; the game runner re-instantiates
/// the algorithm to replay both final branches.
using AlgorithmFactory = std::function<std::unique_ptr<DetectionAlgorithm>()>;

enum class FinalChoicePolicy { ForkBoth, ForceCycle, ForceAcyclic };

enum class Verdict {
  CorrectBothBranches,
  CorrectForcedBranch,
  DefeatedEarlyAnswer,
  IncorrectOnCycleBranch,
  IncorrectOnAcyclicBranch,
};

const char* verdict_name(Verdict v);

struct GameTranscript {
  GridDims dims;
  std::vector<std::pair<Cell, Symbol>> queries;
  std::optional<bool> answer;  // absent under ForkBoth
  int query_count = 0;
  Verdict verdict = Verdict::CorrectBothBranches;
  // Present when the algorithm answered early; the branch witnesses
  // at answer time.
  std::optional<Grid> witness_cyclic;
  std::optional<Grid> witness_acyclic;
};

/// One-object structured rendering with a bit-stable field order.
std::string serialize_transcript(const GameTranscript& t);

/// Plays one game against a fresh composed adversary on `dims`.
/// Under ForkBoth the final query is recorded with the cycle-branch
/// symbol and the verdict covers both realized branches.
GameTranscript run_game(const AlgorithmFactory& make_algorithm, GridDims dims,
                        FinalChoicePolicy policy);

/// Runs an algorithm against a fixed grid instead of an adversary.
/// Returns its answer and the number of cells it read.
std::pair<bool, int> run_against_grid(const AlgorithmFactory& make_algorithm,
                                      const Grid& grid);

/// Row-major scan deciding via union-find; answers true the moment the
/// observed prefix contains a cycle.
AlgorithmFactory union_find_scanner();

/// Flood-fills same-colour regions, reading neighbours on demand;
/// answers true on a back edge to a non-parent region member.
AlgorithmFactory dfs_region_detector();

/// Reads every cell in a seeded pseudorandom order, then answers via
/// has_cycle on the completed grid.
AlgorithmFactory random_order_scanner(uint64_t seed);

/// Synthetic lazy-loser: reads k cells row-major, then answers
/// `answer` regardless of what it saw.
AlgorithmFactory early_answer_scanner(int k, bool answer);

}  // namespace gridcycle
