#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gridcycle/verifier.hpp"

using namespace gridcycle;

namespace {

std::map<Cell, std::vector<Symbol>> two_symbol_alphabets(
    const PartialGrid& partial) {
  std::map<Cell, std::vector<Symbol>> out;
  for (Cell c : partial.unread_cells()) out[c] = {'a', 'b'};
  return out;
}

}  // namespace

TEST_CASE("ambiguity oracle on 2x2 prefixes") {
  SUBCASE("empty prefix") {
    PartialGrid p({2, 2});
    AmbiguityReport r = ambiguity_oracle(p, two_symbol_alphabets(p));
    CHECK(r.prefix_length == 0);
    CHECK(r.cyclic_completion_exists);
    CHECK(r.acyclic_completion_exists);
    REQUIRE(r.cyclic_example.has_value());
    CHECK(has_cycle(*r.cyclic_example));
    REQUIRE(r.acyclic_example.has_value());
    CHECK_FALSE(has_cycle(*r.acyclic_example));
  }
  SUBCASE("three a's read") {
    PartialGrid p({2, 2});
    p.set({0, 0}, 'a');
    p.set({0, 1}, 'a');
    p.set({1, 0}, 'a');
    AmbiguityReport r = ambiguity_oracle(p, two_symbol_alphabets(p));
    CHECK(r.cyclic_completion_exists);
    CHECK(r.acyclic_completion_exists);
    CHECK(*r.cyclic_example == parse_grid("aa\naa"));
    CHECK(*r.acyclic_example == parse_grid("aa\nab"));
  }
  SUBCASE("full grid: exactly one side exists") {
    PartialGrid p({2, 2});
    p.set({0, 0}, 'a');
    p.set({0, 1}, 'a');
    p.set({1, 0}, 'a');
    p.set({1, 1}, 'a');
    AmbiguityReport r = ambiguity_oracle(p, {});
    CHECK(r.cyclic_completion_exists);
    CHECK_FALSE(r.acyclic_completion_exists);
  }
}

TEST_CASE("ambiguity oracle input validation and budget") {
  PartialGrid p({2, 2});
  CHECK_THROWS_AS(ambiguity_oracle(p, {}), std::invalid_argument);
  std::map<Cell, std::vector<Symbol>> big;
  for (Cell c : p.unread_cells())
    big[c] = {'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h'};
  CHECK_THROWS_AS(ambiguity_oracle(p, big, 100), OracleBudgetExceeded);
  CHECK_NOTHROW(ambiguity_oracle(p, big, 10000));
}

TEST_CASE("oracle agrees with has_cycle on full random grids") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    GridDims d{2 + static_cast<int>(rng() % 3),
               2 + static_cast<int>(rng() % 3)};
    PartialGrid p(d);
    for (int r = 0; r < d.rows; ++r)
      for (int c = 0; c < d.cols; ++c)
        p.set({r, c}, static_cast<Symbol>('a' + rng() % 3));
    Grid g = complete(p, {});
    AmbiguityReport rep = ambiguity_oracle(p, {});
    CHECK(rep.cyclic_completion_exists == has_cycle(g));
    CHECK(rep.acyclic_completion_exists == !has_cycle(g));
  }
}

TEST_CASE("block sweeps are clean and witness/oracle modes agree") {
  SweepReport both = verify_block_exhaustive(BlockKind::B2x2, VerifyMode::Both);
  CHECK(both.orders_checked == 24);
  CHECK(both.prefixes_checked == 24 * 4);
  CHECK(both.ok());

  SweepReport w = verify_block_exhaustive(BlockKind::B3x2,
                                          VerifyMode::Witnesses);
  SweepReport o = verify_block_exhaustive(BlockKind::B3x2, VerifyMode::Oracle);
  CHECK(w.orders_checked == 720);
  CHECK(o.orders_checked == 720);
  CHECK(w.ok());
  CHECK(o.ok());
}

TEST_CASE("oracle sampling is deterministic in the seed") {
  SweepReport a = verify_block_exhaustive(BlockKind::B2x3, VerifyMode::Oracle,
                                          0.1, 5);
  SweepReport b = verify_block_exhaustive(BlockKind::B2x3, VerifyMode::Oracle,
                                          0.1, 5);
  CHECK(a.orders_checked == b.orders_checked);
  CHECK(a.prefixes_checked == b.prefixes_checked);
  CHECK(a.ok());
  CHECK(b.ok());
}

TEST_CASE("random grid sweeps are clean") {
  SweepReport r44 = verify_grid_random({4, 4}, 50, 42);
  CHECK(r44.orders_checked == 50);
  CHECK(r44.ok());
  // 5x5 exercises all four block kinds; keep the oracle crosscheck on
  // so small prefixes get brute-forced too.
  SweepReport r55 = verify_grid_random({5, 5}, 20, 42, true);
  CHECK(r55.ok());
}

TEST_CASE("a 2x2 grid sweep with many orders covers all 24 permutations") {
  SweepReport r = verify_grid_random({2, 2}, 200, 1, true);
  CHECK(r.ok());
  CHECK(r.prefixes_checked == 200 * 4);
}

TEST_CASE("report rendering includes counts and failures") {
  SweepReport r;
  r.subject = "block 2x2 mode both";
  r.orders_checked = 24;
  r.failures.push_back({3, 2, "example failure"});
  std::string text = render_report(r);
  CHECK(text.find("24 orders") != std::string::npos);
  CHECK(text.find("1 failures") != std::string::npos);
  CHECK(text.find("example failure") != std::string::npos);
}

TEST_CASE("dfs detector route matches union-find on adversarial shapes") {
  // Narrow strips and near-uniform grids stress both routes.
  for (const char* text : {"ab\nba", "aa\naa", "aaaa\nabba\naaaa",
                           "ababab\nbababa", "aabb\naabb\nbbaa"}) {
    Grid g = parse_grid(text);
    CHECK(has_cycle(g) == has_cycle_dfs(g));
  }
}
