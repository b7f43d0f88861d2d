#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gridcycle {

/// A single grid symbol. Any printable non-whitespace character.
using Symbol = char;

struct GridDims {
  int rows = 0;
  int cols = 0;

  bool operator==(const GridDims&) const = default;

  int cell_count() const { return rows * cols; }
};

/// 0-based grid coordinate. Default ordering is row-major.
struct Cell {
  int row = 0;
  int col = 0;

  auto operator<=>(const Cell&) const = default;
};

inline bool in_range(Cell c, GridDims d) {
  return c.row >= 0 && c.row < d.rows && c.col >= 0 && c.col < d.cols;
}

inline int cell_index(Cell c, GridDims d) { return c.row * d.cols + c.col; }

/// Raised by parse_grid with the 1-based offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Total character assignment over an m x n grid.
class Grid {
 public:
  Grid(GridDims dims, std::vector<Symbol> cells);
  Grid(GridDims dims, Symbol fill);

  GridDims dims() const { return dims_; }

  Symbol at(Cell c) const;
  void set(Cell c, Symbol s);

  std::span<const Symbol> cells() const { return cells_; }

  bool operator==(const Grid&) const = default;

 private:
  GridDims dims_;
  std::vector<Symbol> cells_;
};

/// Partially revealed assignment; unread cells have no value.
class PartialGrid {
 public:
  explicit PartialGrid(GridDims dims);

  GridDims dims() const { return dims_; }

  bool is_read(Cell c) const;
  std::optional<Symbol> at(Cell c) const;

  /// Records a response. The cell must be in range and not yet read.
  void set(Cell c, Symbol s);

  int read_count() const { return read_count_; }
  int unread_count() const { return dims_.cell_count() - read_count_; }

  /// Unread cells in row-major order.
  std::vector<Cell> unread_cells() const;
  /// Read cells in row-major order.
  std::vector<Cell> read_cells() const;

 private:
  GridDims dims_;
  std::vector<Symbol> cells_;  // 0 marks unread; never exposed
  int read_count_ = 0;
};

/// Orthogonal in-range neighbours, in up/down/left/right order.
std::vector<Cell> neighbors(Cell c, GridDims dims);

/// Every adjacent equal-symbol pair, once each, row-major by first
/// endpoint with the right edge before the down edge.
std::vector<std::pair<Cell, Cell>> same_color_edges(const Grid& grid);

/// True iff the grid graph contains a cycle. Union-find over
/// same-colour edges: a cycle exists iff some edge joins two cells
/// already in one component.
bool has_cycle(const Grid& grid);

/// Same check over a raw row-major buffer, for enumeration loops.
bool has_cycle(GridDims dims, std::span<const Symbol> cells);

/// Total grid agreeing with `partial` on read cells and `fill` on the
/// rest. `fill` must cover exactly the unread cells.
Grid complete(const PartialGrid& partial, const std::map<Cell, Symbol>& fill);

Grid parse_grid(std::string_view text);
std::string serialize_grid(const Grid& grid);

}  // namespace gridcycle
