#include "gridcycle/grid.hpp"

#include <cctype>
#include <numeric>

namespace gridcycle {

namespace {

void require_in_range(Cell c, GridDims d) {
  if (!in_range(c, d)) {
    throw std::invalid_argument("cell (" + std::to_string(c.row) + "," +
                                std::to_string(c.col) + ") out of range for " +
                                std::to_string(d.rows) + "x" +
                                std::to_string(d.cols));
  }
}

// Union-find with path compression and union by size. On equal sizes
// the lower row-major index becomes the root.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    int root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      int next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  /// Returns false if the two elements were already connected.
  bool unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (size_[ra] < size_[rb] || (size_[ra] == size_[rb] && rb < ra))
      std::swap(ra, rb);
    parent_[rb] = ra;
    size_[ra] += size_[rb];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace

Grid::Grid(GridDims dims, std::vector<Symbol> cells)
    : dims_(dims), cells_(std::move(cells)) {
  if (dims_.rows < 1 || dims_.cols < 1)
    throw std::invalid_argument("grid dims must be at least 1x1");
  if (static_cast<int>(cells_.size()) != dims_.cell_count())
    throw std::invalid_argument("cell buffer does not match dims");
}

Grid::Grid(GridDims dims, Symbol fill)
    : Grid(dims, std::vector<Symbol>(static_cast<size_t>(dims.cell_count()),
                                     fill)) {}

Symbol Grid::at(Cell c) const {
  require_in_range(c, dims_);
  return cells_[cell_index(c, dims_)];
}

void Grid::set(Cell c, Symbol s) {
  require_in_range(c, dims_);
  cells_[cell_index(c, dims_)] = s;
}

PartialGrid::PartialGrid(GridDims dims)
    : dims_(dims), cells_(static_cast<size_t>(dims.cell_count()), 0) {
  if (dims_.rows < 1 || dims_.cols < 1)
    throw std::invalid_argument("grid dims must be at least 1x1");
}

bool PartialGrid::is_read(Cell c) const {
  require_in_range(c, dims_);
  return cells_[cell_index(c, dims_)] != 0;
}

std::optional<Symbol> PartialGrid::at(Cell c) const {
  require_in_range(c, dims_);
  Symbol s = cells_[cell_index(c, dims_)];
  if (s == 0) return std::nullopt;
  return s;
}

void PartialGrid::set(Cell c, Symbol s) {
  require_in_range(c, dims_);
  if (s == 0) throw std::invalid_argument("symbol must be nonzero");
  Symbol& slot = cells_[cell_index(c, dims_)];
  if (slot != 0) throw std::invalid_argument("cell already read");
  slot = s;
  ++read_count_;
}

std::vector<Cell> PartialGrid::unread_cells() const {
  std::vector<Cell> out;
  for (int r = 0; r < dims_.rows; ++r)
    for (int c = 0; c < dims_.cols; ++c)
      if (cells_[r * dims_.cols + c] == 0) out.push_back({r, c});
  return out;
}

std::vector<Cell> PartialGrid::read_cells() const {
  std::vector<Cell> out;
  for (int r = 0; r < dims_.rows; ++r)
    for (int c = 0; c < dims_.cols; ++c)
      if (cells_[r * dims_.cols + c] != 0) out.push_back({r, c});
  return out;
}

std::vector<Cell> neighbors(Cell c, GridDims dims) {
  require_in_range(c, dims);
  std::vector<Cell> out;
  const Cell candidates[4] = {{c.row - 1, c.col},
                              {c.row + 1, c.col},
                              {c.row, c.col - 1},
                              {c.row, c.col + 1}};
  for (Cell n : candidates)
    if (in_range(n, dims)) out.push_back(n);
  return out;
}

std::vector<std::pair<Cell, Cell>> same_color_edges(const Grid& grid) {
  std::vector<std::pair<Cell, Cell>> out;
  GridDims d = grid.dims();
  for (int r = 0; r < d.rows; ++r) {
    for (int c = 0; c < d.cols; ++c) {
      Cell here{r, c};
      if (c + 1 < d.cols && grid.at(here) == grid.at({r, c + 1}))
        out.emplace_back(here, Cell{r, c + 1});
      if (r + 1 < d.rows && grid.at(here) == grid.at({r + 1, c}))
        out.emplace_back(here, Cell{r + 1, c});
    }
  }
  return out;
}

bool has_cycle(GridDims dims, std::span<const Symbol> cells) {
  if (static_cast<int>(cells.size()) != dims.cell_count())
    throw std::invalid_argument("cell buffer does not match dims");
  DisjointSets ds(dims.cell_count());
  for (int r = 0; r < dims.rows; ++r) {
    for (int c = 0; c < dims.cols; ++c) {
      int i = r * dims.cols + c;
      if (c + 1 < dims.cols && cells[i] == cells[i + 1] &&
          !ds.unite(i, i + 1))
        return true;
      if (r + 1 < dims.rows && cells[i] == cells[i + dims.cols] &&
          !ds.unite(i, i + dims.cols))
        return true;
    }
  }
  return false;
}

bool has_cycle(const Grid& grid) {
  return has_cycle(grid.dims(), grid.cells());
}

Grid complete(const PartialGrid& partial, const std::map<Cell, Symbol>& fill) {
  GridDims d = partial.dims();
  std::vector<Symbol> cells(static_cast<size_t>(d.cell_count()), 0);
  for (int r = 0; r < d.rows; ++r)
    for (int c = 0; c < d.cols; ++c)
      if (auto s = partial.at({r, c})) cells[r * d.cols + c] = *s;
  for (const auto& [cell, sym] : fill) {
    if (!in_range(cell, d))
      throw std::invalid_argument("fill cell out of range");
    if (partial.is_read(cell))
      throw std::invalid_argument("fill covers an already-read cell");
    cells[cell_index(cell, d)] = sym;
  }
  for (int i = 0; i < d.cell_count(); ++i)
    if (cells[i] == 0)
      throw std::invalid_argument("fill does not cover every unread cell");
  return Grid(d, std::move(cells));
}

Grid parse_grid(std::string_view text) {
  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.emplace_back(text.substr(pos));
      break;
    }
    lines.emplace_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  // A trailing newline yields no extra row.
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(1, "empty input");

  int cols = static_cast<int>(lines[0].size());
  std::vector<Symbol> cells;
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    int lineno = static_cast<int>(i) + 1;
    if (line.empty()) throw ParseError(lineno, "empty row");
    if (static_cast<int>(line.size()) != cols)
      throw ParseError(lineno, "ragged row: expected " + std::to_string(cols) +
                                   " characters, got " +
                                   std::to_string(line.size()));
    for (char ch : line) {
      if (std::isspace(static_cast<unsigned char>(ch)) ||
          !std::isprint(static_cast<unsigned char>(ch)))
        throw ParseError(lineno, "row contains a non-printable or whitespace "
                                 "character");
      cells.push_back(ch);
    }
  }
  return Grid({static_cast<int>(lines.size()), cols}, std::move(cells));
}

std::string serialize_grid(const Grid& grid) {
  std::string out;
  GridDims d = grid.dims();
  out.reserve(static_cast<size_t>(d.rows) * (d.cols + 1));
  for (int r = 0; r < d.rows; ++r) {
    for (int c = 0; c < d.cols; ++c) out.push_back(grid.at({r, c}));
    out.push_back('\n');
  }
  return out;
}

}  // namespace gridcycle
