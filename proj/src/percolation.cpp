#include "percoperm/percolation.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace percoperm {

namespace {

std::uint64_t full_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

std::uint64_t bit(int col) { return std::uint64_t{1} << (col - 1); }

/// Per-row bitmask of mutable cells.
std::vector<std::uint64_t> mutable_masks(const Grid& g) {
  const int n = g.size();
  const auto mask = full_mask(n);
  const auto& rows = g.rows();
  std::vector<std::uint64_t> out(rows.size());
  for (int r = 0; r < n; ++r) {
    const auto cur = rows[static_cast<std::size_t>(r)];
    const auto north = r > 0 ? rows[static_cast<std::size_t>(r - 1)] : 0;
    const auto south = r + 1 < n ? rows[static_cast<std::size_t>(r + 1)] : 0;
    const auto west = (cur << 1) & mask;
    const auto east = cur >> 1;
    const auto two = (north & south) | (north & west) | (north & east) | (south & west) | (south & east) |
                     (west & east);
    out[static_cast<std::size_t>(r)] = two & ~cur & mask;
  }
  return out;
}

void check_side(int n) {
  if (n < 1 || n > Grid::kMaxSide) {
    throw std::invalid_argument("grid side must be in 1..64, got " + std::to_string(n));
  }
}

}  // namespace

Grid::Grid(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) { check_side(n); }

Grid Grid::all_ones(int n) {
  Grid g(n);
  std::fill(g.rows_.begin(), g.rows_.end(), full_mask(n));
  return g;
}

Grid Grid::from_rows(int n, std::vector<std::uint64_t> rows) {
  Grid g(n);
  if (rows.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("row count does not match side");
  for (auto r : rows) {
    if ((r & ~full_mask(n)) != 0) throw std::invalid_argument("row has bits beyond column n");
  }
  g.rows_ = std::move(rows);
  return g;
}

bool Grid::at(Cell c) const {
  if (!contains(c)) throw std::out_of_range("cell outside grid");
  return (row_bits(c.row) & bit(c.col)) != 0;
}

Grid Grid::with(Cell c) const {
  if (!contains(c)) throw std::out_of_range("cell outside grid");
  Grid g = *this;
  g.rows_[static_cast<std::size_t>(c.row - 1)] |= bit(c.col);
  return g;
}

int Grid::count_ones() const noexcept {
  int total = 0;
  for (auto r : rows_) total += std::popcount(r);
  return total;
}

std::vector<Cell> Grid::ones() const {
  std::vector<Cell> out;
  for (int r = 1; r <= n_; ++r) {
    for (int c = 1; c <= n_; ++c) {
      if (row_bits(r) & bit(c)) out.push_back({r, c});
    }
  }
  return out;
}

std::string Grid::render() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(n_ * (n_ + 1)));
  for (int r = 1; r <= n_; ++r) {
    for (int c = 1; c <= n_; ++c) out += (row_bits(r) & bit(c)) ? '1' : '0';
    out += '\n';
  }
  return out;
}

Grid matrix_of(const Permutation& p) {
  const int n = p.size();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int j = 1; j <= n; ++j) rows[static_cast<std::size_t>(n - p(j))] |= bit(j);
  return Grid::from_rows(n, std::move(rows));
}

std::vector<Cell> mutable_cells(const Grid& g) {
  std::vector<Cell> out;
  const auto masks = mutable_masks(g);
  for (int r = 0; r < g.size(); ++r) {
    auto m = masks[static_cast<std::size_t>(r)];
    while (m != 0) {
      const int col = std::countr_zero(m) + 1;
      out.push_back({r + 1, col});
      m &= m - 1;
    }
  }
  return out;
}

bool is_mutable(const Grid& g, Cell c) {
  if (!g.contains(c) || g.at(c)) return false;
  int neighbors = 0;
  for (Cell d : {Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col}, Cell{c.row, c.col - 1}, Cell{c.row, c.col + 1}}) {
    if (g.contains(d) && g.at(d)) ++neighbors;
  }
  return neighbors >= 2;
}

Grid mutate(const Grid& g, Cell c) {
  if (!is_mutable(g, c)) {
    throw std::invalid_argument("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                ") is not mutable");
  }
  return g.with(c);
}

Grid closure(const Grid& g) {
  // Mutable cells stay mutable until mutated, so mutating a whole round at
  // once is a legal complete sequence.
  auto rows = g.rows();
  Grid cur = g;
  for (;;) {
    const auto masks = mutable_masks(cur);
    bool any = false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (masks[r] != 0) {
        rows[r] |= masks[r];
        any = true;
      }
    }
    if (!any) return cur;
    cur = Grid::from_rows(g.size(), rows);
  }
}

std::vector<Grid> PercolationTrace::frames() const {
  std::vector<Grid> out{initial};
  out.reserve(steps.size() + 1);
  for (const Cell& c : steps) out.push_back(out.back().with(c));
  return out;
}

PercolationTrace percolate(const Grid& g, const Policy& policy) {
  PercolationTrace trace{g, {}, g};
  Grid& cur = trace.final_grid;

  if (const auto* scripted = std::get_if<Scripted>(&policy)) {
    for (const Cell& c : scripted->cells) {
      cur = mutate(cur, c);
      trace.steps.push_back(c);
    }
    if (!mutable_cells(cur).empty()) {
      throw std::invalid_argument("scripted sequence is incomplete: mutable cells remain");
    }
    return trace;
  }

  std::mt19937_64 rng(std::holds_alternative<RandomOrder>(policy) ? std::get<RandomOrder>(policy).seed : 0);
  for (;;) {
    const auto candidates = mutable_cells(cur);
    if (candidates.empty()) break;
    Cell pick = candidates.front();
    if (std::holds_alternative<RandomOrder>(policy)) {
      std::uniform_int_distribution<std::size_t> dist(0, candidates.size() - 1);
      pick = candidates[dist(rng)];
    }
    cur = cur.with(pick);
    trace.steps.push_back(pick);
  }
  return trace;
}

std::string render_trace(const PercolationTrace& trace) {
  std::string out;
  const auto frames = trace.frames();
  for (std::size_t i = 0; i < frames.size(); ++i) {
    if (i != 0) out += '\n';
    out += frames[i].render();
  }
  return out;
}

MutationLayers mutation_layers(const Grid& g) {
  const int n = g.size();
  if (n > MutationLayers::kMaxSide) {
    throw std::domain_error("mutation_layers is an exhaustive oracle limited to n <= 5");
  }
  const auto pack = [n](const Grid& s) {
    std::uint32_t key = 0;
    for (int r = 0; r < n; ++r) key |= static_cast<std::uint32_t>(s.rows()[static_cast<std::size_t>(r)]) << (r * n);
    return key;
  };

  const int cells = n * n;
  MutationLayers out;
  out.n = n;
  out.levels.assign(static_cast<std::size_t>(cells), cells);
  for (const Cell& c : g.ones()) out.levels[static_cast<std::size_t>((c.row - 1) * n + c.col - 1)] = 0;

  // Every state at depth d is reached by exactly d mutations, so the first
  // depth at which a cell is mutated is its minimum step count.
  std::unordered_set<std::uint32_t> seen{pack(g)};
  std::vector<Grid> frontier{g};
  for (int depth = 1; !frontier.empty(); ++depth) {
    std::vector<Grid> next;
    for (const Grid& s : frontier) {
      for (const Cell& c : mutable_cells(s)) {
        auto& lvl = out.levels[static_cast<std::size_t>((c.row - 1) * n + c.col - 1)];
        lvl = std::min(lvl, depth);
        Grid t = s.with(c);
        if (seen.insert(pack(t)).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }

  out.layers.assign(static_cast<std::size_t>(cells - n + 1), {});
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      const int lvl = out.level({r, c});
      if (lvl < cells) out.layers[static_cast<std::size_t>(lvl)].push_back({r, c});
    }
  }
  return out;
}

std::vector<int> FinalConfiguration::sizes() const {
  std::vector<int> out;
  out.reserve(tiles.size());
  for (const Tile& t : tiles) out.push_back(t.size);
  return out;
}

FinalConfiguration FinalConfiguration::from_tiles(int n, std::vector<Tile> tiles) {
  // Tile j occupies values n - bottom + 1 .. n - top + 1; the condensed
  // value is the tile's rank by height, counted from the bottom.
  const auto m = tiles.size();
  std::vector<std::size_t> by_height(m);
  for (std::size_t i = 0; i < m; ++i) by_height[i] = i;
  std::sort(by_height.begin(), by_height.end(),
            [&](std::size_t a, std::size_t b) { return tiles[a].top_left.row > tiles[b].top_left.row; });
  std::vector<int> condensed(m);
  for (std::size_t rank = 0; rank < m; ++rank) condensed[by_height[rank]] = static_cast<int>(rank) + 1;

  FinalConfiguration fc;
  fc.n = n;
  fc.tiles = std::move(tiles);
  fc.condensed = Permutation(std::move(condensed));
  return fc;
}

FinalConfiguration extract_tiles(const Grid& terminal) {
  const int n = terminal.size();
  // Column j as a row-index bitmask (bit i-1 for row i).
  const auto column = [&](int col) {
    std::uint64_t m = 0;
    for (int r = 1; r <= n; ++r) {
      if (terminal.row_bits(r) & bit(col)) m |= bit(r);
    }
    return m;
  };

  std::vector<Tile> tiles;
  int col = 1;
  while (col <= n) {
    const auto run = column(col);
    if (run == 0) throw std::invalid_argument("column with no 1s in terminal grid");
    const int top = std::countr_zero(run) + 1;
    const int size = std::popcount(run);
    if ((run >> (top - 1)) != full_mask(size)) throw std::invalid_argument("broken run in terminal grid column");
    if (col + size - 1 > n) throw std::invalid_argument("non-square tile in terminal grid");
    for (int k = 1; k < size; ++k) {
      if (column(col + k) != run) throw std::invalid_argument("non-square tile in terminal grid");
    }
    tiles.push_back({{top, col}, size});
    col += size;
  }
  return FinalConfiguration::from_tiles(n, std::move(tiles));
}

FinalConfiguration final_configuration(const Permutation& p) { return extract_tiles(closure(matrix_of(p))); }

bool is_full(const Permutation& p) { return final_configuration(p).full(); }

bool is_full(const Word& w) { return is_full(reduce(w)); }

}  // namespace percoperm
