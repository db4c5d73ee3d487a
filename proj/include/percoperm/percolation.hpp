#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "percoperm/permutation.hpp"

namespace percoperm {

/// 1-based cell address; row 1 is the top row.
struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// n x n 0/1 matrix, one 64-bit word per row (bit j-1 holds column j).
class Grid {
 public:
  static constexpr int kMaxSide = 64;

  /// All-zero grid.
  explicit Grid(int n);
  static Grid all_ones(int n);
  static Grid from_rows(int n, std::vector<std::uint64_t> rows);

  int size() const noexcept { return n_; }
  bool at(Cell c) const;
  bool contains(Cell c) const noexcept { return c.row >= 1 && c.row <= n_ && c.col >= 1 && c.col <= n_; }

  /// Bits of the given 1-based row.
  std::uint64_t row_bits(int row) const { return rows_[static_cast<std::size_t>(row - 1)]; }
  const std::vector<std::uint64_t>& rows() const noexcept { return rows_; }

  /// Copy with cell c set to 1.
  Grid with(Cell c) const;

  int count_ones() const noexcept;
  std::vector<Cell> ones() const;

  /// n lines of n characters from {0,1}, each terminated by '\n'.
  std::string render() const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> rows_;
};

/// Permutation matrix: the 1 of column j sits at top-origin row n - p(j) + 1.
Grid matrix_of(const Permutation& p);

/// 0-cells with at least two N/S/E/W neighbors equal to 1, in row-major order.
std::vector<Cell> mutable_cells(const Grid& g);

bool is_mutable(const Grid& g, Cell c);

/// Single percolation step. Throws std::invalid_argument if c is not mutable.
Grid mutate(const Grid& g, Cell c);

/// Fixpoint of the mutation rule, computed by simultaneous bitwise rounds.
Grid closure(const Grid& g);

struct FirstScan {};
struct RandomOrder {
  std::uint64_t seed = 0;
};
struct Scripted {
  std::vector<Cell> cells;
};
using Policy = std::variant<FirstScan, RandomOrder, Scripted>;

struct PercolationTrace {
  Grid initial;
  std::vector<Cell> steps;
  Grid final_grid;

  /// initial followed by the grid after each step.
  std::vector<Grid> frames() const;
};

/// Runs percolation to completion under the given choice policy. Scripted
/// sequences must consist of mutable cells and end with none remaining;
/// otherwise std::invalid_argument is thrown.
PercolationTrace percolate(const Grid& g, const Policy& policy = FirstScan{});

/// Frames separated by a blank line; frame 0 is the initial grid.
std::string render_trace(const PercolationTrace& trace);

/// Minimum step counts L(c) and the level sets U_0 .. U_{n^2-n}.
struct MutationLayers {
  static constexpr int kMaxSide = 5;

  int n = 0;
  /// Row-major n*n levels: 0 for initial 1-cells, n*n for cells that no
  /// sequence can mutate.
  std::vector<int> levels;
  std::vector<std::vector<Cell>> layers;

  int level(Cell c) const { return levels[static_cast<std::size_t>((c.row - 1) * n + (c.col - 1))]; }
};

/// Exact L(c) by breadth-first search over reachable grid states. Exponential;
/// throws std::domain_error for n > 5.
MutationLayers mutation_layers(const Grid& g);

struct Tile {
  Cell top_left;
  int size = 0;

  friend bool operator==(const Tile&, const Tile&) = default;
};

/// Square unitary tiles ordered left to right plus the condensed permutation.
struct FinalConfiguration {
  int n = 0;
  std::vector<Tile> tiles;
  Permutation condensed = Permutation::identity(1);

  std::vector<int> sizes() const;
  bool full() const noexcept { return tiles.size() == 1; }

  /// Builds the condensed permutation from a left-to-right tile list that
  /// covers every row and column exactly once.
  static FinalConfiguration from_tiles(int n, std::vector<Tile> tiles);

  friend bool operator==(const FinalConfiguration&, const FinalConfiguration&) = default;
};

/// Extracts the tiles of a terminal grid by scanning columns left to right.
/// Throws std::invalid_argument if the grid is not a terminal configuration
/// of square tiles.
FinalConfiguration extract_tiles(const Grid& terminal);

FinalConfiguration final_configuration(const Permutation& p);

bool is_full(const Permutation& p);

/// Fullness of a word, decided on its reduced form.
bool is_full(const Word& w);

}  // namespace percoperm
