#pragma once

// Slow reference implementations shared by the test binaries. None of these
// reuse the library's fast paths.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "percoperm/percolation.hpp"
#include "percoperm/permutation.hpp"
#include "percoperm/series.hpp"
#include "percoperm/tiling.hpp"

namespace testing {

using namespace percoperm;

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline Permutation perm(const std::string& text) { return parse_permutation(text); }

inline Word word(std::vector<int> values) { return Word(std::move(values)); }

inline std::set<Cell> cell_set(const std::vector<Cell>& cells) { return {cells.begin(), cells.end()}; }

/// Cell-by-cell neighbor count, no bit tricks.
inline bool naive_mutable(const Grid& g, Cell c) {
  if (g.at(c)) return false;
  int lit = 0;
  for (Cell d : {Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col}, Cell{c.row, c.col - 1}, Cell{c.row, c.col + 1}}) {
    if (g.contains(d) && g.at(d)) ++lit;
  }
  return lit >= 2;
}

inline std::vector<Cell> naive_mutable_cells(const Grid& g) {
  std::vector<Cell> out;
  for (int r = 1; r <= g.size(); ++r) {
    for (int c = 1; c <= g.size(); ++c) {
      if (naive_mutable(g, {r, c})) out.push_back({r, c});
    }
  }
  return out;
}

/// Every terminal grid reachable by some complete mutation order, found by
/// depth-first search over the (memoized) state graph.
inline std::set<std::vector<std::uint64_t>> all_terminal_states(const Grid& start) {
  std::set<std::vector<std::uint64_t>> seen;
  std::set<std::vector<std::uint64_t>> terminals;
  std::function<void(const Grid&)> dfs = [&](const Grid& g) {
    if (!seen.insert(g.rows()).second) return;
    const auto cells = naive_mutable_cells(g);
    if (cells.empty()) terminals.insert(g.rows());
    for (Cell c : cells) dfs(g.with(c));
  };
  dfs(start);
  return terminals;
}

/// Number of distinct complete mutation orders from `start`.
inline std::uint64_t count_complete_orders(const Grid& start) {
  std::map<std::vector<std::uint64_t>, std::uint64_t> memo;
  std::function<std::uint64_t(const Grid&)> go = [&](const Grid& g) -> std::uint64_t {
    if (auto it = memo.find(g.rows()); it != memo.end()) return it->second;
    const auto cells = naive_mutable_cells(g);
    std::uint64_t total = cells.empty() ? 1 : 0;
    for (Cell c : cells) total += go(g.with(c));
    memo[g.rows()] = total;
    return total;
  };
  return go(start);
}

/// Every row and every column holds exactly one contiguous run of 1s.
inline bool single_runs(const Grid& g) {
  const int n = g.size();
  const auto runs = [&](auto at) {
    int count = 0;
    bool inside = false;
    for (int k = 1; k <= n; ++k) {
      const bool lit = at(k);
      if (lit && !inside) ++count;
      inside = lit;
    }
    return count;
  };
  for (int i = 1; i <= n; ++i) {
    if (runs([&](int k) { return g.at({i, k}); }) != 1) return false;
    if (runs([&](int k) { return g.at({k, i}); }) != 1) return false;
  }
  return true;
}

/// Longest suffix of p that is indecomposable, by trying every start.
inline Word longest_indecomposable_suffix(const Permutation& p) {
  const auto v = p.values();
  for (std::size_t start = 0; start < v.size(); ++start) {
    Word suffix(std::vector<int>(v.begin() + static_cast<std::ptrdiff_t>(start), v.end()));
    if (is_indecomposable(suffix)) return suffix;
  }
  return Word();
}

/// Right child of every node under left merging is a leaf or has the
/// opposite kind; `right_children` selects the mirrored statement.
inline bool child_property(const Meld& m, bool right_children) {
  if (m.is_leaf()) return true;
  const Meld child = right_children ? m.right() : m.left();
  if (!child.is_leaf() && child.kind() == m.kind()) return false;
  return child_property(m.left(), right_children) && child_property(m.right(), right_children);
}

/// Swap children and toggle kinds at every node, printed as a bracketing.
inline std::string mirrored(const Meld& m) {
  if (m.is_leaf()) return std::to_string(m.value());
  const bool round = toggled(m.kind()) == MeldKind::Round;
  return std::string(round ? "(" : "[") + mirrored(m.right()) + " " + mirrored(m.left()) + (round ? ")" : "]");
}

/// Structural check of a meld tree: positions contiguous, values a
/// consecutive interval, kinds following the min/max rule.
inline bool well_formed(const Meld& m) {
  const auto leaves = m.leaves();
  auto sorted = leaves;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != m.min() + static_cast<int>(i)) return false;
  }
  if (sorted.back() != m.max()) return false;
  if (static_cast<int>(leaves.size()) != m.size()) return false;
  if (m.is_leaf()) return true;
  const Meld l = m.left();
  const Meld r = m.right();
  if (l.last_position() + 1 != r.first_position()) return false;
  const bool round = l.max() + 1 == r.min();
  const bool square = l.min() == r.max() + 1;
  if (m.kind() == MeldKind::Round ? !round : !square) return false;
  return well_formed(l) && well_formed(r);
}

/// Literal composition-over-compositions formula: every composition of n is
/// enumerated. Exponential; small orders only.
template <class T>
Series<T> compose_by_compositions(const Series<T>& a, const Series<T>& b) {
  const int order = std::min(a.order(), b.order());
  Series<T> out(order);
  out[0] = a[0];
  for (int n = 1; n <= order; ++n) {
    T total = T(0);
    for (int m = 1; m <= n; ++m) {
      T inner = T(0);
      for (const Composition& c : compositions(n, m)) {
        T product = T(1);
        for (int part : c.parts) product *= b[part];
        inner += product;
      }
      total += a[m] * inner;
    }
    out[n] = total;
  }
  return out;
}

/// All compositions of n with m parts via stars and bars over bitmasks.
inline std::vector<std::vector<int>> compositions_by_bars(int n, int m) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    if (std::popcount(mask) != m - 1) continue;
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.push_back(parts);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// A fixed sample of permutations of {1..n}.
inline std::vector<Permutation> sample_permutations(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  for (int i = 0; i < count; ++i) {
    std::shuffle(v.begin(), v.end(), rng);
    out.emplace_back(v);
  }
  return out;
}

}  // namespace testing
