#include "percoperm/series.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace percoperm {

int Composition::total() const noexcept { return std::accumulate(parts.begin(), parts.end(), 0); }

int Composition::multiplicity(int value) const noexcept {
  return static_cast<int>(std::count(parts.begin(), parts.end(), value));
}

Compositions::Compositions(int n, int m) : n_(n), m_(m) {
  if (m < 1 || m > n) {
    throw std::invalid_argument("compositions(" + std::to_string(n) + ", " + std::to_string(m) +
                                "): need 1 <= m <= n");
  }
}

Compositions::iterator::iterator(int n, int m) : done_(false) {
  // Smallest in lexicographic order: 1, ..., 1, n - m + 1.
  current_.parts.assign(static_cast<std::size_t>(m), 1);
  current_.parts.back() = n - m + 1;
}

Compositions::iterator& Compositions::iterator::operator++() {
  auto& p = current_.parts;
  const auto m = p.size();
  // The rightmost position that can grow is just left of the rightmost part
  // exceeding 1; everything after it resets to the smallest tail.
  std::size_t j = m;
  for (std::size_t k = m; k-- > 1;) {
    if (p[k] > 1) {
      j = k;
      break;
    }
  }
  if (j == m) {
    done_ = true;
    return *this;
  }
  const std::size_t i = j - 1;
  int tail = 0;
  for (std::size_t k = i + 1; k < m; ++k) tail += p[k];
  ++p[i];
  --tail;
  for (std::size_t k = i + 1; k + 1 < m; ++k) p[k] = 1;
  p[m - 1] = tail - static_cast<int>(m - 2 - i);
  return *this;
}

std::vector<Integer> schroeder_large_sequence(int k) {
  if (k < 0) throw std::invalid_argument("Schroeder index must be non-negative");
  std::vector<Integer> c(static_cast<std::size_t>(k) + 1);
  c[0] = 1;
  for (int j = 0; j < k; ++j) {
    Integer next = c[static_cast<std::size_t>(j)];
    for (int i = 0; i <= j; ++i) next += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(j - i)];
    c[static_cast<std::size_t>(j + 1)] = std::move(next);
  }
  return c;
}

Integer schroeder_large(int k) { return schroeder_large_sequence(k).back(); }

Integer schroeder_little(int k) {
  if (k < 0) throw std::invalid_argument("Schroeder index must be non-negative");
  if (k == 0) return 1;
  const Integer large = schroeder_large(k);
  if ((large & 1) != 0) throw std::logic_error("large Schroeder number is odd");
  return large / 2;
}

Integer taylor_g(int k) {
  if (k < 0) throw std::invalid_argument("coefficient index must be non-negative");
  if (k == 0) return 0;
  if (k == 1) return 1;
  return k % 2 == 0 ? Integer(-2) : Integer(2);
}

Series<Integer> series_epsilon(int order) {
  Series<Integer> s(order);
  Integer f = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) f *= k;
    s[k] = f;
  }
  return s;
}

Series<Integer> series_B(int order) {
  Series<Integer> s(order);
  if (order == 0) return s;
  const auto large = schroeder_large_sequence(order - 1);
  for (int k = 1; k <= order; ++k) s[k] = large[static_cast<std::size_t>(k - 1)];
  return s;
}

Series<Integer> series_g(int order) {
  Series<Integer> s(order);
  for (int k = 0; k <= order; ++k) s[k] = taylor_g(k);
  return s;
}

Series<Integer> a_via_series(int order) { return series_compose(series_epsilon(order), series_g(order)); }

namespace {

void require_positive(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
}

/// 2^n times the inner sum for m parts: sum over compositions of 2^(n - #1s).
/// Compositions are tallied by their number of 1s, then weighted.
Integer scaled_inner_sum(int n, int m) {
  std::vector<std::uint64_t> by_ones(static_cast<std::size_t>(m) + 1, 0);
  for (const Composition& c : compositions(n, m)) {
    int ones = 0;
    for (int part : c.parts) ones += part == 1;
    ++by_ones[static_cast<std::size_t>(ones)];
  }
  Integer total = 0;
  for (int ones = 0; ones <= m; ++ones) {
    if (by_ones[static_cast<std::size_t>(ones)] != 0) {
      total += Integer(by_ones[static_cast<std::size_t>(ones)]) << (n - ones);
    }
  }
  return total;
}

/// (-1)^n m! (-2)^m, the weight of the m-th inner sum.
Integer outer_weight(int n, int m) {
  Integer w = factorial(m) << m;
  if ((n + m) % 2 != 0) w = -w;
  return w;
}

}  // namespace

Integer a_formula(int n) {
  require_positive(n);
  Integer scaled = 0;
  for (int m = 1; m <= n; ++m) scaled += outer_weight(n, m) * scaled_inner_sum(n, m);
  const Integer scale = power_of_two(static_cast<unsigned>(n));
  if (scaled % scale != 0) throw std::logic_error("kings formula produced a non-integer");
  return scaled / scale;
}

KingsFormulaTerms a_formula_terms(int n) {
  require_positive(n);
  KingsFormulaTerms out;
  const Integer scale = power_of_two(static_cast<unsigned>(n));
  for (int m = 1; m <= n; ++m) {
    Rational inner(scaled_inner_sum(n, m), scale);
    if (!is_power_of_two(denominator(inner))) {
      throw std::logic_error("inner sum denominator is not a power of two");
    }
    const Rational term = Rational(outer_weight(n, m)) * inner;
    if (denominator(term) != 1) throw std::logic_error("signed term is not an integer");
    out.inner_sums.push_back(inner);
    out.terms.push_back(numerator(term));
    out.value += numerator(term);
  }
  return out;
}

Integer a_abramson_moser(int n) {
  require_positive(n);
  Integer total = 0;
  for (int k = 0; k <= n; ++k) {
    Integer inner = 0;
    for (int i = 0; i <= k; ++i) inner += binomial(n - k, i) * binomial(n - i - 1, k - i);
    if (k % 2 != 0) inner = -inner;
    total += factorial(n - k) * inner;
  }
  return total;
}

}  // namespace percoperm
