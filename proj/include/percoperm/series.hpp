#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <stdexcept>
#include <utility>
#include <vector>

#include "percoperm/bigint.hpp"

namespace percoperm {

/// Ordered list of positive parts.
struct Composition {
  std::vector<int> parts;

  int total() const noexcept;
  int length() const noexcept { return static_cast<int>(parts.size()); }
  /// Number of parts equal to `value` (so multiplicity(1) is the count of 1s).
  int multiplicity(int value) const noexcept;

  friend bool operator==(const Composition&, const Composition&) = default;
};

/// Compositions of n into exactly m parts, lexicographically ascending.
class Compositions {
 public:
  /// Throws std::invalid_argument unless 1 <= m <= n.
  Compositions(int n, int m);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Composition*;
    using reference = const Composition&;

    iterator() = default;

    reference operator*() const noexcept { return current_; }
    pointer operator->() const noexcept { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) noexcept { return a.done_ == b.done_; }

   private:
    friend class Compositions;
    iterator(int n, int m);

    Composition current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_, m_); }
  iterator end() const { return iterator(); }

 private:
  int n_;
  int m_;
};

inline Compositions compositions(int n, int m) { return Compositions(n, m); }

/// S_0..S_k via c_{j+1} = c_j + sum_{i=0}^{j} c_i c_{j-i}, c_0 = 1.
std::vector<Integer> schroeder_large_sequence(int k);
Integer schroeder_large(int k);
/// s_0 = 1, s_k = S_k / 2 for k >= 1.
Integer schroeder_little(int k);

/// k-th Taylor coefficient of g(t) = t(1-t)/(1+t): 0, 1, then 2(-1)^{k-1}.
Integer taylor_g(int k);

/// Formal power series truncated at a fixed order; coefficient k is t^k.
template <class T>
class Series {
 public:
  explicit Series(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
  }
  explicit Series(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least a constant term");
  }

  /// The series t truncated at `order`.
  static Series identity(int order) {
    Series s(order);
    if (order >= 1) s[1] = T(1);
    return s;
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const T& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  T& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<T>& coeffs() const noexcept { return coeffs_; }

  Series truncated(int order) const {
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    return Series(std::vector<T>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<T> coeffs_;
};

/// Truncated product at the smaller of the two orders.
template <class T>
Series<T> operator*(const Series<T>& a, const Series<T>& b) {
  const int order = std::min(a.order(), b.order());
  Series<T> out(order);
  for (int i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

namespace detail {

template <class T>
void require_zero_constant(const Series<T>& inner) {
  if (inner[0] != 0) throw std::invalid_argument("inner series must have zero constant term");
}

/// Adds a_m * sum over compositions of n into m parts of prod_j b_{s_j} to
/// coefficient n for every n <= N. Compositions sharing a multiplicity
/// vector contribute the same product, so each integer partition is visited
/// once and weighted by its count of orderings m! / prod_i (count_i)!.
template <class T>
class PartitionComposer {
 public:
  PartitionComposer(const Series<T>& a, const Series<T>& b, int order)
      : a_(a), b_(b), factorials_(static_cast<std::size_t>(order) + 1) {
    factorials_[0] = 1;
    for (int k = 1; k <= order; ++k) factorials_[static_cast<std::size_t>(k)] = factorials_[static_cast<std::size_t>(k - 1)] * k;
  }

  T coefficient(int n) {
    sum_ = T(0);
    visit(n, n, 0, T(1), Integer(1));
    return sum_;
  }

 private:
  // Parts are chosen in decreasing size; `largest` bounds the next part size.
  void visit(int remaining, int largest, int parts, const T& product, const Integer& denominator) {
    if (remaining == 0) {
      const Integer orderings = factorials_[static_cast<std::size_t>(parts)] / denominator;
      sum_ += a_[parts] * product * T(orderings);
      return;
    }
    for (int size = std::min(largest, remaining); size >= 1; --size) {
      if (b_[size] == 0) continue;
      T p = product;
      Integer d = denominator;
      for (int count = 1; count * size <= remaining; ++count) {
        p *= b_[size];
        d *= count;
        visit(remaining - count * size, size - 1, parts + count, p, d);
      }
    }
  }

  const Series<T>& a_;
  const Series<T>& b_;
  std::vector<Integer> factorials_;
  T sum_{};
};

}  // namespace detail

/// Coefficients of a(b(t)) from
///   [t^n] a(b(t)) = sum_{m=1}^{n} a_m sum_{compositions (s_1..s_m) of n} prod_j b_{s_j},
/// with [t^0] = a_0. Compositions are grouped by multiplicity vector, so the
/// cost is governed by the partition count of N rather than 2^N.
/// Throws std::invalid_argument if b has a nonzero constant term.
template <class T>
Series<T> series_compose(const Series<T>& a, const Series<T>& b) {
  detail::require_zero_constant(b);
  const int order = std::min(a.order(), b.order());
  Series<T> out(order);
  out[0] = a[0];
  detail::PartitionComposer<T> composer(a, b, order);
  for (int n = 1; n <= order; ++n) out[n] = composer.coefficient(n);
  return out;
}

/// Same result as series_compose, by Horner evaluation with truncated
/// products. Independent cross-check route.
template <class T>
Series<T> series_compose_horner(const Series<T>& a, const Series<T>& b) {
  detail::require_zero_constant(b);
  const int order = std::min(a.order(), b.order());
  const Series<T> inner = b.truncated(order);
  Series<T> acc(order);
  for (int k = order; k >= 0; --k) {
    acc = acc * inner;
    acc[0] += a[k];
  }
  return acc;
}

/// epsilon(t) = sum k! t^k.
Series<Integer> series_epsilon(int order);
/// B(t) = t R(t): coefficient k is S_{k-1}, coefficient 0 is 0.
Series<Integer> series_B(int order);
Series<Integer> series_g(int order);

/// a_0..a_N as the coefficients of epsilon(g(t)).
Series<Integer> a_via_series(int order);

/// a_n = (-1)^n sum_{m=1}^{n} m! (-2)^m sum_{compositions of n into m parts} 2^{-(number of 1s)},
/// evaluated in integers scaled by 2^n. Requires n >= 1.
Integer a_formula(int n);

/// Per-m breakdown of a_formula: the rational inner sums and the signed
/// integer terms (index m - 1), plus their total.
struct KingsFormulaTerms {
  std::vector<Rational> inner_sums;
  std::vector<Integer> terms;
  Integer value;
};
KingsFormulaTerms a_formula_terms(int n);

/// a_n = sum_{k=0}^{n} (n-k)! sum_{i=0}^{k} (-1)^k C(n-k, i) C(n-i-1, k-i). Requires n >= 1.
Integer a_abramson_moser(int n);

}  // namespace percoperm
