#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace percoperm {

/// Error raised when permutation or word input violates its invariants.
class PermutationError : public std::invalid_argument {
 public:
  enum class Kind { Empty, Malformed, Duplicate, OutOfRange };

  PermutationError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A sequence of distinct integers: a permutation of some finite set.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> values);

  std::span<const int> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  int front() const { return values_.front(); }
  int back() const { return values_.back(); }

  /// Space-separated decimal values.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<int> values_;
};

/// A bijection of {1..n} in one-line notation, n >= 1. Values are 1-based.
class Permutation {
 public:
  /// Validates that `values` is a bijection onto {1..n}.
  explicit Permutation(std::vector<int> values);

  /// The identity permutation of {1..n}.
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }

  /// Value at 1-based position i.
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> values() const noexcept { return values_; }

  Word as_word() const { return Word(values_); }

  /// Canonical serialization: 1-based values separated by single spaces.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<int> values) : values_(std::move(values)) {}

  friend class PermutationCursor;

  std::vector<int> values_;
};

/// Mutable view used by enumerators to step a permutation in place without
/// revalidating it on every visit.
class PermutationCursor {
 public:
  explicit PermutationCursor(int n);
  PermutationCursor(int n, int first_value);

  const Permutation& current() const noexcept { return perm_; }

  /// Advances to the lexicographic successor, keeping the first `fixed`
  /// positions unchanged. Returns false when the block is exhausted.
  bool next(std::size_t fixed = 0);

 private:
  Permutation perm_;
};

/// Parses whitespace- or comma-separated decimal values. A single run of
/// digits is read one digit per value, allowed only when every value is a
/// single digit (n <= 9).
Permutation parse_permutation(std::string_view text);

/// Order-isomorphic relabeling of a nonempty word onto {1..len}.
Permutation reduce(const Word& w);

Permutation reverse(const Permutation& p);

bool is_indecomposable(const Permutation& p);
bool is_indecomposable(const Word& w);

/// Greedy factorization into indecomposable components. The factors occupy
/// consecutive ascending value intervals.
std::vector<Word> comps(const Permutation& p);

/// Maximum-length indecomposable suffix of p.
Word last_comp(const Permutation& p);

}  // namespace percoperm
