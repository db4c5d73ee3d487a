#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "percoperm/bigint.hpp"
#include "percoperm/permutation.hpp"

namespace percoperm {

enum class Execution { Serial, Parallel };

inline constexpr int kMaxCountN = 12;

/// Worker count for parallel enumeration: PERCOPERM_THREADS if set to a
/// positive integer, otherwise the hardware concurrency.
unsigned worker_count();

/// Runs task(first_value) for every first_value in 1..n, spread over
/// worker_count() threads in parallel mode. Serial mode runs them in order.
void for_each_first_value(int n, Execution exec, const std::function<void(int)>& task);

/// Visits every permutation of {1..n} once. Serial mode visits in
/// lexicographic order; parallel mode partitions by first value and makes no
/// ordering promise, so the visitor must be safe to call concurrently.
/// Throws std::invalid_argument unless 1 <= n <= 12.
template <class Visitor>
void enumerate_permutations(int n, Visitor&& visitor, Execution exec = Execution::Serial);

/// Number of permutations of {1..n} satisfying pred, summed per partition.
template <class Predicate>
std::uint64_t count_permutations_if(int n, Predicate pred, Execution exec = Execution::Serial);

/// No two horizontally adjacent columns hold values that differ by one.
bool is_no_growth_fast(std::span<const int> values) noexcept;

Integer count_full(int n, Execution exec = Execution::Serial);
Integer count_full_indecomposable(int n, Execution exec = Execution::Serial);
Integer count_no_growth(int n, Execution exec = Execution::Serial);

enum class Family { Full, IndecomposableFull, NoGrowth, All };

struct CountReport {
  int n = 0;
  std::optional<Integer> p_n;  ///< full
  std::optional<Integer> q_n;  ///< full and indecomposable
  std::optional<Integer> a_n;  ///< no-growth
  std::chrono::duration<double, std::milli> elapsed{};

  static std::string csv_header();
  /// n,p_n,q_n,a_n,elapsed_ms; families not requested are left empty.
  std::string to_csv_row() const;
};

/// Single enumeration pass computing the requested families for size n.
CountReport count_report(int n, Family family, Execution exec = Execution::Serial);

/// Both sides of n! = sum_{m=1}^{n} a_m sum_{compositions of n into m parts} prod_i p_i^{#parts equal to i}.
struct FactorialIdentity {
  Integer lhs;
  Integer rhs;
};

/// p and a are 1-indexed through their spans: p[i-1] = p_i. Both need at
/// least n entries. Throws std::invalid_argument unless 1 <= n <= 10.
FactorialIdentity verify_factorial_identity(int n, std::span<const Integer> p, std::span<const Integer> a);

/// Brute-forces p_1..p_n and a_1..a_n and evaluates both sides.
FactorialIdentity verify_factorial_identity(int n, Execution exec = Execution::Serial);

namespace detail {
void require_count_range(int n);
}

template <class Visitor>
void enumerate_permutations(int n, Visitor&& visitor, Execution exec) {
  detail::require_count_range(n);
  if (exec == Execution::Serial) {
    PermutationCursor cursor(n);
    do {
      visitor(cursor.current());
    } while (cursor.next());
    return;
  }
  for_each_first_value(n, exec, [&](int first) {
    PermutationCursor cursor(n, first);
    do {
      visitor(cursor.current());
    } while (cursor.next(1));
  });
}

template <class Predicate>
std::uint64_t count_permutations_if(int n, Predicate pred, Execution exec) {
  detail::require_count_range(n);
  std::vector<std::uint64_t> partial(static_cast<std::size_t>(n), 0);
  for_each_first_value(n, exec, [&](int first) {
    std::uint64_t local = 0;
    PermutationCursor cursor(n, first);
    do {
      if (pred(cursor.current())) ++local;
    } while (cursor.next(1));
    partial[static_cast<std::size_t>(first - 1)] = local;
  });
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

}  // namespace percoperm
