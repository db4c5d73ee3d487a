#include "percoperm/counting.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "percoperm/percolation.hpp"
#include "percoperm/series.hpp"
#include "percoperm/tiling.hpp"

namespace percoperm {

namespace detail {

void require_count_range(int n) {
  if (n < 1 || n > kMaxCountN) {
    throw std::invalid_argument("n must be in 1.." + std::to_string(kMaxCountN) + ", got " + std::to_string(n));
  }
}

}  // namespace detail

unsigned worker_count() {
  if (const char* env = std::getenv("PERCOPERM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void for_each_first_value(int n, Execution exec, const std::function<void(int)>& task) {
  if (exec == Execution::Serial) {
    for (int first = 1; first <= n; ++first) task(first);
    return;
  }
  const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(n));
  std::atomic<int> next{1};
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int first = next++; first <= n; first = next++) task(first);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

bool is_no_growth_fast(std::span<const int> values) noexcept {
  for (std::size_t i = 1; i < values.size(); ++i) {
    const int d = values[i] - values[i - 1];
    if (d == 1 || d == -1) return false;
  }
  return true;
}

namespace {

bool fast_full(const Permutation& p) { return count_final_tiles(p.values()) == 1; }

// The first permutation of every partition is also decided by cell-level
// percolation; disagreement means the merge path is broken.
void spot_check(const Permutation& p) {
  if (fast_full(p) != is_full(p)) {
    throw std::logic_error("tile merging and percolation disagree on " + p.to_string());
  }
}

struct Tally {
  std::uint64_t full = 0;
  std::uint64_t indecomposable_full = 0;
  std::uint64_t no_growth = 0;
};

Tally tally(int n, Family family, Execution exec) {
  detail::require_count_range(n);
  const bool want_full = family != Family::NoGrowth;
  const bool want_indec = family == Family::IndecomposableFull || family == Family::All;
  const bool want_kings = family == Family::NoGrowth || family == Family::All;

  std::vector<Tally> partial(static_cast<std::size_t>(n));
  for_each_first_value(n, exec, [&](int first) {
    Tally local;
    PermutationCursor cursor(n, first);
    if (want_full) spot_check(cursor.current());
    do {
      const Permutation& p = cursor.current();
      if (want_full && fast_full(p)) {
        ++local.full;
        if (want_indec && is_indecomposable(p)) ++local.indecomposable_full;
      }
      if (want_kings && is_no_growth_fast(p.values())) ++local.no_growth;
    } while (cursor.next(1));
    partial[static_cast<std::size_t>(first - 1)] = local;
  });

  Tally total;
  for (const Tally& t : partial) {
    total.full += t.full;
    total.indecomposable_full += t.indecomposable_full;
    total.no_growth += t.no_growth;
  }
  return total;
}

}  // namespace

Integer count_full(int n, Execution exec) { return tally(n, Family::Full, exec).full; }

Integer count_full_indecomposable(int n, Execution exec) {
  return tally(n, Family::IndecomposableFull, exec).indecomposable_full;
}

Integer count_no_growth(int n, Execution exec) { return tally(n, Family::NoGrowth, exec).no_growth; }

std::string CountReport::csv_header() { return "n,p_n,q_n,a_n,elapsed_ms"; }

std::string CountReport::to_csv_row() const {
  const auto field = [](const std::optional<Integer>& v) { return v ? v->str() : std::string(); };
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", elapsed.count());
  return std::to_string(n) + "," + field(p_n) + "," + field(q_n) + "," + field(a_n) + "," + ms;
}

CountReport count_report(int n, Family family, Execution exec) {
  const auto start = std::chrono::steady_clock::now();
  const Tally t = tally(n, family, exec);
  CountReport r;
  r.n = n;
  if (family == Family::Full || family == Family::All) r.p_n = Integer(t.full);
  if (family == Family::IndecomposableFull || family == Family::All) r.q_n = Integer(t.indecomposable_full);
  if (family == Family::NoGrowth || family == Family::All) r.a_n = Integer(t.no_growth);
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

FactorialIdentity verify_factorial_identity(int n, std::span<const Integer> p, std::span<const Integer> a) {
  if (n < 1 || n > 10) throw std::invalid_argument("factorial identity is checked for 1 <= n <= 10");
  if (p.size() < static_cast<std::size_t>(n) || a.size() < static_cast<std::size_t>(n)) {
    throw std::invalid_argument("need p_1..p_n and a_1..a_n");
  }
  FactorialIdentity out{factorial(n), 0};
  for (int m = 1; m <= n; ++m) {
    Integer inner = 0;
    for (const Composition& c : compositions(n, m)) {
      Integer product = 1;
      for (int part : c.parts) product *= p[static_cast<std::size_t>(part - 1)];
      inner += product;
    }
    out.rhs += a[static_cast<std::size_t>(m - 1)] * inner;
  }
  return out;
}

FactorialIdentity verify_factorial_identity(int n, Execution exec) {
  if (n < 1 || n > 10) throw std::invalid_argument("factorial identity is checked for 1 <= n <= 10");
  std::vector<Integer> p;
  std::vector<Integer> a;
  for (int k = 1; k <= n; ++k) {
    const Tally t = tally(k, Family::All, exec);
    p.emplace_back(t.full);
    a.emplace_back(t.no_growth);
  }
  return verify_factorial_identity(n, p, a);
}

}  // namespace percoperm
