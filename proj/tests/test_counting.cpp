#include <doctest.h>

#include <cstdlib>
#include <mutex>

#include "percoperm/counting.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("serial enumeration is lexicographic") {
  std::vector<std::string> seen;
  enumerate_permutations(3, [&](const Permutation& p) { seen.push_back(p.to_string()); });
  CHECK(seen == std::vector<std::string>{"1 2 3", "1 3 2", "2 1 3", "2 3 1", "3 1 2", "3 2 1"});
  int ones = 0;
  enumerate_permutations(1, [&](const Permutation& p) { ones += p.size(); });
  CHECK(ones == 1);
  CHECK(count_permutations_if(4, [](const Permutation&) { return true; }) == 24);
  CHECK_THROWS_AS(enumerate_permutations(0, [](const Permutation&) {}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_permutations(13, [](const Permutation&) {}), std::invalid_argument);
}

TEST_CASE("parallel enumeration visits each permutation once") {
  std::mutex lock;
  std::set<std::string> seen;
  std::size_t visits = 0;
  enumerate_permutations(
      6,
      [&](const Permutation& p) {
        std::lock_guard guard(lock);
        seen.insert(p.to_string());
        ++visits;
      },
      Execution::Parallel);
  CHECK(visits == 720);
  CHECK(seen.size() == 720);
}

TEST_CASE("worker errors propagate") {
  CHECK_THROWS_AS(for_each_first_value(
                      5, Execution::Parallel,
                      [](int first) {
                        if (first == 3) throw std::runtime_error("boom");
                      }),
                  std::runtime_error);
}

TEST_CASE("count goldens") {
  CHECK(count_full(1) == 1);
  CHECK(count_full(3) == 6);
  CHECK(count_full(4) == 22);
  CHECK(count_full_indecomposable(2) == 1);
  CHECK(count_full_indecomposable(4) == 11);
  CHECK(count_full_indecomposable(5) == 45);
  CHECK(count_no_growth(2) == 0);
  CHECK(count_no_growth(4) == 2);
  CHECK(count_no_growth(5) == 14);
  CHECK_THROWS_AS(count_full(0), std::invalid_argument);
}

TEST_CASE("counts agree with slow predicates for n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t full = 0;
    std::uint64_t indecomposable = 0;
    std::uint64_t kings = 0;
    for (const auto& p : all_permutations(n)) {
      const bool f = is_full(p);
      full += f;
      indecomposable += f && is_indecomposable(p);
      const bool no_growth = mutable_cells(matrix_of(p)).empty();
      kings += no_growth;
      if (n <= 6 && no_growth != is_no_growth_fast(p.values())) FAIL_CHECK("fast no-growth wrong for " << p.to_string());
    }
    CHECK(count_full(n) == full);
    CHECK(count_full_indecomposable(n) == indecomposable);
    CHECK(count_no_growth(n) == kings);
  }
}

TEST_CASE("serial and parallel agree, Schroeder and formulas match for n <= 9") {
  for (int n = 1; n <= 9; ++n) {
    const auto serial = count_report(n, Family::All, Execution::Serial);
    const auto parallel = count_report(n, Family::All, Execution::Parallel);
    CHECK(serial.p_n == parallel.p_n);
    CHECK(serial.q_n == parallel.q_n);
    CHECK(serial.a_n == parallel.a_n);
    CHECK(*serial.p_n == schroeder_large(n - 1));
    CHECK(*serial.q_n == schroeder_little(n - 1));
    if (n >= 2) CHECK(2 * *serial.q_n == *serial.p_n);
    CHECK(*serial.a_n == a_formula(n));
    CHECK(*serial.a_n == a_abramson_moser(n));
    CHECK(*serial.a_n == a_via_series(n)[n]);
  }
}

TEST_CASE("first-component recursion for full permutations") {
  std::vector<Integer> p{0};
  std::vector<Integer> q{0};
  for (int n = 1; n <= 9; ++n) {
    const auto r = count_report(n, Family::All, Execution::Parallel);
    p.push_back(*r.p_n);
    q.push_back(*r.q_n);
  }
  for (int n = 1; n <= 7; ++n) {
    Integer rhs = q[static_cast<std::size_t>(n + 2)];
    for (int k = 1; k <= n + 1; ++k) rhs += q[static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(n + 2 - k)];
    CHECK(p[static_cast<std::size_t>(n + 2)] == rhs);
  }
}

TEST_CASE("factorial identity") {
  const std::vector<Integer> p{1, 2, 6, 22};
  const std::vector<Integer> a{1, 0, 0, 2};
  const auto four = verify_factorial_identity(4, p, a);
  CHECK(four.lhs == 24);
  CHECK(four.rhs == 1 * 22 + 2 * 1);
  const auto one = verify_factorial_identity(1, p, a);
  CHECK(one.lhs == 1);
  CHECK(one.rhs == 1);
  const auto five = verify_factorial_identity(5);
  CHECK(five.lhs == 120);
  CHECK(five.rhs == 120);
  for (int n = 1; n <= 8; ++n) {
    const auto fi = verify_factorial_identity(n, Execution::Parallel);
    CHECK(fi.lhs == fi.rhs);
  }
  CHECK_THROWS_AS(verify_factorial_identity(11, p, a), std::invalid_argument);
  CHECK_THROWS_AS(verify_factorial_identity(5, p, a), std::invalid_argument);
}

TEST_CASE("count report serialization") {
  CHECK(CountReport::csv_header() == "n,p_n,q_n,a_n,elapsed_ms");
  auto r = count_report(5, Family::NoGrowth);
  r.elapsed = std::chrono::duration<double, std::milli>(1.25);
  CHECK(r.to_csv_row() == "5,,,14,1.250");
  CHECK_FALSE(r.p_n.has_value());
}

TEST_CASE("PERCOPERM_THREADS caps the worker count") {
  ::setenv("PERCOPERM_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  ::setenv("PERCOPERM_THREADS", "zero", 1);
  CHECK(worker_count() >= 1);
  ::unsetenv("PERCOPERM_THREADS");
}
