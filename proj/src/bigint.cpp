#include "percoperm/bigint.hpp"

#include <stdexcept>

namespace percoperm {

Integer binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Integer r = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

Integer factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer power_of_two(unsigned k) {
  Integer r = 1;
  r <<= k;
  return r;
}

bool is_power_of_two(const Integer& x) { return x > 0 && (x & (x - 1)) == 0; }

}  // namespace percoperm
