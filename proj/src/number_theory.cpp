#include "twoclosure/number_theory.hpp"

namespace twoclosure {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> result;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      result.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) result.push_back(n);
  return result;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t result = 1;
  while (n != 0 && n % p == 0) {
    n /= p;
    result *= p;
  }
  return result;
}

}  // namespace twoclosure
