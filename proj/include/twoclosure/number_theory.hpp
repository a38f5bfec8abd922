#pragma once

#include <cstdint>
#include <vector>

namespace twoclosure {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Largest power of `p` dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

}  // namespace twoclosure
