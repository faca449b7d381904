#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ngroup {

constexpr bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

constexpr std::uint64_t factorial(std::uint64_t n) noexcept {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

constexpr std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) noexcept {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

constexpr bool is_power_of(std::uint64_t n, std::uint64_t p) noexcept {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

/// Distinct prime divisors, ascending.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Largest power of p dividing n.
constexpr std::uint64_t p_part(std::uint64_t n, std::uint64_t p) noexcept {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

}  // namespace ngroup
