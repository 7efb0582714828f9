#include "trimult/arith.hpp"

#include <bit>
#include <cassert>

namespace trimult {

Nat triangular(const Nat& t) {
  return t * (t + 1) / 2;
}

Nat isqrt(const Nat& x) {
  if (x < 2) return x;
  // 2^(ceil(bits/2)) >= sqrt(x); Newton from above decreases monotonically
  // to floor(sqrt(x)).
  const auto bits = boost::multiprecision::msb(x) + 1;
  Nat g = Nat(1) << ((bits + 1) / 2);
  for (;;) {
    Nat y = (g + x / g) >> 1;
    if (y >= g) break;
    g = std::move(y);
  }
  assert(g * g <= x && (g + 1) * (g + 1) > x);
  return g;
}

std::uint64_t isqrt(std::uint64_t x) {
  if (x < 2) return x;
  const unsigned bits = static_cast<unsigned>(std::bit_width(x));
  std::uint64_t g = std::uint64_t{1} << ((bits + 1) / 2);
  for (;;) {
    const std::uint64_t y = (g + x / g) >> 1;
    if (y >= g) break;
    g = y;
  }
  return g;
}

bool is_square(const Nat& x) {
  if (x < 0) return false;
  const Nat s = isqrt(x);
  return s * s == x;
}

bool is_square(std::uint64_t x) {
  const std::uint64_t s = isqrt(x);
  return s * s == x;
}

std::optional<Nat> tri_index(const Nat& T) {
  if (T < 0) return std::nullopt;
  const Nat d = 8 * T + 1;
  const Nat s = isqrt(d);
  if (s * s != d) return std::nullopt;
  // d is odd, so s is odd as well.
  return (s - 1) / 2;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t p = 3; p <= n / p; p += 2) {
    if (n % p == 0) return false;
  }
  return true;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{n, 1};
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, e};
}

}  // namespace trimult
