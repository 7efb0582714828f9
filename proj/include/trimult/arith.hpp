#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

namespace trimult {

/// Arbitrary-size integer. `Nat` marks values that are non-negative by
/// construction (indices and triangular numbers); `Int` may be signed.
using Nat = boost::multiprecision::cpp_int;
using Int = boost::multiprecision::cpp_int;

/// t(t+1)/2.
Nat triangular(const Nat& t);

/// Largest s with s*s <= x. Integer Newton iteration from above; exact at
/// every magnitude.
Nat isqrt(const Nat& x);
std::uint64_t isqrt(std::uint64_t x);

bool is_square(const Nat& x);
bool is_square(std::uint64_t x);

/// Inverse of triangular(): t with t(t+1)/2 == T, or nullopt when T is not
/// triangular (8T+1 must be an odd perfect square).
std::optional<Nat> tri_index(const Nat& T);

// Small-integer helpers for the rule predicates.

bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t base;
  unsigned exponent;
};

/// n = p^e with p prime and e >= 1, or nullopt.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

}  // namespace trimult
