#pragma once

#include <cstdint>
#include <vector>

#include "trimult/arith.hpp"

/// Integer solutions of x^2 - D*y^2 = N for non-square D.
namespace trimult::pell {

/// x + y*sqrt(D).
struct QuadInt {
  Int x;
  Int y;

  bool operator==(const QuadInt&) const = default;
};

/// Smallest solution with x > 1, y > 0 of x^2 - D*y^2 = 1.
QuadInt fundamental_unit(std::uint64_t D);

/// At least one member of every class of solutions of x^2 - D*y^2 = N
/// (N != 0), found by the Lagrange-Matthews-Mollin continued fraction
/// method: for each f with f^2 | N and each z with z^2 = D (mod |N/f^2|),
/// expand (z + sqrt(D)) / |N/f^2| through its first period.
std::vector<QuadInt> class_representatives(std::uint64_t D, const Int& N);

/// Every solution (x, y) with x, y >= 0 and y <= y_max, sorted by y.
/// `reps` must contain a member of every class (see class_representatives).
std::vector<QuadInt> solutions_up_to(std::uint64_t D, const std::vector<QuadInt>& reps,
                                     const QuadInt& unit, const Int& y_max);

}  // namespace trimult::pell
