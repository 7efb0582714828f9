#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "trimult/arith.hpp"
#include "trimult/pell.hpp"

namespace trimult {

/// Non-square integer k >= 2 (and below 2^32).
class Multiplier {
 public:
  /// Throws ValidationError naming the violated constraint.
  explicit Multiplier(std::uint64_t k);

  std::uint64_t value() const noexcept { return k_; }
  operator std::uint64_t() const noexcept { return k_; }

  bool operator==(const Multiplier&) const = default;

 private:
  std::uint64_t k_;
};

/// One solution of T_xi = k * T_t, at position n of the solution sequence.
struct Solution {
  std::size_t n = 0;
  Nat t;
  Nat xi;
  Nat T_t;
  Nat T_xi;

  bool operator==(const Solution&) const = default;
};

/// Rank r, constants and the 2r seed solutions of the recurrence family
///   t_n = 2(kappa+1) t_{n-r} - t_{n-2r} + kappa     (same for xi)
///   T_n = (4(kappa+1)^2 - 2) T_{n-r} - T_{n-2r} + c  (c = T_kappa - gamma
///                                                     for T_t, k*c for T_xi)
struct RecurrenceSpec {
  Multiplier k;
  unsigned r = 0;
  Nat kappa;
  Nat gamma;
  Nat coeff_linear;  ///< 2(kappa+1)
  Nat coeff_tri;     ///< 4(kappa+1)^2 - 2
  Int const_tri;     ///< T_kappa - gamma, signed
  std::vector<Solution> seeds;  ///< indices 0 .. 2r-1
};

Solution make_solution(std::size_t n, const Nat& t, const Nat& xi);

/// T_xi == k * T_t.
bool verify_solution(Multiplier k, const Nat& t, const Nat& xi);

/// All solutions with t <= t_bound by testing every t for 8kT_t + 1 being
/// an odd square. Linear in t_bound; used as the reference oracle.
std::vector<Solution> scan_base_solutions(Multiplier k, std::uint64_t t_bound);

/// Enumerates solutions through X^2 - kY^2 = 1 - k with X = 2xi+1, Y = 2t+1.
/// Class representatives and the fundamental unit are computed once, so
/// repeated calls with growing bounds are cheap.
class SolutionEnumerator {
 public:
  explicit SolutionEnumerator(Multiplier k);

  /// All solutions with t <= t_bound, ascending t, starting at (0, 0).
  std::vector<Solution> up_to(const Nat& t_bound) const;

  const pell::QuadInt& unit() const noexcept { return unit_; }
  std::size_t class_count() const noexcept { return reps_.size(); }

 private:
  Multiplier k_;
  pell::QuadInt unit_;
  std::vector<pell::QuadInt> reps_;
};

/// Same contract as scan_base_solutions, for arbitrary bounds.
std::vector<Solution> find_base_solutions(Multiplier k, const Nat& t_bound);

/// Smallest r with t_r + t_{r-1} = xi_r - xi_{r-1} - 1, t_{2r} - t_{r-1} =
/// (2kappa+3) t_r, and the recurrence reproducing every supplied solution
/// from index 2r on. Only r with index 2r present are tried.
/// Throws SolverError (insufficient_solutions / inconsistent_sequence).
RecurrenceSpec detect_rank(Multiplier k, const std::vector<Solution>& solutions);

inline constexpr std::uint64_t default_t_bound = 1'000'000;

/// find_base_solutions + detect_rank, squaring the bound until the rank is
/// confirmed by at least 4r+1 solutions.
RecurrenceSpec make_spec(Multiplier k, const Nat& initial_bound = default_t_bound);

/// Continue u_n = a u_{n-r} - u_{n-2r} + c from the 2r values in `seed`,
/// producing `count` further terms. Used for all four streams.
std::vector<Int> recur(const std::vector<Int>& seed, unsigned r, const Int& a, const Int& c,
                       std::size_t count);

/// Solutions with indices 2r .. 2r+count-1 from the four recurrences.
std::vector<Solution> extend(const RecurrenceSpec& spec, std::size_t count);

/// Solutions with indices 0 .. count-1 (seeds, then extend).
std::vector<Solution> sequence(const RecurrenceSpec& spec, std::size_t count);

}  // namespace trimult
