#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "trimult/residues.hpp"
#include "trimult/solver.hpp"

namespace trimult {

struct SearchResult {
  std::vector<Solution> solutions;  ///< ascending xi; n counts from 0
  std::uint64_t candidates = 0;     ///< xi values tested
};

/// Largest accepted xi_limit.
inline constexpr std::uint64_t max_xi_limit = std::uint64_t{1} << 62;

/// Tests every xi in [0, xi_limit].
SearchResult naive_search(Multiplier k, std::uint64_t xi_limit);

/// Tests only xi = mu (mod k) for mu in `residues`, in ascending xi order.
SearchResult sieve_search(Multiplier k, std::uint64_t xi_limit, const ResidueSet& residues);

/// Sum over mu <= xi_limit of floor((xi_limit - mu) / k) + 1.
std::uint64_t expected_sieve_candidates(std::uint64_t xi_limit, const ResidueSet& residues);

struct BenchReport {
  Multiplier k;
  std::uint64_t limit = 0;
  std::size_t upsilon = 0;
  std::uint64_t naive_candidates = 0;
  std::uint64_t sieve_candidates = 0;
  std::chrono::nanoseconds naive_time{};  ///< median
  std::chrono::nanoseconds sieve_time{};  ///< median
  std::size_t solutions_found = 0;
  unsigned repetitions = 0;
  double measured_gain = 0;   ///< naive_time / sieve_time
  double candidate_gain = 0;  ///< naive_candidates / sieve_candidates

  /// k / upsilon, the nominal gain.
  double nominal_gain() const { return static_cast<double>(k.value()) / upsilon; }
  /// |sieve_candidates - upsilon * (limit+1) / k| <= upsilon.
  bool candidate_gain_within_tolerance() const;
};

/// One discarded warm-up run of each strategy, then `repetitions` timed
/// runs; reports medians. Throws DivergenceError if the strategies ever
/// return different solution lists.
BenchReport bench(Multiplier k, std::uint64_t xi_limit, unsigned repetitions,
                  const ResidueSet& residues);
BenchReport bench(Multiplier k, std::uint64_t xi_limit, unsigned repetitions);

}  // namespace trimult
