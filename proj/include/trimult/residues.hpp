#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "trimult/solver.hpp"

namespace trimult {

/// Distinct values of xi mod k over all solutions, ascending.
struct ResidueSet {
  Multiplier k;
  std::vector<std::uint64_t> mu;

  std::size_t upsilon() const noexcept { return mu.size(); }
  bool contains(std::uint64_t v) const;

  bool operator==(const ResidueSet&) const = default;
};

struct ResidueOrbit {
  std::vector<std::uint64_t> mu;  ///< sorted distinct xi residues on the cycle
  std::size_t period = 0;         ///< steps until the initial state recurs
  bool returned_to_start = false;
};

/// Iterates the xi recurrence mod k on states of 2r residues until the
/// initial state recurs.
ResidueOrbit residue_orbit(const RecurrenceSpec& spec);

ResidueSet observed_residues(const RecurrenceSpec& spec);

/// xi mod k for every xi in [0, 2k) with k | T_xi. A superset of the
/// observed residues.
std::vector<std::uint64_t> candidate_residues(Multiplier k);

/// (mu, k-1-mu) pairs with mu <= k-1-mu, ascending. Throws BrokenPairing.
std::vector<std::pair<std::uint64_t, std::uint64_t>> pair_structure(const ResidueSet& rs);

/// Human-readable descriptions of every violated ResidueSet invariant:
/// even count, 0 and k-1 present, pairing, and sum == (k-1)*upsilon/2.
std::vector<std::string> invariant_violations(const ResidueSet& rs);

}  // namespace trimult
