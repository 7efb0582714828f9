#include "trimult/residues.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "trimult/errors.hpp"

namespace trimult {

bool ResidueSet::contains(std::uint64_t v) const {
  return std::binary_search(mu.begin(), mu.end(), v);
}

ResidueOrbit residue_orbit(const RecurrenceSpec& spec) {
  using State = std::vector<std::uint64_t>;
  const std::uint64_t k = spec.k.value();
  const unsigned r = spec.r;
  const auto a = static_cast<unsigned __int128>((spec.coeff_linear % k).convert_to<std::uint64_t>());
  const auto c = (spec.kappa % k).convert_to<std::uint64_t>();

  State state;
  for (const Solution& s : spec.seeds) state.push_back((s.xi % k).convert_to<std::uint64_t>());
  const State initial = state;

  std::unordered_set<State, boost::hash<State>> visited;
  std::set<std::uint64_t> seen(state.begin(), state.end());
  ResidueOrbit orbit;
  visited.insert(state);
  for (;;) {
    // next = a*x_{n-r} - x_{n-2r} + kappa  (mod k); state holds x_{n-2r} .. x_{n-1}.
    const std::uint64_t next = static_cast<std::uint64_t>(
        (a * state[r] + (k - state[0]) + c) % k);
    state.erase(state.begin());
    state.push_back(next);
    ++orbit.period;
    seen.insert(next);
    if (state == initial) {
      orbit.returned_to_start = true;
      break;
    }
    if (!visited.insert(state).second) break;
  }
  orbit.mu.assign(seen.begin(), seen.end());
  return orbit;
}

ResidueSet observed_residues(const RecurrenceSpec& spec) {
  return ResidueSet{spec.k, residue_orbit(spec).mu};
}

std::vector<std::uint64_t> candidate_residues(Multiplier k) {
  const std::uint64_t kk = k.value();
  std::set<std::uint64_t> out;
  for (std::uint64_t xi = 0; xi < 2 * kk; ++xi) {
    const auto T = static_cast<unsigned __int128>(xi) * (xi + 1) / 2;
    if (T % kk == 0) out.insert(xi % kk);
  }
  return {out.begin(), out.end()};
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> pair_structure(const ResidueSet& rs) {
  const std::uint64_t top = rs.k.value() - 1;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t m : rs.mu) {
    if (m > top || !rs.contains(top - m))
      throw BrokenPairing("broken pairing: " + std::to_string(m) + " has no partner summing to " +
                          std::to_string(top));
    if (m <= top - m) pairs.emplace_back(m, top - m);
  }
  return pairs;
}

std::vector<std::string> invariant_violations(const ResidueSet& rs) {
  std::vector<std::string> out;
  const std::uint64_t top = rs.k.value() - 1;
  if (rs.upsilon() % 2 != 0) out.push_back("upsilon is odd");
  if (!rs.contains(0)) out.push_back("0 missing");
  if (!rs.contains(top)) out.push_back("k-1 missing");
  for (std::uint64_t m : rs.mu)
    if (m > top || !rs.contains(top - m)) out.push_back("no partner for " + std::to_string(m));
  const auto sum = std::accumulate(rs.mu.begin(), rs.mu.end(), static_cast<unsigned __int128>(0));
  if (2 * sum != static_cast<unsigned __int128>(top) * rs.upsilon())
    out.push_back("sum of remainders differs from (k-1)*upsilon/2");
  return out;
}

}  // namespace trimult
