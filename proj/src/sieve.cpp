#include "trimult/sieve.hpp"

#include <algorithm>
#include <string>

#include "trimult/errors.hpp"

namespace trimult {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t narrow_limit = std::uint64_t{1} << 31;

void check_limit(std::uint64_t xi_limit) {
  if (xi_limit > max_xi_limit)
    throw ValidationError("xi limit must be <= 2^62 (got " + std::to_string(xi_limit) + ")");
}

// The per-candidate test shared by both strategies: k | T_xi and T_xi / k
// triangular. Every step runs for every candidate.
struct NarrowTest {
  std::uint64_t k;

  bool operator()(std::uint64_t xi, std::vector<Solution>& out) const {
    const std::uint64_t T = xi * (xi + 1) / 2;
    const std::uint64_t q = T / k;
    const std::uint64_t rem = T % k;
    const std::uint64_t d = 8 * q + 1;
    const std::uint64_t s = isqrt(d);
    if (rem != 0 || s * s != d) return false;
    out.push_back(Solution{out.size(), Nat((s - 1) / 2), Nat(xi), Nat(q), Nat(T)});
    return true;
  }
};

struct WideTest {
  std::uint64_t k;

  bool operator()(std::uint64_t xi, std::vector<Solution>& out) const {
    const Nat X = xi;
    const Nat T = triangular(X);
    const Nat q = T / k;
    const Nat rem = T % k;
    const Nat d = 8 * q + 1;
    const Nat s = isqrt(d);
    if (rem != 0 || s * s != d) return false;
    out.push_back(Solution{out.size(), (s - 1) / 2, X, q, T});
    return true;
  }
};

template <class Test>
SearchResult run_naive(const Test& test, std::uint64_t xi_limit) {
  SearchResult res;
  for (std::uint64_t xi = 0;; ++xi) {
    test(xi, res.solutions);
    ++res.candidates;
    if (xi == xi_limit) break;
  }
  return res;
}

template <class Test>
SearchResult run_sieve(const Test& test, std::uint64_t k, std::uint64_t xi_limit,
                       const std::vector<std::uint64_t>& mu) {
  SearchResult res;
  for (std::uint64_t base = 0; base <= xi_limit; base += k) {
    for (std::uint64_t m : mu) {
      const std::uint64_t xi = base + m;
      if (xi > xi_limit) break;
      test(xi, res.solutions);
      ++res.candidates;
    }
  }
  return res;
}

template <class F>
std::chrono::nanoseconds timed(F&& f, SearchResult& out) {
  const auto start = Clock::now();
  out = f();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
}

std::chrono::nanoseconds median(std::vector<std::chrono::nanoseconds> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : (v[mid - 1] + v[mid]) / 2;
}

}  // namespace

SearchResult naive_search(Multiplier k, std::uint64_t xi_limit) {
  check_limit(xi_limit);
  if (xi_limit < narrow_limit) return run_naive(NarrowTest{k.value()}, xi_limit);
  return run_naive(WideTest{k.value()}, xi_limit);
}

SearchResult sieve_search(Multiplier k, std::uint64_t xi_limit, const ResidueSet& residues) {
  check_limit(xi_limit);
  if (residues.k != k) throw ValidationError("residue set belongs to a different k");
  if (xi_limit < narrow_limit) return run_sieve(NarrowTest{k.value()}, k.value(), xi_limit, residues.mu);
  return run_sieve(WideTest{k.value()}, k.value(), xi_limit, residues.mu);
}

std::uint64_t expected_sieve_candidates(std::uint64_t xi_limit, const ResidueSet& residues) {
  std::uint64_t total = 0;
  for (std::uint64_t m : residues.mu)
    if (m <= xi_limit) total += (xi_limit - m) / residues.k.value() + 1;
  return total;
}

bool BenchReport::candidate_gain_within_tolerance() const {
  // |sieve - upsilon*(limit+1)/k| <= upsilon, scaled by k.
  const auto kk = static_cast<unsigned __int128>(k.value());
  const auto lhs = kk * sieve_candidates;
  const auto ideal = static_cast<unsigned __int128>(upsilon) * (static_cast<unsigned __int128>(limit) + 1);
  const auto diff = lhs > ideal ? lhs - ideal : ideal - lhs;
  return diff <= kk * upsilon;
}

BenchReport bench(Multiplier k, std::uint64_t xi_limit, unsigned repetitions,
                  const ResidueSet& residues) {
  if (repetitions < 3) throw ValidationError("repetitions must be >= 3");
  check_limit(xi_limit);

  SearchResult naive, sieve;
  auto run_naive_once = [&] { return naive_search(k, xi_limit); };
  auto run_sieve_once = [&] { return sieve_search(k, xi_limit, residues); };
  auto check = [&] {
    if (naive.solutions != sieve.solutions)
      throw DivergenceError("result divergence for k=" + std::to_string(k.value()) + ": naive found " +
                            std::to_string(naive.solutions.size()) + " solutions, sieve found " +
                            std::to_string(sieve.solutions.size()));
  };

  timed(run_naive_once, naive);
  timed(run_sieve_once, sieve);
  check();

  std::vector<std::chrono::nanoseconds> naive_times, sieve_times;
  for (unsigned i = 0; i < repetitions; ++i) {
    naive_times.push_back(timed(run_naive_once, naive));
    sieve_times.push_back(timed(run_sieve_once, sieve));
    check();
  }

  BenchReport rep{k};
  rep.limit = xi_limit;
  rep.upsilon = residues.upsilon();
  rep.naive_candidates = naive.candidates;
  rep.sieve_candidates = sieve.candidates;
  rep.naive_time = median(naive_times);
  rep.sieve_time = median(sieve_times);
  rep.solutions_found = naive.solutions.size();
  rep.repetitions = repetitions;
  rep.measured_gain = rep.sieve_time.count() > 0
                          ? static_cast<double>(rep.naive_time.count()) / rep.sieve_time.count()
                          : 0.0;
  rep.candidate_gain = static_cast<double>(rep.naive_candidates) / rep.sieve_candidates;
  return rep;
}

BenchReport bench(Multiplier k, std::uint64_t xi_limit, unsigned repetitions) {
  return bench(k, xi_limit, repetitions, observed_residues(make_spec(k)));
}

}  // namespace trimult
