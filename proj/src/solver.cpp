#include "trimult/solver.hpp"

#include <string>

#include "trimult/errors.hpp"

namespace trimult {

Multiplier::Multiplier(std::uint64_t k) : k_(k) {
  if (k < 2) throw ValidationError("k must be >= 2 (got " + std::to_string(k) + ")");
  if (k >= (std::uint64_t{1} << 32))
    throw ValidationError("k must be < 2^32 (got " + std::to_string(k) + ")");
  if (is_square(k)) throw ValidationError("k must be non-square (got " + std::to_string(k) + ")");
}

Solution make_solution(std::size_t n, const Nat& t, const Nat& xi) {
  return Solution{n, t, xi, triangular(t), triangular(xi)};
}

bool verify_solution(Multiplier k, const Nat& t, const Nat& xi) {
  return triangular(xi) == k.value() * triangular(t);
}

std::vector<Solution> scan_base_solutions(Multiplier k, std::uint64_t t_bound) {
  std::vector<Solution> out;
  const std::uint64_t kk = k.value();
  for (std::uint64_t t = 0; t <= t_bound; ++t) {
    const unsigned __int128 T = static_cast<unsigned __int128>(t) * (t + 1) / 2;
    const unsigned __int128 D = 8 * static_cast<unsigned __int128>(kk) * T + 1;
    Nat root;
    if (D <= UINT64_MAX) {
      const auto d = static_cast<std::uint64_t>(D);
      const std::uint64_t s = isqrt(d);
      if (s * s != d) continue;
      root = s;
    } else {
      Nat d = static_cast<std::uint64_t>(D >> 64);
      d <<= 64;
      d += static_cast<std::uint64_t>(D);
      root = isqrt(d);
      if (root * root != d) continue;
    }
    // 8kT+1 is odd, so its root is odd and xi = (root - 1) / 2.
    out.push_back(make_solution(out.size(), Nat(t), (root - 1) / 2));
  }
  return out;
}

SolutionEnumerator::SolutionEnumerator(Multiplier k)
    : k_(k),
      unit_(pell::fundamental_unit(k.value())),
      reps_(pell::class_representatives(k.value(), Int(1) - Int(k.value()))) {}

std::vector<Solution> SolutionEnumerator::up_to(const Nat& t_bound) const {
  const Nat y_max = 2 * t_bound + 1;
  std::vector<Solution> out;
  for (const pell::QuadInt& s : pell::solutions_up_to(k_.value(), reps_, unit_, y_max)) {
    // X = 2xi+1 and Y = 2t+1 must both be odd.
    if (boost::multiprecision::bit_test(s.x, 0) == false) continue;
    if (boost::multiprecision::bit_test(s.y, 0) == false) continue;
    out.push_back(make_solution(out.size(), (s.y - 1) / 2, (s.x - 1) / 2));
  }
  return out;
}

std::vector<Solution> find_base_solutions(Multiplier k, const Nat& t_bound) {
  if (t_bound < 1) throw ValidationError("t_bound must be >= 1");
  return SolutionEnumerator(k).up_to(t_bound);
}

namespace {

bool reproduces(const std::vector<Solution>& s, unsigned r, const Nat& kappa) {
  const Nat a = 2 * (kappa + 1);
  for (std::size_t n = 2 * r; n < s.size(); ++n) {
    if (a * s[n - r].t != s[n].t + s[n - 2 * r].t - kappa) return false;
    if (a * s[n - r].xi != s[n].xi + s[n - 2 * r].xi - kappa) return false;
  }
  return true;
}

}  // namespace

RecurrenceSpec detect_rank(Multiplier k, const std::vector<Solution>& s) {
  bool condition_a_seen = false;
  for (unsigned r = 1; 2 * r < s.size(); ++r) {
    const Nat kappa = s[r].t + s[r - 1].t;
    if (s[r].xi != s[r - 1].xi + kappa + 1) continue;
    condition_a_seen = true;
    if (s[2 * r].t - s[r - 1].t != (2 * kappa + 3) * s[r].t) continue;
    if (!reproduces(s, r, kappa)) continue;

    RecurrenceSpec spec{k, r, kappa, s[r - 1].t * s[r].t, {}, {}, {}, {}};
    spec.coeff_linear = 2 * (kappa + 1);
    spec.coeff_tri = 4 * (kappa + 1) * (kappa + 1) - 2;
    spec.const_tri = Int(triangular(kappa)) - Int(spec.gamma);
    spec.seeds.assign(s.begin(), s.begin() + 2 * r);
    return spec;
  }
  if (condition_a_seen)
    throw SolverError(SolverError::Kind::inconsistent_sequence,
                      "inconsistent sequence: kappa condition holds but the recurrence fails");
  throw SolverError(SolverError::Kind::insufficient_solutions,
                    "insufficient solutions: no rank validates against " +
                        std::to_string(s.size()) + " solutions");
}

RecurrenceSpec make_spec(Multiplier k, const Nat& initial_bound) {
  const SolutionEnumerator gen(k);
  Nat bound = initial_bound < 2 ? Nat(2) : initial_bound;
  for (int attempt = 0; attempt < 12; ++attempt, bound *= bound) {
    const auto sols = gen.up_to(bound);
    try {
      RecurrenceSpec spec = detect_rank(k, sols);
      if (sols.size() >= 4 * spec.r + 1) return spec;
    } catch (const SolverError&) {
    }
  }
  throw SolverError(SolverError::Kind::insufficient_solutions,
                    "insufficient solutions for k=" + std::to_string(k.value()));
}

std::vector<Int> recur(const std::vector<Int>& seed, unsigned r, const Int& a, const Int& c,
                       std::size_t count) {
  std::vector<Int> u = seed;
  u.reserve(seed.size() + count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = u.size();
    u.push_back(a * u[n - r] - u[n - 2 * r] + c);
  }
  return {u.begin() + static_cast<std::ptrdiff_t>(seed.size()), u.end()};
}

std::vector<Solution> extend(const RecurrenceSpec& spec, std::size_t count) {
  std::vector<Int> t, xi, Tt, Txi;
  for (const Solution& s : spec.seeds) {
    t.push_back(s.t);
    xi.push_back(s.xi);
    Tt.push_back(s.T_t);
    Txi.push_back(s.T_xi);
  }
  const unsigned r = spec.r;
  const auto t_next = recur(t, r, spec.coeff_linear, spec.kappa, count);
  const auto xi_next = recur(xi, r, spec.coeff_linear, spec.kappa, count);
  const auto Tt_next = recur(Tt, r, spec.coeff_tri, spec.const_tri, count);
  const auto Txi_next = recur(Txi, r, spec.coeff_tri, spec.k.value() * spec.const_tri, count);

  std::vector<Solution> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(Solution{2 * r + i, t_next[i], xi_next[i], Tt_next[i], Txi_next[i]});
  return out;
}

std::vector<Solution> sequence(const RecurrenceSpec& spec, std::size_t count) {
  std::vector<Solution> out(spec.seeds.begin(),
                            spec.seeds.begin() + static_cast<std::ptrdiff_t>(
                                                     std::min(count, spec.seeds.size())));
  if (count > spec.seeds.size()) {
    auto more = extend(spec, count - spec.seeds.size());
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

}  // namespace trimult
