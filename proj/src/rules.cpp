#include "trimult/rules.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace trimult {
namespace {

unsigned m_bound(unsigned n) { return n % 2 == 0 ? n / 2 : (n - 1) / 2; }

bool holds(unsigned n, unsigned nu, unsigned m, Form form) {
  const std::uint64_t mn = std::uint64_t{m} * nu;
  const std::uint64_t inner = form == Form::plain ? mn + 1 : mn - 1;
  return (std::uint64_t{m} * inner) % n == 0;
}

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

RuleFinding rule(std::string code, std::uint64_t k, std::map<std::string, std::uint64_t> params,
                 std::vector<std::uint64_t> extra = {}) {
  extra.push_back(0);
  extra.push_back(k - 1);
  return RuleFinding{std::move(code), std::move(params), sorted_unique(std::move(extra)), {}, false};
}

bool is_strong_rule(const std::string& code) {
  return code.size() == 2 && code[0] == 'R' && code[1] >= '1' && code[1] <= '5';
}

bool subset_of(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::string to_string(const std::optional<Combination>& c) {
  if (!c) return "/";
  return std::to_string(c->m) + (c->form == Form::minus ? "_" : "");
}

std::optional<Combination> parse_combination(const std::string& cell) {
  if (cell == "/" || cell.empty()) return std::nullopt;
  const bool minus = cell.back() == '_';
  return Combination{static_cast<unsigned>(std::stoul(minus ? cell.substr(0, cell.size() - 1) : cell)),
                     minus ? Form::minus : Form::plain};
}

bool is_valid_combination(unsigned n, unsigned nu, const Combination& c) {
  if (n < 2 || nu < 1 || nu >= n || std::gcd(n, nu) != 1) return false;
  if (c.m < 1 || c.m > m_bound(n)) return false;
  return holds(n, nu, c.m, c.form);
}

std::optional<Combination> combination_m(unsigned n, unsigned nu) {
  if (n < 2 || nu < 1 || nu >= n || std::gcd(n, nu) != 1) return std::nullopt;
  for (unsigned m = 1; m <= m_bound(n); ++m) {
    if (holds(n, nu, m, Form::minus)) return Combination{m, Form::minus};
    if (holds(n, nu, m, Form::plain)) return Combination{m, Form::plain};
  }
  return std::nullopt;
}

CombinationGrid regenerate_combinations(unsigned n_max) {
  CombinationGrid out;
  for (unsigned n = 2; n <= n_max; ++n)
    for (unsigned nu = 1; nu < n; ++nu) out[{n, nu}] = combination_m(n, nu);
  return out;
}

std::vector<CombinationConflict> compare_combinations(const CombinationGrid& computed) {
  std::vector<CombinationConflict> out;
  for (const auto& [n, cells] : reference::published_combinations()) {
    for (unsigned nu = 1; nu < n; ++nu) {
      const auto it = computed.find({n, nu});
      if (it == computed.end()) continue;
      const auto printed = parse_combination(cells[nu - 1]);
      if (printed == it->second) continue;
      const reference::CombinationAnnotation* note = nullptr;
      for (const auto& a : reference::combination_annotations())
        if (a.n == n && a.nu == nu) note = &a;
      bool verified = false;
      if (note) {
        verified = note->printed_also_valid ? (printed && is_valid_combination(n, nu, *printed))
                                            : std::gcd(n, nu) != 1;
      }
      out.push_back({n, nu, it->second, printed, note, verified});
    }
  }
  return out;
}

std::optional<Combination> expression_combination(unsigned n, unsigned nu) {
  const auto& printed = reference::published_combinations();
  if (auto row = printed.find(n); row != printed.end() && nu >= 1 && nu < n) {
    if (auto cell = parse_combination(row->second[nu - 1]); cell && is_valid_combination(n, nu, *cell))
      return cell;
  }
  return combination_m(n, nu);
}

std::vector<RuleFinding> applicable_rules(Multiplier km) {
  const std::uint64_t k = km.value();
  std::vector<RuleFinding> out;
  if (is_prime(k)) out.push_back(rule("R1", k, {}));
  if (auto pp = as_prime_power(k); pp && pp->exponent >= 3 && pp->exponent % 2 == 1)
    out.push_back(rule("R2", k, {{"alpha", pp->base}, {"n", pp->exponent}}));
  if (const std::uint64_t s = isqrt(k - 1); s * s == k - 1 && s >= 2 && s % 2 == 0)
    out.push_back(rule("R3", k, {{"s", s}}));
  if (const std::uint64_t s = isqrt(k + 1); s * s == k + 1 && s >= 3 && s % 2 == 1)
    out.push_back(rule("R4", k, {{"s'", s}}));
  if (const std::uint64_t s = isqrt(k + 2); s * s == k + 2 && s >= 3 && s % 2 == 1)
    out.push_back(rule("R5", k, {{"s'", s}}));
  if (const std::uint64_t n = isqrt(k); n * (n + 1) == k)
    out.push_back(rule("R6", k, {{"n", n}}, {n, n * n - 1}));
  return out;
}

std::vector<RuleFinding> applicable_expressions(Multiplier km, unsigned n_max) {
  const std::uint64_t k = km.value();
  std::vector<RuleFinding> out;
  for (unsigned n = 2; n <= n_max; ++n) {
    if (k % n != 0) continue;
    const std::uint64_t f = k / n;
    const auto nu = static_cast<unsigned>(f % n);
    if (nu == 0) continue;
    const auto c = expression_combination(n, nu);
    if (!c) continue;
    const std::uint64_t mf = c->m * f;
    const std::uint64_t rest = (n - c->m) * f;
    RuleFinding e;
    e.code = "E" + std::to_string(n) + std::to_string(nu);
    e.params = {{"n", n}, {"nu", nu}, {"m", c->m}, {"f", f}};
    e.predicted_mu = c->form == Form::plain ? sorted_unique({0, mf, rest - 1, k - 1})
                                            : sorted_unique({0, mf - 1, rest, k - 1});
    e.form = c->form;
    e.extrapolated = n > 12;
    out.push_back(std::move(e));
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::exact: return "exact";
    case Verdict::predicted_subset: return "predicted-subset";
    case Verdict::mismatch: return "mismatch";
    case Verdict::no_expression: return "no-expression";
  }
  return "?";
}

bool ClassificationReport::fired(const std::string& code) const {
  return std::any_of(findings.begin(), findings.end(),
                     [&](const RuleFinding& f) { return f.code == code; });
}

bool ClassificationReport::was_superseded(const std::string& winner,
                                          const std::string& loser) const {
  return std::any_of(superseded.begin(), superseded.end(), [&](const Supersession& s) {
    return s.winner == winner && s.loser == loser;
  });
}

ClassificationReport classify(const ResidueSet& observed, unsigned n_max) {
  const Multiplier km = observed.k;
  const std::uint64_t k = km.value();
  ClassificationReport rep{km, applicable_rules(km), {}, {}, {}, observed, Verdict::mismatch};
  for (auto& e : applicable_expressions(km, n_max)) rep.findings.push_back(std::move(e));

  std::vector<const RuleFinding*> alive;
  for (const auto& f : rep.findings) alive.push_back(&f);
  auto find_alive = [&](const std::string& code) {
    return std::find_if(alive.begin(), alive.end(),
                        [&](const RuleFinding* f) { return f->code == code; });
  };

  // Published superseding pairs.
  std::set<std::string> table_losers;
  for (const auto& pair : reference::published_supersessions()) {
    if (pair.k != k) continue;
    if (!rep.fired(pair.winner) || !rep.fired(pair.loser)) {
      rep.inapplicable.push_back(pair);
      continue;
    }
    if (auto it = find_alive(pair.loser); it != alive.end()) alive.erase(it);
    table_losers.insert(pair.loser);
    rep.superseded.push_back({pair.winner, pair.loser, "published"});
  }

  // P1: R1-R5 fix the set to {0, k-1}.
  std::vector<std::string> strong;
  for (const auto& f : rep.findings)
    if (is_strong_rule(f.code) && !table_losers.count(f.code)) strong.push_back(f.code);
  if (!strong.empty()) {
    const std::vector<std::uint64_t> ends{0, k - 1};
    for (auto it = alive.begin(); it != alive.end();) {
      const RuleFinding* f = *it;
      if (f->form && !subset_of(f->predicted_mu, ends)) {
        for (const auto& w : strong) rep.superseded.push_back({w, f->code, "P1"});
        it = alive.erase(it);
      } else {
        ++it;
      }
    }
  }

  // P2: R6 with n = 1, 2 (mod 4) over E21.
  if (auto r6 = find_alive("R6"); r6 != alive.end()) {
    const std::uint64_t n = (*r6)->params.at("n");
    const auto r6_mu = (*r6)->predicted_mu;
    if (n % 4 == 1 || n % 4 == 2) {
      if (auto e21 = find_alive("E21"); e21 != alive.end() && !subset_of((*e21)->predicted_mu, r6_mu)) {
        rep.superseded.push_back({"R6", "E21", "P2"});
        alive.erase(e21);
      }
    }
  }

  std::vector<std::uint64_t> predicted{0, k - 1};
  for (const RuleFinding* f : alive)
    predicted.insert(predicted.end(), f->predicted_mu.begin(), f->predicted_mu.end());
  rep.predicted = sorted_unique(std::move(predicted));

  if (rep.predicted == observed.mu)
    rep.verdict = Verdict::exact;
  else if (rep.findings.empty())
    rep.verdict = Verdict::no_expression;
  else if (subset_of(rep.predicted, observed.mu))
    rep.verdict = Verdict::predicted_subset;
  else
    rep.verdict = Verdict::mismatch;
  return rep;
}

ClassificationReport predict_residues(Multiplier k, unsigned n_max) {
  return classify(observed_residues(make_spec(k)), n_max);
}

ClosedForm closed_form_r3(std::uint64_t s) {
  const Nat S = s;
  const Nat k = S * S + 1;
  return {"R3", s, {S * (S - 1), k * (S - 1)}, {S * (S + 1), k * (S + 1) - 1}};
}

ClosedForm closed_form_r4(std::uint64_t s) {
  const Nat S = s;
  const Nat k = S * S - 1;
  return {"R4", s, {(S - 1) * S - 1, k * (S - 1) - 1}, {(S - 1) * (S + 2) + 1, k * (S + 1)}};
}

ClosedForm closed_form_r5(std::uint64_t s) {
  const Nat S = s;
  const Nat k = S * S - 2;
  return {"R5", s, {(S - 2) * (S + 1) / 2, k * (S - 1) / 2 - 1}, {S * (S + 1) / 2 - 1, k * (S + 1) / 2}};
}

std::vector<ClosedForm> closed_forms(Multiplier k) {
  std::vector<ClosedForm> out;
  for (const auto& f : applicable_rules(k)) {
    if (f.code == "R3") out.push_back(closed_form_r3(f.params.at("s")));
    if (f.code == "R4") out.push_back(closed_form_r4(f.params.at("s'")));
    if (f.code == "R5") out.push_back(closed_form_r5(f.params.at("s'")));
  }
  return out;
}

}  // namespace trimult
