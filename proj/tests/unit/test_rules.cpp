#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "trimult/reference.hpp"
#include "trimult/rules.hpp"

using namespace trimult;
using U = std::vector<std::uint64_t>;

namespace {

const RuleFinding* find(const std::vector<RuleFinding>& v, const std::string& code) {
  for (const auto& f : v)
    if (f.code == code) return &f;
  return nullptr;
}

std::optional<Combination> oracle_smallest(unsigned n, unsigned nu) {
  const auto all = oracle::all_combinations(n, nu);
  if (all.empty()) return std::nullopt;
  return Combination{all.front().first, all.front().second == '-' ? Form::minus : Form::plain};
}

}  // namespace

TEST_CASE("applicable_rules examples") {
  const auto k5 = applicable_rules(Multiplier(5));
  REQUIRE(find(k5, "R1"));
  REQUIRE(find(k5, "R3"));
  CHECK(find(k5, "R3")->params.at("s") == 2);
  CHECK(find(k5, "R1")->predicted_mu == U{0, 4});

  const auto k20 = applicable_rules(Multiplier(20));
  REQUIRE(k20.size() == 1);
  CHECK(k20[0].code == "R6");
  CHECK(k20[0].params.at("n") == 4);
  CHECK(k20[0].predicted_mu == U{0, 4, 15, 19});

  const auto k27 = applicable_rules(Multiplier(27));
  REQUIRE(k27.size() == 1);
  CHECK(k27[0].code == "R2");
  CHECK(k27[0].params.at("alpha") == 3);
  CHECK(k27[0].params.at("n") == 3);
  CHECK(k27[0].predicted_mu == U{0, 26});
}

TEST_CASE("rule predicates against direct definitions") {
  for (std::uint64_t k : oracle::non_squares(2, 2000)) {
    const auto f = applicable_rules(Multiplier(k));
    REQUIRE(static_cast<bool>(find(f, "R1")) == oracle::is_prime(k));
    bool r2 = false, r3 = false, r4 = false, r5 = false, r6 = false;
    for (std::uint64_t p = 2; p <= k; ++p) {
      if (!oracle::is_prime(p)) continue;
      std::uint64_t v = p;
      for (unsigned e = 1; v <= k; ++e, v *= p)
        if (v == k && e >= 3 && e % 2 == 1) r2 = true;
    }
    for (std::uint64_t s = 1; s * s <= k + 2; ++s) {
      if (s * s + 1 == k && s % 2 == 0) r3 = true;
      if (s * s - 1 == k && s % 2 == 1 && s >= 3) r4 = true;
      if (s * s - 2 == k && s % 2 == 1 && s >= 3) r5 = true;
      if (s * (s + 1) == k) r6 = true;
    }
    INFO("k=" << k);
    REQUIRE(static_cast<bool>(find(f, "R2")) == r2);
    REQUIRE(static_cast<bool>(find(f, "R3")) == r3);
    REQUIRE(static_cast<bool>(find(f, "R4")) == r4);
    REQUIRE(static_cast<bool>(find(f, "R5")) == r5);
    REQUIRE(static_cast<bool>(find(f, "R6")) == r6);
  }
}

TEST_CASE("combination_m examples") {
  CHECK(combination_m(5, 3) == Combination{2, Form::minus});
  CHECK_FALSE(combination_m(4, 2).has_value());
  CHECK(combination_m(12, 5) == Combination{3, Form::plain});
  CHECK(combination_m(2, 1) == Combination{1, Form::minus});
}

TEST_CASE("combination_m is the smallest solution of the congruences") {
  for (unsigned n = 2; n <= 60; ++n)
    for (unsigned nu = 1; nu < n; ++nu) {
      INFO("n=" << n << " nu=" << nu);
      REQUIRE(combination_m(n, nu) == oracle_smallest(n, nu));
    }
}

TEST_CASE("grid rows") {
  const auto grid = regenerate_combinations(12);
  CHECK(to_string(grid.at({7, 1})) == "1_");
  CHECK(to_string(grid.at({7, 2})) == "3");
  CHECK(to_string(grid.at({7, 3})) == "2");
  CHECK(to_string(grid.at({7, 4})) == "2_");
  CHECK(to_string(grid.at({7, 5})) == "3_");
  CHECK(to_string(grid.at({7, 6})) == "1");
  CHECK(to_string(grid.at({2, 1})) == "1_");
  for (unsigned nu = 1; nu < 6; ++nu) CHECK(grid.at({6, nu}).has_value() == (nu == 1 || nu == 5));
}

TEST_CASE("grid agrees with the published grid up to the annotated cells") {
  const auto conflicts = compare_combinations(regenerate_combinations(12));
  std::set<std::pair<unsigned, unsigned>> got;
  for (const auto& c : conflicts) {
    got.insert({c.n, c.nu});
    INFO("n=" << c.n << " nu=" << c.nu);
    REQUIRE(c.annotation != nullptr);
    REQUIRE(c.annotation_holds);
  }
  std::set<std::pair<unsigned, unsigned>> want;
  for (const auto& a : reference::combination_annotations()) want.insert({a.n, a.nu});
  CHECK(got == want);
  CHECK(got.size() == 4);
}

TEST_CASE("simple rules on the combination grid") {
  const auto grid = regenerate_combinations(40);
  for (unsigned n = 2; n <= 40; ++n) {
    CHECK(grid.at({n, 1}) == Combination{1, Form::minus});
    if (n >= 3) CHECK(grid.at({n, n - 1}) == Combination{1, Form::plain});
    for (unsigned nu = 1; nu < n; ++nu)
      if (std::gcd(n, nu) != 1) CHECK_FALSE(grid.at({n, nu}).has_value());
  }
  // Odd n: nu = (n -+ (2i-3))/2 gives m = i; nu = 2 is plain, nu = n-2 minus.
  for (unsigned n = 5; n <= 12; n += 2) {
    for (unsigned i = 2; i <= (n - 1) / 2; ++i) {
      for (unsigned nu : {(n - (2 * i - 3)) / 2, (n + (2 * i - 3)) / 2}) {
        if (std::gcd(n, nu) != 1) continue;
        INFO("n=" << n << " i=" << i << " nu=" << nu);
        CHECK(grid.at({n, nu})->m == i);
      }
    }
    CHECK(grid.at({n, 2})->form == Form::plain);
    CHECK(grid.at({n, n - 2})->form == Form::minus);
  }
}

TEST_CASE("combination symmetry nu <-> n - nu") {
  const auto grid = regenerate_combinations(40);
  for (unsigned n = 3; n <= 40; ++n)
    for (unsigned nu = 1; nu < n; ++nu) {
      const auto a = grid.at({n, nu}), b = grid.at({n, n - nu});
      REQUIRE(a.has_value() == b.has_value());
      if (!a) continue;
      INFO("n=" << n << " nu=" << nu);
      REQUIRE(a->m == b->m);
      REQUIRE(a->form != b->form);
    }
  // With published cells preferred, only (12, 5) / (12, 7) is asymmetric.
  std::set<std::pair<unsigned, unsigned>> asym;
  for (unsigned n = 3; n <= 12; ++n)
    for (unsigned nu = 1; nu < n; ++nu) {
      const auto a = expression_combination(n, nu), b = expression_combination(n, n - nu);
      if (a && b && (a->m != b->m || a->form == b->form)) asym.insert({n, std::min(nu, n - nu)});
    }
  CHECK(asym == std::set<std::pair<unsigned, unsigned>>{{12, 5}});
}

TEST_CASE("applicable_expressions examples") {
  const auto e60 = applicable_expressions(Multiplier(60));
  const auto* e125 = find(e60, "E125");
  REQUIRE(e125);
  CHECK(e125->params.at("f") == 5);
  CHECK(e125->params.at("m") == 3);
  CHECK(e125->predicted_mu == U{0, 15, 44, 59});
  CHECK(e125->form == Form::plain);

  const auto e10 = applicable_expressions(Multiplier(10));
  const auto* e21 = find(e10, "E21");
  REQUIRE(e21);
  CHECK(e21->predicted_mu == U{0, 4, 5, 9});

  const auto e7 = applicable_expressions(Multiplier(7));
  REQUIRE(e7.size() == 1);
  CHECK(e7[0].code == "E71");
  CHECK(e7[0].params.at("f") == 1);

  const auto e26 = applicable_expressions(Multiplier(26), 13);
  const auto* e132 = find(e26, "E132");
  REQUIRE(e132);
  CHECK(e132->extrapolated);
  CHECK_FALSE(find(e26, "E21")->extrapolated);
}

TEST_CASE("expressions match the published expression list") {
  std::set<std::string> m_column_differs;
  for (const auto& row : reference::published_expressions()) {
    const auto c = expression_combination(row.n, row.nu);
    INFO(row.code);
    REQUIRE(c.has_value());
    const bool plain = c->form == Form::plain;
    // low = m k/n (- 1 when minus), high = (n-m) k/n (- 1 when plain)
    CHECK(row.low.coef == c->m);
    CHECK(row.low.minus_one == !plain);
    CHECK(row.high.coef == row.n - c->m);
    CHECK(row.high.minus_one == plain);
    if (row.m != c->m) m_column_differs.insert(row.code);
  }
  CHECK(m_column_differs == std::set<std::string>{"E72", "E73", "E74", "E75"});

  std::size_t listed = 0;
  for (unsigned n = 2; n <= 12; ++n)
    for (unsigned nu = 1; nu < n; ++nu) listed += expression_combination(n, nu).has_value();
  CHECK(listed == reference::published_expressions().size());
}

TEST_CASE("every finding respects the pairing") {
  for (std::uint64_t k : oracle::non_squares(2, 400)) {
    auto all = applicable_rules(Multiplier(k));
    for (auto& e : applicable_expressions(Multiplier(k), 20)) all.push_back(e);
    for (const auto& f : all) {
      INFO("k=" << k << " " << f.code);
      std::set<std::uint64_t> s(f.predicted_mu.begin(), f.predicted_mu.end());
      REQUIRE(s.count(0));
      REQUIRE(s.count(k - 1));
      for (auto m : s) {
        REQUIRE(m < k);
        REQUIRE(s.count(k - 1 - m));
      }
      if (f.form) {
        const auto n = f.params.at("n"), nu = f.params.at("nu"), fv = f.params.at("f");
        REQUIRE(n * fv == k);
        REQUIRE(fv % n == nu);
        REQUIRE(std::gcd(n, nu) == 1);
        REQUIRE(f.params.at("m") <= (n % 2 == 0 ? n / 2 : (n - 1) / 2));
      }
    }
  }
}

TEST_CASE("predict_residues examples") {
  SUBCASE("k=24") {
    const auto r = predict_residues(Multiplier(24));
    CHECK(r.was_superseded("R4", "E32"));
    CHECK(r.was_superseded("R4", "E83"));
    CHECK(r.predicted == U{0, 23});
    CHECK(r.verdict == Verdict::exact);
  }
  SUBCASE("k=30") {
    const auto r = predict_residues(Multiplier(30));
    CHECK(r.fired("R6"));
    CHECK(r.fired("E51"));
    CHECK(r.fired("E65"));
    for (const char* loser : {"E21", "E31", "E103"}) CHECK(r.was_superseded("R6", loser));
    CHECK(r.predicted == U{0, 5, 24, 29});
    CHECK(r.observed.mu == U{0, 5, 24, 29});
    CHECK(r.verdict == Verdict::exact);
  }
  SUBCASE("k=74") {
    const auto r = predict_residues(Multiplier(74));
    CHECK(r.fired("E21"));
    CHECK(r.predicted == U{0, 36, 37, 73});
    CHECK(r.observed.mu == U{0, 73});
    CHECK(r.verdict == Verdict::mismatch);
  }
  SUBCASE("k=60") {
    const auto r = predict_residues(Multiplier(60));
    CHECK(r.was_superseded("E43", "E32"));
    CHECK(r.was_superseded("E43", "E52"));
    CHECK(r.verdict == Verdict::exact);
  }
  SUBCASE("k=120") {
    const auto r = predict_residues(Multiplier(120));
    CHECK(r.was_superseded("E87", "R4"));
    CHECK(r.predicted == U{0, 15, 104, 119});
    CHECK(r.verdict == Verdict::exact);
  }
}

TEST_CASE("classification over the published range") {
  std::vector<reference::SupersessionPair> inapplicable;
  for (const auto& row : reference::published_residues()) {
    const auto r = predict_residues(Multiplier(row.k));
    INFO("k=" << row.k);
    REQUIRE(r.observed.mu == reference::corrected_residues(row.k));
    const U ends{0, row.k - 1};
    REQUIRE(std::includes(r.predicted.begin(), r.predicted.end(), ends.begin(), ends.end()));
    if (row.refs == "?") {
      CHECK(r.verdict == Verdict::mismatch);
    } else {
      CHECK(r.verdict == Verdict::exact);
    }
    for (const auto& p : reference::published_supersessions())
      if (p.k == row.k && r.fired(p.winner) && r.fired(p.loser)) CHECK(r.was_superseded(p.winner, p.loser));
    inapplicable.insert(inapplicable.end(), r.inapplicable.begin(), r.inapplicable.end());
  }
  std::vector<reference::SupersessionPair> errata;
  for (const auto& e : reference::supersession_errata()) errata.push_back(e.pair);
  CHECK(inapplicable == errata);
}

TEST_CASE("published codes fire") {
  // Printed references that cannot fire: R1 for 119 = 7 * 17, and E75 for
  // 91 = 7 * 13 where nu = 13 mod 7 = 6 (E76 fires and predicts the row).
  std::vector<std::pair<std::uint64_t, std::string>> silent;
  for (const auto& row : reference::published_residues()) {
    if (row.refs == "?") continue;
    const auto r = predict_residues(Multiplier(row.k));
    std::string rest = row.refs;
    for (std::size_t pos; !rest.empty(); rest = pos == std::string::npos ? "" : rest.substr(pos + 1)) {
      pos = rest.find_first_of(",+");
      const std::string code = rest.substr(0, pos);
      if (!r.fired(code)) silent.emplace_back(row.k, code);
    }
  }
  std::string listed;
  for (const auto& [k, code] : silent) listed += std::to_string(k) + ":" + code + " ";
  CHECK(listed == "91:E75 119:R1 ");
  CHECK(predict_residues(Multiplier(91)).fired("E76"));
}

TEST_CASE("closed-form solution pairs") {
  auto check = [](std::uint64_t kv, const std::string& rule, bool first_is_zero_class) {
    const Multiplier k(kv);
    const auto forms = closed_forms(k);
    const ClosedForm* cf = nullptr;
    for (const auto& f : forms)
      if (f.rule == rule) cf = &f;
    INFO("k=" << kv << " " << rule);
    REQUIRE(cf);
    REQUIRE(verify_solution(k, cf->first.first, cf->first.second));
    REQUIRE(verify_solution(k, cf->second.first, cf->second.second));
    const Nat zero = first_is_zero_class ? cf->first.second : cf->second.second;
    const Nat top = first_is_zero_class ? cf->second.second : cf->first.second;
    CHECK(zero % kv == 0);
    CHECK(top % kv == kv - 1);
    const auto spec = make_spec(k);
    const auto seq = sequence(spec, 4 * spec.r + 2);
    auto member = [&](const std::pair<Nat, Nat>& p) {
      return std::any_of(seq.begin(), seq.end(), [&](const Solution& s) { return s.t == p.first && s.xi == p.second; });
    };
    CHECK(member(cf->first));
    CHECK(member(cf->second));
  };
  for (std::uint64_t k : {5, 17, 37, 65, 101}) check(k, "R3", true);
  for (std::uint64_t k : {24, 48, 80, 120}) check(k, "R4", false);
  for (std::uint64_t k : {7, 23, 47, 79, 119}) check(k, "R5", false);
}

TEST_CASE("verdict strings") {
  CHECK(to_string(Verdict::exact) == "exact");
  CHECK(to_string(Verdict::predicted_subset) == "predicted-subset");
  CHECK(to_string(Verdict::mismatch) == "mismatch");
  CHECK(to_string(Verdict::no_expression) == "no-expression");
}
