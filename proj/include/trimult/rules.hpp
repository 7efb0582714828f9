#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trimult/reference.hpp"
#include "trimult/residues.hpp"

namespace trimult {

/// Which middle pair an expression contributes: {mf, (n-m)f - 1} (plain)
/// or {mf - 1, (n-m)f} (minus, printed with a "_" subscript).
enum class Form { plain, minus };

struct Combination {
  unsigned m;
  Form form;

  bool operator==(const Combination&) const = default;
};

/// "3", "3_" or "/" for an empty cell.
std::string to_string(const std::optional<Combination>& c);
std::optional<Combination> parse_combination(const std::string& cell);

/// True when gcd(nu, n) = 1, 1 <= m <= n/2 (n even) or (n-1)/2 (n odd), and
/// m(m*nu + 1) = 0 mod n (plain) or m(m*nu - 1) = 0 mod n (minus).
bool is_valid_combination(unsigned n, unsigned nu, const Combination& c);

/// Smallest valid m for (n, nu); minus form when both forms hold at that m.
std::optional<Combination> combination_m(unsigned n, unsigned nu);

using CombinationGrid = std::map<std::pair<unsigned, unsigned>, std::optional<Combination>>;

CombinationGrid regenerate_combinations(unsigned n_max = 12);

struct CombinationConflict {
  unsigned n;
  unsigned nu;
  std::optional<Combination> computed;
  std::optional<Combination> printed;
  const reference::CombinationAnnotation* annotation;  ///< nullptr if unexplained
  bool annotation_holds;                          ///< the annotation's claim re-verified
};

/// Cells of `computed` (n <= 12) that differ from the printed table.
std::vector<CombinationConflict> compare_combinations(const CombinationGrid& computed);

/// Combination used for code Enu: the printed cell when n <= 12 and it is
/// valid, otherwise combination_m.
std::optional<Combination> expression_combination(unsigned n, unsigned nu);

struct RuleFinding {
  std::string code;                               ///< "R1".."R6" or "E<n><nu>"
  std::map<std::string, std::uint64_t> params;    ///< s, s', alpha, n, nu, m, f
  std::vector<std::uint64_t> predicted_mu;        ///< sorted
  std::optional<Form> form;                       ///< expressions only
  bool extrapolated = false;                      ///< expression with n > 12
};

/// R1 prime; R2 alpha^n, alpha prime, n odd >= 3; R3 s^2+1, s even;
/// R4 s'^2-1, s' odd >= 3; R5 s'^2-2, s' odd >= 3; R6 n(n+1).
std::vector<RuleFinding> applicable_rules(Multiplier k);

/// Enu for every n in [2, n_max] dividing k with nu = (k/n) mod n != 0 and
/// a combination for (n, nu).
std::vector<RuleFinding> applicable_expressions(Multiplier k, unsigned n_max = 12);

enum class Verdict { exact, predicted_subset, mismatch, no_expression };
std::string to_string(Verdict v);

struct Supersession {
  std::string winner;
  std::string loser;
  std::string source;  ///< "published", "P1" or "P2"

  bool operator==(const Supersession&) const = default;
};

struct ClassificationReport {
  Multiplier k;
  std::vector<RuleFinding> findings;
  std::vector<Supersession> superseded;
  std::vector<reference::SupersessionPair> inapplicable;  ///< published pairs that cannot fire
  std::vector<std::uint64_t> predicted;
  ResidueSet observed;
  Verdict verdict;

  bool fired(const std::string& code) const;
  bool was_superseded(const std::string& winner, const std::string& loser) const;
};

/// Precedence:
///  1. Published pairs for k whose codes both fire remove the loser.
///  2. P1: any surviving R1-R5 removes every expression adding remainders
///     beyond {0, k-1}.
///  3. P2: R6 with n = 1, 2 (mod 4) removes E21 when E21 adds remainders R6
///     does not predict.
/// predicted = {0, k-1} plus every surviving finding's remainders.
ClassificationReport classify(const ResidueSet& observed, unsigned n_max = 12);

/// classify(observed_residues(make_spec(k))).
ClassificationReport predict_residues(Multiplier k, unsigned n_max = 12);

/// Two explicit solution pairs (t, xi) for the R3, R4 and R5 families.
struct ClosedForm {
  std::string rule;
  std::uint64_t s;
  std::pair<Nat, Nat> first;
  std::pair<Nat, Nat> second;
};

/// k = s^2 + 1, s even >= 2.
ClosedForm closed_form_r3(std::uint64_t s);
/// k = s'^2 - 1, s' odd >= 3.
ClosedForm closed_form_r4(std::uint64_t s);
/// k = s'^2 - 2, s' odd >= 3.
ClosedForm closed_form_r5(std::uint64_t s);

/// Closed forms for every R3/R4/R5 rule that fires for k.
std::vector<ClosedForm> closed_forms(Multiplier k);

}  // namespace trimult
