#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Published tables, transcribed verbatim (typos included).
namespace trimult::reference {

struct SolutionRow {
  unsigned n;
  std::uint64_t t2, xi2;  // k = 2
  std::uint64_t t7, xi7;  // k = 7
};
const std::vector<SolutionRow>& published_solutions();

/// Row n of the m/nu table for 2 <= n <= 12: one cell per nu in [1, n-1],
/// "m", "m_" (minus form) or "/".
const std::map<unsigned, std::vector<std::string>>& published_combinations();

/// Cells where the printed table and the smallest-m regeneration differ,
/// with the reason each is accepted.
struct CombinationAnnotation {
  unsigned n;
  unsigned nu;
  std::string note;
  bool printed_also_valid;  ///< false: printed cell violates gcd(nu, n) = 1
};
const std::vector<CombinationAnnotation>& combination_annotations();

/// One middle remainder of an expression: coef*k/n - minus_one.
struct ExprTerm {
  unsigned coef;
  bool minus_one;
};

struct ExpressionRow {
  unsigned n;
  unsigned nu;
  unsigned m;  ///< as printed
  ExprTerm low;
  ExprTerm high;
  std::string code;
};
const std::vector<ExpressionRow>& published_expressions();

struct ResidueRow {
  std::uint64_t k;
  std::vector<std::uint64_t> mu;  ///< as printed
  std::string refs;               ///< References column, "?" if unexplained
};
const std::vector<ResidueRow>& published_residues();

struct ResidueErratum {
  std::uint64_t k;
  std::uint64_t printed;
  std::uint64_t corrected;
};
const std::vector<ResidueErratum>& residue_errata();

/// Published residues for k with the errata applied.
std::vector<std::uint64_t> corrected_residues(std::uint64_t k);
const ResidueRow* residue_row(std::uint64_t k);

struct SupersessionPair {
  std::uint64_t k;
  std::string winner;
  std::string loser;

  bool operator==(const SupersessionPair&) const = default;
};
const std::vector<SupersessionPair>& published_supersessions();

/// Published superseding pairs naming a code that cannot fire for that k.
struct SupersessionErratum {
  SupersessionPair pair;
  std::string note;
};
const std::vector<SupersessionErratum>& supersession_errata();

}  // namespace trimult::reference
