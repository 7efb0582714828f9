#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "trimult/solver.hpp"

namespace trimult::oeis {

enum class Role { t, xi, T_t, T_xi };
std::string to_string(Role r);

struct SequenceRef {
  std::uint64_t k;
  Role role;
  std::string id;  ///< "A" + 6 digits
};

/// The 24 published (k, role, id) triples for k in {2, 3, 5, 6, 7, 8}.
const std::vector<SequenceRef>& published_refs();

/// Refs for k in role order t, xi, T_t, T_xi. Throws ValidationError for k
/// outside the table.
std::vector<SequenceRef> refs_for(std::uint64_t k);

struct Term {
  std::int64_t index;
  Nat value;

  bool operator==(const Term&) const = default;
};

struct SequenceData {
  std::string id;
  std::vector<Term> terms;  ///< indices as published, consecutive

  bool operator==(const SequenceData&) const = default;
};

/// Throws ValidationError unless id is "A" followed by 6 digits.
void check_id(std::string_view id);

/// Lines "<index> <value>"; blank lines and lines starting with '#' are
/// skipped. Throws OeisError(parse) naming the offending line.
SequenceData parse_bfile(std::string_view id, std::string_view body);

/// $TRIMULT_OEIS_CACHE, else $XDG_CACHE_HOME/trimult/oeis, else
/// ~/.cache/trimult/oeis.
std::filesystem::path default_cache_dir();

struct ClientOptions {
  std::filesystem::path cache_dir = default_cache_dir();
  bool offline = false;
  std::string base_url = "https://oeis.org";
  std::chrono::seconds timeout{30};
};

class Client {
 public:
  explicit Client(ClientOptions options = {});

  /// Cache hit: parse the cached body, no network. Miss: GET
  /// <base_url>/b<digits>.txt, parse, then store the body atomically.
  SequenceData fetch_bfile(const std::string& id) const;
  SequenceData fetch_bfile(const SequenceRef& ref) const { return fetch_bfile(ref.id); }

  std::filesystem::path cache_path(const std::string& id) const;
  bool cached(const std::string& id) const;
  const ClientOptions& options() const noexcept { return opts_; }

 private:
  ClientOptions opts_;
};

struct TermCheck {
  std::size_t position;  ///< 0 = first positive term
  Nat published;
  Nat computed;
  bool match;
};

struct RoleReport {
  SequenceRef ref;
  std::int64_t published_index = 0;  ///< published index of the first positive term
  std::size_t published_positive = 0;
  std::vector<TermCheck> terms;
  std::vector<Role> content_matches;  ///< roles whose computed terms equal the published ones
  bool ok = false;                    ///< at least one term compared, all match
};

struct CrosscheckReport {
  std::uint64_t k;
  std::size_t count;
  std::vector<RoleReport> roles;

  bool ok() const;
};

/// Compares the first `count` positive solver terms of each role with the
/// published sequence, aligned at the first positive term on both sides.
/// A sequence matching another role's terms is reported, not swapped.
CrosscheckReport crosscheck(const Client& client, std::uint64_t k, std::size_t count);

}  // namespace trimult::oeis
