#include "trimult/serialize.hpp"

#include <json.hpp>

namespace trimult {

using nlohmann::json;

std::string to_decimal(const Int& v) { return v.str(); }

json to_json(const Solution& s) {
  return {{"n", s.n},
          {"t", to_decimal(s.t)},
          {"xi", to_decimal(s.xi)},
          {"T_t", to_decimal(s.T_t)},
          {"T_xi", to_decimal(s.T_xi)}};
}

json to_json(const RecurrenceSpec& spec) {
  json seeds = json::array();
  for (const auto& s : spec.seeds) seeds.push_back(to_json(s));
  return {{"k", spec.k.value()},
          {"r", spec.r},
          {"kappa", to_decimal(spec.kappa)},
          {"gamma", to_decimal(spec.gamma)},
          {"two_kappa_plus_3", to_decimal(2 * spec.kappa + 3)},
          {"coeff_linear", to_decimal(spec.coeff_linear)},
          {"coeff_tri", to_decimal(spec.coeff_tri)},
          {"const_tri", to_decimal(spec.const_tri)},
          {"seeds", seeds}};
}

json to_json(const ResidueSet& rs) {
  json pairs = json::array();
  const std::uint64_t top = rs.k.value() - 1;
  for (std::uint64_t m : rs.mu)
    if (m <= top - m && rs.contains(top - m)) pairs.push_back({m, top - m});
  return {{"k", rs.k.value()}, {"upsilon", rs.upsilon()}, {"mu", rs.mu}, {"pairs", pairs}};
}

json to_json(const RuleFinding& f) {
  json j{{"code", f.code}, {"params", f.params}, {"predicted", f.predicted_mu}};
  if (f.form) j["form"] = *f.form == Form::plain ? "mf" : "mf-1";
  if (f.extrapolated) j["extrapolated"] = true;
  return j;
}

json to_json(const ClassificationReport& rep) {
  json findings = json::array();
  for (const auto& f : rep.findings) findings.push_back(to_json(f));
  json superseded = json::array();
  for (const auto& s : rep.superseded)
    superseded.push_back({{"winner", s.winner}, {"loser", s.loser}, {"source", s.source}});
  json inapplicable = json::array();
  for (const auto& p : rep.inapplicable)
    inapplicable.push_back({{"winner", p.winner}, {"loser", p.loser}});
  return {{"k", rep.k.value()},
          {"findings", findings},
          {"superseded", superseded},
          {"inapplicable", inapplicable},
          {"predicted", rep.predicted},
          {"observed", rep.observed.mu},
          {"verdict", to_string(rep.verdict)}};
}

json to_json(const BenchReport& r) {
  return {{"k", r.k.value()},
          {"limit", r.limit},
          {"upsilon", r.upsilon},
          {"naive_candidates", r.naive_candidates},
          {"sieve_candidates", r.sieve_candidates},
          {"naive_time_ns", r.naive_time.count()},
          {"sieve_time_ns", r.sieve_time.count()},
          {"solutions_found", r.solutions_found},
          {"repetitions", r.repetitions},
          {"nominal_gain", r.nominal_gain()},
          {"candidate_gain", r.candidate_gain},
          {"measured_gain", r.measured_gain},
          {"candidate_gain_ok", r.candidate_gain_within_tolerance()}};
}

json to_json(const oeis::CrosscheckReport& rep) {
  json roles = json::array();
  for (const auto& r : rep.roles) {
    json terms = json::array();
    for (const auto& t : r.terms)
      terms.push_back({{"position", t.position},
                       {"published", to_decimal(t.published)},
                       {"computed", to_decimal(t.computed)},
                       {"match", t.match}});
    json matches = json::array();
    for (auto m : r.content_matches) matches.push_back(oeis::to_string(m));
    roles.push_back({{"role", oeis::to_string(r.ref.role)},
                     {"id", r.ref.id},
                     {"published_index", r.published_index},
                     {"published_positive", r.published_positive},
                     {"compared", r.terms.size()},
                     {"content_matches", matches},
                     {"ok", r.ok},
                     {"terms", terms}});
  }
  return {{"k", rep.k}, {"count", rep.count}, {"ok", rep.ok()}, {"roles", roles}};
}

Solution solution_from_json(const json& j) {
  return Solution{j.at("n").get<std::size_t>(), Nat(j.at("t").get<std::string>()),
                  Nat(j.at("xi").get<std::string>()), Nat(j.at("T_t").get<std::string>()),
                  Nat(j.at("T_xi").get<std::string>())};
}

ResidueSet residue_set_from_json(const json& j) {
  return ResidueSet{Multiplier(j.at("k").get<std::uint64_t>()),
                    j.at("mu").get<std::vector<std::uint64_t>>()};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

std::string join(const std::vector<std::uint64_t>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace trimult
