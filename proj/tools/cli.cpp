#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <functional>
#include <optional>
#include <thread>
#include <variant>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "trimult/errors.hpp"
#include "trimult/oeis.hpp"
#include "trimult/reference.hpp"
#include "trimult/rules.hpp"
#include "trimult/serialize.hpp"
#include "trimult/sieve.hpp"
#include "trimult/solver.hpp"

namespace trimult::cli {
namespace {

using nlohmann::json;

enum class Format { table, json, csv };

const std::map<std::string, Format> format_names{
    {"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}};

// "1000000", "1e6" or "10^6".
std::optional<Nat> parse_natural(const std::string& s) {
  auto digits = [](const std::string& d) {
    return !d.empty() && std::all_of(d.begin(), d.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  for (const char* sep : {"e", "E", "^"}) {
    const auto pos = s.find(sep);
    if (pos == std::string::npos) continue;
    const std::string base = s.substr(0, pos), exp = s.substr(pos + 1);
    if (!digits(base) || !digits(exp) || exp.size() > 4) return std::nullopt;
    Nat b(base), out = 1;
    const unsigned e = static_cast<unsigned>(std::stoul(exp));
    if (std::string(sep) == "^") {
      out = boost::multiprecision::pow(b, e);
    } else {
      out = b * boost::multiprecision::pow(Nat(10), e);
    }
    return out;
  }
  if (!digits(s)) return std::nullopt;
  return Nat(s);
}

std::uint64_t natural_u64(const std::string& s, const char* what) {
  const auto v = parse_natural(s);
  if (!v || *v > std::numeric_limits<std::uint64_t>::max())
    throw ValidationError(fmt::format("{} must be a non-negative integer (got '{}')", what, s));
  return v->convert_to<std::uint64_t>();
}

struct Range {
  std::uint64_t lo;
  std::uint64_t hi;
};

Range parse_range(const std::string& s) {
  const auto pos = s.find("..");
  if (pos == std::string::npos) throw ValidationError("range must look like A..B (got '" + s + "')");
  Range r{natural_u64(s.substr(0, pos), "range start"), natural_u64(s.substr(pos + 2), "range end")};
  if (r.lo > r.hi) throw ValidationError("range start exceeds range end in '" + s + "'");
  if (r.hi >= (std::uint64_t{1} << 32)) throw ValidationError("range end must be < 2^32");
  return r;
}

// Explicit k, or the non-square members of a range (squares reported).
struct Targets {
  std::vector<std::uint64_t> ks;
  std::vector<std::uint64_t> skipped;
};

Targets resolve_targets(const std::string& k_arg, const std::string& range_arg) {
  Targets t;
  if (!k_arg.empty() && !range_arg.empty()) throw ValidationError("give either k or --range, not both");
  if (!k_arg.empty()) {
    t.ks.push_back(Multiplier(natural_u64(k_arg, "k")).value());
    return t;
  }
  if (range_arg.empty()) throw ValidationError("k or --range is required");
  const Range r = parse_range(range_arg);
  for (std::uint64_t k = r.lo; k <= r.hi; ++k) {
    if (k < 2) continue;
    if (is_square(k)) {
      t.skipped.push_back(k);
      continue;
    }
    t.ks.push_back(k);
  }
  if (t.ks.empty()) throw ValidationError("range " + range_arg + " contains no non-square k >= 2");
  return t;
}

// Evaluates fn for every item on a bounded pool; results keep input order.
template <class T, class F>
std::vector<T> parallel_map(const std::vector<std::uint64_t>& items, F fn) {
  std::vector<std::optional<T>> slots(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8));
  auto work = [&] {
    for (std::size_t i; (i = next++) < items.size();) {
      try {
        slots[i].emplace(fn(items[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < std::min<std::size_t>(workers, items.size()); ++w) pool.emplace_back(work);
  work();
  pool.clear();
  std::vector<T> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

json document(const char* command) { return {{"schema", schema_version}, {"command", command}}; }

// Numeric columns are right-aligned, text columns left-aligned.
void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  const std::size_t cols = header.size();
  std::vector<std::size_t> width(cols);
  std::vector<bool> numeric(cols, true);
  std::vector<bool> has_digit(cols, false);
  for (std::size_t c = 0; c < cols; ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < cols; ++c) {
      width[c] = std::max(width[c], row[c].size());
      const bool num = !row[c].empty() && std::all_of(row[c].begin(), row[c].end(), [](unsigned char ch) {
        return std::isdigit(ch) || ch == '.' || ch == '-';
      });
      numeric[c] = numeric[c] && num;
      has_digit[c] = has_digit[c] || std::any_of(row[c].begin(), row[c].end(), [](unsigned char ch) {
                       return std::isdigit(ch);
                     });
    }
  }
  for (std::size_t c = 0; c < cols; ++c) numeric[c] = numeric[c] && has_digit[c];
  auto line = [&](const std::vector<std::string>& row) {
    std::string s;
    for (std::size_t c = 0; c < cols; ++c) {
      if (c) s += "  ";
      if (numeric[c])
        s += fmt::format("{:>{}}", row[c], width[c]);
      else if (c + 1 == cols)
        s += row[c];
      else
        s += fmt::format("{:<{}}", row[c], width[c]);
    }
    s.erase(s.find_last_not_of(' ') + 1);
    out << s << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

std::string ratio(const Nat& a, const Nat& b) {
  if (b == 0) return "--";
  return fmt::format("{:.3f}", a.convert_to<long double>() / b.convert_to<long double>());
}

// ---- solve ---------------------------------------------------------------

struct SolveArgs {
  std::string k;
  std::size_t count = 7;
  std::string bound = "1000000";
  bool ratios = false;
};

int cmd_solve(const SolveArgs& a, Format format, std::ostream& out) {
  const Multiplier k(natural_u64(a.k, "k"));
  const auto bound = parse_natural(a.bound);
  if (!bound || *bound < 1) throw ValidationError("--bound must be a positive integer");
  const RecurrenceSpec spec = make_spec(k, *bound);
  const auto sols = sequence(spec, a.count);

  if (format == Format::json) {
    json doc = document("solve");
    doc["spec"] = to_json(spec);
    json arr = json::array();
    for (const auto& s : sols) arr.push_back(to_json(s));
    doc["solutions"] = arr;
    out << doc.dump(2) << '\n';
    return ok;
  }
  if (format == Format::csv) {
    out << csv_row({"n", "t", "xi", "T_t", "T_xi"});
    for (const auto& s : sols)
      out << csv_row({std::to_string(s.n), to_decimal(s.t), to_decimal(s.xi), to_decimal(s.T_t),
                      to_decimal(s.T_xi)});
    return ok;
  }
  out << fmt::format("k={}  r={}  kappa={}  2kappa+3={}  gamma={}\n", k.value(), spec.r,
                     to_decimal(spec.kappa), to_decimal(2 * spec.kappa + 3), to_decimal(spec.gamma));
  std::vector<std::string> header{"n", "t_n", "xi_n", "T_t", "T_xi"};
  if (a.ratios) {
    header.push_back("t_n/t_n-1");
    if (spec.r > 1) header.push_back(fmt::format("t_n/t_n-{}", spec.r));
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : sols) {
    std::vector<std::string> row{std::to_string(s.n), to_decimal(s.t), to_decimal(s.xi),
                                 to_decimal(s.T_t), to_decimal(s.T_xi)};
    if (a.ratios) {
      row.push_back(s.n >= 2 ? ratio(s.t, sols[s.n - 1].t) : "--");
      if (spec.r > 1) row.push_back(s.n > spec.r ? ratio(s.t, sols[s.n - spec.r].t) : "--");
    }
    rows.push_back(std::move(row));
  }
  print_table(out, header, rows);
  return ok;
}

// ---- residues ------------------------------------------------------------

struct ResiduesArgs {
  std::string k;
  std::string range;
  bool candidates = false;
};

struct ResidueRow {
  ResidueSet observed;
  std::vector<std::uint64_t> candidates;
  std::size_t period;
};

int cmd_residues(const ResiduesArgs& a, Format format, std::ostream& out, std::ostream& err) {
  const Targets targets = resolve_targets(a.k, a.range);
  const auto rows = parallel_map<ResidueRow>(targets.ks, [&](std::uint64_t kv) {
    const Multiplier k(kv);
    const auto orbit = residue_orbit(make_spec(k));
    return ResidueRow{ResidueSet{k, orbit.mu}, a.candidates ? candidate_residues(k) : std::vector<std::uint64_t>{},
                      orbit.period};
  });

  if (format == Format::json) {
    json doc = document("residues");
    json arr = json::array();
    for (const auto& r : rows) {
      json j = to_json(r.observed);
      j["period"] = r.period;
      if (a.candidates) j["candidates"] = r.candidates;
      arr.push_back(j);
    }
    doc["rows"] = arr;
    doc["skipped_squares"] = targets.skipped;
    out << doc.dump(2) << '\n';
    return ok;
  }
  if (!targets.skipped.empty()) err << "note: skipped square k: " << join(targets.skipped, ", ") << '\n';
  if (format == Format::csv) {
    std::vector<std::string> header{"k", "upsilon", "mu"};
    if (a.candidates) header.push_back("candidates");
    out << csv_row(header);
    for (const auto& r : rows) {
      std::vector<std::string> row{std::to_string(r.observed.k.value()), std::to_string(r.observed.upsilon()),
                                   join(r.observed.mu)};
      if (a.candidates) row.push_back(join(r.candidates));
      out << csv_row(row);
    }
    return ok;
  }
  std::vector<std::string> header{"k", "upsilon", "mu"};
  if (a.candidates) header = {"k", "upsilon", "candidates", "mu"};
  std::vector<std::vector<std::string>> table;
  for (const auto& r : rows) {
    std::vector<std::string> row{std::to_string(r.observed.k.value()), std::to_string(r.observed.upsilon())};
    if (a.candidates) row.push_back(std::to_string(r.candidates.size()));
    row.push_back(join(r.observed.mu, ", "));
    table.push_back(std::move(row));
  }
  print_table(out, header, table);
  return ok;
}

// ---- classify ------------------------------------------------------------

struct ClassifyArgs {
  std::string k;
  std::string range;
  unsigned n_max = 12;
};

std::string codes(const ClassificationReport& r) {
  std::string s;
  for (const auto& f : r.findings) s += (s.empty() ? "" : ",") + f.code;
  return s.empty() ? "-" : s;
}

std::string superseded(const ClassificationReport& r) {
  std::string s;
  for (const auto& p : r.superseded) s += (s.empty() ? "" : ",") + p.winner + ">" + p.loser;
  return s.empty() ? "-" : s;
}

std::vector<std::string> notes_for(const ClassificationReport& r) {
  std::vector<std::string> notes;
  for (const auto& e : reference::residue_errata())
    if (e.k == r.k.value())
      notes.push_back(fmt::format("k={}: published residue {} corrected to {} (pairing forces {})", e.k,
                                  e.printed, e.corrected, e.corrected));
  for (const auto& p : r.inapplicable)
    notes.push_back(fmt::format("k={}: published pair {}>{} does not apply (code does not fire)", p.k, p.winner,
                                p.loser));
  if (const auto* row = reference::residue_row(r.k.value()); row && row->refs == "?")
    notes.push_back(fmt::format("k={}: no published explanation", r.k.value()));
  for (const auto& f : r.findings)
    if (f.extrapolated) notes.push_back(fmt::format("k={}: {} is extrapolated (n > 12)", r.k.value(), f.code));
  return notes;
}

int cmd_classify(const ClassifyArgs& a, Format format, std::ostream& out, std::ostream& err) {
  if (a.n_max < 2) throw ValidationError("--n-max must be >= 2");
  const Targets targets = resolve_targets(a.k, a.range);
  const auto reports = parallel_map<ClassificationReport>(
      targets.ks, [&](std::uint64_t k) { return predict_residues(Multiplier(k), a.n_max); });

  std::vector<std::string> notes;
  for (const auto& r : reports) {
    auto n = notes_for(r);
    notes.insert(notes.end(), n.begin(), n.end());
  }

  if (format == Format::json) {
    json doc = document("classify");
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    doc["rows"] = arr;
    doc["notes"] = notes;
    doc["skipped_squares"] = targets.skipped;
    out << doc.dump(2) << '\n';
    return ok;
  }
  if (!targets.skipped.empty()) err << "note: skipped square k: " << join(targets.skipped, ", ") << '\n';
  if (format == Format::csv) {
    out << csv_row({"k", "codes", "superseded", "predicted", "observed", "verdict"});
    for (const auto& r : reports)
      out << csv_row({std::to_string(r.k.value()), codes(r), superseded(r), join(r.predicted), join(r.observed.mu),
                      to_string(r.verdict)});
    for (const auto& n : notes) err << "note: " << n << '\n';
    return ok;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports)
    rows.push_back({std::to_string(r.k.value()), codes(r), superseded(r), join(r.predicted, ", "),
                    join(r.observed.mu, ", "), to_string(r.verdict)});
  print_table(out, {"k", "codes", "superseded", "predicted", "observed", "verdict"}, rows);
  for (const auto& n : notes) out << "note: " << n << '\n';
  return ok;
}

// ---- bench ---------------------------------------------------------------

struct BenchArgs {
  std::string k;
  std::string limit = "1000000";
  unsigned reps = 5;
};

int cmd_bench(const BenchArgs& a, Format format, std::ostream& out) {
  const Multiplier k(natural_u64(a.k, "k"));
  const std::uint64_t limit = natural_u64(a.limit, "--limit");
  const BenchReport r = bench(k, limit, a.reps);
  if (format == Format::json) {
    json doc = document("bench");
    doc["report"] = to_json(r);
    out << doc.dump(2) << '\n';
    return ok;
  }
  const std::vector<std::string> header{"k",         "limit",          "upsilon",      "naive_candidates",
                                        "sieve_candidates", "naive_time_ns", "sieve_time_ns", "solutions_found",
                                        "candidate_gain",   "nominal_gain",  "measured_gain"};
  const std::vector<std::string> row{std::to_string(r.k.value()),
                                     std::to_string(r.limit),
                                     std::to_string(r.upsilon),
                                     std::to_string(r.naive_candidates),
                                     std::to_string(r.sieve_candidates),
                                     std::to_string(r.naive_time.count()),
                                     std::to_string(r.sieve_time.count()),
                                     std::to_string(r.solutions_found),
                                     fmt::format("{:.4f}", r.candidate_gain),
                                     fmt::format("{:.4f}", r.nominal_gain()),
                                     fmt::format("{:.4f}", r.measured_gain)};
  if (format == Format::csv) {
    out << csv_row(header) << csv_row(row);
    return ok;
  }
  for (std::size_t i = 0; i < header.size(); ++i) out << fmt::format("{:<17} {}\n", header[i], row[i]);
  return ok;
}

// ---- oeis ----------------------------------------------------------------

struct OeisArgs {
  std::uint64_t k = 0;
  std::size_t count = 10;
  bool offline = false;
  std::string cache_dir;
  std::string base_url;
  std::vector<std::string> ids;
};

oeis::Client make_client(const OeisArgs& a) {
  oeis::ClientOptions opts;
  if (!a.cache_dir.empty()) opts.cache_dir = a.cache_dir;
  if (!a.base_url.empty()) opts.base_url = a.base_url;
  opts.offline = a.offline;
  return oeis::Client(opts);
}

int cmd_oeis_verify(const OeisArgs& a, Format format, std::ostream& out) {
  if (a.count < 1) throw ValidationError("--count must be >= 1");
  oeis::refs_for(a.k);
  const auto rep = oeis::crosscheck(make_client(a), a.k, a.count);
  if (format == Format::json) {
    json doc = document("oeis verify");
    doc["report"] = to_json(rep);
    out << doc.dump(2) << '\n';
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : rep.roles) {
      std::size_t good = 0;
      for (const auto& t : r.terms) good += t.match;
      std::vector<std::string> names;
      for (auto m : r.content_matches) names.push_back(oeis::to_string(m));
      std::string matches;
      for (const auto& n : names) matches += (matches.empty() ? "" : ",") + n;
      rows.push_back({oeis::to_string(r.ref.role), r.ref.id, std::to_string(r.published_index),
                      fmt::format("{}/{}", good, r.terms.size()), matches.empty() ? "-" : matches,
                      r.ok ? "OK" : "MISMATCH"});
    }
    const std::vector<std::string> header{"role", "id", "offset", "matched", "content_matches", "status"};
    if (format == Format::csv) {
      out << csv_row(header);
      for (const auto& row : rows) out << csv_row(row);
    } else {
      out << fmt::format("k={}  count={}\n", rep.k, rep.count);
      print_table(out, header, rows);
    }
  }
  return rep.ok() ? ok : mismatch;
}

int cmd_oeis_fetch(const OeisArgs& a, Format format, std::ostream& out) {
  if (a.ids.empty()) throw ValidationError("at least one id is required");
  const auto client = make_client(a);
  json arr = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& id : a.ids) {
    oeis::check_id(id);
    const bool was_cached = client.cached(id);
    const auto data = client.fetch_bfile(id);
    const std::string first = data.terms.empty() ? "" : std::to_string(data.terms.front().index);
    arr.push_back({{"id", id}, {"terms", data.terms.size()}, {"first_index", first}, {"cached", was_cached},
                   {"path", client.cache_path(id).string()}});
    rows.push_back({id, std::to_string(data.terms.size()), first, was_cached ? "cache" : "network"});
  }
  if (format == Format::json) {
    json doc = document("oeis fetch");
    doc["rows"] = arr;
    out << doc.dump(2) << '\n';
  } else if (format == Format::csv) {
    out << csv_row({"id", "terms", "first_index", "source"});
    for (const auto& row : rows) out << csv_row(row);
  } else {
    print_table(out, {"id", "terms", "first_index", "source"}, rows);
  }
  return ok;
}

int cmd_oeis_refs(Format format, std::ostream& out) {
  if (format == Format::json) {
    json doc = document("oeis refs");
    json arr = json::array();
    for (const auto& r : oeis::published_refs())
      arr.push_back({{"k", r.k}, {"role", oeis::to_string(r.role)}, {"id", r.id}});
    doc["rows"] = arr;
    out << doc.dump(2) << '\n';
    return ok;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : oeis::published_refs()) rows.push_back({std::to_string(r.k), oeis::to_string(r.role), r.id});
  if (format == Format::csv) {
    out << csv_row({"k", "role", "id"});
    for (const auto& row : rows) out << csv_row(row);
  } else {
    print_table(out, {"k", "role", "id"}, rows);
  }
  return ok;
}

// ---- combinations / expressions -----------------------------------------

std::string form_name(Form f) { return f == Form::plain ? "mf" : "mf-1"; }

int cmd_combinations(unsigned n_max, Format format, std::ostream& out) {
  if (n_max < 2 || n_max > 1000) throw ValidationError("--n-max must be in [2, 1000]");
  const auto grid = regenerate_combinations(n_max);
  const auto conflicts = compare_combinations(grid);

  if (format == Format::json) {
    json doc = document("combinations");
    json cells = json::array();
    for (const auto& [key, c] : grid) {
      json j{{"n", key.first}, {"nu", key.second}, {"cell", to_string(c)}};
      if (c) {
        j["m"] = c->m;
        j["form"] = form_name(c->form);
      }
      cells.push_back(j);
    }
    json conf = json::array();
    for (const auto& c : conflicts)
      conf.push_back({{"n", c.n},
                      {"nu", c.nu},
                      {"computed", to_string(c.computed)},
                      {"published", to_string(c.printed)},
                      {"annotation", c.annotation ? c.annotation->note : ""},
                      {"annotation_holds", c.annotation_holds}});
    doc["cells"] = cells;
    doc["conflicts"] = conf;
    out << doc.dump(2) << '\n';
    return ok;
  }
  if (format == Format::csv) {
    out << csv_row({"n", "nu", "cell", "published"});
    for (const auto& [key, c] : grid) {
      std::string printed;
      if (const auto& pub = reference::published_combinations(); pub.count(key.first))
        printed = pub.at(key.first)[key.second - 1];
      out << csv_row({std::to_string(key.first), std::to_string(key.second), to_string(c), printed});
    }
    return ok;
  }
  std::vector<std::string> header{"n\\nu"};
  for (unsigned nu = 1; nu < n_max; ++nu) header.push_back(std::to_string(nu));
  std::vector<std::vector<std::string>> rows;
  for (unsigned n = 2; n <= n_max; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (unsigned nu = 1; nu < n_max; ++nu) row.push_back(nu < n ? to_string(grid.at({n, nu})) : "");
    rows.push_back(std::move(row));
  }
  print_table(out, header, rows);
  for (const auto& c : conflicts)
    out << fmt::format("note: (n={}, nu={}) computed {} published {}: {}\n", c.n, c.nu, to_string(c.computed),
                       to_string(c.printed),
                       c.annotation ? c.annotation->note + (c.annotation_holds ? "" : " [annotation FAILS]")
                                    : "UNEXPLAINED");
  return ok;
}

std::string term(unsigned coef, unsigned n, bool minus_one) {
  const std::string base = coef == 1 ? fmt::format("k/{}", n) : fmt::format("{}k/{}", coef, n);
  return minus_one ? "(" + base + ")-1" : base;
}

int cmd_expressions(unsigned n_max, Format format, std::ostream& out) {
  if (n_max < 2 || n_max > 1000) throw ValidationError("--n-max must be in [2, 1000]");
  json arr = json::array();
  std::vector<std::vector<std::string>> rows;
  for (unsigned n = 2; n <= n_max; ++n) {
    for (unsigned nu = 1; nu < n; ++nu) {
      const auto c = expression_combination(n, nu);
      if (!c) continue;
      const bool plain = c->form == Form::plain;
      const std::string lo = term(c->m, n, !plain), hi = term(n - c->m, n, plain);
      const std::string code = "E" + std::to_string(n) + std::to_string(nu);
      const std::string congruence = fmt::format("{} (mod {})", n * nu, n * n);
      const std::string mu = "0, " + lo + ", " + hi + ", k-1";
      arr.push_back({{"code", code}, {"n", n}, {"nu", nu}, {"m", c->m}, {"form", form_name(c->form)},
                     {"k_congruence", congruence}, {"mu", mu}, {"extrapolated", n > 12}});
      rows.push_back({code, std::to_string(n), std::to_string(nu), std::to_string(c->m), form_name(c->form),
                      congruence, mu});
    }
  }
  const std::vector<std::string> header{"code", "n", "nu", "m", "form", "k_congruence", "mu"};
  if (format == Format::json) {
    json doc = document("expressions");
    doc["rows"] = arr;
    out << doc.dump(2) << '\n';
  } else if (format == Format::csv) {
    out << csv_row({"code", "n", "nu", "m", "form", "k_congruence", "mu"});
    for (const auto& row : rows) out << csv_row(row);
  } else {
    print_table(out, header, rows);
  }
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triangular numbers that are k-multiples of triangular numbers", "trimult"};
  app.require_subcommand(1);
  std::string format_name = "table";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();

  SolveArgs solve;
  auto* sub_solve = app.add_subcommand("solve", "Solutions, rank and recurrence constants for k");
  sub_solve->add_option("k", solve.k, "Non-square multiplier")->required();
  sub_solve->add_option("--count", solve.count, "Number of solutions (n = 0 .. count-1)")->capture_default_str();
  sub_solve->add_option("--bound", solve.bound, "Initial t bound for the base search")->capture_default_str();
  sub_solve->add_flag("--ratios", solve.ratios, "Add t_n/t_(n-1) and t_n/t_(n-r) columns");

  ResiduesArgs residues;
  auto* sub_res = app.add_subcommand("residues", "Observed residues of xi mod k");
  sub_res->add_option("k", residues.k, "Non-square multiplier");
  sub_res->add_option("--range", residues.range, "Inclusive range A..B; squares are skipped");
  sub_res->add_flag("--candidates", residues.candidates, "Also list residues with k | T_xi");

  ClassifyArgs classify_args;
  auto* sub_cls = app.add_subcommand("classify", "Rules and expressions versus observed residues");
  sub_cls->add_option("k", classify_args.k, "Non-square multiplier");
  sub_cls->add_option("--range", classify_args.range, "Inclusive range A..B; squares are skipped");
  sub_cls->add_option("--n-max", classify_args.n_max, "Largest n for expressions")->capture_default_str();

  BenchArgs bench_args;
  auto* sub_bench = app.add_subcommand("bench", "Naive versus sieve search timing and candidate counts");
  sub_bench->add_option("k", bench_args.k, "Non-square multiplier")->required();
  sub_bench->add_option("--limit", bench_args.limit, "Largest xi searched")->capture_default_str();
  sub_bench->add_option("--reps", bench_args.reps, "Timed repetitions (>= 3)")->capture_default_str();

  OeisArgs oeis_args;
  auto* sub_oeis = app.add_subcommand("oeis", "OEIS b-file cache and cross-check");
  sub_oeis->require_subcommand(1);
  for (auto* o : {sub_oeis}) {
    o->add_flag("--offline", oeis_args.offline, "Never touch the network");
    o->add_option("--cache-dir", oeis_args.cache_dir, "Cache directory (default $TRIMULT_OEIS_CACHE)");
    o->add_option("--base-url", oeis_args.base_url, "OEIS host (default https://oeis.org)");
  }
  auto* sub_verify = sub_oeis->add_subcommand("verify", "Compare solver output with the published sequences");
  sub_verify->add_option("--k", oeis_args.k, "One of 2, 3, 5, 6, 7, 8")->required();
  sub_verify->add_option("--count", oeis_args.count, "Positive terms per role")->capture_default_str();
  auto* sub_fetch = sub_oeis->add_subcommand("fetch", "Download b-files into the cache");
  sub_fetch->add_option("ids", oeis_args.ids, "Sequence ids, e.g. A001652")->required();
  auto* sub_refs = sub_oeis->add_subcommand("refs", "List the sequence ids per k and role");
  for (auto* o : {sub_verify, sub_fetch}) {
    o->add_flag("--offline", oeis_args.offline, "Never touch the network");
    o->add_option("--cache-dir", oeis_args.cache_dir, "Cache directory");
    o->add_option("--base-url", oeis_args.base_url, "OEIS host");
  }

  unsigned n_max = 12;
  auto* sub_comb = app.add_subcommand("combinations", "The m/nu combination grid");
  sub_comb->add_option("--n-max", n_max, "Largest n")->capture_default_str();
  auto* sub_expr = app.add_subcommand("expressions", "Remainder expressions Enu");
  sub_expr->add_option("--n-max", n_max, "Largest n")->capture_default_str();

  for (auto* sub : {sub_solve, sub_res, sub_cls, sub_bench, sub_verify, sub_fetch, sub_refs, sub_comb, sub_expr})
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : invalid_input;
  }

  const Format format = format_names.at(format_name);
  try {
    if (*sub_solve) return cmd_solve(solve, format, out);
    if (*sub_res) return cmd_residues(residues, format, out, err);
    if (*sub_cls) return cmd_classify(classify_args, format, out, err);
    if (*sub_bench) return cmd_bench(bench_args, format, out);
    if (*sub_verify) return cmd_oeis_verify(oeis_args, format, out);
    if (*sub_fetch) return cmd_oeis_fetch(oeis_args, format, out);
    if (*sub_refs) return cmd_oeis_refs(format, out);
    if (*sub_comb) return cmd_combinations(n_max, format, out);
    if (*sub_expr) return cmd_expressions(n_max, format, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return invalid_input;
  } catch (const DivergenceError& e) {
    err << "error: " << e.what() << '\n';
    return divergence;
  } catch (const SolverError& e) {
    err << "error: " << e.what() << '\n';
    return divergence;
  } catch (const OeisError& e) {
    err << "error: " << e.what() << '\n';
    return network;
  }
  return invalid_input;
}

}  // namespace trimult::cli
