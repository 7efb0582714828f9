#include "trimult/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "trimult/errors.hpp"

namespace trimult::oeis {
namespace fs = std::filesystem;

std::string to_string(Role r) {
  switch (r) {
    case Role::t: return "t";
    case Role::xi: return "xi";
    case Role::T_t: return "T_t";
    case Role::T_xi: return "T_xi";
  }
  return "?";
}

const std::vector<SequenceRef>& published_refs() {
  static const std::vector<SequenceRef> refs = [] {
    struct Column {
      std::uint64_t k;
      const char* ids[4];
    };
    static const Column cols[] = {
        {2, {"A053141", "A001652", "A075528", "A029549"}},
        {3, {"A061278", "A001571", "A076139", "A076140"}},
        {5, {"A077259", "A077262", "A077260", "A077261"}},
        {6, {"A077288", "A077291", "A077289", "A077290"}},
        {7, {"A077398", "A077401", "A077399", "A077400"}},
        {8, {"A336623", "A336625", "A336624", "A336626"}},
    };
    std::vector<SequenceRef> out;
    for (const auto& c : cols)
      for (int r = 0; r < 4; ++r) out.push_back({c.k, static_cast<Role>(r), c.ids[r]});
    return out;
  }();
  return refs;
}

std::vector<SequenceRef> refs_for(std::uint64_t k) {
  std::vector<SequenceRef> out;
  for (const auto& r : published_refs())
    if (r.k == k) out.push_back(r);
  if (out.empty())
    throw ValidationError("k must be one of 2, 3, 5, 6, 7, 8 (got " + std::to_string(k) + ")");
  return out;
}

void check_id(std::string_view id) {
  const bool ok = id.size() == 7 && id[0] == 'A' &&
                  std::all_of(id.begin() + 1, id.end(), [](unsigned char c) { return std::isdigit(c); });
  if (!ok) throw ValidationError("invalid OEIS id '" + std::string(id) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer(std::string_view s) {
  if (!s.empty() && s[0] == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

[[noreturn]] void parse_error(std::string_view id, std::size_t line, const std::string& what) {
  throw OeisError(OeisError::Kind::parse,
                  "parse error in " + std::string(id) + " line " + std::to_string(line) + ": " + what);
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw OeisError(OeisError::Kind::io, "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const fs::path& target, const std::string& body) {
  std::error_code ec;
  fs::create_directories(target.parent_path(), ec);
  if (ec) throw OeisError(OeisError::Kind::io, "cannot create " + target.parent_path().string());
  std::random_device rd;
  const fs::path tmp = target.parent_path() /
                       (target.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << body;
    out.flush();
    if (!out) throw OeisError(OeisError::Kind::io, "cannot write " + tmp.string());
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw OeisError(OeisError::Kind::io, "cannot rename into " + target.string());
  }
}

}  // namespace

SequenceData parse_bfile(std::string_view id, std::string_view body) {
  SequenceData data{std::string(id), {}};
  std::size_t line_no = 0;
  while (!body.empty()) {
    const auto nl = body.find('\n');
    std::string_view line = body.substr(0, nl);
    body = nl == std::string_view::npos ? std::string_view{} : body.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;

    const auto sp = line.find_first_of(" \t");
    if (sp == std::string_view::npos) parse_error(id, line_no, "expected '<index> <value>'");
    const std::string_view idx = line.substr(0, sp);
    const std::string_view val = trim(line.substr(sp));
    if (!is_integer(idx) || !is_integer(val)) parse_error(id, line_no, "expected '<index> <value>'");

    Term term{std::stoll(std::string(idx)), Nat(std::string(val))};
    if (!data.terms.empty() && term.index != data.terms.back().index + 1)
      parse_error(id, line_no, "index " + std::string(idx) + " does not follow " +
                                   std::to_string(data.terms.back().index));
    data.terms.push_back(std::move(term));
  }
  return data;
}

fs::path default_cache_dir() {
  if (const char* env = std::getenv("TRIMULT_OEIS_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return fs::path(xdg) / "trimult" / "oeis";
  if (const char* home = std::getenv("HOME"); home && *home)
    return fs::path(home) / ".cache" / "trimult" / "oeis";
  return fs::path(".trimult-cache") / "oeis";
}

Client::Client(ClientOptions options) : opts_(std::move(options)) {}

fs::path Client::cache_path(const std::string& id) const {
  check_id(id);
  return opts_.cache_dir / (id + ".txt");
}

bool Client::cached(const std::string& id) const { return fs::is_regular_file(cache_path(id)); }

SequenceData Client::fetch_bfile(const std::string& id) const {
  const fs::path path = cache_path(id);
  if (fs::is_regular_file(path)) return parse_bfile(id, read_file(path));
  if (opts_.offline)
    throw OeisError(OeisError::Kind::offline_uncached,
                    "offline and uncached: " + id + " not in " + opts_.cache_dir.string());

  httplib::Client http(opts_.base_url);
  const auto secs = static_cast<time_t>(opts_.timeout.count());
  http.set_connection_timeout(secs);
  http.set_read_timeout(secs);
  http.set_follow_location(true);
  const std::string url_path = "/b" + id.substr(1) + ".txt";
  const auto res = http.Get(url_path);
  if (!res)
    throw OeisError(OeisError::Kind::network,
                    "GET " + opts_.base_url + url_path + " failed: " + httplib::to_string(res.error()));
  if (res->status != 200)
    throw OeisError(OeisError::Kind::network,
                    "GET " + opts_.base_url + url_path + " returned HTTP " + std::to_string(res->status));

  SequenceData data = parse_bfile(id, res->body);
  write_atomic(path, res->body);
  return data;
}

bool CrosscheckReport::ok() const {
  return !roles.empty() && std::all_of(roles.begin(), roles.end(), [](const RoleReport& r) { return r.ok; });
}

namespace {

std::vector<Nat> positive_terms(const std::vector<Solution>& sols, Role role) {
  std::vector<Nat> out;
  for (const Solution& s : sols) {
    const Nat& v = role == Role::t ? s.t : role == Role::xi ? s.xi : role == Role::T_t ? s.T_t : s.T_xi;
    if (v > 0) out.push_back(v);
  }
  return out;
}

}  // namespace

CrosscheckReport crosscheck(const Client& client, std::uint64_t k, std::size_t count) {
  const auto refs = refs_for(k);
  const RecurrenceSpec spec = make_spec(Multiplier(k));
  const auto sols = sequence(spec, count + 1);

  CrosscheckReport rep{k, count, {}};
  for (const SequenceRef& ref : refs) {
    const SequenceData data = client.fetch_bfile(ref);
    RoleReport rr;
    rr.ref = ref;
    std::vector<Nat> published;
    for (const Term& t : data.terms) {
      if (published.empty() && t.value <= 0) continue;
      if (published.empty()) rr.published_index = t.index;
      published.push_back(t.value);
    }
    rr.published_positive = published.size();

    const auto computed = positive_terms(sols, ref.role);
    const std::size_t n = std::min({count, published.size(), computed.size()});
    bool all = n > 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool m = published[i] == computed[i];
      all = all && m;
      rr.terms.push_back({i, published[i], computed[i], m});
    }
    rr.ok = all;
    for (Role other : {Role::t, Role::xi, Role::T_t, Role::T_xi}) {
      const auto alt = positive_terms(sols, other);
      if (n > 0 && std::equal(alt.begin(), alt.begin() + static_cast<std::ptrdiff_t>(n), published.begin()))
        rr.content_matches.push_back(other);
    }
    rep.roles.push_back(std::move(rr));
  }
  return rep;
}

}  // namespace trimult::oeis
