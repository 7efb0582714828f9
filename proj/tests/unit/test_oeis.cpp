#include <doctest.h>

#include <cstdlib>
#include <set>

#include "fixture_server.hpp"
#include "trimult/errors.hpp"
#include "trimult/oeis.hpp"

using namespace trimult;
namespace fs = std::filesystem;

namespace {

using fixture::slurp;
using FixtureServer = fixture::Server;
using fixture::TempDir;

oeis::Client client_for(const TempDir& dir, const FixtureServer& srv, bool offline = false) {
  oeis::ClientOptions opts;
  opts.cache_dir = dir.path;
  opts.base_url = srv.url();
  opts.offline = offline;
  opts.timeout = std::chrono::seconds(5);
  return oeis::Client(opts);
}

}  // namespace

TEST_CASE("published reference table") {
  const auto& refs = oeis::published_refs();
  CHECK(refs.size() == 24);
  std::set<std::string> ids;
  for (const auto& r : refs) ids.insert(r.id);
  CHECK(ids.size() == 24);
  const auto k2 = oeis::refs_for(2);
  REQUIRE(k2.size() == 4);
  CHECK(k2[0].id == "A053141");
  CHECK(k2[1].id == "A001652");
  CHECK(k2[2].id == "A075528");
  CHECK(k2[3].id == "A029549");
  const auto k8 = oeis::refs_for(8);
  CHECK(k8[0].id == "A336623");
  CHECK(k8[1].id == "A336625");
  CHECK(k8[2].id == "A336624");
  CHECK(k8[3].id == "A336626");
  CHECK(oeis::refs_for(5)[0].id == "A077259");
  CHECK_THROWS_AS(oeis::refs_for(9), ValidationError);
}

TEST_CASE("parse_bfile") {
  const auto d = oeis::parse_bfile("A000001", "# comment\n\n0 0\r\n1 3\n2 20\n  3   119  \n");
  REQUIRE(d.terms.size() == 4);
  CHECK(d.terms[0].index == 0);
  CHECK(d.terms[3].value == 119);

  const auto neg = oeis::parse_bfile("A000002", "-1 5\n0 -7\n1 123456789012345678901234567890\n");
  CHECK(neg.terms[0].index == -1);
  CHECK(neg.terms[1].value == -7);
  CHECK(neg.terms[2].value == Nat("123456789012345678901234567890"));

  CHECK(oeis::parse_bfile("A000003", "").terms.empty());
  CHECK_THROWS_WITH_AS(oeis::parse_bfile("A000004", "0 0\nabc\n"), doctest::Contains("line 2"), OeisError);
  CHECK_THROWS_WITH_AS(oeis::parse_bfile("A000005", "0 0\n2 4\n"), doctest::Contains("line 2"), OeisError);
  CHECK_THROWS_AS(oeis::parse_bfile("A000006", "0 x\n"), OeisError);
  CHECK_THROWS_AS(oeis::parse_bfile("A000007", "0\n"), OeisError);
  try {
    oeis::parse_bfile("A000008", "1 1\n\n# c\nbad line\n");
  } catch (const OeisError& e) {
    CHECK(e.kind() == OeisError::Kind::parse);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("ids are validated") {
  CHECK_NOTHROW(oeis::check_id("A001652"));
  CHECK_THROWS_AS(oeis::check_id("A1652"), ValidationError);
  CHECK_THROWS_AS(oeis::check_id("B001652"), ValidationError);
  CHECK_THROWS_AS(oeis::check_id("A00165x"), ValidationError);
}

TEST_CASE("cache directory from the environment") {
  const char* old = std::getenv("TRIMULT_OEIS_CACHE");
  const std::string saved = old ? old : "";
  setenv("TRIMULT_OEIS_CACHE", "/tmp/trimult-cache-test", 1);
  CHECK(oeis::default_cache_dir() == fs::path("/tmp/trimult-cache-test"));
  unsetenv("TRIMULT_OEIS_CACHE");
  setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
  CHECK(oeis::default_cache_dir() == fs::path("/tmp/xdg/trimult/oeis"));
  if (old) setenv("TRIMULT_OEIS_CACHE", saved.c_str(), 1);
}

TEST_CASE("fetch, cache and offline round trip") {
  FixtureServer srv;
  TempDir dir;
  const auto online = client_for(dir, srv);
  const auto first = online.fetch_bfile("A001652");
  CHECK(srv.hits() == 1);
  REQUIRE(first.terms.size() == 7);
  CHECK(first.terms[3].value == 119);
  CHECK(online.cached("A001652"));
  CHECK(slurp(online.cache_path("A001652")) == slurp(fs::path(TRIMULT_FIXTURE_DIR) / "oeis" / "A001652.txt"));

  // No temporary files survive the atomic write.
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir.path)) {
    ++files;
    CHECK(e.path().extension() == ".txt");
  }
  CHECK(files == 1);

  const auto again = online.fetch_bfile("A001652");
  CHECK(srv.hits() == 1);
  const auto offline = client_for(dir, srv, true).fetch_bfile("A001652");
  CHECK(offline == first);
  CHECK(again == first);
}

TEST_CASE("offline and uncached") {
  FixtureServer srv;
  TempDir dir;
  try {
    client_for(dir, srv, true).fetch_bfile("A001652");
    FAIL("expected an error");
  } catch (const OeisError& e) {
    CHECK(e.kind() == OeisError::Kind::offline_uncached);
  }
  CHECK(srv.hits() == 0);
}

TEST_CASE("network failures are not cached") {
  FixtureServer srv;
  TempDir dir;
  const auto c = client_for(dir, srv);
  try {
    c.fetch_bfile("A999999");
    FAIL("expected an error");
  } catch (const OeisError& e) {
    CHECK(e.kind() == OeisError::Kind::network);
  }
  CHECK_FALSE(c.cached("A999999"));

  oeis::ClientOptions dead;
  dead.cache_dir = dir.path;
  dead.base_url = "http://127.0.0.1:1";
  dead.timeout = std::chrono::seconds(2);
  CHECK_THROWS_AS(oeis::Client(dead).fetch_bfile("A001652"), OeisError);
}

TEST_CASE("malformed bodies are rejected before caching") {
  TempDir dir;
  httplib::Server server;
  server.Get(R"(/b\d{6}\.txt)", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(slurp(fs::path(TRIMULT_FIXTURE_DIR) / "oeis" / "malformed.txt"), "text/plain");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread th([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  oeis::ClientOptions opts;
  opts.cache_dir = dir.path;
  opts.base_url = "http://127.0.0.1:" + std::to_string(port);
  const oeis::Client c(opts);
  CHECK_THROWS_WITH_AS(c.fetch_bfile("A000010"), doctest::Contains("line 4"), OeisError);
  CHECK_FALSE(c.cached("A000010"));
  server.stop();
  th.join();
}

TEST_CASE("crosscheck against fixtures") {
  FixtureServer srv;
  TempDir dir;
  const auto c = client_for(dir, srv);

  const auto k2 = oeis::crosscheck(c, 2, 6);
  CHECK(k2.ok());
  REQUIRE(k2.roles.size() == 4);
  for (const auto& r : k2.roles) {
    CHECK(r.terms.size() == 6);
    CHECK(r.ok);
  }
  CHECK(k2.roles[0].published_index == 1);
  CHECK(k2.roles[2].published_index == 1);  // file starts at index 1

  // Fewer published terms than requested: compare what is there.
  const auto k2_long = oeis::crosscheck(c, 2, 10);
  CHECK(k2_long.ok());
  CHECK(k2_long.roles[0].terms.size() == 6);

  const auto k7 = oeis::crosscheck(c, 7, 6);
  CHECK_FALSE(k7.ok());
  const auto& t_role = k7.roles[0];
  CHECK(t_role.ref.role == oeis::Role::t);
  CHECK_FALSE(t_role.ok);
  CHECK(t_role.content_matches == std::vector<oeis::Role>{oeis::Role::xi});
  CHECK(k7.roles[1].ok);
  CHECK(k7.roles[1].terms.back().computed == 3689);
  const int hits = srv.hits();

  const auto offline = oeis::crosscheck(client_for(dir, srv, true), 2, 6);
  CHECK(srv.hits() == hits);
  CHECK(offline.ok());
}
