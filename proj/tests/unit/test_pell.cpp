#include <doctest.h>

#include "oracle.hpp"
#include "trimult/pell.hpp"

using namespace trimult;
using trimult::pell::QuadInt;

namespace {

Int norm(const QuadInt& e, std::uint64_t D) { return e.x * e.x - D * e.y * e.y; }

// Solutions of x^2 - D y^2 = N with 0 <= y <= y_max by scanning y.
std::vector<QuadInt> scan(std::uint64_t D, long long N, std::uint64_t y_max) {
  std::vector<QuadInt> out;
  for (std::uint64_t y = 0; y <= y_max; ++y) {
    const __int128 rhs = static_cast<__int128>(D) * y * y + N;
    if (rhs < 0) continue;
    const auto x = oracle::isqrt(static_cast<oracle::u128>(rhs));
    if (static_cast<__int128>(x * x) == rhs) out.push_back({Int(oracle::to_string(x)), Int(y)});
  }
  return out;
}

}  // namespace

TEST_CASE("fundamental unit") {
  CHECK(pell::fundamental_unit(2) == QuadInt{3, 2});
  CHECK(pell::fundamental_unit(7) == QuadInt{8, 3});
  CHECK(pell::fundamental_unit(13) == QuadInt{649, 180});
  CHECK(pell::fundamental_unit(61) == QuadInt{Int("1766319049"), Int("226153980")});
  CHECK(pell::fundamental_unit(109) == QuadInt{Int("158070671986249"), Int("15140424455100")});
  for (std::uint64_t D : oracle::non_squares(2, 300)) {
    const auto u = pell::fundamental_unit(D);
    REQUIRE(norm(u, D) == 1);
    REQUIRE(u.y > 0);
  }
}

TEST_CASE("class representatives solve the norm equation") {
  for (std::uint64_t D : oracle::non_squares(2, 200)) {
    for (long long N : {1LL - static_cast<long long>(D), -1LL, 4LL, -7LL, 12LL}) {
      for (const auto& r : pell::class_representatives(D, N)) REQUIRE(norm(r, D) == N);
    }
  }
}

TEST_CASE("enumeration agrees with a direct scan") {
  for (std::uint64_t D : oracle::non_squares(2, 80)) {
    for (long long N : {1LL - static_cast<long long>(D), -1LL, 4LL, -7LL, 12LL, 1LL}) {
      const auto reps = pell::class_representatives(D, N);
      const auto unit = pell::fundamental_unit(D);
      const auto got = pell::solutions_up_to(D, reps, unit, 3000);
      const auto want = scan(D, N, 3000);
      INFO("D=" << D << " N=" << N);
      REQUIRE(got == want);
    }
  }
}
