#include "trimult/pell.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace trimult::pell {
namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int abs_of(const Int& v) { return v < 0 ? Int(-v) : v; }

// Multiply by the unit (forward) or its inverse (backward).
QuadInt step(const QuadInt& e, const QuadInt& u, std::uint64_t D, bool forward) {
  if (forward) return {e.x * u.x + D * e.y * u.y, e.y * u.x + e.x * u.y};
  return {e.x * u.x - D * e.y * u.y, e.y * u.x - e.x * u.y};
}

}  // namespace

QuadInt fundamental_unit(std::uint64_t D) {
  const Int a0 = isqrt(Nat(D));
  Int m = 0, d = 1, a = a0;
  Int p_prev = 1, p = a0;
  Int q_prev = 0, q = 1;
  while (p * p - D * q * q != 1) {
    m = d * a - m;
    d = (D - m * m) / d;
    a = (a0 + m) / d;
    Int p_next = a * p + p_prev;
    Int q_next = a * q + q_prev;
    p_prev = std::move(p);
    p = std::move(p_next);
    q_prev = std::move(q);
    q = std::move(q_next);
  }
  return {p, q};
}

std::vector<QuadInt> class_representatives(std::uint64_t D, const Int& N) {
  std::vector<QuadInt> reps;
  const Int root = isqrt(Nat(D));
  const Int absN = abs_of(N);
  for (Int f = 1; f * f <= absN; ++f) {
    if (N % (f * f) != 0) continue;
    const Int m = N / (f * f);
    const Int am = abs_of(m);
    const std::int64_t am64 = am.convert_to<std::int64_t>();
    const std::int64_t Dmod = static_cast<std::int64_t>(D % static_cast<std::uint64_t>(am64));
    for (std::int64_t z = -((am64 - 1) / 2); z <= am64 / 2; ++z) {
      // z^2 == D (mod |m|), computed without overflow for |z| < 2^31.
      const std::int64_t zr = ((z % am64) + am64) % am64;
      const auto zz = static_cast<std::int64_t>((static_cast<__int128>(zr) * zr) % am64);
      if (zz != Dmod) continue;

      // Complete quotients (P_i + sqrt(D)) / Q_i with convergents p_i / q_i.
      // G_{i-1} = Q_0 p_{i-1} - P_0 q_{i-1} satisfies
      // G_{i-1}^2 - D q_{i-1}^2 = (-1)^i Q_i Q_0.
      Int P = z, Q = am;
      Int p_prev2 = 0, p_prev = 1;
      Int q_prev2 = 1, q_prev = 0;
      std::set<std::tuple<Int, Int, int>> seen;
      for (int i = 0;; ++i) {
        const Int G = am * p_prev - Int(z) * q_prev;
        const Int signed_q = (i % 2 == 0) ? Q : Int(-Q);
        if (signed_q * am == m) reps.push_back({f * G, f * q_prev});
        if (!seen.emplace(P, Q, i % 2).second) break;
        const Int a = floor_div(P + root + (Q < 0 ? 1 : 0), Q);
        Int p_next = a * p_prev + p_prev2;
        Int q_next = a * q_prev + q_prev2;
        p_prev2 = std::move(p_prev);
        p_prev = std::move(p_next);
        q_prev2 = std::move(q_prev);
        q_prev = std::move(q_next);
        P = a * Q - P;
        Q = (D - P * P) / Q;
      }
    }
  }
  return reps;
}

std::vector<QuadInt> solutions_up_to(std::uint64_t D, const std::vector<QuadInt>& reps,
                                     const QuadInt& unit, const Int& y_max) {
  std::set<std::pair<Int, Int>> found;  // ordered by |y| first
  for (const QuadInt& rep : reps) {
    for (int sx : {1, -1}) {
      for (int sy : {1, -1}) {
        QuadInt e{rep.x * sx, rep.y * sy};
        // Move to the member of smallest |y| in the class.
        for (;;) {
          QuadInt back = step(e, unit, D, false);
          if (abs_of(back.y) >= abs_of(e.y)) break;
          e = std::move(back);
        }
        for (bool forward : {true, false}) {
          QuadInt w = e;
          while (abs_of(w.y) <= y_max) {
            found.emplace(abs_of(w.y), abs_of(w.x));
            w = step(w, unit, D, forward);
          }
        }
      }
    }
  }
  std::vector<QuadInt> out;
  out.reserve(found.size());
  for (const auto& [y, x] : found) out.push_back({x, y});
  return out;
}

}  // namespace trimult::pell
