#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "rankforge/torsion.hpp"

using namespace rankforge;

namespace {

// Independent torsion oracle for y^2 = x^3 + dx, small |d|. Lutz-Nagell:
// torsion points are integral with y = 0 or y^2 | 4|d|^3; for y != 0 the
// x-coordinate divides y^2 because x(x^2 + d) = y^2. Candidates count only
// if some multiple n <= 12 hits infinity.
bool oracle_is_torsion(const WeierstrassCurve& curve, const CurvePoint& p) {
  CurvePoint q = p;
  for (int n = 2; n <= 12; ++n) {
    q = detail::add_unchecked(curve, q, p);
    if (q.is_infinity()) return true;
  }
  return false;
}

std::vector<std::pair<long, int>> factor_small(long n) {
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<long> divisors_from(const std::vector<std::pair<long, int>>& fac) {
  std::vector<long> out{1};
  for (const auto& [p, e] : fac) {
    std::vector<long> next;
    long pk = 1;
    for (int k = 0; k <= e; ++k) {
      for (long v : out) next.push_back(v * pk);
      pk *= p;
    }
    out = std::move(next);
  }
  return out;
}

TorsionClass oracle_classify(long d) {
  const WeierstrassCurve curve{Int(d), Int(0)};
  std::set<std::pair<long, long>> points;
  points.insert({0, 0});  // always 2-torsion

  // y = 0: x^2 = -d
  if (d < 0 && is_perfect_square(Int(-d))) {
    const long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(-d))));
    points.insert({r, 0});
    points.insert({-r, 0});
  }

  // y != 0: enumerate y with y^2 | 4|d|^3, then x over the divisors of y^2
  auto dfac = factor_small(std::labs(d));
  for (auto& [p, e] : dfac) e *= 3;
  dfac.push_back({2, 2});
  std::vector<long> ys{1};
  for (const auto& [p, e] : dfac) {
    std::vector<long> next;
    long pk = 1;
    for (int k = 0; k <= e / 2; ++k) {
      for (long v : ys) next.push_back(v * pk);
      pk *= p;
    }
    ys = std::move(next);
  }
  bool has_order_four = false;
  std::set<long> seen_y(ys.begin(), ys.end());
  for (long y : seen_y) {
    const Int y2 = Int(y) * y;
    for (long x : divisors_from(factor_small(y * y))) {
      for (long sx : {x, -x}) {
        if (Int(sx) * sx * sx + Int(d) * sx != y2) continue;
        const CurvePoint p(Rat(sx), Rat(y));
        if (!oracle_is_torsion(curve, p)) continue;
        points.insert({sx, y});
        points.insert({sx, -y});
        has_order_four = true;  // y != 0 on y^2 = x^3 + dx means order 4 here
      }
    }
  }

  const std::size_t order = points.size() + 1;  // plus infinity
  if (order == 4 && has_order_four) return TorsionClass::z4;
  if (order == 4) return TorsionClass::z2xz2;
  if (order == 2) return TorsionClass::z2;
  return TorsionClass::unknown;  // would contradict the trichotomy
}

bool fourth_power_free_small(long d) {
  const long n = std::labs(d);
  for (long p = 2; p * p * p * p <= n; ++p)
    if (n % (p * p * p * p) == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("classify trichotomy examples") {
  CHECK(classify(Int(4)) == TorsionClass::z4);
  CHECK(classify(Int(-1)) == TorsionClass::z2xz2);
  CHECK(classify(Int(3)) == TorsionClass::z2);
  // -126878400 = -97900 * 6^4 and 97900 = 2^2 5^2 11 89 is not a square
  CHECK(classify(Int("-126878400")) == TorsionClass::z2);
  CHECK(classify(Int(64)) == TorsionClass::z4);  // 64 = 4 * 2^4
  CHECK_THROWS_WITH_AS(classify(Int(0)), doctest::Contains("ZeroCoefficient"), Error);
}

TEST_CASE("classify agrees with the direct torsion search") {
  std::mt19937_64 rng(23);
  int checked = 0;
  while (checked < 200) {
    long d = static_cast<long>(rng() % 20001) - 10000;
    if (d == 0 || !fourth_power_free_small(d)) continue;
    ++checked;
    const TorsionClass direct = oracle_classify(d);
    REQUIRE(direct != TorsionClass::unknown);
    CHECK(classify(Int(d)) == direct);
  }
}

TEST_CASE("full 2-torsion iff -d is a perfect square") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    long d = static_cast<long>(rng() % 20001) - 10000;
    if (d == 0 || d == 4 || !fourth_power_free_small(d)) continue;
    const bool full_two_torsion = d < 0 && is_perfect_square(Int(-d));
    CHECK((classify(Int(d)) == TorsionClass::z2xz2) == full_two_torsion);
  }
}

TEST_CASE("quartic twist invariance") {
  std::mt19937_64 rng(31);
  const long scales[] = {2, 3, 5};
  int checked = 0;
  while (checked < 100) {
    long d = static_cast<long>(rng() % 20001) - 10000;
    if (d == 0 || !fourth_power_free_small(d)) continue;
    ++checked;
    const TorsionClass base = classify(Int(d));
    for (long m : scales)
      CHECK(classify(Int(d) * pow_int(Int(m), 4)) == base);
  }
}

TEST_CASE("classification degrades to Unknown, never guesses") {
  Int p, q;
  mpz_nextprime(p.get_mpz_t(), Int("1000000000000000000000007").get_mpz_t());
  mpz_nextprime(q.get_mpz_t(), Int("7000000000000000000000007").get_mpz_t());
  CHECK(classify(p * q, Budget{20}) == TorsionClass::unknown);
}

TEST_CASE("diagnostics") {
  const FamilyInstance seed = build_instance(QuarticSolution{Int(21), Int(20), Int(7), Int(19)});
  const TorsionDiagnostics d1 = diagnostics(seed);
  CHECK(d1.s_real);
  CHECK_FALSE(d1.four_s2_is_square);  // 4S^2 = 360^2 * 979
  CHECK(d1.torsion == TorsionClass::z2);

  const FamilyInstance pos =
      build_instance(QuarticSolution{Int(607), Int(951), Int(1640), Int(1999)});
  const TorsionDiagnostics d2 = diagnostics(pos);
  CHECK_FALSE(d2.s_real);
  CHECK(d2.torsion == TorsionClass::z2);

  // the Remark tuple (A,D,B,C) = (1661081, 988521, 336280, 1437599)
  const FamilyInstance remark = build_instance(
      QuarticSolution{Int(1661081), Int(336280), Int(1437599), Int(988521)});
  CHECK_FALSE(diagnostics(remark).s_real);
}
