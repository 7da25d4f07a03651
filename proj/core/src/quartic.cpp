#include "rankforge/quartic.hpp"

#include <algorithm>
#include <set>

namespace rankforge {

namespace {

Int quartic_form(const Int& a, const Int& b, const Int& c, const Int& d) {
  return pow_int(a, 4) + pow_int(d, 4) - 2 * (pow_int(b, 4) + pow_int(c, 4));
}

}  // namespace

bool verify_solution(const Int& a, const Int& b, const Int& c, const Int& d) {
  return quartic_form(a, b, c, d) == 0;
}

bool QuarticSolution::verified() const { return verify_solution(a, b, c, d); }

bool QuarticSolution::degenerate() const {
  if (a == 0 || b == 0 || c == 0 || d == 0) return true;
  return mpz_cmpabs(b.get_mpz_t(), c.get_mpz_t()) == 0 ||
         mpz_cmpabs(a.get_mpz_t(), d.get_mpz_t()) == 0;
}

QuarticSolution QuarticSolution::reduced() const {
  const std::vector<Int> r = gcd_reduce({a, b, c, d});
  return QuarticSolution{abs(r[0]), abs(r[1]), abs(r[2]), abs(r[3])};
}

std::array<Int, 4> QuarticSolution::dedup_key() const {
  Int p = abs(a), q = abs(d), r = abs(b), s = abs(c);
  if (p > q) std::swap(p, q);
  if (r > s) std::swap(r, s);
  return {p, q, r, s};
}

bool SurfacePoint::on_surface() const {
  return pow_rat(x, 4) + pow_rat(y, 4) - 2 * pow_rat(u, 4) - 2 == 0;
}

const WeierstrassCurve& helper_curve() {
  static const WeierstrassCurve curve{Int(-36), Int(0)};
  return curve;
}

const CurvePoint& helper_generator() {
  static const CurvePoint g{Rat(-3), Rat(9)};
  return g;
}

QuarticSolution parametrized_solution(unsigned n, bool reduce) {
  if (n == 0) fail(Errc::torsion_index, "parametrized_solution needs n >= 1");
  DivisionPolyContext ctx(helper_curve(), helper_generator());
  const DivisionPolyValues v = ctx.eval(n);
  if (v.psi == 0) fail(Errc::torsion_index, "n*(-3,9) is 2-torsion or infinity");
  const Rat& phi = v.phi;
  const Rat& psi = v.psi;
  const Rat& omega = v.omega;

  const Rat phi2 = phi * phi;
  const Rat phi3 = phi2 * phi;
  const Rat phi4 = phi2 * phi2;
  const Rat psi2 = psi * psi;
  const Rat psi4 = psi2 * psi2;
  const Rat psi5 = psi4 * psi;
  const Rat psi6 = psi4 * psi2;
  const Rat psi8 = psi4 * psi4;

  const Rat symmetric = 144 * omega * psi5 + 4 * phi2 * omega * psi;
  const Rat skew = phi4 + 1296 * psi8 + 864 * phi * psi6 + 72 * phi2 * psi4;
  const Rat a = skew - 24 * phi3 * psi2 + symmetric;
  const Rat d = -skew + 24 * phi3 * psi2 + symmetric;
  const Rat b = 4 * (phi2 + 36 * psi4) * omega * psi;
  const Rat c = (phi2 - 36 * psi4 - 12 * phi * psi2) * (phi2 - 36 * psi4 + 12 * phi * psi2);

  for (const Rat* r : {&a, &b, &c, &d})
    if (r->get_den() != 1)
      fail(Errc::invariant_break, "parametrized solution is not integral");

  QuarticSolution s{a.get_num(), b.get_num(), c.get_num(), d.get_num()};
  if (!s.verified()) fail(Errc::invariant_break, "parametrized tuple fails the quartic");
  return reduce ? s.reduced() : s;
}

SurfacePoint to_surface_point(const QuarticSolution& s) {
  if (s.c == 0) fail(Errc::degenerate_c, "surface chart requires C != 0");
  return SurfacePoint{make_rat(s.a, s.c), make_rat(s.d, s.c), make_rat(s.b, s.c)};
}

QuarticSolution to_integer_solution(const SurfacePoint& p) {
  Int l;
  mpz_lcm(l.get_mpz_t(), p.x.get_den().get_mpz_t(), p.y.get_den().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.u.get_den().get_mpz_t());
  const Int a = p.x.get_num() * (l / p.x.get_den());
  const Int d = p.y.get_num() * (l / p.y.get_den());
  const Int b = p.u.get_num() * (l / p.u.get_den());
  const std::vector<Int> r = gcd_reduce({a, b, l, d});
  QuarticSolution s{r[0], r[1], r[2], r[3]};
  if (!s.verified()) fail(Errc::invariant_break, "surface point maps to a non-solution");
  return s;
}

std::vector<TangentDirection> tangent_directions(const SurfacePoint& p0) {
  if (!p0.on_surface()) fail(Errc::invariant_break, "base point off the surface");
  const Rat &x0 = p0.x, &y0 = p0.y, &u0 = p0.u;
  if (u0 == 0) fail(Errc::degenerate_direction, "u0 = 0 leaves S = 0 unsolvable for c");

  // Line (x,y,u) = (a,b,c) t + p0, a normalized to 1. The t-coefficient of
  // the substituted surface polynomial is S = 4(a x0^3 + b y0^3 - 2c u0^3);
  // S = 0 gives c = (x0^3 + beta y0^3) / (2 u0^3) with beta = b/a. The t^2
  // coefficient R = 6(x0^2 + beta^2 y0^2 - 2 c^2 u0^2) = 0 then reduces to
  //   (2 u0^4 y0^2 - y0^6) beta^2 - 2 x0^3 y0^3 beta + (2 u0^4 x0^2 - x0^6) = 0.
  const Rat u04 = pow_rat(u0, 4);
  const Rat qa = 2 * u04 * y0 * y0 - pow_rat(y0, 6);
  const Rat qb = -2 * pow_rat(x0, 3) * pow_rat(y0, 3);
  const Rat qc = 2 * u04 * x0 * x0 - pow_rat(x0, 6);

  std::vector<Rat> roots;
  if (qa == 0) {
    if (qb == 0) fail(Errc::no_rational_direction, "R = 0 is degenerate at this point");
    roots.push_back(-qc / qb);
  } else {
    const Rat disc = qb * qb - 4 * qa * qc;
    const auto root = exact_sqrt(disc);
    if (!root) fail(Errc::no_rational_direction, "tangent quadratic has irrational roots");
    roots.push_back((-qb + *root) / (2 * qa));
    if (*root != 0) roots.push_back((-qb - *root) / (2 * qa));
  }

  std::vector<TangentDirection> out;
  for (const Rat& beta : roots) {
    const Rat c = (pow_rat(x0, 3) + beta * pow_rat(y0, 3)) / (2 * pow_rat(u0, 3));
    const Rat m = 1 + pow_rat(beta, 4) - 2 * pow_rat(c, 4);
    if (m == 0) continue;  // line meets the surface only at p0
    out.push_back(TangentDirection{Rat(1), beta, c});
  }
  if (out.empty()) fail(Errc::degenerate_direction, "every tangent direction has M = 0");
  return out;
}

std::vector<SurfacePoint> descend_step(const SurfacePoint& p0) {
  std::vector<TangentDirection> dirs;
  try {
    dirs = tangent_directions(p0);
  } catch (const Error& e) {
    if (e.code() == Errc::no_rational_direction || e.code() == Errc::degenerate_direction)
      return {};
    throw;
  }
  std::vector<SurfacePoint> out;
  for (const TangentDirection& dir : dirs) {
    // M, N are the t^4 and t^3 coefficients of the substituted line, a = 1
    const Rat m = 1 + pow_rat(dir.b, 4) - 2 * pow_rat(dir.c, 4);
    const Rat n =
        4 * (p0.x + pow_rat(dir.b, 3) * p0.y - 2 * pow_rat(dir.c, 3) * p0.u);
    const Rat t = -n / m;
    SurfacePoint p{dir.a * t + p0.x, dir.b * t + p0.y, dir.c * t + p0.u};
    if (!p.on_surface()) fail(Errc::invariant_break, "descended point off the surface");
    if (p == p0) continue;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<QuarticSolution> descend_chain(const QuarticSolution& seed, unsigned steps) {
  if (seed.degenerate()) fail(Errc::degenerate_solution, "descent needs a nondegenerate seed");
  if (!seed.verified()) fail(Errc::invariant_break, "descent seed fails the quartic");

  std::set<std::array<Int, 4>> seen;
  seen.insert(seed.dedup_key());
  std::vector<QuarticSolution> out;
  SurfacePoint cur = to_surface_point(seed);
  for (unsigned step = 0; step < steps; ++step) {
    const std::vector<SurfacePoint> next = descend_step(cur);
    const SurfacePoint* advance = nullptr;
    for (const SurfacePoint& p : next) {
      QuarticSolution s = to_integer_solution(p);
      if (!seen.insert(s.dedup_key()).second) continue;
      out.push_back(std::move(s));
      if (advance == nullptr) advance = &p;
    }
    if (advance == nullptr)
      fail(Errc::chain_stuck, "descent produced no new solution at step " +
                                  std::to_string(step + 1));
    cur = *advance;
  }
  return out;
}

}  // namespace rankforge
