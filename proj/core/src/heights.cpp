#include "rankforge/heights.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace rankforge {

const char* to_string(Normalization n) {
  switch (n) {
    case Normalization::x_height: return "x-height";
    case Normalization::half_x_height: return "half-x-height";
  }
  return "x-height";
}

namespace {

// ---- small exact polynomial helpers (ascending coefficients) ----

using Poly = std::vector<Rat>;

int degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

// r -= q * g with q = lead(r)/lead(g) * t^(deg r - deg g); returns q's pieces
void poly_divstep(Poly& r, const Poly& g, Poly& q) {
  const int dr = degree(r), dg = degree(g);
  const Rat c = r[static_cast<std::size_t>(dr)] / g[static_cast<std::size_t>(dg)];
  const int shift = dr - dg;
  if (static_cast<int>(q.size()) < shift + 1) q.resize(static_cast<std::size_t>(shift) + 1);
  q[static_cast<std::size_t>(shift)] += c;
  for (int i = 0; i <= dg; ++i)
    r[static_cast<std::size_t>(i + shift)] -= c * g[static_cast<std::size_t>(i)];
}

Poly poly_mul(const Poly& f, const Poly& g) {
  if (degree(f) < 0 || degree(g) < 0) return {};
  Poly out(f.size() + g.size() - 1, Rat(0));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  return out;
}

Poly poly_sub(Poly f, const Poly& g) {
  if (f.size() < g.size()) f.resize(g.size(), Rat(0));
  for (std::size_t i = 0; i < g.size(); ++i) f[i] -= g[i];
  return f;
}

// Bezout cofactors: s*f + t*g = 1 for coprime f, g.
void poly_xgcd_unit(const Poly& f, const Poly& g, Poly& s, Poly& t) {
  Poly r0 = f, r1 = g;
  Poly s0 = {Rat(1)}, s1 = {Rat(0)};
  Poly t0 = {Rat(0)}, t1 = {Rat(1)};
  while (degree(r1) >= 0) {
    Poly q;
    Poly rem = r0;
    while (degree(rem) >= degree(r1) && degree(r1) >= 0 && degree(rem) >= 0)
      poly_divstep(rem, r1, q);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    Poly t2 = poly_sub(t0, poly_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (degree(r0) != 0)
    fail(Errc::invariant_break, "duplication polynomials are not coprime");
  const Rat unit = r0[0];
  s = s0;
  t = t0;
  for (Rat& c : s) c /= unit;
  for (Rat& c : t) c /= unit;
}

double one_norm(const Poly& f) {
  Rat n(0);
  for (const Rat& c : f) n += abs(c);
  return n.get_d();
}

// N(t) = (t^2 - a)^2 - 8bt, D(t) = 4(t^3 + at + b): the duplication pair with
// x(2P) = N(x)/D(x).
Poly dup_num(const WeierstrassCurve& c) {
  return {Rat(c.a * c.a), Rat(-8 * c.b), Rat(-2 * c.a), Rat(0), Rat(1)};
}
Poly dup_den(const WeierstrassCurve& c) {
  return {Rat(4 * c.b), Rat(4 * c.a), Rat(0), Rat(4)};
}

Poly reversed(const Poly& f, std::size_t deg) {
  Poly out(deg + 1, Rat(0));
  for (std::size_t i = 0; i < f.size() && i <= deg; ++i) out[deg - i] = f[i];
  return out;
}

// sup over the real line of |mu(t)|, mu(t) = log max(|N|,|D|) - 4 log max(1,|t|),
// split over the charts |t| <= 1 and |t| >= 1. Upper bounds come from
// coefficient 1-norms, lower bounds from Bezout identities A N + B D = 1:
// max(|N|,|D|) >= 1/(|A|_1 + |B|_1) on the unit interval.
double mu_sup_bound(const WeierstrassCurve& curve) {
  const Poly n = dup_num(curve), d = dup_den(curve);
  const Poly nr = reversed(n, 4), dr = reversed(d, 4);
  double bound = 1.0;
  {
    Poly s, t;
    poly_xgcd_unit(n, d, s, t);
    bound = std::max(bound, std::log(one_norm(s) + one_norm(t)));
    bound = std::max(bound, std::log(std::max(one_norm(n), one_norm(d))));
  }
  {
    Poly s, t;
    poly_xgcd_unit(nr, dr, s, t);
    bound = std::max(bound, std::log(one_norm(s) + one_norm(t)));
    bound = std::max(bound, std::log(std::max(one_norm(nr), one_norm(dr))));
  }
  return bound * 1.000001 + 1.0;
}

Int discriminant_core(const WeierstrassCurve& c) {
  return 4 * c.a * c.a * c.a + 27 * c.b * c.b;
}

// (sup|mu| + log|Res|)/3 with Res = 2^8 (4a^3 + 27b^2)^2; both the archimedean
// and the gcd-valuation series have tails below tail_constant * 4^-T.
double tail_constant_for(const WeierstrassCurve& curve) {
  const Int core = discriminant_core(curve);
  const double log_res =
      8.0 * std::log(2.0) + 2.0 * static_cast<double>(mpz_sizeinbase(core.get_mpz_t(), 2)) *
                                std::log(2.0);
  return (mu_sup_bound(curve) + log_res) / 3.0 + 1.0;
}

unsigned valuation_cap(const WeierstrassCurve& curve, const Int& p) {
  Int rest;
  const Int core = abs(discriminant_core(curve));
  mp_bitcnt_t v = mpz_remove(rest.get_mpz_t(), core.get_mpz_t(), p.get_mpz_t());
  unsigned cap = 2 * static_cast<unsigned>(v);
  if (p == 2) cap += 8;
  return cap;
}

mpfr_prec_t working_precision(const WeierstrassCurve& curve, const Rat& x0,
                              const HeightOptions& opt) {
  std::size_t digits = std::max(mpz_sizeinbase(curve.a.get_mpz_t(), 10),
                                mpz_sizeinbase(curve.b.get_mpz_t(), 10));
  digits = std::max(digits, mpz_sizeinbase(mpq_numref(x0.get_mpq_t()), 10));
  digits = std::max(digits, mpz_sizeinbase(mpq_denref(x0.get_mpq_t()), 10));
  std::size_t want = 2 * digits + 30;
  if (opt.precision_digits > 0) want = std::max<std::size_t>(want, opt.precision_digits);
  return static_cast<mpfr_prec_t>(std::max<std::size_t>(
      256, static_cast<std::size_t>(static_cast<double>(want) * 3.33) + 64));
}

// log max(1,|x0|) + sum_{n<T} 4^-(n+1) mu(t_n) along the real duplication orbit.
Real arch_series(const WeierstrassCurve& curve, const Rat& x0, unsigned T,
                 mpfr_prec_t prec) {
  const Real a = Real::of(curve.a, prec);
  const Real b = Real::of(curve.b, prec);
  const Real one = Real::of(1L, prec);
  const Real four = Real::of(4L, prec);
  const Real eight = Real::of(8L, prec);
  Real t = Real::of(x0, prec);
  Real total = log(max(one, abs(t)));
  Real w = Real::of(0.25, prec);
  for (unsigned n = 0; n < T; ++n) {
    const Real t2 = t * t;
    Real num = t2 - a;
    num = num * num - eight * b * t;
    const Real den = four * (t2 * t + a * t + b);
    if (den.is_zero())
      fail(Errc::precision_unreachable, "real orbit collapsed onto 2-torsion");
    const Real mu = log(max(abs(num), abs(den))) - four * log(max(one, abs(t)));
    total += w * mu;
    t = num / den;
    w = w / four;
  }
  return total;
}

mp_bitcnt_t residue_valuation(const Int& r, const Int& p, mp_bitcnt_t sentinel) {
  if (r == 0) return sentinel;
  Int rest;
  return mpz_remove(rest.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
}

// sum_{n<T} 4^-(n+1) v_p(gcd(N_n, D_n)) along the p-adic projective orbit,
// tracked mod p^m. Division by the gcd's p-part costs p-adic accuracy, which
// the valuation cap keeps bounded.
Rat padic_gcd_series(const WeierstrassCurve& curve, const Rat& x0, const Int& p,
                     unsigned T, unsigned cap) {
  if (cap == 0) return Rat(0);
  const mp_bitcnt_t mexp = static_cast<mp_bitcnt_t>(T) * cap + cap + 64;
  Int modulus = pow_int(p, static_cast<unsigned long>(mexp));
  Int u, v;
  mpz_mod(u.get_mpz_t(), x0.get_num().get_mpz_t(), modulus.get_mpz_t());
  mpz_mod(v.get_mpz_t(), x0.get_den().get_mpz_t(), modulus.get_mpz_t());
  long accuracy = static_cast<long>(mexp);

  Rat series(0);
  Rat weight(1, 4);
  for (unsigned n = 0; n < T; ++n) {
    Int u2 = u * u % modulus;
    Int v2 = v * v % modulus;
    Int num = u2 - curve.a * v2;
    num = (num * num - 8 * curve.b * u * (v * v2)) % modulus;
    Int den = 4 * v * (u * u2 + curve.a * u * v2 + curve.b * v * v2) % modulus;
    mpz_mod(num.get_mpz_t(), num.get_mpz_t(), modulus.get_mpz_t());
    mpz_mod(den.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
    const mp_bitcnt_t gamma =
        std::min(residue_valuation(num, p, mexp), residue_valuation(den, p, mexp));
    if (gamma > cap)
      fail(Errc::invariant_break, "gcd valuation exceeds the resultant cap");
    accuracy -= static_cast<long>(gamma);
    if (accuracy <= static_cast<long>(cap) + 8)
      fail(Errc::invariant_break, "p-adic accuracy exhausted");
    if (gamma > 0) {
      series += weight * static_cast<unsigned long>(gamma);
      const Int shift = pow_int(p, static_cast<unsigned long>(gamma));
      mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), shift.get_mpz_t());
      mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), shift.get_mpz_t());
    }
    weight /= 4;
    u = std::move(num);
    v = std::move(den);
  }
  return series;
}

unsigned iterations_for(double tail_constant, double tol) {
  const double target = tail_constant / (tol / 2.0);
  unsigned T = 8;
  while (std::pow(4.0, static_cast<double>(T)) < target && T < 2000) ++T;
  return T;
}

HeightValue exact_zero(mpfr_prec_t prec) { return HeightValue{Real(prec), 0.0}; }

}  // namespace

Real naive_height(const CurvePoint& p, mpfr_prec_t prec) {
  if (p.is_infinity()) fail(Errc::infinity_input, "naive height of infinity");
  const Int& num = p.x().get_num();
  const Int& den = p.x().get_den();
  const Int m = (mpz_cmpabs(num.get_mpz_t(), den.get_mpz_t()) >= 0) ? abs(num) : den;
  return log(Real::of(m, prec));
}

bool is_torsion_point(const WeierstrassCurve& curve, const CurvePoint& p) {
  if (p.is_infinity()) return true;
  CurvePoint q = p;
  for (int n = 2; n <= 12; ++n) {
    q = detail::add_unchecked(curve, q, p);
    if (q.is_infinity()) return true;
  }
  return false;
}

HeightContext HeightContext::build(const WeierstrassCurve& curve, std::vector<Int> primes,
                                   bool complete) {
  HeightContext ctx;
  ctx.curve_ = curve;
  ctx.primes_ = std::move(primes);
  ctx.support_complete_ = complete;
  ctx.tail_constant_ = tail_constant_for(curve);
  return ctx;
}

HeightContext HeightContext::for_curve(const WeierstrassCurve& curve, Budget budget,
                                       std::uint64_t seed) {
  if (!curve.valid()) fail(Errc::zero_coefficient, "singular curve");
  const Factorization f = factor(discriminant_core(curve), budget, seed);
  std::set<Int> primes{Int(2)};
  for (const auto& [p, e] : f.factors) primes.insert(p);
  return build(curve, std::vector<Int>(primes.begin(), primes.end()), f.complete);
}

HeightContext HeightContext::for_instance(const FamilyInstance& inst, Budget budget,
                                          std::uint64_t seed) {
  const Int &a = inst.solution.a, &b = inst.solution.b, &c = inst.solution.c;
  const Int a2 = a * a, b2 = b * b, c2 = c * c;
  const std::array<Int, 4> forms = {a2 + b2 + c2, a2 + b2 - c2, a2 + c2 - b2,
                                    b2 + c2 - a2};
  Int product(1);
  for (const Int& f : forms) product *= f;
  if (product != -4 * inst.k) fail(Errc::invariant_break, "Heron forms do not rebuild -4K");

  std::set<Int> primes{Int(2)};
  bool complete = true;
  for (const Int& form : forms) {
    if (form == 0) fail(Errc::degenerate_solution, "degenerate Heron form");
    const Factorization f = factor(form, budget, seed);
    complete = complete && f.complete;
    for (const auto& [p, e] : f.factors) primes.insert(p);
  }
  return build(inst.curve, std::vector<Int>(primes.begin(), primes.end()), complete);
}

HeightValue canonical_height(const HeightContext& ctx, const CurvePoint& p,
                             const HeightOptions& opt) {
  const WeierstrassCurve& curve = ctx.curve();
  if (!on_curve(curve, p)) fail(Errc::off_curve, "height of a point off the curve");
  if (p.is_infinity()) return exact_zero(256);
  if (!ctx.support_complete())
    return canonical_height_doubling(curve, p, opt);
  if (is_torsion_point(curve, p)) return exact_zero(256);

  const Rat& x0 = p.x();
  const mpfr_prec_t prec = working_precision(curve, x0, opt);
  const unsigned T = iterations_for(ctx.tail_constant(), opt.tol);

  Real h = arch_series(curve, x0, T, prec);
  h += log(Real::of(x0.get_den(), prec));
  for (const Int& q : ctx.bad_primes()) {
    const unsigned cap = valuation_cap(curve, q);
    const Rat series = padic_gcd_series(curve, x0, q, T, cap);
    if (series != 0) h -= Real::of(series, prec) * log(Real::of(q, prec));
  }

  double err = ctx.tail_constant() * std::pow(4.0, -static_cast<double>(T)) +
               std::ldexp(1.0, -static_cast<int>(prec / 2));
  if (opt.normalization == Normalization::half_x_height) {
    h = h / Real::of(2L, prec);
    err /= 2.0;
  }
  return HeightValue{std::move(h), err};
}

HeightValue canonical_height_doubling(const WeierstrassCurve& curve, const CurvePoint& p,
                                      const HeightOptions& opt) {
  if (!on_curve(curve, p)) fail(Errc::off_curve, "height of a point off the curve");
  if (p.is_infinity() || is_torsion_point(curve, p)) return exact_zero(256);

  const double tail = tail_constant_for(curve);
  unsigned j = 1;
  while (tail * std::pow(4.0, -static_cast<double>(j)) > opt.tol && j < 64) ++j;

  // size guard: each doubling quadruples the digit count
  const double base_digits = static_cast<double>(
      mpz_sizeinbase(p.x().get_num().get_mpz_t(), 10) +
      mpz_sizeinbase(p.x().get_den().get_mpz_t(), 10) +
      mpz_sizeinbase(curve.a.get_mpz_t(), 10) + mpz_sizeinbase(curve.b.get_mpz_t(), 10) + 8);
  constexpr double kMaxDigits = 40e6;
  if (base_digits * std::pow(4.0, static_cast<double>(j)) > kMaxDigits)
    fail(Errc::precision_unreachable,
         "doubling limit needs " + std::to_string(j) + " doublings; size cap exceeded");

  Rat x = p.x();
  for (unsigned i = 0; i < j; ++i) {
    const Rat x2 = x * x;
    Rat num = x2 - curve.a;
    num = num * num - 8 * curve.b * x;
    const Rat den = 4 * (x2 * x + curve.a * x + curve.b);
    if (den == 0) fail(Errc::invariant_break, "non-torsion orbit reached 2-torsion");
    x = num / den;
  }

  const mpfr_prec_t prec = 320;
  const Int& num = x.get_num();
  const Int& den = x.get_den();
  const Int m = (mpz_cmpabs(num.get_mpz_t(), den.get_mpz_t()) >= 0) ? abs(num) : den;
  Real h = log(Real::of(m, prec));
  mpfr_div_2ui(h.raw(), h.raw(), 2 * j, MPFR_RNDN);

  double err = tail * std::pow(4.0, -static_cast<double>(j)) +
               std::ldexp(1.0, -static_cast<int>(prec / 2));
  if (opt.normalization == Normalization::half_x_height) {
    h = h / Real::of(2L, prec);
    err /= 2.0;
  }
  return HeightValue{std::move(h), err};
}

HeightValue pairing(const HeightContext& ctx, const CurvePoint& p, const CurvePoint& q,
                    const HeightOptions& opt) {
  const CurvePoint sum = add(ctx.curve(), p, q);
  const HeightValue hs = canonical_height(ctx, sum, opt);
  const HeightValue hp = canonical_height(ctx, p, opt);
  const HeightValue hq = canonical_height(ctx, q, opt);
  const mpfr_prec_t prec = std::max(
      {hs.value.precision(), hp.value.precision(), hq.value.precision()});
  Real value = (hs.value - hp.value - hq.value) / Real::of(2L, prec);
  return HeightValue{std::move(value), (hs.err + hp.err + hq.err) / 2.0};
}

namespace detail {

namespace {

Real block_expand(const std::array<std::array<Real, 5>, 5>& m, unsigned row,
                  unsigned colmask, int k, bool permanent) {
  if (static_cast<int>(row) == k) return Real::of(1L, m[0][0].precision());
  Real acc(m[0][0].precision());
  int sign = 1;
  for (int col = 0; col < k; ++col) {
    if (colmask & (1u << col)) continue;
    const Real sub =
        block_expand(m, row + 1, colmask | (1u << col), k, permanent);
    Real term = m[row][static_cast<std::size_t>(col)] * sub;
    if (!permanent && sign < 0) term = -term;
    acc += term;
    sign = -sign;
  }
  return acc;
}

}  // namespace

Real det_leading(const std::array<std::array<Real, 5>, 5>& m, int k) {
  return block_expand(m, 0, 0, k, false);
}

Real perm_leading(const std::array<std::array<Real, 5>, 5>& m, int k) {
  return block_expand(m, 0, 0, k, true);
}

}  // namespace detail

RankCertificate certify(const FamilyInstance& inst, const HeightOptions& opt) {
  const HeightContext ctx = HeightContext::for_instance(inst, opt.factor_budget, opt.seed);

  std::array<HeightValue, 5> diag;
  for (int i = 0; i < 5; ++i) diag[i] = canonical_height(ctx, inst.points[i], opt);

  RankCertificate cert;
  cert.normalization = opt.normalization;
  mpfr_prec_t prec = 256;
  for (int i = 0; i < 5; ++i) prec = std::max(prec, diag[i].value.precision());

  for (int i = 0; i < 5; ++i) {
    cert.gram[i][i] = diag[i];
    for (int j = i + 1; j < 5; ++j) {
      const CurvePoint sum =
          detail::add_unchecked(inst.curve, inst.points[i], inst.points[j]);
      const HeightValue hs = canonical_height(ctx, sum, opt);
      Real value =
          (hs.value - diag[i].value - diag[j].value) / Real::of(2L, prec);
      const double err = (hs.err + diag[i].err + diag[j].err) / 2.0;
      cert.gram[i][j] = HeightValue{value, err};
      cert.gram[j][i] = HeightValue{std::move(value), err};
    }
  }

  std::array<std::array<Real, 5>, 5> values, abs_values, abs_plus_err;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      values[i][j] = cert.gram[i][j].value;
      abs_values[i][j] = abs(cert.gram[i][j].value);
      abs_plus_err[i][j] =
          abs_values[i][j] + Real::of(cert.gram[i][j].err, prec);
    }

  const auto minor_error = [&](int k) {
    const Real spread =
        detail::perm_leading(abs_plus_err, k) - detail::perm_leading(abs_values, k);
    return spread.to_double() * 1.0000001 + 1e-300;
  };

  cert.determinant = HeightValue{detail::det_leading(values, 5), minor_error(5)};

  cert.rank_lower_bound = 0;
  for (int k = 5; k >= 1; --k) {
    const Real minor = (k == 5) ? cert.determinant.value : detail::det_leading(values, k);
    const double err = (k == 5) ? cert.determinant.err : minor_error(k);
    const double threshold = std::max(10.0 * err, 1e-6);
    if (minor > Real::of(threshold, prec)) {
      cert.rank_lower_bound = k;
      break;
    }
  }

  cert.torsion = classify(inst.k, opt.factor_budget, opt.seed);
  return cert;
}

}  // namespace rankforge
