#include "rankforge/curve.hpp"

namespace rankforge {

Int WeierstrassCurve::discriminant() const {
  return -16 * (4 * a * a * a + 27 * b * b);
}

bool WeierstrassCurve::valid() const { return discriminant() != 0; }

CurvePoint::CurvePoint(Rat x, Rat y) : x_(std::move(x)), y_(std::move(y)), infinity_(false) {
  x_.canonicalize();
  y_.canonicalize();
}

const Rat& CurvePoint::x() const {
  if (infinity_) fail(Errc::infinity_input, "x() of the point at infinity");
  return x_;
}

const Rat& CurvePoint::y() const {
  if (infinity_) fail(Errc::infinity_input, "y() of the point at infinity");
  return y_;
}

bool on_curve(const WeierstrassCurve& curve, const CurvePoint& p) {
  if (p.is_infinity()) return true;
  const Rat& x = p.x();
  const Rat& y = p.y();
  return y * y == x * x * x + curve.a * x + curve.b;
}

namespace detail {

CurvePoint add_unchecked(const WeierstrassCurve& curve, const CurvePoint& p,
                         const CurvePoint& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const Rat &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
  Rat lambda;
  if (x1 == x2) {
    if (y1 == -y2) return CurvePoint::infinity();
    lambda = (3 * x1 * x1 + curve.a) / (2 * y1);
  } else {
    lambda = (y2 - y1) / (x2 - x1);
  }
  Rat x3 = lambda * lambda - x1 - x2;
  Rat y3 = lambda * (x1 - x3) - y1;
  return CurvePoint(std::move(x3), std::move(y3));
}

CurvePoint scalar_mul_unchecked(const WeierstrassCurve& curve, const Int& n,
                                const CurvePoint& p) {
  Int m = abs(n);
  CurvePoint base = (n < 0) ? negate(curve, p) : p;
  CurvePoint acc = CurvePoint::infinity();
  const std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
  if (m == 0) return acc;
  for (std::size_t i = bits; i-- > 0;) {
    acc = add_unchecked(curve, acc, acc);
    if (mpz_tstbit(m.get_mpz_t(), i)) acc = add_unchecked(curve, acc, base);
  }
  return acc;
}

}  // namespace detail

CurvePoint negate(const WeierstrassCurve& curve, const CurvePoint& p) {
  (void)curve;
  if (p.is_infinity()) return p;
  return CurvePoint(p.x(), -p.y());
}

CurvePoint add(const WeierstrassCurve& curve, const CurvePoint& p, const CurvePoint& q) {
  if (!on_curve(curve, p) || !on_curve(curve, q))
    fail(Errc::off_curve, "add: operand not on the curve");
  return detail::add_unchecked(curve, p, q);
}

CurvePoint scalar_mul(const WeierstrassCurve& curve, const Int& n, const CurvePoint& p) {
  if (!on_curve(curve, p)) fail(Errc::off_curve, "scalar_mul: point not on the curve");
  return detail::scalar_mul_unchecked(curve, n, p);
}

DivisionPolyContext::DivisionPolyContext(const WeierstrassCurve& curve, const CurvePoint& p)
    : curve_(curve) {
  if (p.is_infinity()) fail(Errc::infinity_input, "division polynomials at infinity");
  if (!on_curve(curve, p)) fail(Errc::off_curve, "division polynomials off the curve");
  x_ = p.x();
  y_ = p.y();
}

// psi_{-1} = -1, psi_0 = 0, psi_1 = 1, psi_2 = 2y,
// psi_3 = 3x^4 + 6ax^2 + 12bx - a^2,
// psi_4 = 4y(x^6 + 5ax^4 + 20bx^3 - 5a^2x^2 - 4abx - 8b^2 - a^3),
// psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3,
// psi_{2m}   = psi_m (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2) / (2y).
const Rat& DivisionPolyContext::psi(int n) {
  if (n < -1) fail(Errc::invariant_break, "psi index below -1");
  const std::size_t slot = static_cast<std::size_t>(n + 1);
  if (slot < known_.size() && known_[slot]) return cache_[slot];
  return compute(n);
}

const Rat& DivisionPolyContext::compute(int n) {
  const std::size_t slot = static_cast<std::size_t>(n + 1);
  if (slot >= cache_.size()) {
    cache_.resize(slot + 1);
    known_.resize(slot + 1, false);
  }
  Rat value;
  const Rat& x = x_;
  const Rat& y = y_;
  const Int& a = curve_.a;
  const Int& b = curve_.b;
  switch (n) {
    case -1: value = -1; break;
    case 0: value = 0; break;
    case 1: value = 1; break;
    case 2: value = 2 * y; break;
    case 3:
      value = 3 * pow_rat(x, 4) + 6 * a * x * x + 12 * b * x - a * a;
      break;
    case 4:
      value = 4 * y *
              (pow_rat(x, 6) + 5 * a * pow_rat(x, 4) + 20 * b * pow_rat(x, 3) -
               5 * a * a * x * x - 4 * a * b * x - 8 * Rat(b * b) - Rat(a * a * a));
      break;
    default: {
      // copies: a recursive psi() call may grow the cache and move elements
      const int m = n / 2;
      const Rat pm2 = psi(m + 2), pm1 = psi(m + 1), pm = psi(m), pl1 = psi(m - 1);
      if (n % 2 == 1) {
        value = pm2 * pow_rat(pm, 3) - pl1 * pow_rat(pm1, 3);
      } else {
        if (y_ == 0) fail(Errc::two_torsion_input, "even psi at a 2-torsion point");
        const Rat pl2 = psi(m - 2);
        value = pm * (pm2 * pow_rat(pl1, 2) - pl2 * pow_rat(pm1, 2)) / (2 * y);
      }
      break;
    }
  }
  cache_[slot] = std::move(value);
  known_[slot] = true;
  return cache_[slot];
}

DivisionPolyValues DivisionPolyContext::eval(unsigned n) {
  if (n == 0) fail(Errc::zero_input, "division polynomial index 0");
  if (y_ == 0) fail(Errc::two_torsion_input, "division polynomials at a 2-torsion point");
  const int k = static_cast<int>(n);
  const Rat pk2 = psi(k + 2), pk1 = psi(k + 1), pk = psi(k), pl1 = psi(k - 1),
            pl2 = psi(k - 2);
  DivisionPolyValues out;
  out.n = n;
  out.psi = pk;
  out.phi = x_ * pow_rat(pk, 2) - pk1 * pl1;
  out.omega = (pk2 * pow_rat(pl1, 2) - pl2 * pow_rat(pk1, 2)) / (4 * y_);
  return out;
}

DivisionPolyValues division_poly_eval(const WeierstrassCurve& curve, const CurvePoint& p,
                                      unsigned n) {
  DivisionPolyContext ctx(curve, p);
  return ctx.eval(n);
}

CurvePoint multiple_via_divpoly(const WeierstrassCurve& curve, const CurvePoint& p,
                                unsigned n) {
  const DivisionPolyValues v = division_poly_eval(curve, p, n);
  if (v.psi == 0) fail(Errc::torsion_multiple, "psi_n vanishes: n*P is 2-torsion or infinity");
  Rat psi2 = v.psi * v.psi;
  return CurvePoint(v.phi / psi2, v.omega / (psi2 * v.psi));
}

}  // namespace rankforge
