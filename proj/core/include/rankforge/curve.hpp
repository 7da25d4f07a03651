#pragma once

#include <vector>

#include "rankforge/numeric.hpp"

namespace rankforge {

/// Short Weierstrass curve y^2 = x^3 + a x + b over Q with integral a, b.
struct WeierstrassCurve {
  Int a;
  Int b;

  Int discriminant() const;  // -16(4a^3 + 27b^2)
  bool valid() const;

  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;
};

/// Affine rational point or the point at infinity. Coordinates are kept in
/// lowest terms with positive denominators.
class CurvePoint {
 public:
  CurvePoint() : infinity_(true) {}
  CurvePoint(Rat x, Rat y);

  static CurvePoint infinity() { return CurvePoint(); }

  bool is_infinity() const { return infinity_; }
  const Rat& x() const;
  const Rat& y() const;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

 private:
  Rat x_, y_;
  bool infinity_;
};

bool on_curve(const WeierstrassCurve& curve, const CurvePoint& p);

CurvePoint negate(const WeierstrassCurve& curve, const CurvePoint& p);
CurvePoint add(const WeierstrassCurve& curve, const CurvePoint& p, const CurvePoint& q);
CurvePoint scalar_mul(const WeierstrassCurve& curve, const Int& n, const CurvePoint& p);

/// psi_n, phi_n, omega_n evaluated at a fixed affine point; when psi_n != 0,
/// n*P = (phi_n/psi_n^2, omega_n/psi_n^3).
struct DivisionPolyValues {
  unsigned n;
  Rat psi;
  Rat phi;
  Rat omega;
};

/// Memoizes the psi recurrence at one (curve, point) pair, so evaluating many
/// indices costs each psi once.
class DivisionPolyContext {
 public:
  DivisionPolyContext(const WeierstrassCurve& curve, const CurvePoint& p);

  DivisionPolyValues eval(unsigned n);
  const Rat& psi(int n);

 private:
  WeierstrassCurve curve_;
  Rat x_, y_;
  std::vector<Rat> cache_;
  std::vector<bool> known_;
  const Rat& compute(int n);
};

DivisionPolyValues division_poly_eval(const WeierstrassCurve& curve, const CurvePoint& p,
                                      unsigned n);

/// n*P through (phi_n/psi_n^2, omega_n/psi_n^3); must agree with scalar_mul.
CurvePoint multiple_via_divpoly(const WeierstrassCurve& curve, const CurvePoint& p,
                                unsigned n);

namespace detail {
// Group law without on-curve validation of the inputs; for internal chains
// whose operands are already known to lie on the curve.
CurvePoint add_unchecked(const WeierstrassCurve& curve, const CurvePoint& p,
                         const CurvePoint& q);
CurvePoint scalar_mul_unchecked(const WeierstrassCurve& curve, const Int& n,
                                const CurvePoint& p);
}  // namespace detail

}  // namespace rankforge
