#pragma once

#include <array>
#include <vector>

#include "rankforge/curve.hpp"
#include "rankforge/numeric.hpp"

namespace rankforge {

/// Integer solution of A^4 + D^4 = 2(B^4 + C^4).
struct QuarticSolution {
  Int a;
  Int b;
  Int c;
  Int d;

  bool verified() const;
  /// A solution that collapses or trivializes family points: some entry zero,
  /// |B| = |C|, or |A| = |D|.
  bool degenerate() const;
  /// gcd-reduced with every sign made positive.
  QuarticSolution reduced() const;
  /// Identification key under the A<->D, B<->C symmetries and sign flips.
  std::array<Int, 4> dedup_key() const;

  friend bool operator==(const QuarticSolution&, const QuarticSolution&) = default;
};

bool verify_solution(const Int& a, const Int& b, const Int& c, const Int& d);

/// Rational point on the affine chart x^4 + y^4 - 2u^4 - 2 = 0.
struct SurfacePoint {
  Rat x;
  Rat y;
  Rat u;

  bool on_surface() const;

  friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;
};

/// The helper curve y^2 = x^3 - 36x and its generator (-3, 9) feeding the
/// division-polynomial parametrization.
const WeierstrassCurve& helper_curve();
const CurvePoint& helper_generator();

/// Solution built from phi_n, psi_n, omega_n at (-3, 9):
///   A = phi^4 + 1296 psi^8 + 864 phi psi^6 + 72 phi^2 psi^4
///       + 144 omega psi^5 - 24 phi^3 psi^2 + 4 phi^2 omega psi
///   D = -phi^4 - 1296 psi^8 - 864 phi psi^6 - 72 phi^2 psi^4
///       + 144 omega psi^5 + 24 phi^3 psi^2 + 4 phi^2 omega psi
///   B = 4 (phi^2 + 36 psi^4) omega psi
///   C = (phi^2 - 36 psi^4 - 12 phi psi^2)(phi^2 - 36 psi^4 + 12 phi psi^2)
QuarticSolution parametrized_solution(unsigned n, bool reduce);

/// (x, y, u) = (A/C, D/C, B/C); requires C != 0.
SurfacePoint to_surface_point(const QuarticSolution& s);
/// Clears denominators by their lcm L: (A, B, C, D) = (xL, uL, L, yL)/gcd.
QuarticSolution to_integer_solution(const SurfacePoint& p);

struct TangentDirection {
  Rat a;
  Rat b;
  Rat c;
};

/// Directions (1, b, c) of lines through p0 whose intersection with the
/// surface has vanishing t^1 and t^2 coefficients: c solved linearly from
/// S = 0, then b from the quadratic R = 0.
std::vector<TangentDirection> tangent_directions(const SurfacePoint& p0);

/// One descent move: t = -N/M along each tangent direction. Every returned
/// point satisfies the surface equation exactly; copies of p0 are dropped.
std::vector<SurfacePoint> descend_step(const SurfacePoint& p0);

/// Iterates descend_step from the seed, collecting solutions that are new
/// under dedup_key.
std::vector<QuarticSolution> descend_chain(const QuarticSolution& seed, unsigned steps);

}  // namespace rankforge
