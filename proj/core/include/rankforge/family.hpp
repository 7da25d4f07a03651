#pragma once

#include <array>

#include "rankforge/curve.hpp"
#include "rankforge/quartic.hpp"

namespace rankforge {

/// Heron product on (A^2, B^2, C^2):
///   (A^2+B^2+C^2)(A^2+B^2-C^2)(A^2+C^2-B^2)(B^2+C^2-A^2) = 16 S^2.
/// Positive iff S is real (the squares form a genuine triangle).
Int sixteen_s2(const Int& a, const Int& b, const Int& c);

/// K = (A^8+B^8+C^8 - 2A^4B^4 - 2A^4C^4 - 2B^4C^4)/4 = -4S^2, the coefficient
/// of x in y^2 = x^3 + Kx.
Int curve_coefficient(const QuarticSolution& s);

/// P1 = (A^2B^2, AB(A^4+B^4-C^4)/2)   P4 = (B^2D^2, BD(B^4+D^4-C^4)/2)
/// P2 = (A^2C^2, AC(A^4+C^4-B^4)/2)   P5 = (C^2D^2, CD(C^4+D^4-B^4)/2)
/// P3 = (B^2C^2, BC(B^4+C^4-A^4)/2)
/// Each point is checked on-curve exactly before return.
std::array<CurvePoint, 5> build_points(const QuarticSolution& s);

struct FamilyInstance {
  QuarticSolution solution;
  Int sixteen_s2;  // sign meaningful; S real iff positive
  Int k;           // -sixteen_s2 / 4
  WeierstrassCurve curve;
  std::array<CurvePoint, 5> points;
};

FamilyInstance build_instance(const QuarticSolution& s);

}  // namespace rankforge
