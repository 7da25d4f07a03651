#include "rankforge/family.hpp"

namespace rankforge {

Int sixteen_s2(const Int& a, const Int& b, const Int& c) {
  const Int a2 = a * a, b2 = b * b, c2 = c * c;
  return (a2 + b2 + c2) * (a2 + b2 - c2) * (a2 + c2 - b2) * (b2 + c2 - a2);
}

Int curve_coefficient(const QuarticSolution& s) {
  const Int a4 = pow_int(s.a, 4), b4 = pow_int(s.b, 4), c4 = pow_int(s.c, 4);
  const Int num = a4 * a4 + b4 * b4 + c4 * c4 - 2 * a4 * b4 - 2 * a4 * c4 - 2 * b4 * c4;
  if (num % 4 != 0) fail(Errc::non_integral, "curve coefficient is not an integer");
  Int k = num / 4;
  if (4 * k != -sixteen_s2(s.a, s.b, s.c))
    fail(Errc::invariant_break, "4K != -16S^2");
  return k;
}

std::array<CurvePoint, 5> build_points(const QuarticSolution& s) {
  const Int a4 = pow_int(s.a, 4), b4 = pow_int(s.b, 4), c4 = pow_int(s.c, 4),
            d4 = pow_int(s.d, 4);
  const auto half = [](const Int& n) {
    if (n % 2 != 0) fail(Errc::non_integral, "odd numerator in a point ordinate");
    return Int(n / 2);
  };
  const std::array<std::pair<Int, Int>, 5> coords = {{
      {s.a * s.a * s.b * s.b, s.a * s.b * half(a4 + b4 - c4)},
      {s.a * s.a * s.c * s.c, s.a * s.c * half(a4 + c4 - b4)},
      {s.b * s.b * s.c * s.c, s.b * s.c * half(b4 + c4 - a4)},
      {s.b * s.b * s.d * s.d, s.b * s.d * half(b4 + d4 - c4)},
      {s.c * s.c * s.d * s.d, s.c * s.d * half(c4 + d4 - b4)},
  }};

  for (std::size_t i = 0; i < 5; ++i) {
    if (coords[i].first == 0)
      fail(Errc::degenerate_solution, "point " + std::to_string(i + 1) + " has x = 0");
    for (std::size_t j = i + 1; j < 5; ++j)
      if (coords[i].first == coords[j].first)
        fail(Errc::degenerate_solution, "coinciding x-coordinates");
  }

  const WeierstrassCurve curve{curve_coefficient(s), Int(0)};
  std::array<CurvePoint, 5> points;
  for (std::size_t i = 0; i < 5; ++i) {
    points[i] = CurvePoint(Rat(coords[i].first), Rat(coords[i].second));
    if (!on_curve(curve, points[i]))
      fail(Errc::off_curve, "family point " + std::to_string(i + 1) + " off the curve");
  }
  return points;
}

FamilyInstance build_instance(const QuarticSolution& s) {
  if (!s.verified()) fail(Errc::invariant_break, "build_instance on a non-solution");
  if (s.degenerate()) fail(Errc::degenerate_solution, "build_instance on a degenerate solution");
  FamilyInstance inst;
  inst.solution = s;
  inst.sixteen_s2 = sixteen_s2(s.a, s.b, s.c);
  inst.k = curve_coefficient(s);
  inst.curve = WeierstrassCurve{inst.k, Int(0)};
  inst.points = build_points(s);
  return inst;
}

}  // namespace rankforge
