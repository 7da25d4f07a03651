#include "rankforge/torsion.hpp"

namespace rankforge {

const char* to_string(TorsionClass t) {
  switch (t) {
    case TorsionClass::z4: return "Z4";
    case TorsionClass::z2xz2: return "Z2xZ2";
    case TorsionClass::z2: return "Z2";
    case TorsionClass::unknown: return "Unknown";
  }
  return "Unknown";
}

TorsionClass classify(const Int& k, Budget budget, std::uint64_t seed) {
  if (k == 0) fail(Errc::zero_coefficient, "torsion of a singular curve");
  const auto split = fourth_power_free_part(k, budget, seed);
  if (!split) return TorsionClass::unknown;
  const Int& d = split->core;
  if (d == 4) return TorsionClass::z4;
  if (is_perfect_square(-d)) return TorsionClass::z2xz2;
  return TorsionClass::z2;
}

TorsionDiagnostics diagnostics(const FamilyInstance& inst, Budget budget,
                               std::uint64_t seed) {
  TorsionDiagnostics out;
  out.s_real = inst.sixteen_s2 > 0;
  out.four_s2_is_square = false;
  if (out.s_real) {
    if (inst.sixteen_s2 % 4 != 0) fail(Errc::non_integral, "16S^2 not divisible by 4");
    out.four_s2_is_square = is_perfect_square(inst.sixteen_s2 / 4);
  }
  out.torsion = classify(inst.k, budget, seed);
  if (!out.s_real && out.torsion != TorsionClass::z2 && out.torsion != TorsionClass::unknown)
    fail(Errc::invariant_break, "imaginary S must give Z/2Z torsion");
  return out;
}

}  // namespace rankforge
