#pragma once

#include "rankforge/family.hpp"
#include "rankforge/numeric.hpp"

namespace rankforge {

enum class TorsionClass { z4, z2xz2, z2, unknown };

const char* to_string(TorsionClass t);

/// Torsion of y^2 = x^3 + Kx. K is reduced to its fourth-power-free part d
/// (torsion is invariant under the quartic twist K = d m^4 -> d), then:
/// Z/4Z when d = 4, Z/2Z x Z/2Z when -d is a perfect square, Z/2Z otherwise.
/// Unknown when the reduction stayed incomplete within the budget.
TorsionClass classify(const Int& k, Budget budget = kDefaultFactorBudget,
                      std::uint64_t seed = 0);

struct TorsionDiagnostics {
  bool s_real;            // sixteen_s2 > 0
  bool four_s2_is_square; // only meaningful when s_real
  TorsionClass torsion;
};

/// Remark-style diagnostics; asserts that an imaginary-S instance classifies
/// as Z/2Z whenever the classification succeeded.
TorsionDiagnostics diagnostics(const FamilyInstance& inst,
                               Budget budget = kDefaultFactorBudget,
                               std::uint64_t seed = 0);

}  // namespace rankforge
