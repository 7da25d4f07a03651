#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rankforge/family.hpp"
#include "rankforge/real.hpp"
#include "rankforge/torsion.hpp"

namespace rankforge {

/// x-height: hhat(P) = lim 4^-n h(x(2^n P)), the convention that reproduces
/// the reference regulator values of this family. half-x-height is half of it.
enum class Normalization { x_height, half_x_height };

const char* to_string(Normalization n);

struct HeightValue {
  Real value;
  double err = 0.0;  // absolute error bound
};

struct HeightOptions {
  double tol = 1e-10;
  Normalization normalization = Normalization::x_height;
  int precision_digits = 0;  // 0: derived from operand sizes
  Budget factor_budget = kDefaultFactorBudget;
  std::uint64_t seed = 0;
};

/// Per-curve data for the local decomposition: the bad-prime set, gcd
/// valuation caps from the duplication resultant Res = 2^8 (4a^3+27b^2)^2,
/// and a rigorous bound on the archimedean series terms.
class HeightContext {
 public:
  static HeightContext for_curve(const WeierstrassCurve& curve,
                                 Budget budget = kDefaultFactorBudget,
                                 std::uint64_t seed = 0);
  /// Discovers the bad primes by factoring the four Heron quadratic forms,
  /// each far smaller than K itself.
  static HeightContext for_instance(const FamilyInstance& inst,
                                    Budget budget = kDefaultFactorBudget,
                                    std::uint64_t seed = 0);

  const WeierstrassCurve& curve() const { return curve_; }
  bool support_complete() const { return support_complete_; }
  const std::vector<Int>& bad_primes() const { return primes_; }
  /// (sup|mu| + log|Res|) / 3; the series tail after T terms is bounded by
  /// this times 4^-T.
  double tail_constant() const { return tail_constant_; }

 private:
  HeightContext() = default;
  static HeightContext build(const WeierstrassCurve& curve, std::vector<Int> primes,
                             bool complete);

  WeierstrassCurve curve_;
  std::vector<Int> primes_;
  bool support_complete_ = false;
  double tail_constant_ = 0.0;
};

/// log max(|r|, |s|) for x(p) = r/s in lowest terms.
Real naive_height(const CurvePoint& p, mpfr_prec_t prec = 192);

/// True when n*P = O for some n <= 12 (Mazur bound), by exact arithmetic.
bool is_torsion_point(const WeierstrassCurve& curve, const CurvePoint& p);

/// Canonical height by local decomposition; falls back to the doubling limit
/// when the bad-prime support is incomplete.
HeightValue canonical_height(const HeightContext& ctx, const CurvePoint& p,
                             const HeightOptions& opt = {});

/// Doubling-limit route: 4^-j h(x(2^j P)) with the rigorous tail bound.
/// Throws PrecisionUnreachable when tol needs more exact doublings than the
/// size cap allows.
HeightValue canonical_height_doubling(const WeierstrassCurve& curve, const CurvePoint& p,
                                      const HeightOptions& opt = {});

/// <p, q> = (hhat(p+q) - hhat(p) - hhat(q)) / 2.
HeightValue pairing(const HeightContext& ctx, const CurvePoint& p, const CurvePoint& q,
                    const HeightOptions& opt = {});

struct RankCertificate {
  std::array<std::array<HeightValue, 5>, 5> gram;
  HeightValue determinant;
  Normalization normalization;
  int rank_lower_bound = 0;
  TorsionClass torsion = TorsionClass::unknown;
};

/// Gram matrix of the five family points, its determinant with a propagated
/// error bound, and the resulting rank lower bound: k points certify rank >= k
/// when the leading k x k minor clears max(10 * err, 1e-6).
RankCertificate certify(const FamilyInstance& inst, const HeightOptions& opt = {});

namespace detail {
/// det / perm of the leading k x k block; perm drives the error propagation.
Real det_leading(const std::array<std::array<Real, 5>, 5>& m, int k);
Real perm_leading(const std::array<std::array<Real, 5>, 5>& m, int k);
}  // namespace detail

}  // namespace rankforge
