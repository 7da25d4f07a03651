#pragma once

#include <gmpxx.h>

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rankforge {

using Int = mpz_class;
using Rat = mpq_class;

enum class Errc {
  all_zero,
  zero_input,
  off_curve,
  infinity_input,
  two_torsion_input,
  torsion_multiple,
  torsion_index,
  degenerate_c,
  no_rational_direction,
  degenerate_direction,
  chain_stuck,
  non_integral,
  degenerate_solution,
  zero_coefficient,
  precision_unreachable,
  factorization_incomplete,
  invariant_break,
  usage,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

using Budget = std::chrono::milliseconds;
inline constexpr Budget kDefaultFactorBudget{30000};

/// Rational num/den in lowest terms with positive denominator.
Rat make_rat(const Int& num, const Int& den);

Int pow_int(const Int& base, unsigned long exp);
Rat pow_rat(const Rat& base, unsigned long exp);

/// Integer square root of a nonnegative rational, when it is one.
std::optional<Rat> exact_sqrt(const Rat& q);

struct Factorization {
  Int input;
  std::vector<std::pair<Int, unsigned>> factors;  // (prime, exponent), primes ascending
  Int cofactor = 1;  // composite remainder, 1 when complete
  bool complete = false;
};

/// Strong probable-prime test, 64 rounds.
bool is_probable_prime(const Int& n);

/// Divides every entry by the positive gcd of the list; signs preserved.
std::vector<Int> gcd_reduce(const std::vector<Int>& values);

bool is_perfect_square(const Int& n);
bool is_perfect_fourth_power(const Int& n);

/// Trial division to 10^6, then seeded Brent-rho until the budget runs out.
Factorization factor(const Int& n, Budget budget = kDefaultFactorBudget,
                     std::uint64_t seed = 0);

struct FourthPowerSplit {
  Int core;  // fourth-power-free, carries the sign of n
  Int root;  // positive; n = core * root^4
};

/// n = core * root^4 with core fourth-power-free. nullopt when the
/// factorization stayed incomplete and a residual fourth power cannot be
/// excluded.
std::optional<FourthPowerSplit> fourth_power_free_part(
    const Int& n, Budget budget = kDefaultFactorBudget, std::uint64_t seed = 0);

}  // namespace rankforge
