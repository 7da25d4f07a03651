#include "rankforge/numeric.hpp"

#include <algorithm>
#include <map>

namespace rankforge {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::all_zero: return "AllZero";
    case Errc::zero_input: return "ZeroInput";
    case Errc::off_curve: return "OffCurve";
    case Errc::infinity_input: return "InfinityInput";
    case Errc::two_torsion_input: return "TwoTorsionInput";
    case Errc::torsion_multiple: return "TorsionMultiple";
    case Errc::torsion_index: return "TorsionIndex";
    case Errc::degenerate_c: return "DegenerateC";
    case Errc::no_rational_direction: return "NoRationalDirection";
    case Errc::degenerate_direction: return "DegenerateDirection";
    case Errc::chain_stuck: return "ChainStuck";
    case Errc::non_integral: return "NonIntegral";
    case Errc::degenerate_solution: return "DegenerateSolution";
    case Errc::zero_coefficient: return "ZeroCoefficient";
    case Errc::precision_unreachable: return "PrecisionUnreachable";
    case Errc::factorization_incomplete: return "FactorizationIncomplete";
    case Errc::invariant_break: return "InvariantBreak";
    case Errc::usage: return "Usage";
  }
  return "Unknown";
}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) fail(Errc::zero_input, "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rat pow_rat(const Rat& base, unsigned long exp) {
  Rat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
  return r;  // base canonical => powers canonical
}

std::optional<Rat> exact_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  const Int num(q.get_num()), den(q.get_den());
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return make_rat(rn, rd);
}

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 64) != 0;
}

std::vector<Int> gcd_reduce(const std::vector<Int>& values) {
  Int g = 0;
  for (const Int& v : values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g == 0) fail(Errc::all_zero, "gcd_reduce of all-zero list");
  std::vector<Int> out;
  out.reserve(values.size());
  for (const Int& v : values) out.push_back(v / g);
  return out;
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  return rem == 0;
}

bool is_perfect_fourth_power(const Int& n) {
  if (n < 0) return false;
  if (n == 0) return true;
  Int r;
  return mpz_root(r.get_mpz_t(), n.get_mpz_t(), 4) != 0;
}

namespace {

constexpr unsigned long kTrialBound = 1000000;

using Clock = std::chrono::steady_clock;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 2; p <= kTrialBound; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (std::uint64_t q = std::uint64_t(p) * p; q <= kTrialBound; q += p)
        composite[q] = true;
    }
    return out;
  }();
  return primes;
}

// Largest k with n = r^k; r returned through root. k = 1 when n is not a
// perfect power.
unsigned max_power(const Int& n, Int& root) {
  const unsigned long bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long k = bits; k >= 2; --k) {
    Int r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      root = r;
      return static_cast<unsigned>(k);
    }
  }
  root = n;
  return 1;
}

// Brent's cycle variant of Pollard rho. Returns a nontrivial factor of n, or
// 0 when the deadline passes first. Deterministic for a fixed seed.
Int brent_rho(const Int& n, gmp_randstate_t rng, Clock::time_point deadline) {
  if (n % 2 == 0) return 2;
  while (true) {
    Int y, c;
    mpz_urandomm(y.get_mpz_t(), rng, n.get_mpz_t());
    mpz_urandomm(c.get_mpz_t(), rng, n.get_mpz_t());
    if (c == 0) c = 1;
    Int x, ys, q = 1, g = 1;
    unsigned long r = 1;
    const unsigned long batch = 128;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long lim = std::min(batch, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * (x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
        if (Clock::now() > deadline) return 0;
      }
      r *= 2;
    }
    if (g == n) {
      // backtrack one step at a time
      do {
        ys = (ys * ys + c) % n;
        Int d = x - ys;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
    // cycle degenerated; retry with a fresh (y, c)
    if (Clock::now() > deadline) return 0;
  }
}

}  // namespace

Factorization factor(const Int& n, Budget budget, std::uint64_t seed) {
  if (n == 0) fail(Errc::zero_input, "factor(0)");
  Factorization out;
  out.input = n;
  Int m = abs(n);
  const auto deadline = Clock::now() + budget;

  std::map<Int, unsigned> found;
  for (std::uint32_t p : small_primes()) {
    if (m == 1) break;
    if (mpz_cmp_ui(m.get_mpz_t(), p) < 0) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++found[Int(p)];
    }
    // remaining part below p^2 is prime
    if (m > 1 && mpz_cmp_ui(m.get_mpz_t(), p) > 0) {
      Int psq = Int(p) * p;
      if (m < psq) {
        ++found[m];
        m = 1;
        break;
      }
    }
  }

  gmp_randstate_t rng;
  gmp_randinit_mt(rng);
  gmp_randseed_ui(rng, static_cast<unsigned long>(seed ^ 0x9e3779b97f4a7c15ull));

  Int pending_product = 1;
  std::vector<std::pair<Int, unsigned>> stack;  // (composite, multiplicity)
  if (m > 1) stack.emplace_back(m, 1);
  while (!stack.empty()) {
    auto [c, mult] = stack.back();
    stack.pop_back();
    if (is_probable_prime(c)) {
      found[c] += mult;
      continue;
    }
    Int root;
    const unsigned k = max_power(c, root);
    if (k > 1) {
      stack.emplace_back(root, mult * k);
      continue;
    }
    const Int d = brent_rho(c, rng, deadline);
    if (d == 0) {
      pending_product *= pow_int(c, mult);
      continue;
    }
    stack.emplace_back(d, mult);
    stack.emplace_back(c / d, mult);
  }
  gmp_randclear(rng);

  out.factors.assign(found.begin(), found.end());
  out.cofactor = pending_product;
  out.complete = (out.cofactor == 1);
  return out;
}

std::optional<FourthPowerSplit> fourth_power_free_part(const Int& n, Budget budget,
                                                       std::uint64_t seed) {
  if (n == 0) fail(Errc::zero_input, "fourth_power_free_part(0)");
  const Factorization f = factor(n, budget, seed);
  Int core = 1, root = 1;
  for (const auto& [p, e] : f.factors) {
    core *= pow_int(p, e % 4);
    root *= pow_int(p, e / 4);
  }
  if (f.cofactor != 1) {
    // The cofactor is composite, not a perfect power, and coprime to the
    // listed primes; all its prime factors exceed the trial bound B, so a
    // fourth power inside it would need p^4 <= cofactor, impossible below B^4.
    static const Int kFourthPowerCeiling = pow_int(Int(kTrialBound), 4);
    if (f.cofactor < kFourthPowerCeiling) {
      core *= f.cofactor;
    } else {
      return std::nullopt;
    }
  }
  if (n < 0) core = -core;
  return FourthPowerSplit{core, root};
}

}  // namespace rankforge
