#pragma once

#include <mpfr.h>

#include <string>

#include "rankforge/numeric.hpp"

namespace rankforge {

/// Thin RAII value wrapper over mpfr_t. Every operation rounds to nearest at
/// the wider of the operand precisions, so results are deterministic for a
/// fixed precision choice.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 128);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real of(double v, mpfr_prec_t prec);
  static Real of(long v, mpfr_prec_t prec);
  static Real of(const Int& z, mpfr_prec_t prec);
  static Real of(const Rat& q, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Decimal string with the given significant digits, "%.*Rg" style.
  std::string str(int digits = 30) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }

  friend Real abs(const Real& v);
  friend Real log(const Real& v);
  friend Real max(const Real& a, const Real& b);
  friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }

  friend bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return cmp(a, b) == 0; }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  void widen_to(mpfr_prec_t prec);
  mpfr_t v_;
};

}  // namespace rankforge
