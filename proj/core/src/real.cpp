#include "rankforge/real.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace rankforge {

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN));
  mpfr_set_zero(v_, 1);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::of(double v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::of(long v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::of(const Int& z, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::of(const Rat& q, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

std::string Real::str(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

void Real::widen_to(mpfr_prec_t prec) {
  if (mpfr_get_prec(v_) >= prec) return;
  mpfr_t tmp;
  mpfr_init2(tmp, prec);
  mpfr_set(tmp, v_, MPFR_RNDN);
  mpfr_swap(v_, tmp);
  mpfr_clear(tmp);
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& rhs) {
  widen_to(rhs.precision());
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen_to(rhs.precision());
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen_to(rhs.precision());
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen_to(rhs.precision());
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real abs(const Real& v) {
  Real r(v.precision());
  mpfr_abs(r.v_, v.v_, MPFR_RNDN);
  return r;
}

Real log(const Real& v) {
  Real r(v.precision());
  mpfr_log(r.v_, v.v_, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) {
  Real r(std::max(a.precision(), b.precision()));
  mpfr_max(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

}  // namespace rankforge
