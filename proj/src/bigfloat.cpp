#include "ratde/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

namespace ratde {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const Ratio& r, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, r.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(double d, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, d, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::parse(const std::string& text, mpfr_prec_t prec) {
  BigFloat out(prec);
  if (mpfr_set_str(out.v_, text.c_str(), 10, MPFR_RNDN) != 0)
    throw ParseError("bad float literal: \"" + text + "\"");
  return out;
}

namespace {
mpfr_prec_t joint_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat out(joint_prec(a, b));
  mpfr_add(const_cast<mpfr_ptr>(out.raw()), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat out(joint_prec(a, b));
  mpfr_sub(const_cast<mpfr_ptr>(out.raw()), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat out(joint_prec(a, b));
  mpfr_mul(const_cast<mpfr_ptr>(out.raw()), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat out(joint_prec(a, b));
  mpfr_div(const_cast<mpfr_ptr>(out.raw()), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(precision());
  mpfr_neg(out.v_, v_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::abs() const {
  BigFloat out(precision());
  mpfr_abs(out.v_, v_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::sqrt() const {
  BigFloat out(precision());
  mpfr_sqrt(out.v_, v_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::infinity(mpfr_prec_t prec) {
  BigFloat out(prec);
  mpfr_set_inf(out.v_, 1);
  return out;
}

std::string BigFloat::str() const {
  if (is_nan()) return "nan";
  if (is_inf()) return sign() > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  mpfr_exp_t exp = 0;
  // n_digits = 0: minimal digit count that reads back to the same value.
  char* digits = mpfr_get_str(nullptr, &exp, 10, 0, v_, MPFR_RNDN);
  std::string mant(digits);
  mpfr_free_str(digits);
  std::string sign_part;
  if (!mant.empty() && mant[0] == '-') {
    sign_part = "-";
    mant.erase(0, 1);
  }
  // mant is "ddd..." with value 0.ddd * 10^exp; render as d.dd...e(exp-1)
  std::string out = sign_part + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  out += "e" + std::to_string(static_cast<long>(exp) - 1);
  return out;
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(); }

}  // namespace ratde
