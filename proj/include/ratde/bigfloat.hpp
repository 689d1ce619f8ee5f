#ifndef RATDE_BIGFLOAT_HPP
#define RATDE_BIGFLOAT_HPP

#include <mpfr.h>

#include <iosfwd>
#include <string>

#include "ratde/ratio.hpp"

namespace ratde {

// Arbitrary-precision binary float on MPFR, round-to-nearest. Every value
// carries its own precision; binary operations widen to the larger operand
// precision. No global MPFR state is touched, so values can live on
// different threads.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128);
  BigFloat(const Ratio& r, mpfr_prec_t prec);
  BigFloat(double d, mpfr_prec_t prec);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  const mpfr_t& raw() const { return v_; }

  static BigFloat parse(const std::string& text, mpfr_prec_t prec);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  BigFloat abs() const;
  BigFloat sqrt() const;  // NaN for negative input

  int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return a.cmp(b) == 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) != 0; }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.cmp(b) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) <= 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.cmp(b) > 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) >= 0; }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }

  static BigFloat infinity(mpfr_prec_t prec = 128);

  // Decimal string with enough digits to round-trip at this precision.
  std::string str() const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

inline const BigFloat& min(const BigFloat& a, const BigFloat& b) { return a <= b ? a : b; }
inline const BigFloat& max(const BigFloat& a, const BigFloat& b) { return a >= b ? a : b; }

}  // namespace ratde

#endif  // RATDE_BIGFLOAT_HPP
