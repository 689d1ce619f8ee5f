#ifndef RATDE_RATIO_HPP
#define RATDE_RATIO_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "ratde/errors.hpp"

namespace ratde {

// Exact rational number, always in lowest terms with positive denominator.
// Thin wrapper around GMP's mpq_class that guards division and parses the
// "p/q" / "n" literal forms used throughout the spec files and CSV output.
class Ratio {
 public:
  Ratio() : v_(0) {}
  Ratio(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Ratio(long num, long den);
  explicit Ratio(const mpq_class& q);

  static Ratio parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  std::string str() const;

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_positive() const { return sign() > 0; }
  bool is_negative() const { return sign() < 0; }

  Ratio operator-() const { return Ratio(mpq_class(-v_)); }
  Ratio abs() const { return Ratio(mpq_class(::abs(v_))); }

  Ratio& operator+=(const Ratio& o) { v_ += o.v_; return *this; }
  Ratio& operator-=(const Ratio& o) { v_ -= o.v_; return *this; }
  Ratio& operator*=(const Ratio& o) { v_ *= o.v_; return *this; }
  Ratio& operator/=(const Ratio& o);

  friend Ratio operator+(Ratio a, const Ratio& b) { return a += b; }
  friend Ratio operator-(Ratio a, const Ratio& b) { return a -= b; }
  friend Ratio operator*(Ratio a, const Ratio& b) { return a *= b; }
  friend Ratio operator/(Ratio a, const Ratio& b) { return a /= b; }

  friend bool operator==(const Ratio& a, const Ratio& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Ratio& a, const Ratio& b) { return a.v_ != b.v_; }
  friend bool operator<(const Ratio& a, const Ratio& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Ratio& a, const Ratio& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Ratio& a, const Ratio& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Ratio& a, const Ratio& b) { return a.v_ >= b.v_; }

  // Bits in the larger of |numerator|, denominator. Drives the exact-mode
  // size budget in dynamics.
  std::size_t bit_size() const;

  // True iff *this is the square of a rational; fills `root` (>= 0) when so.
  bool perfect_square(Ratio* root = nullptr) const;

  // Nearest multiple of 2^-bits (ties toward +inf). Used by tests that need
  // size-controlled exact state.
  Ratio dyadic_round(unsigned bits) const;

  double to_double() const { return v_.get_d(); }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Ratio& r);

inline Ratio min(const Ratio& a, const Ratio& b) { return a <= b ? a : b; }
inline Ratio max(const Ratio& a, const Ratio& b) { return a >= b ? a : b; }

}  // namespace ratde

#endif  // RATDE_RATIO_HPP
