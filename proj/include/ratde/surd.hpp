#ifndef RATDE_SURD_HPP
#define RATDE_SURD_HPP

#include <iosfwd>
#include <string>

#include "ratde/bigfloat.hpp"
#include "ratde/ratio.hpp"

namespace ratde {

// Element a + b*sqrt(d) of a real quadratic field, with a, b rational and d a
// positive non-square integer (d = 0 and b = 0 for plain rationals). Field
// operations are exact; values from different fields do not mix. This is all
// the symbolic algebra the artifact needs: equilibria and constructed cycles
// live in a single quadratic extension at a time.
class Surd {
 public:
  Surd() : a_(0), b_(0), d_(0) {}
  Surd(const Ratio& r) : a_(r), b_(0), d_(0) {}  // NOLINT: implicit by design
  Surd(long n) : a_(n), b_(0), d_(0) {}          // NOLINT

  // a + b*sqrt(d) with d rational >= 0; normalizes d to a canonical positive
  // integer (square part folded into b, perfect squares folded into a).
  static Surd make(const Ratio& a, const Ratio& b, const Ratio& d);

  // sqrt(x) for x >= 0: exact rational when x is a perfect square, otherwise
  // a pure surd.
  static Surd sqrt_of(const Ratio& x);

  bool is_rational() const { return b_.is_zero(); }
  const Ratio& rational() const;  // requires is_rational()
  const Ratio& rational_part() const { return a_; }
  const Ratio& surd_part() const { return b_; }
  const mpz_class& radicand() const { return d_; }

  int sign() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_positive() const { return sign() > 0; }
  bool is_negative() const { return sign() < 0; }

  Surd operator-() const;
  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y);
  friend Surd operator*(const Surd& x, const Surd& y);
  friend Surd operator/(const Surd& x, const Surd& y);

  friend bool operator==(const Surd& x, const Surd& y);
  friend bool operator!=(const Surd& x, const Surd& y) { return !(x == y); }
  friend bool operator<(const Surd& x, const Surd& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const Surd& x, const Surd& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const Surd& x, const Surd& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const Surd& x, const Surd& y) { return (x - y).sign() >= 0; }

  BigFloat to_float(mpfr_prec_t prec) const;

  // "p/q" for rationals, "a+b*sqrt(d)" otherwise.
  std::string str() const;

 private:
  Surd(const Ratio& a, const Ratio& b, const mpz_class& d) : a_(a), b_(b), d_(d) {}
  static mpz_class common_radicand(const Surd& x, const Surd& y);

  Ratio a_, b_;
  mpz_class d_;
};

std::ostream& operator<<(std::ostream& os, const Surd& s);

// Roots of q2*x^2 + q1*x + q0 = 0 (q2 != 0) as exact field elements, in
// increasing order. Throws NotApplicable for a negative discriminant.
struct QuadraticRoots {
  Surd low, high;
};
QuadraticRoots solve_quadratic(const Ratio& q2, const Ratio& q1, const Ratio& q0);

}  // namespace ratde

#endif  // RATDE_SURD_HPP
