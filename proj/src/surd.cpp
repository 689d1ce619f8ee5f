#include "ratde/surd.hpp"

#include <ostream>

namespace ratde {

namespace {

// Split n = s^2 * f with f squarefree up to trial division; large leftover
// square factors are caught by the perfect-square test. Inputs here come from
// small equation coefficients, so this is plenty.
void extract_square(mpz_class n, mpz_class& square_root, mpz_class& squarefree) {
  square_root = 1;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(square_root.get_mpz_t(), n.get_mpz_t());
    squarefree = 1;
    return;
  }
  for (unsigned long p = 2; p <= 4096; p = (p == 2 ? 3 : p + 2)) {
    mpz_class p2 = mpz_class(p) * p;
    while (mpz_divisible_p(n.get_mpz_t(), p2.get_mpz_t())) {
      n /= p2;
      square_root *= p;
    }
    if (n < p2) break;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    square_root *= r;
    n = 1;
  }
  squarefree = n;
}

}  // namespace

Surd Surd::make(const Ratio& a, const Ratio& b, const Ratio& d) {
  if (d.is_negative()) throw NotApplicable("negative radicand");
  if (b.is_zero() || d.is_zero()) return Surd(a);
  // sqrt(p/q) = sqrt(p*q)/q, then pull the square part of p*q out front.
  const mpz_class p = d.raw().get_num();
  const mpz_class q = d.raw().get_den();
  mpz_class s, f;
  extract_square(p * q, s, f);
  Ratio scale(mpq_class(s, q));
  Ratio b2 = b * scale;
  if (f == 1) return Surd(a + b2);
  return Surd(a, b2, f);
}

Surd Surd::sqrt_of(const Ratio& x) {
  if (x.is_negative()) throw NotApplicable("square root of a negative rational");
  return make(Ratio(0), Ratio(1), x);
}

const Ratio& Surd::rational() const {
  if (!is_rational()) throw NotApplicable("surd value used where a rational is required");
  return a_;
}

int Surd::sign() const {
  if (b_.is_zero()) return a_.sign();
  if (a_.is_zero()) return b_.sign();
  if (a_.sign() == b_.sign()) return a_.sign();
  // a and b*sqrt(d) have opposite signs: compare a^2 against b^2*d.
  Ratio a2 = a_ * a_;
  Ratio b2d = b_ * b_ * Ratio(mpq_class(d_));
  if (a2 == b2d) return 0;  // cannot happen for non-square d, kept for safety
  return (a2 > b2d) ? a_.sign() : b_.sign();
}

Surd Surd::operator-() const { return Surd(-a_, -b_, d_); }

mpz_class Surd::common_radicand(const Surd& x, const Surd& y) {
  if (x.b_.is_zero()) return y.d_;
  if (y.b_.is_zero()) return x.d_;
  if (x.d_ != y.d_) throw IncompatibleSurds();
  return x.d_;
}

Surd operator+(const Surd& x, const Surd& y) {
  mpz_class d = Surd::common_radicand(x, y);
  Ratio b = x.b_ + y.b_;
  if (b.is_zero()) return Surd(x.a_ + y.a_);
  return Surd(x.a_ + y.a_, b, d);
}

Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

Surd operator*(const Surd& x, const Surd& y) {
  mpz_class d = Surd::common_radicand(x, y);
  Ratio dr{mpq_class(d)};
  Ratio a = x.a_ * y.a_ + x.b_ * y.b_ * dr;
  Ratio b = x.a_ * y.b_ + x.b_ * y.a_;
  if (b.is_zero()) return Surd(a);
  return Surd(a, b, d);
}

Surd operator/(const Surd& x, const Surd& y) {
  if (y.is_zero()) throw DivisionByZero("surd division by zero");
  mpz_class d = Surd::common_radicand(x, y);
  Ratio dr{mpq_class(d)};
  // multiply by the conjugate of y; the norm a^2 - b^2 d is nonzero for y != 0
  Ratio norm = y.a_ * y.a_ - y.b_ * y.b_ * dr;
  Surd conj(y.a_, -y.b_, d);
  Surd num = x * conj;
  Ratio a = num.a_ / norm;
  Ratio b = num.b_ / norm;
  if (b.is_zero()) return Surd(a);
  return Surd(a, b, d);
}

bool operator==(const Surd& x, const Surd& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return x.b_.is_zero() || x.d_ == y.d_;
}

BigFloat Surd::to_float(mpfr_prec_t prec) const {
  BigFloat out(a_, prec);
  if (!b_.is_zero()) {
    BigFloat root = BigFloat(Ratio(mpq_class(d_)), prec).sqrt();
    out = out + BigFloat(b_, prec) * root;
  }
  return out;
}

std::string Surd::str() const {
  if (is_rational()) return a_.str();
  std::string root = "sqrt(" + d_.get_str() + ")";
  std::string term = (b_ == Ratio(1)) ? root : b_.str() + "*" + root;
  if (a_.is_zero()) return term;
  if (b_.is_positive()) return a_.str() + "+" + term;
  return a_.str() + term;  // b's sign is embedded in its string
}

std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << s.str(); }

QuadraticRoots solve_quadratic(const Ratio& q2, const Ratio& q1, const Ratio& q0) {
  if (q2.is_zero()) throw NotApplicable("not a quadratic: leading coefficient is zero");
  Ratio disc = q1 * q1 - Ratio(4) * q2 * q0;
  if (disc.is_negative()) throw NotApplicable("negative discriminant");
  Surd root = Surd::sqrt_of(disc);
  Surd two_a = Surd(q2 * Ratio(2));
  Surd r1 = (Surd(-q1) - root) / two_a;
  Surd r2 = (Surd(-q1) + root) / two_a;
  if (r1 <= r2) return {r1, r2};
  return {r2, r1};
}

}  // namespace ratde
