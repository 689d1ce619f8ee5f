#include "ratde/ratio.hpp"

#include <cctype>
#include <ostream>

namespace ratde {

Ratio::Ratio(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Ratio::Ratio(const mpq_class& q) : v_(q) {
  if (v_.get_den() == 0) throw DivisionByZero("rational with zero denominator");
  v_.canonicalize();
}

Ratio Ratio::parse(std::string_view text) {
  // trim
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (s.empty()) throw ParseError("empty rational literal");

  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };

  std::size_t slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw ParseError("bad rational literal: \"" + std::string(text) + "\"");

  mpq_class q;
  if (q.set_str(num + "/" + den, 10) != 0)
    throw ParseError("bad rational literal: \"" + std::string(text) + "\"");
  if (q.get_den() == 0)
    throw ParseError("zero denominator in literal: \"" + std::string(text) + "\"");
  q.canonicalize();
  return Ratio(q);
}

Ratio& Ratio::operator/=(const Ratio& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

std::string Ratio::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t Ratio::bit_size() const {
  std::size_t n = mpz_sizeinbase(v_.get_num().get_mpz_t(), 2);
  std::size_t d = mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
  return n > d ? n : d;
}

bool Ratio::perfect_square(Ratio* root) const {
  if (is_negative()) return false;
  const mpz_class& num = v_.get_num();
  const mpz_class& den = v_.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  if (root != nullptr) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    *root = Ratio(mpq_class(rn, rd));
  }
  return true;
}

Ratio Ratio::dyadic_round(unsigned bits) const {
  mpz_class scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
  // floor(x * 2^bits + 1/2)
  mpq_class scaled = v_ * mpq_class(scale) + mpq_class(1, 2);
  mpz_class n;
  mpz_fdiv_q(n.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
  mpq_class out(n, scale);
  out.canonicalize();
  return Ratio(out);
}

std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

}  // namespace ratde
