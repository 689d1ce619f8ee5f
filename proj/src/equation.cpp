#include "ratde/equation.hpp"

#include <numeric>
#include <sstream>

#include "ratde/errors.hpp"

namespace ratde {

Equation Equation::create(const Ratio& alpha, const Ratio& A,
                          const std::map<int, Ratio>& beta,
                          const std::map<int, Ratio>& B,
                          std::vector<std::string>* warnings) {
  if (alpha.is_negative()) throw InvalidEquation("alpha must be nonnegative");
  if (A.is_negative()) throw InvalidEquation("A must be nonnegative");

  Equation eq;
  eq.alpha = alpha;
  eq.A = A;
  auto take = [&](const std::map<int, Ratio>& in, std::map<int, Ratio>& out,
                  const char* which) {
    for (const auto& [lag, coeff] : in) {
      if (lag < 1) throw InvalidEquation(std::string(which) + " lag must be >= 1");
      if (coeff.is_negative())
        throw InvalidEquation(std::string(which) + " coefficient at lag " +
                              std::to_string(lag) + " is negative");
      if (coeff.is_zero()) {
        if (warnings != nullptr)
          warnings->push_back(std::string("dropped zero ") + which +
                              " coefficient at lag " + std::to_string(lag));
        continue;
      }
      out[lag] = coeff;
    }
  };
  take(beta, eq.beta, "beta");
  take(B, eq.B, "B");

  if (eq.beta.empty() && eq.B.empty())
    throw InvalidEquation("equation has no positive coefficient at any lag");
  if (eq.A.is_zero() && eq.B.empty())
    throw InvalidEquation("denominator is identically zero (A = 0 and B empty)");

  int k = 0;
  if (!eq.beta.empty()) k = std::max(k, eq.beta.rbegin()->first);
  if (!eq.B.empty()) k = std::max(k, eq.B.rbegin()->first);
  eq.k = k;
  return eq;
}

Equation Equation::scaled(const Ratio& c) const {
  if (!c.is_positive()) throw InvalidEquation("scale factor must be positive");
  Equation out = *this;
  out.alpha = alpha * c;
  out.A = A * c;
  for (auto& [lag, coeff] : out.beta) coeff = coeff * c;
  for (auto& [lag, coeff] : out.B) coeff = coeff * c;
  return out;
}

std::string Equation::str() const {
  std::ostringstream os;
  os << "x[n] = (" << alpha.str();
  for (const auto& [lag, coeff] : beta) os << " + " << coeff.str() << "*x[n-" << lag << "]";
  os << ") / (" << A.str();
  for (const auto& [lag, coeff] : B) os << " + " << coeff.str() << "*x[n-" << lag << "]";
  os << ")";
  return os.str();
}

IndexProfile index_profile(const Equation& eq) {
  IndexProfile p;
  for (const auto& [lag, coeff] : eq.beta) {
    p.i_beta.insert(lag);
    p.sum_beta += coeff;
  }
  for (const auto& [lag, coeff] : eq.B) {
    p.i_b.insert(lag);
    p.sum_b += coeff;
  }
  int g = 0;
  for (int lag : p.i_beta) g = std::gcd(g, lag);
  p.g_beta = g;
  for (int lag : p.i_b) g = std::gcd(g, lag);
  p.g_union = g;
  return p;
}

namespace {

// Shared stepping kernel over any exact or floating value type that supports
// arithmetic with promoted Ratio coefficients.
template <typename Value, typename Promote>
Value step_impl(const Equation& eq, std::span<const Value> history, Promote promote,
                bool (*is_zero)(const Value&)) {
  if (static_cast<int>(history.size()) < eq.k)
    throw NotApplicable("history shorter than the equation order");
  Value num = promote(eq.alpha);
  for (const auto& [lag, coeff] : eq.beta)
    num = num + promote(coeff) * history[static_cast<std::size_t>(lag - 1)];
  Value den = promote(eq.A);
  for (const auto& [lag, coeff] : eq.B)
    den = den + promote(coeff) * history[static_cast<std::size_t>(lag - 1)];
  if (is_zero(den)) throw ZeroDenominator();
  return num / den;
}

}  // namespace

Ratio step(const Equation& eq, std::span<const Ratio> history) {
  return step_impl<Ratio>(
      eq, history, [](const Ratio& r) { return r; },
      [](const Ratio& v) { return v.is_zero(); });
}

Surd step(const Equation& eq, std::span<const Surd> history) {
  return step_impl<Surd>(
      eq, history, [](const Ratio& r) { return Surd(r); },
      [](const Surd& v) { return v.is_zero(); });
}

BigFloat step(const Equation& eq, std::span<const BigFloat> history) {
  mpfr_prec_t prec = 128;
  for (const auto& h : history) prec = std::max(prec, h.precision());
  return step_impl<BigFloat>(
      eq, history, [prec](const Ratio& r) { return BigFloat(r, prec); },
      [](const BigFloat& v) { return v.is_zero(); });
}

std::vector<Surd> EquilibriumSet::all() const {
  std::vector<Surd> out;
  out.reserve(rational_roots.size() + 1);
  for (const Ratio& r : rational_roots) out.emplace_back(r);
  if (quadratic_root)
    out.push_back(Surd::make(quadratic_root->p, quadratic_root->q, quadratic_root->d));
  return out;
}

EquilibriumSet equilibria(const Equation& eq) {
  IndexProfile p = index_profile(eq);
  EquilibriumSet out;

  if (p.sum_b.is_zero()) {
    // Linear fixed-point equation x*(A - sum_beta) = alpha.
    if (eq.A == p.sum_beta) {
      if (eq.alpha.is_zero()) throw DegenerateEquilibria();
      return out;  // no solution
    }
    Ratio root = eq.alpha / (eq.A - p.sum_beta);
    if (!root.is_negative()) out.rational_roots.push_back(root);
    return out;
  }

  // sum_b * x^2 + (A - sum_beta) * x - alpha = 0
  Ratio q2 = p.sum_b;
  Ratio q1 = eq.A - p.sum_beta;
  Ratio q0 = -eq.alpha;
  Ratio disc = q1 * q1 - Ratio(4) * q2 * q0;
  Ratio sqrt_disc;
  if (disc.perfect_square(&sqrt_disc)) {
    Ratio lo = (-q1 - sqrt_disc) / (Ratio(2) * q2);
    Ratio hi = (-q1 + sqrt_disc) / (Ratio(2) * q2);
    if (!lo.is_negative()) out.rational_roots.push_back(lo);
    if (!hi.is_negative() && hi != lo) out.rational_roots.push_back(hi);
  } else {
    // Exactly one root is positive (the product of the roots is -alpha/sum_b
    // and the discriminant is not a square, so alpha > 0).
    out.quadratic_root = EquilibriumSet::QuadraticRoot{
        -q1 / (Ratio(2) * q2), Ratio(1) / (Ratio(2) * q2), disc};
  }
  return out;
}

std::pair<Ratio, Ratio> mediant_bounds(const Ratio& a, const Ratio& b,
                                       const Ratio& c, const Ratio& d) {
  if (a.is_negative() || b.is_negative())
    throw NotApplicable("mediant bounds need nonnegative numerators");
  if (!c.is_positive() || !d.is_positive())
    throw NotApplicable("mediant bounds need positive denominators");
  Ratio ac = a / c;
  Ratio bd = b / d;
  return ac <= bd ? std::make_pair(ac, bd) : std::make_pair(bd, ac);
}

}  // namespace ratde
