#include "ratde/reductions.hpp"

#include "ratde/errors.hpp"

namespace ratde {

VariableChange compose(const VariableChange& second, const VariableChange& first) {
  // w = (u + s2)/t2 with u = (x + s1)/t1 gives w = (x + s1 + s2 t1)/(t1 t2).
  VariableChange out;
  out.shift = first.shift + second.shift * first.scale;
  out.scale = first.scale * second.scale;
  return out;
}

InitialConditions InitialConditions::from_rationals(const std::vector<Ratio>& v) {
  InitialConditions ics;
  ics.values.reserve(v.size());
  for (const Ratio& r : v) ics.values.emplace_back(r);
  return ics;
}

InitialConditions InitialConditions::constant(int k, const Ratio& value) {
  return from_rationals(std::vector<Ratio>(static_cast<std::size_t>(k), value));
}

bool InitialConditions::all_rational() const {
  for (const Surd& v : values)
    if (!v.is_rational()) return false;
  return true;
}

bool InitialConditions::all_nonnegative() const {
  for (const Surd& v : values)
    if (v.is_negative()) return false;
  return true;
}

std::vector<Ratio> InitialConditions::rationals() const {
  std::vector<Ratio> out;
  out.reserve(values.size());
  for (const Surd& v : values) out.push_back(v.rational());
  return out;
}

std::vector<std::string> InitialConditions::to_strings() const {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const Surd& v : values) out.push_back(v.str());
  return out;
}

std::pair<Equation, VariableChange> shift_reduce_tail(const Theorem3Shape& shape) {
  Ratio new_alpha = shape.sum_even_beta + shape.alpha - shape.A;
  if (new_alpha.is_negative())
    throw NotApplicable("shift substitution needs alpha + sum(even_beta) >= A");
  std::map<int, Ratio> B{{shape.ell, Ratio(1)}};
  Equation reduced = Equation::create(new_alpha, shape.A + Ratio(1), shape.even_beta, B);
  VariableChange change;
  change.shift = Surd(Ratio(-1));  // w = x - 1
  change.scale = Surd(Ratio(1));
  return {reduced, change};
}

std::pair<Equation, VariableChange> shift_reduce(const Theorem3Shape& shape) {
  if (shape.alpha < shape.A)
    throw NotApplicable("shift reduction needs alpha >= A");
  return shift_reduce_tail(shape);
}

Surd positive_root_h(const Theorem3Shape& shape) {
  if (!shape.alpha.is_positive() || shape.alpha >= shape.A)
    throw NotApplicable("positive root of h is defined for 0 < alpha < A");
  // h(t) = t^2 + (sum(even_beta) + 1 - A) t - alpha has h(0) < 0 < h(A),
  // so the larger root lies in (0, A).
  QuadraticRoots roots =
      solve_quadratic(Ratio(1), shape.sum_even_beta + Ratio(1) - shape.A, -shape.alpha);
  return roots.high;
}

std::pair<Equation, VariableChange> surd_reduce(const Theorem3Shape& shape) {
  Surd root = positive_root_h(shape);
  if (!root.is_rational())
    throw IrrationalReduction(
        "positive root of h is irrational (" + root.str() +
        "); the reduced equation has no exact rational coefficients");
  Ratio r = root.rational();
  Ratio one_plus_r = Ratio(1) + r;
  std::map<int, Ratio> beta = shape.even_beta;
  beta[shape.ell] = one_plus_r;
  std::map<int, Ratio> B{{shape.ell, one_plus_r}};
  Equation reduced = Equation::create(Ratio(0), shape.A - r, beta, B);
  VariableChange change;
  change.shift = Surd(r);  // w = (x + r)/(1 + r)
  change.scale = Surd(one_plus_r);
  return {reduced, change};
}

namespace {

// 1 on the residue class 0 mod g (counting lag m as class m mod g), 0 off it.
InitialConditions zero_pattern(int k, int g, const Surd& on_class_zero) {
  InitialConditions ics;
  ics.values.reserve(static_cast<std::size_t>(k));
  for (int m = 1; m <= k; ++m)
    ics.values.push_back(m % g == 0 ? on_class_zero : Surd(Ratio(0)));
  return ics;
}

}  // namespace

InitialConditions periodic_ic_t1(const Equation& eq) {
  HypothesisReport rep = check_t1(eq);
  IndexProfile p = index_profile(eq);
  if (!rep.holds || eq.A != p.sum_beta)
    throw HypothesisViolated("needs the alpha = 0 hypotheses and A = sum(beta)");
  return zero_pattern(eq.k, p.g_beta, Surd(Ratio(1)));
}

InitialConditions unbounded_ic_t1(const Equation& eq) {
  HypothesisReport rep = check_t1(eq);
  IndexProfile p = index_profile(eq);
  if (!rep.holds || eq.A >= p.sum_beta)
    throw HypothesisViolated("needs the alpha = 0 hypotheses and A < sum(beta)");
  return zero_pattern(eq.k, p.g_beta, Surd(Ratio(1)));
}

InitialConditions periodic_ic_t2(const Equation& eq) {
  HypothesisReport rep = check_t2(eq);
  IndexProfile p = index_profile(eq);
  if (!rep.holds || eq.A != p.sum_beta)
    throw HypothesisViolated("needs the alpha > 0 hypotheses and A = sum(beta)");
  const int g = p.g_union;
  // Equilibrium at the boundary: x*(A + sum(B) x) = alpha + sum(beta) x with
  // A = sum(beta) collapses to x^2 = alpha / sum(B).
  Surd xbar = Surd::sqrt_of(eq.alpha / p.sum_b);
  Surd half_xbar = xbar / Surd(Ratio(2));
  Surd anti = Surd(Ratio(2) * eq.alpha) / (xbar * Surd(p.sum_b));
  InitialConditions ics;
  ics.values.reserve(static_cast<std::size_t>(eq.k));
  for (int m = 1; m <= eq.k; ++m) {
    if (m % (2 * g) == 0)
      ics.values.push_back(half_xbar);
    else if (m % (2 * g) == g)
      ics.values.push_back(anti);
    else
      ics.values.push_back(xbar);
  }
  return ics;
}

InitialConditions periodic_ic_t4_case_iv(const Theorem3Shape& shape) {
  if (!shape.alpha.is_zero() || !shape.A.is_positive() ||
      shape.A > shape.sum_even_beta || shape.A + Ratio(1) <= shape.sum_even_beta)
    throw HypothesisViolated(
        "case iv needs alpha = 0, A > 0 and sum(even_beta) - 1 < A <= sum(even_beta)");
  // Both 0 and sum(beta_i) - A are equilibria of the decoupled equation; the
  // numerator lag ell carries coefficient 1, hence the +1.
  Ratio v = shape.sum_even_beta + Ratio(1) - shape.A;
  return zero_pattern(shape.k(), shape.g(), Surd(v));
}

InitialConditions periodic_ic_t3_boundary(const Theorem3Shape& shape) {
  if (shape.A + Ratio(1) != shape.sum_even_beta)
    throw HypothesisViolated("boundary cycle needs A + 1 = sum(even_beta)");
  const int g = shape.g();
  Surd s = Surd::sqrt_of(Ratio(1) + shape.alpha);
  Surd one(Ratio(1));
  Surd low = one + s / Surd(Ratio(2));
  Surd high = one + Surd(Ratio(2)) * s;
  Surd mid = one + s;
  InitialConditions ics;
  ics.values.reserve(static_cast<std::size_t>(shape.k()));
  for (int m = 1; m <= shape.k(); ++m) {
    if (m % (2 * g) == 0)
      ics.values.push_back(low);
    else if (m % (2 * g) == g)
      ics.values.push_back(high);
    else
      ics.values.push_back(mid);
  }
  return ics;
}

std::vector<Surd> lift_cycle(const VariableChange& change, const std::vector<Surd>& cycle) {
  std::vector<Surd> out;
  out.reserve(cycle.size());
  for (const Surd& w : cycle) {
    Surd x = change.inverse(w);
    if (x.is_negative())
      throw NegativeLift("lifted value " + x.str() + " is negative");
    out.push_back(x);
  }
  return out;
}

}  // namespace ratde
