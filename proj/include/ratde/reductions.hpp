#ifndef RATDE_REDUCTIONS_HPP
#define RATDE_REDUCTIONS_HPP

#include <utility>
#include <vector>

#include "ratde/classifier.hpp"
#include "ratde/equation.hpp"
#include "ratde/surd.hpp"

namespace ratde {

// Invertible affine substitution w = (x + shift)/scale with scale > 0.
// Forward maps original state to reduced state; inverse is x = scale*w - shift.
struct VariableChange {
  Surd shift;
  Surd scale{Ratio(1)};

  Surd forward(const Surd& x) const { return (x + shift) / scale; }
  Surd inverse(const Surd& w) const { return scale * w - shift; }
};

// first-then-second as a single affine change.
VariableChange compose(const VariableChange& second, const VariableChange& first);

// State snapshot x_{-1} ... x_{-k}; values[m-1] holds x_{-m}. Entries are
// exact field elements; most constructors produce plain rationals.
struct InitialConditions {
  std::vector<Surd> values;

  InitialConditions() = default;
  explicit InitialConditions(std::vector<Surd> v) : values(std::move(v)) {}
  static InitialConditions from_rationals(const std::vector<Ratio>& v);
  static InitialConditions constant(int k, const Ratio& value);

  std::size_t size() const { return values.size(); }
  bool all_rational() const;
  bool all_nonnegative() const;
  std::vector<Ratio> rationals() const;  // requires all_rational()
  std::vector<std::string> to_strings() const;
};

// w = x - 1 on the even-lag equation: valid whenever alpha >= A, where the
// shifted orbit stays nonnegative. Produces
//   w_n = (sum(even_beta) + alpha - A + sum beta_{2i} w_{n-2i}) / (A + 1 + w_{n-ell}).
// Throws NotApplicable when alpha < A.
std::pair<Equation, VariableChange> shift_reduce(const Theorem3Shape& shape);

// Same substitution for the tail regime alpha + sum(even_beta) >= A (the
// reduced equation still has nonnegative parameters; the orbit enters the
// admissible cone once x_n > 1). Used to finish the alpha = 0 analysis.
std::pair<Equation, VariableChange> shift_reduce_tail(const Theorem3Shape& shape);

// Unique positive root r of h(t) = t^2 + (sum(even_beta) + 1 - A)t - alpha,
// for 0 < alpha < A. Always 0 < r < A.
Surd positive_root_h(const Theorem3Shape& shape);

// w = (x + r)/(1 + r) for 0 < alpha < A: eliminates the constant term,
//   w_n = ((1+r) w_{n-ell} + sum beta_{2i} w_{n-2i}) / (A - r + (1+r) w_{n-ell}).
// Exact only when r is rational; throws IrrationalReduction otherwise.
std::pair<Equation, VariableChange> surd_reduce(const Theorem3Shape& shape);

// Boundary cycle seeds from the proofs. Each returns initial conditions whose
// orbit is exactly periodic with the stated prime period.
InitialConditions periodic_ic_t1(const Equation& eq);          // A = sum(beta)
InitialConditions periodic_ic_t2(const Equation& eq);          // A = sum(beta)
InitialConditions periodic_ic_t4_case_iv(const Theorem3Shape& shape);

// Boundary cycle for the even-lag equation at A + 1 = sum(even_beta), valid
// for every alpha >= 0: with s = sqrt(1 + alpha), the pattern is 1 + s/2 on
// class 0 mod 2g, 1 + 2s on class g, 1 + s elsewhere. Equals the lift of the
// reduced-equation cycle through the proof's changes of variables.
InitialConditions periodic_ic_t3_boundary(const Theorem3Shape& shape);

// Zero-pattern seed whose orbit obeys the linear recursion
// x_n = sum(beta_i) x_{n-i} / A; unbounded when A < sum(beta).
InitialConditions unbounded_ic_t1(const Equation& eq);

// Pointwise inverse transform x = scale*w - shift of a reduced-equation cycle.
// Throws NegativeLift if any lifted value leaves the nonnegative cone.
std::vector<Surd> lift_cycle(const VariableChange& change, const std::vector<Surd>& cycle);

}  // namespace ratde

#endif  // RATDE_REDUCTIONS_HPP
