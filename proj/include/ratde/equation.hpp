#ifndef RATDE_EQUATION_HPP
#define RATDE_EQUATION_HPP

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ratde/ratio.hpp"
#include "ratde/surd.hpp"

namespace ratde {

// The k-th order linear fractional recurrence
//
//   x_n = (alpha + sum_i beta_i x_{n-i}) / (A + sum_j B_j x_{n-j})
//
// with nonnegative rational parameters. Coefficient maps hold only strictly
// positive entries (a lag that is absent has coefficient zero), and k always
// equals the largest lag present.
struct Equation {
  int k = 0;
  Ratio alpha;
  Ratio A;
  std::map<int, Ratio> beta;
  std::map<int, Ratio> B;

  // Validates and normalizes: zero coefficients are dropped (reported through
  // `warnings` when given), negative data is rejected, k is derived from the
  // lags. Throws InvalidEquation.
  static Equation create(const Ratio& alpha, const Ratio& A,
                         const std::map<int, Ratio>& beta,
                         const std::map<int, Ratio>& B,
                         std::vector<std::string>* warnings = nullptr);

  // Same equation with every coefficient multiplied by c > 0; the dynamics
  // are unchanged.
  Equation scaled(const Ratio& c) const;

  std::string str() const;
};

// Index sets of the positive coefficients and the derived gcd data used by
// every hypothesis check.
struct IndexProfile {
  std::set<int> i_beta;
  std::set<int> i_b;
  int g_beta = 0;   // gcd of i_beta, 0 when empty
  int g_union = 0;  // gcd of i_beta and i_b together, 0 when both empty
  Ratio sum_beta;
  Ratio sum_b;
};

IndexProfile index_profile(const Equation& eq);

// One step of the recurrence. `history` is newest first: history[0] = x_{n-1},
// ..., history[k-1] = x_{n-k}. Throws ZeroDenominator when the denominator
// vanishes. The overloads evaluate in exact rational, exact quadratic-field,
// and floating arithmetic respectively.
Ratio step(const Equation& eq, std::span<const Ratio> history);
Surd step(const Equation& eq, std::span<const Surd> history);
BigFloat step(const Equation& eq, std::span<const BigFloat> history);

// Nonnegative fixed points of the recurrence: all x with
// x*(A + sum(B)*x) = alpha + sum(beta)*x. Rational roots are listed exactly;
// an irrational root is reported as p + q*sqrt(d). Throws DegenerateEquilibria
// when every value is fixed (A = sum(beta), sum(B) = 0, alpha = 0).
struct EquilibriumSet {
  std::vector<Ratio> rational_roots;  // ascending
  struct QuadraticRoot {
    Ratio p, q, d;  // value p + q*sqrt(d), d a non-square positive rational
  };
  std::optional<QuadraticRoot> quadratic_root;

  std::vector<Surd> all() const;
};

EquilibriumSet equilibria(const Equation& eq);

// min(a/c, b/d) and max(a/c, b/d); the mediant (a+b)/(c+d) always lies
// between them for nonnegative a, b and positive c, d.
std::pair<Ratio, Ratio> mediant_bounds(const Ratio& a, const Ratio& b,
                                       const Ratio& c, const Ratio& d);

}  // namespace ratde

#endif  // RATDE_EQUATION_HPP
