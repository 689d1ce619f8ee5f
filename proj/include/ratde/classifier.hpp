#ifndef RATDE_CLASSIFIER_HPP
#define RATDE_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "ratde/equation.hpp"

namespace ratde {

enum class TheoremId { T1, T2, T3, T4 };

const char* theorem_name(TheoremId id);

struct Condition {
  std::string name;
  bool satisfied = false;
  std::string detail;
};

struct HypothesisReport {
  TheoremId theorem = TheoremId::T1;
  bool holds = false;
  std::vector<Condition> conditions;
};

// The even-lag equation with a single odd delay ell,
//
//   x_n = (alpha + sum_i beta_{2i} x_{n-2i} + x_{n-ell}) / (A + x_{n-ell}),
//
// in normalized form (the shared coefficient on x_{n-ell} divided out).
struct Theorem3Shape {
  int ell = 0;                    // odd
  std::map<int, Ratio> even_beta; // even lag -> coefficient, all > 0
  Ratio alpha;
  Ratio A;
  Ratio sum_even_beta;

  int k() const;
  std::set<int> i_beta() const;  // even lags plus ell (coefficient 1)
  int g() const;                 // gcd of i_beta
  Equation to_equation() const;
};

struct Verdict {
  enum class Kind {
    EquilibriumConvergence,
    PeriodicConvergence,
    UnboundedExists,
    OutOfScope,
  };
  Kind kind = Kind::OutOfScope;
  bool globally_asymptotically_stable = false;  // EquilibriumConvergence only
  long period = 0;                              // PeriodicConvergence only
  std::string reason;

  static Verdict equilibrium(bool gas, std::string why);
  static Verdict periodic(long period, std::string why);
  static Verdict unbounded(std::string why);
  static Verdict out_of_scope(std::string why);
  std::string str() const;
};

const char* verdict_kind_name(Verdict::Kind k);

// Hypotheses of the alpha = 0 trichotomy: sum(beta) > 0, A > 0, and no
// denominator lag divisible by gcd(I_beta).
HypothesisReport check_t1(const Equation& eq);

// Hypotheses of the alpha > 0 trichotomy: sum(B) > 0, alpha > 0,
// 2g | i for every numerator lag and 2g | (j + g) for every denominator lag,
// where g = gcd(I_beta union I_B).
HypothesisReport check_t2(const Equation& eq);

// Matches the even-lag/odd-delay normal form: I_B = {ell} with ell odd,
// beta_ell = B_ell > 0, every other numerator lag even. Scale invariant.
std::optional<Theorem3Shape> recognize_t3(const Equation& eq);

// Predicted period for a recognized shape on the boundary A + 1 =
// sum(even_beta): twice the gcd of the numerator lags (ell included).
long theorem3_period(const Theorem3Shape& shape);

// Which of the six nonnegative-initial-condition cases of the even-lag
// equation applies; 1-based, matching i..vi.
int theorem4_case(const Theorem3Shape& shape);

struct Classification {
  std::vector<HypothesisReport> reports;  // T1, T2, T3, T4 in order
  Verdict verdict;
  std::optional<TheoremId> applied;
  std::optional<Theorem3Shape> shape;
};

// Runs all four hypothesis checks and emits the verdict of the first
// applicable theorem (the hypothesis families are mutually exclusive, so at
// most one applies). OutOfScope when none does.
Classification classify(const Equation& eq);

}  // namespace ratde

#endif  // RATDE_CLASSIFIER_HPP
