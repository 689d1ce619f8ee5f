#ifndef RATDE_DYNAMICS_HPP
#define RATDE_DYNAMICS_HPP

#include <map>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "ratde/classifier.hpp"
#include "ratde/equation.hpp"
#include "ratde/reductions.hpp"

namespace ratde {

enum class ArithmeticMode { Exact, Float };

struct SimulationConfig {
  long steps = 5000;
  ArithmeticMode mode = ArithmeticMode::Exact;
  mpfr_prec_t precision_bits = 128;
  // Exact values whose numerator or denominator outgrows this many bits tip
  // the simulation over to floating arithmetic at the recorded step.
  std::size_t exact_bit_budget = std::size_t(1) << 16;
  // Stop early once a value exceeds this bound (witness searches).
  std::optional<Ratio> stop_above;
};

// A simulated orbit x_0 ... x_{n-1} with its arithmetic provenance: an exact
// rational prefix and, if the bit budget was hit (or Float mode was chosen),
// a floating suffix.
class Trajectory {
 public:
  Equation eq;
  InitialConditions ics;
  std::vector<Ratio> exact_values;
  std::vector<BigFloat> float_values;
  long degraded_at = -1;  // first float step; -1 when fully exact
  mpfr_prec_t precision_bits = 128;
  std::optional<long> exceeded_at;  // step that crossed config.stop_above

  long size() const {
    return static_cast<long>(exact_values.size() + float_values.size());
  }
  int order() const { return eq.k; }

  // x_n for n in [-k, size); negative n reads the initial conditions.
  bool exact_at(long n) const;
  Ratio exact(long n) const;          // requires exact_at(n)
  BigFloat at(long n) const;          // always available
};

// Iterates the recurrence. Throws NegativeInput for negative initial data,
// NotApplicable for surd initial data in Exact mode, and ZeroDenominator
// (with the step index) when the denominator vanishes.
Trajectory simulate(const Equation& eq, const InitialConditions& ics,
                    const SimulationConfig& cfg);

// CSV export, header "n,x_n"; exact rationals as "p/q", floats in round-trip
// decimal form.
void write_csv(const Trajectory& traj, std::ostream& os);

struct PeriodReport {
  long tested_period = 0;
  BigFloat residual{128};
  bool converged = false;
  std::optional<long> prime_period;
  std::vector<BigFloat> limit_cycle;  // window averages, one per residue class
};

// Compares the final `window` values against the values one period earlier.
// residual = max |x_{n} - x_{n-p}| over the window; when it is below the
// tolerance, the smallest divisor of p under which the window-averaged cycle
// repeats is reported as the prime period.
PeriodReport detect_cycle(const Trajectory& traj, long p, double tolerance,
                          long window);

// Exact certification that `ics` generate a periodic orbit of prime period p:
// iterates in exact (quadratic-field) arithmetic for `full_periods` periods,
// demands x_{n+p} = x_n everywhere, and refutes every proper divisor of p.
struct CycleCertificate {
  long period = 0;
  bool certified = false;
  std::vector<Surd> cycle;  // x_0 ... x_{p-1}
  long periods_checked = 0;
  std::vector<long> refuted_divisors;
  std::string message;
};

CycleCertificate certify_cycle(const Equation& eq, const InitialConditions& ics,
                               long p, long full_periods = 3);

// First grid entry whose orbit exceeds the threshold, with the crossing step.
// An empty result is inconclusive, not a proof of boundedness.
std::optional<std::pair<InitialConditions, long>> unbounded_witness_search(
    const Equation& eq, const std::vector<InitialConditions>& grid,
    const Ratio& threshold, long steps);

// Moduli-structured seed grid for the witness search: for each candidate
// modulus q and magnitude pair (M, 1/M), one pattern per phase with M on one
// residue class and 1/M elsewhere.
std::vector<InitialConditions> default_witness_grid(const Equation& eq);

enum class EnvelopeVariant { T1, T2 };

// Sliding block maxima of one residue class. For the alpha = 0 variant,
//   y^a_m = max_{l=1..rho} x_{(m-l)*modulus + a},    rho = floor(k/modulus);
// the alpha > 0 variant (modulus = 2g) adds the reciprocal terms
//   alpha / (x_{(m-l)*modulus + a - g} * sum(B)) and
//   alpha / (x_{m*modulus + a - g} * sum(B)).
// Nonincreasing under the matching theorem's boundary hypotheses.
struct Envelope {
  int phase = 0;
  int modulus = 1;
  int rho = 0;
  long start_m = 0;
  std::vector<BigFloat> values;
};

Envelope envelope(const Trajectory& traj, int phase, int modulus,
                  EnvelopeVariant variant);

// values[i] <= values[i-1] + slack for every i (slack absorbs float rounding
// on degraded trajectories; pass 0 for exact data).
bool nonincreasing(const Envelope& env, double slack = 0.0);

enum class BoundKind { Lower, Upper };

// Checks the bound-propagation lemma on a trajectory: first asserts the
// per-step premise x_n >= min(x_{n-1..n-k}, c) (dually for Upper), throwing
// HypothesisFailedAtStep if it ever fails, then returns whether the
// conclusion x_n >= min(initial conditions, c) holds at every step.
bool lemma4_monitor(const Trajectory& traj, const Ratio& c, BoundKind kind,
                    double slack = 0.0);

// Frobenius-number positivity propagation for the even-lag equation with
// alpha = 0: each residue class mod gcd(I_beta) is either identically zero or
// provably positive from some index on.
enum class ClassStatus { IdenticallyZero, EventuallyPositive };

struct ClassReport {
  ClassStatus status = ClassStatus::IdenticallyZero;
  long positive_from = -1;  // first orbit index provably positive forever
  bool confirmed = false;   // simulation agreed through the horizon
};

std::map<int, ClassReport> positivity_classes(const Theorem3Shape& shape,
                                              const InitialConditions& ics,
                                              long horizon);

// Finite-horizon sup/inf summary of a trajectory tail.
struct BoundReport {
  BigFloat sup_estimate{128};
  BigFloat inf_estimate{128};
  long tail_start = 0;
  std::optional<long> exceeded;
};

BoundReport summarize_bounds(const Trajectory& traj, long tail_start,
                             const std::optional<Ratio>& threshold = std::nullopt);

}  // namespace ratde

#endif  // RATDE_DYNAMICS_HPP
