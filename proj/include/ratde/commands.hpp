#ifndef RATDE_COMMANDS_HPP
#define RATDE_COMMANDS_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include "ratde/eqspec.hpp"
#include "ratde/report.hpp"

namespace ratde {

// Exit codes shared by every command: 0 success, 1 no applicable theorem,
// 2 input or numeric failure, 3 verification mismatch.
inline constexpr int kExitOk = 0;
inline constexpr int kExitOutOfScope = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitMismatch = 3;

struct CommandOptions {
  long steps = 5000;
  ArithmeticMode mode = ArithmeticMode::Exact;
  mpfr_prec_t precision_bits = 128;
  double tolerance = 1e-9;
  long window = 0;  // 0: auto, 4 * k * period
  std::uint64_t seed = 1729;
  long random_trials = 50;
  Ratio threshold = Ratio(1000000);
  // Comparison slack for monitor inequalities on float-degraded trajectories;
  // exact segments are compared exactly.
  double slack = 1e-18;
};

// Hypothesis reports plus the trichotomy verdict.
RunReport cmd_classify(const EquationSpec& spec, const CommandOptions& opts);

// Full pipeline: classify, then check the applicable theorem's claim.
//  - boundary verdicts: construct the proof's initial conditions, certify the
//    exact prime period, and require seeded random orbits to converge to the
//    predicted period;
//  - equilibrium verdicts: seeded random orbits must settle on an equilibrium;
//  - unbounded verdicts: the constructed seed (or a grid search, with a
//    reduction fallback for the even-lag form) must blow past the threshold.
RunReport cmd_verify(const EquationSpec& spec, const CommandOptions& opts);

// Constructed initial conditions for the spec's constructor tag.
InitialConditions construct_ics(const EquationSpec& spec, ConstructorKind kind);

// Trajectory CSV ("n,x_n").
void cmd_simulate(const EquationSpec& spec, const CommandOptions& opts, std::ostream& csv);

struct SweepParams {
  std::string param;  // "A" or "alpha"
  Ratio from;
  Ratio to;
  long count = 2;
};

// One CSV row per grid point: exact parameter value, verdict kind, predicted
// period, detected prime period, residual, witness flag. Points run
// concurrently; rows are emitted in grid order.
void cmd_sweep(const EquationSpec& spec, const SweepParams& params,
               const CommandOptions& opts, std::ostream& csv);

// Boundary cycle seeds for the even-lag equation at A + 1 = sum(even_beta),
// built through the proof's changes of variables whenever they are exact:
// alpha >= A uses w = x - 1 directly; 0 < alpha < A goes through the root
// substitution first; an irrational root falls back to the equivalent direct
// quadratic-field pattern.
struct BoundaryConstruction {
  InitialConditions ics;
  std::string route;
};
BoundaryConstruction t3_boundary_ics(const Theorem3Shape& shape);

}  // namespace ratde

#endif  // RATDE_COMMANDS_HPP
