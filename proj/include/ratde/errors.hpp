#ifndef RATDE_ERRORS_HPP
#define RATDE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ratde {

// Base class for every error this library raises on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

// Denominator of the recurrence vanished; `step` is the orbit index where it
// happened (-1 when raised outside a simulation loop).
struct ZeroDenominator : Error {
  long step;
  explicit ZeroDenominator(long step_index = -1,
                           const std::string& msg = "zero denominator")
      : Error(msg), step(step_index) {}
};

struct InvalidEquation : Error {
  explicit InvalidEquation(const std::string& msg) : Error(msg) {}
};

// A = sum(beta), sum(B) = 0, alpha = 0: every value is an equilibrium.
struct DegenerateEquilibria : Error {
  explicit DegenerateEquilibria(const std::string& msg = "continuum of equilibria")
      : Error(msg) {}
};

struct NotCoprime : Error {
  explicit NotCoprime(const std::string& msg = "generator set has gcd != 1")
      : Error(msg) {}
};

struct NotApplicable : Error {
  explicit NotApplicable(const std::string& msg) : Error(msg) {}
};

// The positive root of the reduction quadratic is irrational, so the reduced
// equation has no exact rational coefficient representation.
struct IrrationalReduction : Error {
  explicit IrrationalReduction(const std::string& msg) : Error(msg) {}
};

struct HypothesisViolated : Error {
  explicit HypothesisViolated(const std::string& msg) : Error(msg) {}
};

struct NegativeLift : Error {
  explicit NegativeLift(const std::string& msg = "lifted value is negative")
      : Error(msg) {}
};

struct NegativeInput : Error {
  explicit NegativeInput(const std::string& msg = "negative state value")
      : Error(msg) {}
};

struct WindowTooLarge : Error {
  explicit WindowTooLarge(const std::string& msg = "trajectory shorter than window + period")
      : Error(msg) {}
};

struct TooShort : Error {
  explicit TooShort(const std::string& msg = "trajectory too short") : Error(msg) {}
};

// Per-step premise of the bound lemma failed; distinct from a conclusion
// violation, which is reported as a false return value.
struct HypothesisFailedAtStep : Error {
  long step;
  explicit HypothesisFailedAtStep(long step_index,
                                  const std::string& msg = "per-step bound hypothesis failed")
      : Error(msg + " at step " + std::to_string(step_index)), step(step_index) {}
};

struct IncompatibleSurds : Error {
  explicit IncompatibleSurds(const std::string& msg = "surds from different quadratic fields")
      : Error(msg) {}
};

}  // namespace ratde

#endif  // RATDE_ERRORS_HPP
