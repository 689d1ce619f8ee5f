#ifndef RATDE_EQSPEC_HPP
#define RATDE_EQSPEC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ratde/equation.hpp"
#include "ratde/reductions.hpp"

namespace ratde {

enum class ConstructorKind { T1Periodic, T2Periodic, T4ivPeriodic, T1Unbounded };

const char* constructor_name(ConstructorKind c);
ConstructorKind parse_constructor(const std::string& name);  // ParseError

// Equation document: JSON with keys k, alpha, A, beta, B and the optional
// initial_conditions / constructor. All numbers travel as rational strings so
// nothing is lost to floating point. Unknown keys are rejected.
struct EquationSpec {
  int k = 0;
  Ratio alpha;
  Ratio A;
  std::map<int, Ratio> beta;
  std::map<int, Ratio> B;
  std::optional<std::vector<Ratio>> initial_conditions;  // x_{-1} ... x_{-k}
  std::optional<ConstructorKind> constructor;

  static EquationSpec parse(const std::string& json_text);  // ParseError
  static EquationSpec from_file(const std::string& path);
  std::string to_json() const;

  // Validated Equation; checks that k matches the largest lag.
  Equation equation(std::vector<std::string>* warnings = nullptr) const;
};

}  // namespace ratde

#endif  // RATDE_EQSPEC_HPP
