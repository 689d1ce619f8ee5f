#ifndef RATDE_NUMTHEORY_HPP
#define RATDE_NUMTHEORY_HPP

#include <optional>
#include <set>

#include "ratde/errors.hpp"

namespace ratde {

// gcd of a set of positive integers; 0 for the empty set.
int gcd_set(const std::set<int>& s);

// True iff n is a nonnegative integer combination of the generators.
// Straight dynamic programming; independent of frobenius_number on purpose,
// so the two can cross-check each other.
bool representable(long n, const std::set<int>& s);

// Largest integer with no nonnegative representation over the generators,
// -1 when every nonnegative integer is representable. Requires gcd 1
// (NotCoprime otherwise). Shortest-path over residues modulo the smallest
// generator; inputs here are equation lags, so nothing fancier is needed.
long frobenius_number(const std::set<int>& s);

struct NumericalSemigroupInfo {
  std::set<int> generators;
  int gcd = 0;
  std::optional<long> frobenius;  // present only when gcd == 1
};

NumericalSemigroupInfo semigroup_info(const std::set<int>& s);

}  // namespace ratde

#endif  // RATDE_NUMTHEORY_HPP
