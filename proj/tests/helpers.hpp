#ifndef RATDE_TESTS_HELPERS_HPP
#define RATDE_TESTS_HELPERS_HPP

#include <initializer_list>
#include <map>
#include <random>
#include <utility>

#include "ratde/classifier.hpp"
#include "ratde/equation.hpp"
#include "ratde/random_ics.hpp"

namespace ratde::testing {

inline Equation make_eq(const char* alpha, const char* A,
                        std::initializer_list<std::pair<int, const char*>> beta,
                        std::initializer_list<std::pair<int, const char*>> B) {
  std::map<int, Ratio> bm, Bm;
  for (auto [lag, c] : beta) bm[lag] = Ratio::parse(c);
  for (auto [lag, c] : B) Bm[lag] = Ratio::parse(c);
  return Equation::create(Ratio::parse(alpha), Ratio::parse(A), bm, Bm);
}

// Random even-lag/odd-delay shape: ell odd <= 15, even lags <= 14, positive
// rational coefficients. When `alpha_ge_A` is set, alpha is drawn at or above
// A so the w = x - 1 substitution applies.
struct ShapeSampler {
  std::mt19937_64 gen;
  RationalSampler coeffs;

  explicit ShapeSampler(std::uint64_t seed) : gen(seed), coeffs(seed ^ 0x9e3779b9, 1, 9, 1, 9) {}

  Theorem3Shape next(bool alpha_ge_A) {
    Theorem3Shape shape;
    shape.ell = 1 + 2 * static_cast<int>(gen() % 8);  // 1, 3, ..., 15
    int nlags = 1 + static_cast<int>(gen() % 3);
    for (int i = 0; i < nlags; ++i) {
      int lag = 2 * (1 + static_cast<int>(gen() % 7));  // 2, 4, ..., 14
      shape.even_beta[lag] = coeffs.next();
    }
    shape.sum_even_beta = Ratio(0);
    for (auto& [lag, c] : shape.even_beta) shape.sum_even_beta += c;
    shape.A = coeffs.next();
    shape.alpha = alpha_ge_A ? shape.A + coeffs.next() : coeffs.next();
    return shape;
  }
};

}  // namespace ratde::testing

#endif  // RATDE_TESTS_HELPERS_HPP
