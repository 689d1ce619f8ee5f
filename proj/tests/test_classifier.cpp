#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "ratde/classifier.hpp"
#include "ratde/reductions.hpp"

using namespace ratde;
using ratde::testing::ShapeSampler;
using ratde::testing::make_eq;

TEST_CASE("check_t1: worked examples") {
  CHECK(check_t1(make_eq("0", "2", {{2, "1"}, {4, "1"}}, {{1, "1"}, {3, "1"}})).holds);
  CHECK_FALSE(check_t1(make_eq("0", "2", {{2, "1"}, {4, "1"}}, {{2, "1"}})).holds);
  CHECK_FALSE(check_t1(make_eq("0", "2", {}, {{1, "1"}})).holds);  // sum(beta) = 0
  CHECK_FALSE(check_t1(make_eq("1", "2", {{2, "1"}, {4, "1"}}, {{1, "1"}})).holds);
  // A = 0 fails even with the divisibility condition fine
  CHECK_FALSE(check_t1(make_eq("0", "0", {{2, "1"}}, {{1, "1"}})).holds);
}

TEST_CASE("check_t2: worked examples") {
  CHECK(check_t2(make_eq("1", "1", {{2, "1"}}, {{1, "1"}})).holds);
  CHECK(check_t2(make_eq("1", "1", {{2, "1"}, {4, "1"}}, {{1, "1"}, {3, "1"}})).holds);
  CHECK_FALSE(check_t2(make_eq("1", "1", {{1, "1"}}, {{1, "1"}})).holds);  // 2 does not divide 1
  CHECK_FALSE(check_t2(make_eq("0", "1", {{2, "1"}}, {{1, "1"}})).holds);  // alpha = 0
  CHECK_FALSE(check_t2(make_eq("1", "1", {{2, "1"}}, {})).holds);          // sum(B) = 0
  // g = 3 family: I_beta = {6}, I_B = {3}: 6 | 6 and 6 | (3 + 3)
  CHECK(check_t2(make_eq("4", "2", {{6, "2"}}, {{3, "1"}})).holds);
}

TEST_CASE("t2 hypotheses force the parity split of the lags") {
  // Whenever check_t2 holds, i/g is even for numerator lags and j/g is odd
  // for denominator lags.
  std::mt19937_64 gen(5150);
  RationalSampler coeffs(551, 1, 9, 1, 9);
  int held = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::map<int, Ratio> beta, B;
    int nb = static_cast<int>(gen() % 3);
    for (int i = 0; i < nb; ++i) beta[1 + static_cast<int>(gen() % 12)] = coeffs.next();
    int nB = 1 + static_cast<int>(gen() % 3);
    for (int i = 0; i < nB; ++i) B[1 + static_cast<int>(gen() % 12)] = coeffs.next();
    Equation eq = Equation::create(coeffs.next(), coeffs.next(), beta, B);
    if (!check_t2(eq).holds) continue;
    ++held;
    IndexProfile p = index_profile(eq);
    const int g = p.g_union;
    for (int i : p.i_beta) {
      CHECK(i % g == 0);
      CHECK((i / g) % 2 == 0);
    }
    for (int j : p.i_b) {
      CHECK(j % g == 0);
      CHECK((j / g) % 2 == 1);
    }
  }
  CHECK(held > 30);
}

TEST_CASE("recognize_t3: worked examples") {
  auto special = recognize_t3(
      make_eq("1", "1/2", {{2, "3/4"}, {4, "3/4"}, {7, "1"}}, {{7, "1"}}));
  REQUIRE(special.has_value());
  CHECK(special->ell == 7);
  CHECK(special->even_beta == std::map<int, Ratio>{{2, Ratio(3, 4)}, {4, Ratio(3, 4)}});
  CHECK(special->sum_even_beta == Ratio(3, 2));
  CHECK(special->g() == 1);
  CHECK(special->k() == 7);

  auto two = recognize_t3(make_eq("0", "1", {{6, "2"}, {3, "1"}}, {{3, "1"}}));
  REQUIRE(two.has_value());
  CHECK(two->ell == 3);
  CHECK(two->even_beta == std::map<int, Ratio>{{6, Ratio(2)}});
  CHECK(two->g() == 3);

  CHECK_FALSE(recognize_t3(make_eq("0", "1", {{6, "2"}, {2, "1"}}, {{2, "1"}})).has_value());
  CHECK_FALSE(recognize_t3(make_eq("0", "1", {{6, "2"}}, {{3, "1"}})).has_value());  // no beta_ell
  CHECK_FALSE(recognize_t3(make_eq("0", "1", {{6, "2"}, {3, "2"}}, {{3, "1"}})).has_value());
  CHECK_FALSE(
      recognize_t3(make_eq("0", "1", {{5, "1"}, {3, "1"}}, {{3, "1"}})).has_value());
}

TEST_CASE("recognize_t3 normalizes the shared coefficient away") {
  // Multiplying everything by 3 leaves the recognized shape unchanged.
  Equation base = make_eq("2", "5", {{4, "7/2"}, {3, "1"}}, {{3, "1"}});
  auto s1 = recognize_t3(base);
  auto s2 = recognize_t3(base.scaled(Ratio(3)));
  REQUIRE(s1.has_value());
  REQUIRE(s2.has_value());
  CHECK(s1->ell == s2->ell);
  CHECK(s1->alpha == s2->alpha);
  CHECK(s1->A == s2->A);
  CHECK(s1->even_beta == s2->even_beta);
}

TEST_CASE("recognize_t3 scale invariance on random shapes") {
  ShapeSampler shapes(31337);
  RationalSampler scales(31338, 1, 9, 1, 9);
  for (int i = 0; i < 100; ++i) {
    Theorem3Shape shape = shapes.next(false);
    Equation eq = shape.to_equation().scaled(scales.next());
    auto back = recognize_t3(eq);
    REQUIRE(back.has_value());
    CHECK(back->ell == shape.ell);
    CHECK(back->even_beta == shape.even_beta);
    CHECK(back->alpha == shape.alpha);
    CHECK(back->A == shape.A);
  }
}

TEST_CASE("classify: worked examples") {
  Classification c1 = classify(make_eq("0", "3", {{2, "1"}, {4, "1"}}, {{1, "1"}}));
  CHECK(c1.applied == TheoremId::T1);
  CHECK(c1.verdict.kind == Verdict::Kind::EquilibriumConvergence);
  CHECK(c1.verdict.globally_asymptotically_stable);

  Classification c2 = classify(make_eq("1", "1", {{2, "1"}}, {{1, "1"}}));
  CHECK(c2.applied == TheoremId::T2);
  CHECK(c2.verdict.kind == Verdict::Kind::PeriodicConvergence);
  CHECK(c2.verdict.period == 2);

  Classification c3 = classify(make_eq("3", "1", {{6, "2"}, {3, "1"}}, {{3, "1"}}));
  CHECK(c3.applied == TheoremId::T3);
  CHECK(c3.verdict.kind == Verdict::Kind::PeriodicConvergence);
  CHECK(c3.verdict.period == 6);

  Classification gas = classify(make_eq("1", "2", {{2, "1"}}, {{1, "1"}}));
  CHECK(gas.verdict.kind == Verdict::Kind::EquilibriumConvergence);
  CHECK(gas.verdict.globally_asymptotically_stable);

  // T1 boundary and supercritical
  Classification b = classify(make_eq("0", "2", {{2, "1"}, {4, "1"}}, {{1, "1"}}));
  CHECK(b.verdict.kind == Verdict::Kind::PeriodicConvergence);
  CHECK(b.verdict.period == 2);
  Classification u = classify(make_eq("0", "1", {{2, "1"}, {4, "1"}}, {{1, "1"}}));
  CHECK(u.verdict.kind == Verdict::Kind::UnboundedExists);
}

TEST_CASE("classify: out of scope") {
  Classification c = classify(make_eq("0", "1", {{2, "1"}}, {{2, "1"}}));
  CHECK(c.verdict.kind == Verdict::Kind::OutOfScope);
  CHECK_FALSE(c.applied.has_value());
  CHECK(c.reports.size() == 4);
}

TEST_CASE("classify: the even-lag equation's six cases") {
  // case i: A > sum(even_beta)
  Classification ci = classify(make_eq("0", "3", {{6, "2"}, {3, "1"}}, {{3, "1"}}));
  CHECK(ci.verdict.kind == Verdict::Kind::EquilibriumConvergence);
  CHECK_FALSE(ci.verdict.globally_asymptotically_stable);
  CHECK(ci.applied == TheoremId::T4);  // alpha = 0, A > 0

  // case ii: alpha > 0 in the middle band
  Classification cii = classify(make_eq("1", "3/2", {{6, "2"}, {3, "1"}}, {{3, "1"}}));
  CHECK(cii.verdict.kind == Verdict::Kind::EquilibriumConvergence);
  CHECK(cii.applied == TheoremId::T3);

  // case iii: A = 0 in the middle band (sum(even_beta) < 1)
  Classification ciii = classify(make_eq("0", "0", {{6, "1/2"}, {3, "1"}}, {{3, "1"}}));
  CHECK(ciii.verdict.kind == Verdict::Kind::EquilibriumConvergence);
  CHECK(ciii.applied == TheoremId::T3);

  // case iv: alpha = 0, A > 0 in the middle band -> period gcd(I_beta)
  Classification civ = classify(make_eq("0", "3/2", {{6, "2"}, {3, "1"}}, {{3, "1"}}));
  CHECK(civ.verdict.kind == Verdict::Kind::PeriodicConvergence);
  CHECK(civ.verdict.period == 3);
  CHECK(civ.applied == TheoremId::T4);

  // case v boundary: A + 1 = sum(even_beta) -> period 2 gcd(I_beta)
  Classification cv = classify(make_eq("0", "1", {{6, "2"}, {3, "1"}}, {{3, "1"}}));
  CHECK(cv.verdict.kind == Verdict::Kind::PeriodicConvergence);
  CHECK(cv.verdict.period == 6);

  // case vi: A + 1 < sum(even_beta)
  Classification cvi = classify(make_eq("0", "1/2", {{6, "2"}, {3, "1"}}, {{3, "1"}}));
  CHECK(cvi.verdict.kind == Verdict::Kind::UnboundedExists);

  // Riccati degeneration: no even lags at all -> equilibrium convergence
  Classification ric = classify(make_eq("1", "1", {{3, "1"}}, {{3, "1"}}));
  CHECK(ric.verdict.kind == Verdict::Kind::EquilibriumConvergence);
}

TEST_CASE("classify never predicts period 0") {
  ShapeSampler shapes(2718);
  for (int i = 0; i < 300; ++i) {
    Theorem3Shape shape = shapes.next(i % 2 == 0);
    Classification c = classify(shape.to_equation());
    if (c.verdict.kind == Verdict::Kind::PeriodicConvergence) CHECK(c.verdict.period > 0);
  }
}

TEST_CASE("reduction preserves the predicted period") {
  // 2 * g_union of the shifted equation must equal the even-lag equation's
  // predicted boundary period 2 * gcd(I_beta).
  ShapeSampler shapes(424242);
  for (int i = 0; i < 100; ++i) {
    Theorem3Shape shape = shapes.next(true);
    auto [reduced, change] = shift_reduce(shape);
    IndexProfile p = index_profile(reduced);
    CHECK(2L * p.g_union == theorem3_period(shape));
  }
}
