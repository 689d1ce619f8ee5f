#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ratde/commands.hpp"

using namespace ratde;

namespace {

const char* kT2Boundary = R"({
  "k": 2,
  "alpha": "1",
  "A": "1",
  "beta": {"2": "1"},
  "B": {"1": "1"}
})";

CommandOptions fast_opts() {
  CommandOptions opts;
  opts.steps = 1500;
  opts.random_trials = 8;
  return opts;
}

}  // namespace

TEST_CASE("spec parsing: round-trip is lossless") {
  EquationSpec spec = EquationSpec::parse(kT2Boundary);
  CHECK(spec.k == 2);
  CHECK(spec.alpha == Ratio(1));
  CHECK(spec.beta == std::map<int, Ratio>{{2, Ratio(1)}});
  EquationSpec again = EquationSpec::parse(spec.to_json());
  CHECK(again.to_json() == spec.to_json());

  EquationSpec with_ics = EquationSpec::parse(R"({
    "k": 2, "alpha": "1", "A": "1", "beta": {"2": "1"}, "B": {"1": "1"},
    "initial_conditions": ["2", "1/2"], "constructor": "t2-periodic"
  })");
  CHECK(with_ics.initial_conditions->size() == 2);
  CHECK(with_ics.constructor == ConstructorKind::T2Periodic);
  CHECK(EquationSpec::parse(with_ics.to_json()).to_json() == with_ics.to_json());
}

TEST_CASE("spec parsing: rejections") {
  CHECK_THROWS_AS(EquationSpec::parse("not json"), ParseError);
  CHECK_THROWS_AS(EquationSpec::parse(R"({"k": 1, "alpha": "0", "A": "1",
    "beta": {"1": "1"}, "B": {}, "surprise": 1})"),
                  ParseError);  // unknown key
  CHECK_THROWS_AS(EquationSpec::parse(R"({"k": 1, "alpha": "0.5", "A": "1",
    "beta": {"1": "1"}, "B": {}})"),
                  ParseError);  // float literal
  CHECK_THROWS_AS(EquationSpec::parse(R"({"alpha": "0", "A": "1",
    "beta": {"1": "1"}, "B": {}})"),
                  ParseError);  // missing k
  CHECK_THROWS_AS(EquationSpec::parse(R"({"k": 1, "alpha": "0", "A": "1",
    "beta": {"x": "1"}, "B": {}})"),
                  ParseError);  // non-integer lag

  // k must match the largest lag; initial conditions must have length k
  EquationSpec bad_k = EquationSpec::parse(R"({"k": 3, "alpha": "1", "A": "1",
    "beta": {"2": "1"}, "B": {"1": "1"}})");
  CHECK_THROWS_AS(bad_k.equation(), ParseError);
  EquationSpec bad_len = EquationSpec::parse(R"({"k": 2, "alpha": "1", "A": "1",
    "beta": {"2": "1"}, "B": {"1": "1"}, "initial_conditions": ["1"]})");
  CHECK_THROWS_AS(bad_len.equation(), ParseError);
}

TEST_CASE("constructor names round-trip") {
  for (ConstructorKind k : {ConstructorKind::T1Periodic, ConstructorKind::T2Periodic,
                            ConstructorKind::T4ivPeriodic, ConstructorKind::T1Unbounded})
    CHECK(parse_constructor(constructor_name(k)) == k);
  CHECK_THROWS_AS(parse_constructor("t9-chaotic"), ParseError);
}

TEST_CASE("cmd_classify: verdict and exit codes") {
  CommandOptions opts;
  RunReport rep = cmd_classify(EquationSpec::parse(kT2Boundary), opts);
  CHECK(rep.exit_status == kExitOk);
  CHECK(rep.verdict.kind == Verdict::Kind::PeriodicConvergence);
  CHECK(rep.verdict.period == 2);
  CHECK(rep.hypotheses.size() == 4);

  // the even-lag special form on its boundary: period 2 gcd({2,4,7}) = 2
  RunReport sec3 = cmd_classify(EquationSpec::parse(R"({
    "k": 7, "alpha": "1", "A": "1/2",
    "beta": {"2": "3/4", "4": "3/4", "7": "1"}, "B": {"7": "1"}})"),
                                opts);
  CHECK(sec3.verdict.kind == Verdict::Kind::PeriodicConvergence);
  CHECK(sec3.verdict.period == 2);
  CHECK(sec3.applied == std::string("T3"));

  RunReport oos = cmd_classify(EquationSpec::parse(R"({
    "k": 2, "alpha": "0", "A": "1", "beta": {"2": "1"}, "B": {"2": "1"}})"),
                               opts);
  CHECK(oos.exit_status == kExitOutOfScope);
  CHECK(oos.verdict.kind == Verdict::Kind::OutOfScope);

  RunReport gas = cmd_classify(EquationSpec::parse(R"({
    "k": 2, "alpha": "1", "A": "2", "beta": {"2": "1"}, "B": {"1": "1"}})"),
                               opts);
  CHECK(gas.verdict.kind == Verdict::Kind::EquilibriumConvergence);
  CHECK(gas.verdict.globally_asymptotically_stable);
}

TEST_CASE("cmd_verify: boundary instance certifies and converges") {
  RunReport rep = cmd_verify(EquationSpec::parse(kT2Boundary), fast_opts());
  CHECK(rep.exit_status == kExitOk);
  REQUIRE(rep.certificate.has_value());
  CHECK(rep.certificate->certified);
  CHECK(rep.certificate->cycle == std::vector<std::string>{"1/2", "2"});
  CHECK(rep.constructed_ics == std::vector<std::string>{"2", "1/2"});
}

TEST_CASE("cmd_verify: T4 case iv instance reports positivity classes") {
  RunReport rep = cmd_verify(EquationSpec::parse(R"({
    "k": 6, "alpha": "0", "A": "3/2",
    "beta": {"6": "2", "3": "1"}, "B": {"3": "1"}})"),
                             fast_opts());
  CHECK(rep.exit_status == kExitOk);
  REQUIRE(rep.certificate.has_value());
  CHECK(rep.certificate->certified);
  CHECK(rep.certificate->period == 3);
  CHECK(rep.monitors.count("positivity_classes") == 1);
}

TEST_CASE("cmd_verify: honest inconclusive on a starved witness search") {
  // Supercritical instance with far too few steps to reach the threshold:
  // the verifier must report a mismatch, not fake success.
  EquationSpec spec = EquationSpec::parse(R"({
    "k": 2, "alpha": "1", "A": "1/2", "beta": {"2": "1"}, "B": {"1": "1"}})");
  CommandOptions starved = fast_opts();
  starved.steps = 10;
  RunReport rep = cmd_verify(spec, starved);
  CHECK(rep.exit_status == kExitMismatch);
  CHECK(rep.monitors.at("unbounded_witness").find("inconclusive") != std::string::npos);

  CommandOptions enough = fast_opts();
  RunReport ok = cmd_verify(spec, enough);
  CHECK(ok.exit_status == kExitOk);
}

TEST_CASE("cmd_verify: boundary construction routes below alpha = A") {
  // 0 < alpha < A with a rational root: goes through the root substitution
  RunReport rational_route = cmd_verify(EquationSpec::parse(R"({
    "k": 9, "alpha": "5/4", "A": "3/2",
    "beta": {"6": "5/2", "9": "1"}, "B": {"9": "1"}})"),
                                        fast_opts());
  CHECK(rational_route.exit_status == kExitOk);
  REQUIRE(rational_route.certificate.has_value());
  CHECK(rational_route.certificate->certified);
  CHECK(rational_route.certificate->period == 6);
  bool used_surd_route = false;
  for (const std::string& n : rational_route.notes)
    if (n.find("surd_reduce") != std::string::npos) used_surd_route = true;
  CHECK(used_surd_route);

  // irrational root: falls back to the direct quadratic-field pattern
  RunReport surd_route = cmd_verify(EquationSpec::parse(R"({
    "k": 9, "alpha": "1/2", "A": "1",
    "beta": {"6": "2", "9": "1"}, "B": {"9": "1"}})"),
                                    fast_opts());
  CHECK(surd_route.exit_status == kExitOk);
  REQUIRE(surd_route.certificate.has_value());
  CHECK(surd_route.certificate->certified);
  CHECK(surd_route.certificate->period == 6);
  bool direct = false;
  for (const std::string& n : surd_route.notes)
    if (n.find("direct quadratic-field") != std::string::npos) direct = true;
  CHECK(direct);
}

TEST_CASE("cmd_verify: out of scope exits 1") {
  RunReport rep = cmd_verify(EquationSpec::parse(R"({
    "k": 2, "alpha": "0", "A": "1", "beta": {"2": "1"}, "B": {"2": "1"}})"),
                             fast_opts());
  CHECK(rep.exit_status == kExitOutOfScope);
}

TEST_CASE("reports are deterministic and round-trip through JSON") {
  RunReport a = cmd_verify(EquationSpec::parse(kT2Boundary), fast_opts());
  RunReport b = cmd_verify(EquationSpec::parse(kT2Boundary), fast_opts());
  CHECK(a.to_json() == b.to_json());
  RunReport back = RunReport::from_json(a.to_json());
  CHECK(back.to_json() == a.to_json());
  CHECK(back.to_text() == a.to_text());
}

TEST_CASE("cmd_simulate: constructed seeds and plain seeds") {
  EquationSpec spec = EquationSpec::parse(R"({
    "k": 4, "alpha": "0", "A": "2",
    "beta": {"2": "1", "4": "1"}, "B": {"1": "1"},
    "constructor": "t1-periodic"})");
  CommandOptions opts;
  opts.steps = 10;
  std::ostringstream csv;
  cmd_simulate(spec, opts, csv);
  CHECK(csv.str() ==
        "n,x_n\n0,1\n1,0\n2,1\n3,0\n4,1\n5,0\n6,1\n7,0\n8,1\n9,0\n");

  EquationSpec zeros = EquationSpec::parse(R"({
    "k": 1, "alpha": "0", "A": "1", "beta": {"1": "1"}, "B": {"1": "1"},
    "initial_conditions": ["0"]})");
  std::ostringstream z;
  cmd_simulate(zeros, opts, z);
  CHECK(z.str() == "n,x_n\n0,0\n1,0\n2,0\n3,0\n4,0\n5,0\n6,0\n7,0\n8,0\n9,0\n");

  EquationSpec fib = EquationSpec::parse(R"({
    "k": 4, "alpha": "0", "A": "1",
    "beta": {"2": "1", "4": "1"}, "B": {"1": "1"},
    "constructor": "t1-unbounded"})");
  CommandOptions fibopts;
  fibopts.steps = 20;
  std::ostringstream f;
  cmd_simulate(fib, fibopts, f);
  std::string out = f.str();
  CHECK(out.find("\n0,2\n") != std::string::npos);
  CHECK(out.find("\n2,3\n") != std::string::npos);
  CHECK(out.find("\n4,5\n") != std::string::npos);
  CHECK(out.find("\n6,8\n") != std::string::npos);
  CHECK(out.find("\n8,13\n") != std::string::npos);

  EquationSpec noics = EquationSpec::parse(kT2Boundary);
  std::ostringstream sink;
  CHECK_THROWS_AS(cmd_simulate(noics, opts, sink), ParseError);
}

TEST_CASE("construct_ics matches the reduction constructors") {
  EquationSpec spec = EquationSpec::parse(R"({
    "k": 6, "alpha": "0", "A": "3/2",
    "beta": {"6": "2", "3": "1"}, "B": {"3": "1"}})");
  InitialConditions ics = construct_ics(spec, ConstructorKind::T4ivPeriodic);
  CHECK(ics.to_strings() ==
        std::vector<std::string>{"0", "0", "3/2", "0", "0", "3/2"});
  CHECK_THROWS_AS(construct_ics(spec, ConstructorKind::T2Periodic), HypothesisViolated);
}

TEST_CASE("cmd_sweep: verdicts flip across the boundary at the exact grid point") {
  EquationSpec spec = EquationSpec::parse(R"({
    "k": 4, "alpha": "0", "A": "1",
    "beta": {"2": "1", "4": "1"}, "B": {"1": "1"}})");
  SweepParams params;
  params.param = "A";
  params.from = Ratio(1);
  params.to = Ratio(3);
  params.count = 9;
  CommandOptions opts;
  opts.steps = 3000;
  std::ostringstream csv;
  cmd_sweep(spec, params, opts, csv);

  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "param_value,verdict,predicted_period,prime_period,residual,witness");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  REQUIRE(rows.size() == 9);
  // A in {1, 5/4, 3/2, 7/4}: unbounded with a found witness
  for (int i = 0; i < 4; ++i) {
    CHECK(rows[i].find("UnboundedExists") != std::string::npos);
    CHECK(rows[i].substr(rows[i].size() - 2) == ",1");
  }
  // A = 2 exactly: periodic with prime period 2
  CHECK(rows[4].substr(0, 2) == "2,");
  CHECK(rows[4].find("PeriodicConvergence,2,2,") != std::string::npos);
  // A beyond 2: equilibrium convergence, prime period 1
  for (int i = 5; i < 9; ++i) {
    CHECK(rows[i].find("EquilibriumConvergence") != std::string::npos);
    CHECK(rows[i].find(",1,") != std::string::npos);
  }

  SweepParams bad = params;
  bad.param = "beta";
  std::ostringstream sink;
  CHECK_THROWS_AS(cmd_sweep(spec, bad, opts, sink), ParseError);
}

TEST_CASE("cmd_sweep: the even-lag example transitions exactly at A = 1/2") {
  EquationSpec spec = EquationSpec::parse(R"({
    "k": 7, "alpha": "1", "A": "1/2",
    "beta": {"2": "3/4", "4": "3/4", "7": "1"}, "B": {"7": "1"}})");
  SweepParams params;
  params.param = "A";
  params.from = Ratio(1, 4);
  params.to = Ratio(3, 4);
  params.count = 5;
  CommandOptions opts;
  opts.steps = 4000;
  opts.tolerance = 1e-8;
  std::ostringstream csv;
  cmd_sweep(spec, params, opts, csv);
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].substr(0, 4) == "1/4,");
  CHECK(rows[0].find("UnboundedExists") != std::string::npos);
  CHECK(rows[1].find("UnboundedExists") != std::string::npos);
  CHECK(rows[2].substr(0, 4) == "1/2,");
  CHECK(rows[2].find("PeriodicConvergence,2,") != std::string::npos);
  CHECK(rows[3].find("EquilibriumConvergence") != std::string::npos);
  CHECK(rows[4].find("EquilibriumConvergence") != std::string::npos);
}
