#include "ratde/classifier.hpp"

#include <numeric>
#include <sstream>

#include "ratde/errors.hpp"

namespace ratde {

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return "T1";
    case TheoremId::T2: return "T2";
    case TheoremId::T3: return "T3";
    case TheoremId::T4: return "T4";
  }
  return "?";
}

const char* verdict_kind_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::EquilibriumConvergence: return "EquilibriumConvergence";
    case Verdict::Kind::PeriodicConvergence: return "PeriodicConvergence";
    case Verdict::Kind::UnboundedExists: return "UnboundedExists";
    case Verdict::Kind::OutOfScope: return "OutOfScope";
  }
  return "?";
}

Verdict Verdict::equilibrium(bool gas, std::string why) {
  Verdict v;
  v.kind = Kind::EquilibriumConvergence;
  v.globally_asymptotically_stable = gas;
  v.reason = std::move(why);
  return v;
}

Verdict Verdict::periodic(long period, std::string why) {
  Verdict v;
  v.kind = Kind::PeriodicConvergence;
  v.period = period;
  v.reason = std::move(why);
  return v;
}

Verdict Verdict::unbounded(std::string why) {
  Verdict v;
  v.kind = Kind::UnboundedExists;
  v.reason = std::move(why);
  return v;
}

Verdict Verdict::out_of_scope(std::string why) {
  Verdict v;
  v.kind = Kind::OutOfScope;
  v.reason = std::move(why);
  return v;
}

std::string Verdict::str() const {
  std::ostringstream os;
  os << verdict_kind_name(kind);
  if (kind == Kind::EquilibriumConvergence)
    os << (globally_asymptotically_stable ? " (globally asymptotically stable)"
                                          : "");
  if (kind == Kind::PeriodicConvergence) os << " period=" << period;
  if (!reason.empty()) os << " [" << reason << "]";
  return os.str();
}

int Theorem3Shape::k() const {
  int k = ell;
  if (!even_beta.empty()) k = std::max(k, even_beta.rbegin()->first);
  return k;
}

std::set<int> Theorem3Shape::i_beta() const {
  std::set<int> s;
  for (const auto& [lag, coeff] : even_beta) s.insert(lag);
  s.insert(ell);
  return s;
}

int Theorem3Shape::g() const {
  int g = 0;
  for (int lag : i_beta()) g = std::gcd(g, lag);
  return g;
}

Equation Theorem3Shape::to_equation() const {
  std::map<int, Ratio> beta = even_beta;
  beta[ell] = Ratio(1);
  std::map<int, Ratio> B{{ell, Ratio(1)}};
  return Equation::create(alpha, A, beta, B);
}

namespace {

Condition cond(std::string name, bool ok, std::string detail = "") {
  return Condition{std::move(name), ok, std::move(detail)};
}

HypothesisReport finish(TheoremId id, std::vector<Condition> conditions) {
  HypothesisReport rep;
  rep.theorem = id;
  rep.conditions = std::move(conditions);
  rep.holds = true;
  for (const Condition& c : rep.conditions) rep.holds = rep.holds && c.satisfied;
  return rep;
}

std::string set_str(const std::set<int>& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int v : s) {
    if (!first) os << ",";
    os << v;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace

HypothesisReport check_t1(const Equation& eq) {
  IndexProfile p = index_profile(eq);
  std::vector<Condition> cs;
  cs.push_back(cond("alpha = 0", eq.alpha.is_zero(), "alpha = " + eq.alpha.str()));
  cs.push_back(cond("sum(beta) > 0", p.sum_beta.is_positive(),
                    "sum(beta) = " + p.sum_beta.str()));
  cs.push_back(cond("A > 0", eq.A.is_positive(), "A = " + eq.A.str()));
  bool no_divisible = true;
  std::string offender;
  if (p.g_beta > 0) {
    for (int j : p.i_b)
      if (j % p.g_beta == 0) {
        no_divisible = false;
        offender = "gcd(I_beta) = " + std::to_string(p.g_beta) +
                   " divides j = " + std::to_string(j);
        break;
      }
  }
  cs.push_back(cond("no j in I_B divisible by gcd(I_beta)",
                    p.g_beta > 0 && no_divisible,
                    p.g_beta == 0 ? "I_beta empty" : offender));
  return finish(TheoremId::T1, std::move(cs));
}

HypothesisReport check_t2(const Equation& eq) {
  IndexProfile p = index_profile(eq);
  std::vector<Condition> cs;
  cs.push_back(cond("alpha > 0", eq.alpha.is_positive(), "alpha = " + eq.alpha.str()));
  cs.push_back(cond("sum(B) > 0", p.sum_b.is_positive(), "sum(B) = " + p.sum_b.str()));
  const int g = p.g_union;
  bool beta_ok = true;
  std::string beta_detail = "g = " + std::to_string(g);
  bool b_ok = g > 0;
  std::string b_detail = beta_detail;
  if (g > 0) {
    for (int i : p.i_beta)
      if (i % (2 * g) != 0) {
        beta_ok = false;
        beta_detail = "2g = " + std::to_string(2 * g) + " does not divide i = " +
                      std::to_string(i);
        break;
      }
    for (int j : p.i_b)
      if ((j + g) % (2 * g) != 0) {
        b_ok = false;
        b_detail = "2g = " + std::to_string(2 * g) + " does not divide j + g = " +
                   std::to_string(j + g);
        break;
      }
  }
  cs.push_back(cond("2g | i for all i in I_beta", g > 0 && beta_ok, beta_detail));
  cs.push_back(cond("2g | (j + g) for all j in I_B", b_ok, b_detail));
  return finish(TheoremId::T2, std::move(cs));
}

std::optional<Theorem3Shape> recognize_t3(const Equation& eq) {
  IndexProfile p = index_profile(eq);
  if (p.i_b.size() != 1) return std::nullopt;
  const int ell = *p.i_b.begin();
  if (ell % 2 == 0) return std::nullopt;
  auto it = eq.beta.find(ell);
  if (it == eq.beta.end()) return std::nullopt;
  const Ratio& b_ell = eq.B.at(ell);
  if (it->second != b_ell) return std::nullopt;
  for (const auto& [lag, coeff] : eq.beta)
    if (lag != ell && lag % 2 != 0) return std::nullopt;

  // Normalize: divide the whole equation by B_ell.
  Theorem3Shape shape;
  shape.ell = ell;
  shape.alpha = eq.alpha / b_ell;
  shape.A = eq.A / b_ell;
  for (const auto& [lag, coeff] : eq.beta) {
    if (lag == ell) continue;
    shape.even_beta[lag] = coeff / b_ell;
    shape.sum_even_beta += coeff / b_ell;
  }
  return shape;
}

long theorem3_period(const Theorem3Shape& shape) { return 2L * shape.g(); }

int theorem4_case(const Theorem3Shape& shape) {
  const Ratio& A = shape.A;
  const Ratio& s = shape.sum_even_beta;
  if (A > s) return 1;
  if (A + Ratio(1) > s) {  // middle band: s >= A and A + 1 > s
    if (shape.alpha.is_positive()) return 2;
    if (A.is_zero()) return 3;
    return 4;  // alpha = 0, A > 0
  }
  if (A + Ratio(1) == s) return 5;
  return 6;
}

namespace {

Verdict verdict_t1(const Equation& eq, const IndexProfile& p) {
  if (eq.A > p.sum_beta)
    return Verdict::equilibrium(true, "T1 case i (A > sum(beta))");
  if (eq.A == p.sum_beta)
    return Verdict::periodic(p.g_beta, "T1 case ii (A = sum(beta))");
  return Verdict::unbounded("T1 case iii (A < sum(beta))");
}

Verdict verdict_t2(const Equation& eq, const IndexProfile& p) {
  if (eq.A > p.sum_beta)
    return Verdict::equilibrium(true, "T2 case i (A > sum(beta))");
  if (eq.A == p.sum_beta)
    return Verdict::periodic(2L * p.g_union, "T2 case ii (A = sum(beta))");
  return Verdict::unbounded("T2 case iii (A < sum(beta))");
}

Verdict verdict_t3_t4(const Theorem3Shape& shape) {
  switch (theorem4_case(shape)) {
    case 1:
      return Verdict::equilibrium(false, "case i (A > sum(even_beta))");
    case 2:
      return Verdict::equilibrium(false, "case ii (alpha > 0, middle band)");
    case 3:
      return Verdict::equilibrium(false, "case iii (A = 0, middle band)");
    case 4:
      return Verdict::periodic(shape.g(), "T4 case iv (alpha = 0, A > 0, middle band)");
    case 5:
      return Verdict::periodic(theorem3_period(shape),
                               "case ii/v boundary (A + 1 = sum(even_beta))");
    default:
      return Verdict::unbounded("case iii/vi (A + 1 < sum(even_beta))");
  }
}

}  // namespace

Classification classify(const Equation& eq) {
  Classification out;
  IndexProfile p = index_profile(eq);

  HypothesisReport t1 = check_t1(eq);
  HypothesisReport t2 = check_t2(eq);
  out.shape = recognize_t3(eq);

  HypothesisReport t3;
  t3.theorem = TheoremId::T3;
  HypothesisReport t4;
  t4.theorem = TheoremId::T4;
  {
    bool matched = out.shape.has_value();
    std::string detail = matched
        ? "ell = " + std::to_string(out.shape->ell) + ", even lags " +
              set_str([&] {
                std::set<int> s;
                for (auto& [lag, c] : out.shape->even_beta) s.insert(lag);
                return s;
              }())
        : "equation is not of the even-lag/odd-delay form";
    t3.conditions.push_back(cond("matches the even-lag form with odd delay", matched, detail));
    t3.conditions.push_back(cond("initial conditions assumed positive", matched,
                                 "checked at simulation time"));
    t3.holds = matched;
    t4.conditions.push_back(cond("matches the even-lag form with odd delay", matched, detail));
    if (matched)
      t4.conditions.push_back(cond("case split",
                                   true, "case " + std::to_string(theorem4_case(*out.shape))));
    t4.holds = matched;
  }

  out.reports = {t1, t2, t3, t4};

  if (t1.holds) {
    out.applied = TheoremId::T1;
    out.verdict = verdict_t1(eq, p);
  } else if (t2.holds) {
    out.applied = TheoremId::T2;
    out.verdict = verdict_t2(eq, p);
  } else if (out.shape) {
    // With alpha > 0 or A = 0 the orbit is eventually positive and the
    // positive-IC trichotomy applies directly; otherwise the nonnegative-IC
    // refinement decides (its case iv has a genuinely different period).
    const bool positive_regime = out.shape->alpha.is_positive() || out.shape->A.is_zero();
    out.applied = positive_regime ? TheoremId::T3 : TheoremId::T4;
    out.verdict = verdict_t3_t4(*out.shape);
  } else {
    out.verdict = Verdict::out_of_scope("no theorem hypothesis family applies");
  }
  return out;
}

}  // namespace ratde
