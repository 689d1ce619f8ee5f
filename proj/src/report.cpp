#include "ratde/report.hpp"

#include <sstream>

#include <json.hpp>

namespace ratde {

using nlohmann::json;

PeriodReportData PeriodReportData::from(const PeriodReport& rep, mpfr_prec_t prec) {
  PeriodReportData d;
  d.tested_period = rep.tested_period;
  d.residual = rep.residual.str();
  d.residual_prec = prec;
  d.converged = rep.converged;
  d.prime_period = rep.prime_period;
  for (const BigFloat& v : rep.limit_cycle) d.limit_cycle.push_back(v.str());
  return d;
}

BoundReportData BoundReportData::from(const BoundReport& rep, mpfr_prec_t prec) {
  BoundReportData d;
  d.sup_estimate = rep.sup_estimate.str();
  d.inf_estimate = rep.inf_estimate.str();
  d.prec = prec;
  d.tail_start = rep.tail_start;
  d.exceeded = rep.exceeded;
  return d;
}

CertificateData CertificateData::from(const CycleCertificate& cert) {
  CertificateData d;
  d.period = cert.period;
  d.certified = cert.certified;
  for (const Surd& v : cert.cycle) d.cycle.push_back(v.str());
  d.refuted_divisors = cert.refuted_divisors;
  d.message = cert.message;
  return d;
}

namespace {

TheoremId theorem_from_name(const std::string& s) {
  if (s == "T1") return TheoremId::T1;
  if (s == "T2") return TheoremId::T2;
  if (s == "T3") return TheoremId::T3;
  if (s == "T4") return TheoremId::T4;
  throw ParseError("unknown theorem id \"" + s + "\"");
}

Verdict::Kind kind_from_name(const std::string& s) {
  if (s == "EquilibriumConvergence") return Verdict::Kind::EquilibriumConvergence;
  if (s == "PeriodicConvergence") return Verdict::Kind::PeriodicConvergence;
  if (s == "UnboundedExists") return Verdict::Kind::UnboundedExists;
  if (s == "OutOfScope") return Verdict::Kind::OutOfScope;
  throw ParseError("unknown verdict kind \"" + s + "\"");
}

json hypothesis_to_json(const HypothesisReport& rep) {
  json j;
  j["theorem"] = theorem_name(rep.theorem);
  j["holds"] = rep.holds;
  json cs = json::array();
  for (const Condition& c : rep.conditions)
    cs.push_back({{"name", c.name}, {"satisfied", c.satisfied}, {"detail", c.detail}});
  j["conditions"] = cs;
  return j;
}

HypothesisReport hypothesis_from_json(const json& j) {
  HypothesisReport rep;
  rep.theorem = theorem_from_name(j.at("theorem").get<std::string>());
  rep.holds = j.at("holds").get<bool>();
  for (const auto& c : j.at("conditions"))
    rep.conditions.push_back(Condition{c.at("name").get<std::string>(),
                                       c.at("satisfied").get<bool>(),
                                       c.at("detail").get<std::string>()});
  return rep;
}

json verdict_to_json(const Verdict& v) {
  json j;
  j["kind"] = verdict_kind_name(v.kind);
  j["gas"] = v.globally_asymptotically_stable;
  j["period"] = v.period;
  j["reason"] = v.reason;
  return j;
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  v.kind = kind_from_name(j.at("kind").get<std::string>());
  v.globally_asymptotically_stable = j.at("gas").get<bool>();
  v.period = j.at("period").get<long>();
  v.reason = j.at("reason").get<std::string>();
  return v;
}

}  // namespace

std::string RunReport::to_json() const {
  json j;
  j["command"] = command;
  j["seed"] = seed;
  j["exit_status"] = exit_status;
  json hs = json::array();
  for (const HypothesisReport& h : hypotheses) hs.push_back(hypothesis_to_json(h));
  j["hypotheses"] = hs;
  j["verdict"] = verdict_to_json(verdict);
  if (applied) j["applied"] = *applied;
  if (constructed_ics) j["constructed_ics"] = *constructed_ics;
  if (certificate) {
    json c;
    c["period"] = certificate->period;
    c["certified"] = certificate->certified;
    c["cycle"] = certificate->cycle;
    c["refuted_divisors"] = certificate->refuted_divisors;
    c["message"] = certificate->message;
    j["certificate"] = c;
  }
  if (period_report) {
    json p;
    p["tested_period"] = period_report->tested_period;
    p["residual"] = period_report->residual;
    p["residual_prec"] = period_report->residual_prec;
    p["converged"] = period_report->converged;
    if (period_report->prime_period) p["prime_period"] = *period_report->prime_period;
    p["limit_cycle"] = period_report->limit_cycle;
    j["period_report"] = p;
  }
  if (bound_report) {
    json b;
    b["sup_estimate"] = bound_report->sup_estimate;
    b["inf_estimate"] = bound_report->inf_estimate;
    b["prec"] = bound_report->prec;
    b["tail_start"] = bound_report->tail_start;
    if (bound_report->exceeded) b["exceeded"] = *bound_report->exceeded;
    j["bound_report"] = b;
  }
  j["monitors"] = monitors;
  j["notes"] = notes;
  return j.dump(2);
}

RunReport RunReport::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad report JSON: ") + e.what());
  }
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.exit_status = j.at("exit_status").get<int>();
  for (const auto& h : j.at("hypotheses")) r.hypotheses.push_back(hypothesis_from_json(h));
  r.verdict = verdict_from_json(j.at("verdict"));
  if (j.contains("applied")) r.applied = j["applied"].get<std::string>();
  if (j.contains("constructed_ics"))
    r.constructed_ics = j["constructed_ics"].get<std::vector<std::string>>();
  if (j.contains("certificate")) {
    const json& c = j["certificate"];
    CertificateData d;
    d.period = c.at("period").get<long>();
    d.certified = c.at("certified").get<bool>();
    d.cycle = c.at("cycle").get<std::vector<std::string>>();
    d.refuted_divisors = c.at("refuted_divisors").get<std::vector<long>>();
    d.message = c.at("message").get<std::string>();
    r.certificate = d;
  }
  if (j.contains("period_report")) {
    const json& p = j["period_report"];
    PeriodReportData d;
    d.tested_period = p.at("tested_period").get<long>();
    d.residual = p.at("residual").get<std::string>();
    d.residual_prec = p.at("residual_prec").get<long>();
    d.converged = p.at("converged").get<bool>();
    if (p.contains("prime_period")) d.prime_period = p["prime_period"].get<long>();
    d.limit_cycle = p.at("limit_cycle").get<std::vector<std::string>>();
    r.period_report = d;
  }
  if (j.contains("bound_report")) {
    const json& b = j["bound_report"];
    BoundReportData d;
    d.sup_estimate = b.at("sup_estimate").get<std::string>();
    d.inf_estimate = b.at("inf_estimate").get<std::string>();
    d.prec = b.at("prec").get<long>();
    d.tail_start = b.at("tail_start").get<long>();
    if (b.contains("exceeded")) d.exceeded = b["exceeded"].get<long>();
    r.bound_report = d;
  }
  r.monitors = j.at("monitors").get<std::map<std::string, std::string>>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << "command: " << command << " (seed " << seed << ")\n";
  for (const HypothesisReport& h : hypotheses) {
    os << theorem_name(h.theorem) << ": " << (h.holds ? "holds" : "fails") << "\n";
    for (const Condition& c : h.conditions) {
      os << "  - " << c.name << ": " << (c.satisfied ? "yes" : "no");
      if (!c.detail.empty()) os << " (" << c.detail << ")";
      os << "\n";
    }
  }
  os << "verdict: " << verdict.str() << "\n";
  if (applied) os << "applied theorem: " << *applied << "\n";
  if (constructed_ics) {
    os << "constructed ICs (x_-1 ... x_-k):";
    for (const std::string& s : *constructed_ics) os << " " << s;
    os << "\n";
  }
  if (certificate) {
    os << "cycle certificate: period " << certificate->period << " "
       << (certificate->certified ? "CERTIFIED" : "FAILED");
    if (!certificate->message.empty()) os << " (" << certificate->message << ")";
    os << "\n  cycle:";
    for (const std::string& s : certificate->cycle) os << " " << s;
    os << "\n";
  }
  if (period_report) {
    os << "period test: p = " << period_report->tested_period << ", residual "
       << period_report->residual << ", "
       << (period_report->converged ? "converged" : "inconclusive at horizon");
    if (period_report->prime_period)
      os << ", prime period " << *period_report->prime_period;
    os << "\n";
  }
  if (bound_report) {
    os << "bounds: tail sup " << bound_report->sup_estimate << ", tail inf "
       << bound_report->inf_estimate << " (from step " << bound_report->tail_start << ")";
    if (bound_report->exceeded) os << ", exceeded threshold at step " << *bound_report->exceeded;
    os << "\n";
  }
  for (const auto& [name, value] : monitors) os << "monitor " << name << ": " << value << "\n";
  for (const std::string& n : notes) os << "note: " << n << "\n";
  os << "exit status: " << exit_status << "\n";
  return os.str();
}

}  // namespace ratde
