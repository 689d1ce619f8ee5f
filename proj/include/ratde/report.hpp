#ifndef RATDE_REPORT_HPP
#define RATDE_REPORT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ratde/classifier.hpp"
#include "ratde/dynamics.hpp"

namespace ratde {

// Serializable snapshots of the analysis results. Everything is carried as
// strings-with-precision so a report round-trips bit for bit through JSON.

struct PeriodReportData {
  long tested_period = 0;
  std::string residual;
  long residual_prec = 128;
  bool converged = false;
  std::optional<long> prime_period;
  std::vector<std::string> limit_cycle;

  static PeriodReportData from(const PeriodReport& rep, mpfr_prec_t prec);
};

struct BoundReportData {
  std::string sup_estimate;
  std::string inf_estimate;
  long prec = 128;
  long tail_start = 0;
  std::optional<long> exceeded;

  static BoundReportData from(const BoundReport& rep, mpfr_prec_t prec);
};

struct CertificateData {
  long period = 0;
  bool certified = false;
  std::vector<std::string> cycle;
  std::vector<long> refuted_divisors;
  std::string message;

  static CertificateData from(const CycleCertificate& cert);
};

struct RunReport {
  std::string command;
  std::uint64_t seed = 0;
  int exit_status = 0;
  std::vector<HypothesisReport> hypotheses;
  Verdict verdict;
  std::optional<std::string> applied;
  std::optional<std::vector<std::string>> constructed_ics;
  std::optional<CertificateData> certificate;
  std::optional<PeriodReportData> period_report;
  std::optional<BoundReportData> bound_report;
  std::map<std::string, std::string> monitors;
  std::vector<std::string> notes;

  std::string to_json() const;                      // deterministic
  static RunReport from_json(const std::string&);   // exact inverse
  std::string to_text() const;                      // human-readable rendering
};

}  // namespace ratde

#endif  // RATDE_REPORT_HPP
