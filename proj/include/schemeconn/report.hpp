#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "schemeconn/audits.hpp"
#include "schemeconn/scheme.hpp"
#include "schemeconn/spectral.hpp"

namespace schemeconn {

using ojson = nlohmann::ordered_json;

std::string tool_version();

struct AuditConfig {
  CorollaryConfig corollaries;
  SpectralConfig spectral;
  long long cut_budget = 2'000'000;
  double identity_tolerance = 1e-8;
  double trace_tolerance = 1e-6;
};
ojson config_json(const AuditConfig& config);

// Decimal string with 12 significant digits; values within 1e-9 of an
// integer are printed as that integer.
std::string format_real(double x);

enum class Outcome { Passed, Failed, Skipped };
const char* outcome_name(Outcome o);
using OutcomeList = std::vector<std::pair<std::string, Outcome>>;

// Scheme-level data shared by all relation reports.
struct SchemeAnalysis {
  SchemeDescriptor scheme;  // symmetric
  bool symmetrized = false;
  std::optional<SpectralData> spectral;
  std::optional<PrimitivityVerdict> primitivity;
  ojson spectral_json;
  OutcomeList outcomes;
  std::vector<std::string> findings;
};
SchemeAnalysis analyze_scheme(const SchemeDescriptor& scheme, const AuditConfig& config);

struct RelationReport {
  int relation = 0;
  ojson json;
  OutcomeList outcomes;
  std::vector<std::string> findings;
  bool conjecture_counterexample = false;
};
RelationReport analyze_relation(const SchemeAnalysis& analysis, int i, const AuditConfig& config);

}  // namespace schemeconn
