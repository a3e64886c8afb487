#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schemeconn/catalog.hpp"
#include "schemeconn/report.hpp"

namespace schemeconn {

struct ManifestEntry {
  std::optional<std::string> file;  // resolved path
  std::optional<FamilySpec> family;
  std::optional<std::vector<int>> relations;  // absent: all relations
};

struct SurveyManifest {
  std::vector<ManifestEntry> entries;
  std::optional<std::uint64_t> seed;
};

// {"seed"?: int, "entries": [{"file": path | "family": [words], "relations"?: "all" | [int]}]}
// Relative file paths resolve against base_dir. Every entry must be
// resolvable (file readable, family known); otherwise ParseError.
SurveyManifest parse_manifest(const std::string& text, const std::string& base_dir);
SurveyManifest load_manifest(const std::string& path);
SurveyManifest builtin_manifest();

struct SurveyOptions {
  int jobs = 1;
  std::string out_dir;  // empty: do not write files
  AuditConfig config;
};

struct SurveyResult {
  ojson summary;
  std::vector<std::pair<std::string, ojson>> reports;  // file name, report
  bool any_failure = false;                            // audit finding or entry error
};

// Scheme construction, spectral data and per-relation audits fan out over
// `jobs` threads; results are assembled in manifest order so the output
// does not depend on scheduling.
SurveyResult run_survey(const SurveyManifest& manifest, const SurveyOptions& options);

// Default for --jobs: SCHEME_CONN_JOBS if set and positive, else 1.
int default_jobs();

}  // namespace schemeconn
