#include "schemeconn/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "schemeconn/catalog.hpp"
#include "schemeconn/connectivity.hpp"
#include "schemeconn/error.hpp"
#include "schemeconn/report.hpp"
#include "schemeconn/scheme_io.hpp"
#include "schemeconn/survey.hpp"

namespace schemeconn {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return kExitParse;
    case ErrorKind::CapExceeded:
    case ErrorKind::SizeCap: return kExitCap;
    default: return kExitInvalid;
  }
}

void print_error(std::ostream& err, const SchemeError& e) {
  err << "error: " << e.what() << "\n";
  if (!e.witness().empty()) err << "witness: " << e.witness() << "\n";
}

SchemeDescriptor load_input(const std::string& path, const std::vector<std::string>& family) {
  if (!family.empty()) return parse_family(family).build();
  if (path.empty()) throw SchemeError(ErrorKind::ParseError, "give a scheme file or --family");
  SchemeDescriptor s = load_scheme(path);
  return s;
}

std::vector<int> pick_relations(const SchemeDescriptor& s, int relation) {
  std::vector<int> out;
  if (relation > 0) {
    if (relation > s.d()) {
      throw SchemeError(ErrorKind::InvalidArgument, "relation out of range", std::to_string(relation));
    }
    out.push_back(relation);
  } else {
    for (int i = 1; i <= s.d(); ++i) out.push_back(i);
  }
  return out;
}

int cmd_verify(const std::string& path, std::ostream& out) {
  const SchemeDescriptor s = load_scheme(path);
  out << "valid scheme " << (s.name().empty() ? path : s.name()) << ": v=" << s.v() << " d=" << s.d()
      << " symmetric=" << (s.is_symmetric() ? "yes" : "no") << " valencies=";
  for (int i = 0; i <= s.d(); ++i) out << (i ? "," : "") << s.valency(i);
  out << "\n";
  return kExitOk;
}

int cmd_analyze(const std::string& path, const std::vector<std::string>& family, int relation,
                const std::string& report_path, bool symmetrize_input, std::ostream& out,
                std::ostream& err) {
  SchemeDescriptor s = load_input(path, family);
  if (!s.is_symmetric() && !symmetrize_input) {
    throw SchemeError(ErrorKind::NotSymmetric, "scheme is not symmetric; rerun with --symmetrize");
  }
  if (s.name().empty()) s = s.renamed(path);
  const AuditConfig config;
  const SchemeAnalysis analysis = analyze_scheme(s, config);
  const std::vector<int> relations = pick_relations(analysis.scheme, relation);
  ojson reports = ojson::array();
  bool findings = !analysis.findings.empty();
  for (const auto& f : analysis.findings) err << "finding: " << f << "\n";
  for (int i : relations) {
    RelationReport r = analyze_relation(analysis, i, config);
    for (const auto& f : r.findings) err << "finding: relation " << i << ": " << f << "\n";
    findings = findings || !r.findings.empty();
    reports.push_back(std::move(r.json));
  }
  const ojson doc = relations.size() == 1 ? reports[0] : reports;
  const std::string text = doc.dump(2) + "\n";
  if (report_path.empty())
    out << text;
  else
    write_text_file(report_path, text);
  return findings ? kExitFinding : kExitOk;
}

int cmd_survey(const std::string& manifest_path, bool builtin, int jobs, const std::string& out_dir,
               std::ostream& out, std::ostream& err) {
  if (builtin == !manifest_path.empty()) {
    throw SchemeError(ErrorKind::ParseError, "give exactly one of --manifest or --builtin-catalog");
  }
  const SurveyManifest manifest = builtin ? builtin_manifest() : load_manifest(manifest_path);
  SurveyOptions options;
  options.jobs = jobs;
  options.out_dir = out_dir;
  const SurveyResult r = run_survey(manifest, options);
  for (const auto& e : r.summary["errors"]) err << "error: " << e.dump() << "\n";
  for (const auto& f : r.summary["findings"]) err << "finding: " << f.dump() << "\n";
  if (out_dir.empty()) out << r.summary.dump(2) << "\n";
  else
    out << "wrote " << r.reports.size() << " reports to " << out_dir << "\n";
  return r.any_failure ? kExitFinding : kExitOk;
}

int cmd_cuts(const std::string& path, const std::vector<std::string>& family, int relation,
             int max_size, std::ostream& out) {
  SchemeDescriptor s = load_input(path, family);
  if (!s.is_symmetric()) s = symmetrize(s);
  if (relation < 1 || relation > s.d())
    throw SchemeError(ErrorKind::InvalidArgument, "relation out of range", std::to_string(relation));
  const Graph g = relation_graph(s, relation);
  ojson doc;
  doc["scheme"] = s.name();
  doc["relation"] = relation;
  if (!is_connected(g)) {
    doc["kappa"] = 0;
    doc["cuts"] = ojson::array();
    doc["all_neighborhoods"] = nullptr;
    doc["note"] = "relation is disconnected; the empty set already disconnects it";
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  const MinCutEnumeration e = enumerate_min_cuts(g, max_size);
  doc["kappa"] = e.kappa;
  ojson cuts = ojson::array();
  for (const auto& c : e.cuts) {
    ojson cj = {{"vertices", c.vertices}};
    cj["neighborhood_of"] = c.neighborhood_of >= 0 ? ojson(c.neighborhood_of) : ojson(nullptr);
    cuts.push_back(std::move(cj));
  }
  doc["cuts"] = std::move(cuts);
  doc["all_neighborhoods"] = e.all_neighborhoods;
  if (g.is_complete()) doc["note"] = "complete graph: no disconnecting set";
  out << doc.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Association scheme connectivity toolkit", "schemeconn"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  std::string path, report_path, manifest_path, out_dir;
  std::vector<std::string> family;
  int relation = 0;
  bool all_relations = false, builtin = false, symmetrize_input = true;
  int jobs = default_jobs();
  int max_size = 3;

  auto* verify = app.add_subcommand("verify", "Validate a scheme file");
  verify->add_option("path", path, "Scheme JSON file")->required();

  auto* analyze = app.add_subcommand("analyze", "Run all audits on one or more relations");
  analyze->add_option("path", path, "Scheme JSON file");
  analyze->add_option("--family", family, "Built-in family, e.g. johnson 5 2")->expected(1, 3);
  auto* rel_opt = analyze->add_option("--relation", relation, "Relation index")->check(CLI::PositiveNumber);
  analyze->add_flag("--all-relations", all_relations, "Analyze every relation (default)")->excludes(rel_opt);
  analyze->add_option("--report", report_path, "Write the report JSON here");
  analyze->add_flag("--symmetrize,!--no-symmetrize", symmetrize_input,
                    "Symmetrize non-symmetric input (default on)");

  auto* survey = app.add_subcommand("survey", "Batch audits over a manifest or the built-in catalog");
  survey->add_option("--manifest", manifest_path, "Manifest JSON");
  survey->add_flag("--builtin-catalog", builtin, "Use the built-in catalog");
  survey->add_option("--jobs", jobs, "Worker threads (default: SCHEME_CONN_JOBS or 1)")
      ->check(CLI::Range(1, 1024));
  survey->add_option("--out", out_dir, "Directory for reports and summary.json");

  auto* cuts = app.add_subcommand("cuts", "Enumerate minimum vertex cuts");
  cuts->add_option("path", path, "Scheme JSON file");
  cuts->add_option("--family", family, "Built-in family")->expected(1, 3);
  int cut_relation = 1;
  cuts->add_option("--relation", cut_relation, "Relation index")->check(CLI::PositiveNumber);
  cuts->add_option("--max-size", max_size, "Largest cut size to enumerate")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitParse;
  }
  try {
    if (*verify) return cmd_verify(path, out);
    if (*analyze) return cmd_analyze(path, family, relation, report_path, symmetrize_input, out, err);
    if (*survey) return cmd_survey(manifest_path, builtin, jobs, out_dir, out, err);
    if (*cuts) return cmd_cuts(path, family, cut_relation, max_size, out);
  } catch (const SchemeError& e) {
    print_error(err, e);
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace schemeconn
