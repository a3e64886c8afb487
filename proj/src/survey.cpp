#include "schemeconn/survey.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <set>
#include <thread>

#include "schemeconn/error.hpp"
#include "schemeconn/scheme_io.hpp"

namespace schemeconn {

namespace {

namespace fs = std::filesystem;

// Runs f(0..count-1) on up to `jobs` threads. f must not throw.
template <typename F>
void parallel_for(std::size_t count, int jobs, F&& f) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || count <= 1) {
    for (std::size_t k = 0; k < count; ++k) f(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, count); ++w)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) f(k);
    });
  for (auto& t : pool) t.join();
}

std::string sanitize(const std::string& name) {
  std::string out;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '-' || c == '_' || c == '.';
    out += ok ? c : '_';
  }
  return out.empty() ? "scheme" : out;
}

struct EntryState {
  std::optional<SchemeAnalysis> analysis;
  std::vector<int> relations;
  std::string error;
  std::string name;
};

struct Counts {
  long long run = 0, passed = 0, failed = 0, skipped = 0;
};

void tally(std::map<std::string, Counts>& counts, const OutcomeList& outcomes) {
  for (const auto& [name, o] : outcomes) {
    Counts& c = counts[name];
    if (o == Outcome::Skipped) {
      ++c.skipped;
      continue;
    }
    ++c.run;
    (o == Outcome::Passed ? c.passed : c.failed)++;
  }
}

}  // namespace

SurveyManifest parse_manifest(const std::string& text, const std::string& base_dir) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const std::exception& e) {
    throw SchemeError(ErrorKind::ParseError, "manifest is not valid JSON", e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
    throw SchemeError(ErrorKind::ParseError, "manifest needs an 'entries' array");
  SurveyManifest m;
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_integer()) throw SchemeError(ErrorKind::ParseError, "seed must be an integer");
    m.seed = doc["seed"].get<std::uint64_t>();
  }
  int index = 0;
  for (const auto& e : doc["entries"]) {
    const std::string where = "entry " + std::to_string(index++);
    if (!e.is_object()) throw SchemeError(ErrorKind::ParseError, where + " is not an object");
    ManifestEntry entry;
    if (e.contains("file") == e.contains("family"))
      throw SchemeError(ErrorKind::ParseError, where + " needs exactly one of 'file' or 'family'");
    if (e.contains("file")) {
      if (!e["file"].is_string()) throw SchemeError(ErrorKind::ParseError, where + ": file must be a string");
      fs::path p = e["file"].get<std::string>();
      if (p.is_relative()) p = fs::path(base_dir) / p;
      std::error_code ec;
      if (!fs::is_regular_file(p, ec))
        throw SchemeError(ErrorKind::ParseError, where + ": file not found", p.string());
      entry.file = p.string();
    } else {
      std::vector<std::string> words;
      if (e["family"].is_string()) {
        words.push_back(e["family"].get<std::string>());
      } else if (e["family"].is_array()) {
        for (const auto& w : e["family"]) words.push_back(w.is_string() ? w.get<std::string>() : w.dump());
      } else {
        throw SchemeError(ErrorKind::ParseError, where + ": family must be an array of words");
      }
      entry.family = parse_family(words);
    }
    if (e.contains("relations")) {
      const auto& r = e["relations"];
      if (r.is_string() && r.get<std::string>() == "all") {
      } else if (r.is_array()) {
        std::vector<int> rel;
        for (const auto& x : r) {
          if (!x.is_number_integer() || x.get<int>() < 1)
            throw SchemeError(ErrorKind::ParseError, where + ": relations must be positive integers");
          rel.push_back(x.get<int>());
        }
        entry.relations = rel;
      } else {
        throw SchemeError(ErrorKind::ParseError, where + ": relations must be \"all\" or a list");
      }
    }
    m.entries.push_back(std::move(entry));
  }
  return m;
}

SurveyManifest load_manifest(const std::string& path) {
  return parse_manifest(read_text_file(path), fs::path(path).parent_path().string());
}

SurveyManifest builtin_manifest() {
  SurveyManifest m;
  for (auto& spec : builtin_catalog()) m.entries.push_back({std::nullopt, std::move(spec), std::nullopt});
  return m;
}

int default_jobs() {
  if (const char* env = std::getenv("SCHEME_CONN_JOBS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0 && n <= 1024) return static_cast<int>(n);
  }
  return 1;
}

SurveyResult run_survey(const SurveyManifest& manifest, const SurveyOptions& options) {
  AuditConfig config = options.config;
  if (manifest.seed) config.corollaries.seed = *manifest.seed;

  std::vector<EntryState> states(manifest.entries.size());
  parallel_for(states.size(), options.jobs, [&](std::size_t k) {
    const ManifestEntry& e = manifest.entries[k];
    EntryState& st = states[k];
    st.name = e.family ? e.family->label : e.file.value_or("entry");
    try {
      const SchemeDescriptor s = e.family ? e.family->build() : load_scheme(*e.file);
      st.name = s.name().empty() ? fs::path(*e.file).stem().string() : s.name();
      st.analysis = analyze_scheme(s.name().empty() ? s.renamed(st.name) : s, config);
      const int d = st.analysis->scheme.d();
      if (e.relations) {
        for (int r : *e.relations) {
          if (r > d) throw SchemeError(ErrorKind::InvalidArgument, "relation out of range", std::to_string(r));
          st.relations.push_back(r);
        }
      } else {
        for (int r = 1; r <= d; ++r) st.relations.push_back(r);
      }
    } catch (const std::exception& ex) {
      st.analysis.reset();
      st.relations.clear();
      st.error = ex.what();
    }
  });

  struct Task {
    std::size_t entry;
    int relation;
  };
  std::vector<Task> tasks;
  for (std::size_t k = 0; k < states.size(); ++k)
    for (int r : states[k].relations) tasks.push_back({k, r});
  std::vector<std::optional<RelationReport>> results(tasks.size());
  std::vector<std::string> task_errors(tasks.size());
  parallel_for(tasks.size(), options.jobs, [&](std::size_t k) {
    try {
      results[k] = analyze_relation(*states[tasks[k].entry].analysis, tasks[k].relation, config);
    } catch (const std::exception& ex) {
      task_errors[k] = ex.what();
    }
  });

  SurveyResult out;
  std::map<std::string, Counts> counts;
  ojson counterexamples = ojson::array();
  ojson findings = ojson::array();
  ojson errors = ojson::array();
  std::set<std::string> used_names;
  std::vector<std::string> file_stem(states.size());
  long long schemes_ok = 0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    std::string stem = sanitize(states[k].name);
    if (!used_names.insert(stem).second) {
      stem += "-" + std::to_string(k);
      used_names.insert(stem);
    }
    file_stem[k] = stem;
    if (!states[k].analysis) {
      errors.push_back({{"entry", k}, {"scheme", states[k].name}, {"error", states[k].error}});
      continue;
    }
    ++schemes_ok;
    tally(counts, states[k].analysis->outcomes);
    for (const auto& f : states[k].analysis->findings)
      findings.push_back({{"scheme", states[k].name}, {"relation", nullptr}, {"finding", f}});
  }
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    const std::string& name = states[tasks[k].entry].analysis->scheme.name();
    if (!results[k]) {
      errors.push_back({{"entry", tasks[k].entry}, {"scheme", name}, {"relation", tasks[k].relation},
                        {"error", task_errors[k]}});
      continue;
    }
    const RelationReport& r = *results[k];
    tally(counts, r.outcomes);
    for (const auto& f : r.findings)
      findings.push_back({{"scheme", name}, {"relation", r.relation}, {"finding", f}});
    if (r.conjecture_counterexample)
      counterexamples.push_back({{"scheme", name},
                                 {"relation", r.relation},
                                 {"kappa", r.json["kappa"]},
                                 {"lambda", r.json["lambda"]},
                                 {"valency", r.json["valency"]}});
    out.reports.emplace_back(file_stem[tasks[k].entry] + "__rel" + std::to_string(r.relation) + ".json",
                             r.json);
  }

  ojson audits = ojson::object();
  for (const auto& [name, c] : counts)
    audits[name] = {{"run", c.run}, {"passed", c.passed}, {"failed", c.failed}, {"skipped", c.skipped}};
  ojson& s = out.summary;
  s["tool"] = {{"name", "schemeconn"}, {"version", tool_version()}};
  s["config"] = config_json(config);
  s["entries"] = manifest.entries.size();
  s["schemes_analyzed"] = schemes_ok;
  s["reports"] = out.reports.size();
  s["audits"] = audits;
  s["counterexamples"] = counterexamples;
  s["findings"] = findings;
  s["errors"] = errors;
  out.any_failure = !findings.empty() || !errors.empty() || !counterexamples.empty();

  if (!options.out_dir.empty()) {
    fs::create_directories(options.out_dir);
    for (const auto& [file, json] : out.reports)
      write_text_file((fs::path(options.out_dir) / file).string(), json.dump(2) + "\n");
    write_text_file((fs::path(options.out_dir) / "summary.json").string(), out.summary.dump(2) + "\n");
  }
  return out;
}

}  // namespace schemeconn
