// Acceptance suite over the built-in catalog. Prints one line per criterion
// and exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "schemeconn/audits.hpp"
#include "schemeconn/catalog.hpp"
#include "schemeconn/connectivity.hpp"
#include "schemeconn/diagram.hpp"
#include "schemeconn/error.hpp"
#include "schemeconn/scheme_io.hpp"
#include "schemeconn/spectral.hpp"
#include "schemeconn/survey.hpp"

using namespace schemeconn;
namespace fs = std::filesystem;

namespace {

// Pinned thresholds.
constexpr int kMinTheorem1Pairs = 40;
constexpr double kTheorem1Seconds = 300.0;
constexpr double kC2Seconds = 180.0;
constexpr int kOracleMaxVertices = 16;
constexpr double kQpTolerance = 1e-8;
constexpr double kRowSumTolerance = 1e-8;
constexpr double kTraceTolerance = 1e-6;
constexpr int kSpectralMaxVertices = 1024;
constexpr int kGeodesicMaxVertices = 256;
constexpr int kSurveyJobsA = 1;
constexpr int kSurveyJobsB = 4;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
  int number = 0;
  std::string title;
  long long checked = 0;
  long long failures = 0;
  std::string extra;
  std::vector<std::string> witnesses;

  void fail(const std::string& w) {
    ++failures;
    if (witnesses.size() < 5) witnesses.push_back(w);
  }
};

std::string tag(const SchemeDescriptor& s, int i) { return s.name() + " rel " + std::to_string(i); }

struct Entry {
  SchemeDescriptor scheme;
  std::vector<RelationContext> relations;  // index i-1
};

std::string slurp_tree(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::string out;
  for (const auto& f : files) out += fs::relative(f, dir).string() + "\n" + read_text_file(f.string()) + "\n";
  return out;
}

}  // namespace

int main() {
  const auto t_start = Clock::now();
  std::vector<Entry> catalog;
  for (const auto& spec : builtin_catalog()) {
    const SchemeDescriptor raw = spec.build();
    catalog.push_back({raw.is_symmetric() ? raw : symmetrize(raw), {}});
  }
  for (auto& e : catalog)
    for (int i = 1; i <= e.scheme.d(); ++i) e.relations.push_back(make_relation_context(e.scheme, i));

  std::vector<Criterion> results;

  // 1. The four Theorem-1 conditions agree, cross-checked by direct deletion.
  {
    Criterion c{1, "theorem1 equivalence"};
    const auto t0 = Clock::now();
    long long skipped = 0;
    for (const auto& e : catalog) {
      for (const auto& ctx : e.relations) {
        const Theorem1Audit r = theorem1_audit(ctx);
        if (r.status != AuditStatus::Checked) {
          ++skipped;
          continue;
        }
        ++c.checked;
        const bool same = r.exists_a_connected == r.forall_a_connected &&
                          r.forall_a_connected == r.h_prime_connected && r.h_prime_connected == r.twin_free;
        if (!same || !r.equivalent) c.fail(tag(e.scheme, ctx.relation));
        if (e.scheme.v() <= kGeodesicMaxVertices) {
          int good = 0;
          for (int a = 0; a < e.scheme.v(); ++a)
            good += components(ctx.graph, ctx.graph.closed_neighbors(a)).size() <= 1;
          if ((good > 0) != r.exists_a_connected || (good == e.scheme.v()) != r.forall_a_connected)
            c.fail(tag(e.scheme, ctx.relation) + " basepoint loop disagrees");
        }
      }
    }
    const double secs = seconds_since(t0);
    if (c.checked < kMinTheorem1Pairs) c.fail("only " + std::to_string(c.checked) + " pairs");
    if (secs > kTheorem1Seconds) c.fail("runtime " + std::to_string(secs) + " s");
    std::ostringstream os;
    os << skipped << " skipped, " << secs << " s";
    c.extra = os.str();
    results.push_back(c);
  }

  // 2. Gamma minus Gamma(a) has at most one non-singleton component.
  {
    Criterion c{2, "corollary C2"};
    const auto t0 = Clock::now();
    for (const auto& e : catalog) {
      for (const auto& ctx : e.relations) {
        // Disconnected relations are checked inside the component of a.
        std::vector<Graph> parts;
        for (const auto& comp : ctx.components) {
          VertexSet keep(e.scheme.v());
          for (int x : comp) keep.set(x);
          parts.push_back(ctx.graph.restricted_to(keep));
        }
        for (int a = 0; a < e.scheme.v(); ++a) {
          ++c.checked;
          const Graph& g = parts[static_cast<std::size_t>(ctx.component_of[static_cast<std::size_t>(a)])];
          int big = 0;
          for (const auto& comp : components(g, g.neighbors(a))) big += comp.size() > 1;
          if (big > 1) c.fail(tag(e.scheme, ctx.relation) + " a=" + std::to_string(a));
        }
        const CorollaryAudit co = corollary_audits(ctx);
        if (!co.c2_ok) c.fail(tag(e.scheme, ctx.relation) + ": " + co.c2_witness);
      }
    }
    const double secs = seconds_since(t0);
    if (secs > kC2Seconds) c.fail("runtime " + std::to_string(secs) + " s");
    c.extra = std::to_string(secs) + " s";
    results.push_back(c);
  }

  // 3. W-tilde is empty on connected relations.
  {
    Criterion c{3, "W-tilde empty"};
    for (const auto& e : catalog)
      for (const auto& ctx : e.relations) {
        if (!ctx.connected) continue;
        ++c.checked;
        const WEmptyAudit w = w_empty_audit(ctx);
        if (!w.ok || !w.w_tilde.empty()) c.fail(tag(e.scheme, ctx.relation) + ": " + w.witness);
      }
    results.push_back(c);
  }

  // 4 and 5 share the connectivity computations.
  Criterion c4{4, "kappa = lambda = valency"};
  Criterion c5{5, "Godsil bound"};
  long long oracle_checked = 0;
  std::vector<std::vector<int>> kappas(catalog.size());
  for (std::size_t k = 0; k < catalog.size(); ++k) {
    const auto& e = catalog[k];
    for (const auto& ctx : e.relations) {
      const std::int64_t v1 = e.scheme.valency(ctx.relation);
      if (!ctx.connected) {
        kappas[k].push_back(0);
        // Each component carries a scheme of its own; the bound applies there.
        for (const auto& comp : ctx.components) {
          ++c5.checked;
          VertexSet keep(e.scheme.v());
          for (int x : comp) keep.set(x);
          const Graph sub = ctx.graph.restricted_to(keep);
          const int lam = edge_connectivity(sub);
          if (!at_least(lam, godsil_bound(v1, static_cast<std::int64_t>(comp.size()))))
            c5.fail(tag(e.scheme, ctx.relation) + " component of " + std::to_string(comp.size()));
        }
        continue;
      }
      ++c4.checked;
      ++c5.checked;
      const int kap = vertex_connectivity(ctx.graph);
      const int lam = edge_connectivity(ctx.graph);
      kappas[k].push_back(kap);
      if (kap != v1 || lam != v1)
        c4.fail(tag(e.scheme, ctx.relation) + " kappa=" + std::to_string(kap) + " lambda=" + std::to_string(lam));
      if (e.scheme.v() <= kOracleMaxVertices) {
        ++oracle_checked;
        const auto adj = oracle::adjacency(ctx.graph);
        if (oracle::kappa(adj) != kap || oracle::lambda(adj) != lam)
          c4.fail(tag(e.scheme, ctx.relation) + " oracle disagrees");
      }
      if (!at_least(lam, godsil_bound(v1, e.scheme.v()))) c5.fail(tag(e.scheme, ctx.relation));
    }
  }
  {
    const Rational pb = godsil_bound(3, 10);
    const Graph pet = petersen_graph();
    const int lam = edge_connectivity(pet);
    if (pb.num != 5 || pb.den != 3 || lam != 3 || !at_least(lam, pb)) c5.fail("Petersen instance");
    c5.extra = "Petersen bound " + std::to_string(pb.num) + "/" + std::to_string(pb.den) +
               " vs lambda " + std::to_string(lam);
  }
  c4.extra = std::to_string(oracle_checked) + " relations also brute-forced";
  results.push_back(c4);
  results.push_back(c5);

  // 6. Spectral identities.
  {
    Criterion c{6, "spectral identities"};
    double worst_qp = 0, worst_row = 0, worst_trace = 0;
    for (const auto& e : catalog) {
      if (e.scheme.v() > kSpectralMaxVertices) continue;
      ++c.checked;
      try {
        const SpectralData sd = compute_spectral(e.scheme);
        const SpectralIdentities id = spectral_identities(e.scheme, sd);
        worst_qp = std::max(worst_qp, id.qp_residual);
        worst_row = std::max(worst_row, id.q_row_sum_residual);
        worst_trace = std::max(worst_trace, id.trace_residual);
        if (id.qp_residual >= kQpTolerance || id.q_row_sum_residual >= kRowSumTolerance ||
            id.trace_residual >= kTraceTolerance || !id.multiplicities_sum_to_v)
          c.fail(e.scheme.name());
      } catch (const SchemeError& err) {
        c.fail(e.scheme.name() + ": " + err.what());
      }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "max QP %.2e, row sums %.2e, traces %.2e", worst_qp, worst_row, worst_trace);
    c.extra = buf;
    results.push_back(c);
  }

  // 7. Graph distance equals diagram level for every pair.
  {
    Criterion c{7, "geodesic correspondence"};
    for (const auto& e : catalog) {
      if (e.scheme.v() > kGeodesicMaxVertices) continue;
      for (const auto& ctx : e.relations) {
        ++c.checked;
        bool ok = true;
        for (int a = 0; a < e.scheme.v() && ok; ++a) {
          const auto dist = distances_from(ctx.graph, a);
          for (int b = 0; b < e.scheme.v() && ok; ++b)
            ok = dist[b] == ctx.diagram.levels[e.scheme.table()(a, b)];
        }
        if (!ok || !geodesic_correspondence_check(e.scheme, ctx.relation).ok) c.fail(tag(e.scheme, ctx.relation));
      }
    }
    results.push_back(c);
  }

  // 8. Small-cut classification.
  {
    Criterion c{8, "small-cut classification"};
    const std::vector<std::pair<std::string, Graph>> allowed{{"C4", cycle_graph(4)},
                                                             {"C5", cycle_graph(5)},
                                                             {"K33", complete_bipartite_graph(3, 3)},
                                                             {"Petersen", petersen_graph()}};
    long long cycles = 0, diam2_small = 0;
    for (std::size_t k = 0; k < catalog.size(); ++k) {
      const auto& e = catalog[k];
      for (const auto& ctx : e.relations) {
        if (!ctx.connected || ctx.complete) continue;
        ++c.checked;
        const int kap = kappas[k][static_cast<std::size_t>(ctx.relation - 1)];
        const bool cyc = is_cycle_graph(ctx.graph);
        cycles += cyc;
        if ((kap == 2) != cyc) c.fail(tag(e.scheme, ctx.relation) + " kappa=" + std::to_string(kap));
        if (diameter(ctx.graph) == 2 && kap <= 3) {
          ++diam2_small;
          bool match = false;
          if (ctx.graph.live_count() <= 12)
            for (const auto& [name, h] : allowed)
              match = match || (h.n() == ctx.graph.n() && small_graphs_isomorphic(h, ctx.graph));
          if (!match) c.fail(tag(e.scheme, ctx.relation) + " diameter 2 outside the list");
        }
      }
    }
    for (const auto& [name, g] : allowed) {
      if (name == "C4") continue;
      const auto adj = oracle::adjacency(g);
      const auto en = enumerate_min_cuts(g, g.n());
      std::vector<std::vector<int>> got;
      for (const auto& cut : en.cuts) {
        got.push_back(cut.vertices);
        if (cut.neighborhood_of < 0) c.fail(name + " non-neighbourhood cut");
      }
      std::sort(got.begin(), got.end());
      auto brute = oracle::cuts_of_size(adj, oracle::kappa(adj));
      std::sort(brute.begin(), brute.end());
      if (!en.all_neighborhoods || got != brute) c.fail(name + " cut enumeration");
    }
    c.extra = std::to_string(cycles) + " cycles, " + std::to_string(diam2_small) + " diameter-2 members";
    results.push_back(c);
  }

  // 9. kappa exceeds p_ii^i on K_{2,1,1}-free relations.
  {
    Criterion c{9, "spectral cut lemma"};
    for (std::size_t k = 0; k < catalog.size(); ++k) {
      const auto& e = catalog[k];
      for (const auto& ctx : e.relations) {
        if (!ctx.connected || !k211_free(ctx.graph)) continue;
        ++c.checked;
        const int i = ctx.relation;
        const int kap = kappas[k][static_cast<std::size_t>(i - 1)];
        if (kap <= e.scheme.p(i, i, i))
          c.fail(tag(e.scheme, i) + " kappa=" + std::to_string(kap) + " p=" + std::to_string(e.scheme.p(i, i, i)));
      }
    }
    results.push_back(c);
  }

  // 10. Survey output does not depend on parallelism.
  {
    Criterion c{10, "survey determinism"};
    const fs::path base = fs::temp_directory_path() / "schemeconn_acceptance";
    fs::remove_all(base);
    const auto manifest = builtin_manifest();
    std::string trees[2];
    const int jobs[2] = {kSurveyJobsA, kSurveyJobsB};
    for (int r = 0; r < 2; ++r) {
      SurveyOptions opts;
      opts.jobs = jobs[r];
      opts.out_dir = (base / ("jobs" + std::to_string(jobs[r]))).string();
      const SurveyResult res = run_survey(manifest, opts);
      if (res.any_failure) c.fail("survey reported findings with jobs=" + std::to_string(jobs[r]));
      trees[r] = slurp_tree(opts.out_dir);
    }
    c.checked = static_cast<long long>(manifest.entries.size());
    if (trees[0].empty() || trees[0] != trees[1]) c.fail("report trees differ");
    c.extra = "jobs " + std::to_string(kSurveyJobsA) + " vs " + std::to_string(kSurveyJobsB) + ", " +
              std::to_string(trees[0].size()) + " bytes";
    results.push_back(c);
  }

  int failed = 0;
  std::sort(results.begin(), results.end(), [](const Criterion& a, const Criterion& b) { return a.number < b.number; });
  for (const auto& c : results) {
    const bool pass = c.failures == 0 && c.checked > 0;
    failed += !pass;
    std::printf("criterion %2d %s %s: %lld checked, %lld failures%s%s\n", c.number, pass ? "PASS" : "FAIL",
                c.title.c_str(), c.checked, c.failures, c.extra.empty() ? "" : "; ", c.extra.c_str());
    for (const auto& w : c.witnesses) std::printf("    %s\n", w.c_str());
  }
  std::printf("total %.1f s, %d of %zu criteria failed\n", seconds_since(t_start), failed, results.size());
  return failed == 0 ? 0 : 1;
}
