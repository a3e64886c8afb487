#include "schemeconn/report.hpp"

#include <cmath>
#include <cstdio>

#include "schemeconn/error.hpp"

#ifndef SCHEMECONN_VERSION
#define SCHEMECONN_VERSION "0.0.0"
#endif

namespace schemeconn {

namespace {

std::string format_sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", x);
  return buf;
}

Outcome judge(bool applicable, bool ok) {
  if (!applicable) return Outcome::Skipped;
  return ok ? Outcome::Passed : Outcome::Failed;
}

ojson matrix_json(const Eigen::MatrixXd& m) {
  ojson rows = ojson::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(format_real(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson check_json(const CheckResult& c) {
  ojson j;
  j["ok"] = c.ok;
  if (c.witness) j["witness"] = {c.witness->a, c.witness->b};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

}  // namespace

std::string tool_version() { return SCHEMECONN_VERSION; }

ojson config_json(const AuditConfig& config) {
  ojson j;
  j["c1_exhaustive_max_valency"] = config.corollaries.exhaustive_max_valency;
  j["c1_samples_per_basepoint"] = config.corollaries.samples_per_basepoint;
  char seed[32];
  std::snprintf(seed, sizeof seed, "0x%llX", static_cast<unsigned long long>(config.corollaries.seed));
  j["c1_seed"] = seed;
  j["c3_clique_cap"] = config.corollaries.clique_cap;
  j["min_cut_budget"] = config.cut_budget;
  j["eigenvalue_group_tolerance"] = format_sci(config.spectral.group_tolerance);
  j["idempotent_column_tolerance"] = format_sci(config.spectral.column_tolerance);
  j["identity_tolerance"] = format_sci(config.identity_tolerance);
  j["trace_tolerance"] = format_sci(config.trace_tolerance);
  j["empty_graph_connected"] = true;
  return j;
}

std::string format_real(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) < 1e-9) return std::to_string(static_cast<long long>(r));
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Passed: return "passed";
    case Outcome::Failed: return "failed";
    case Outcome::Skipped: return "skipped";
  }
  return "unknown";
}

SchemeAnalysis analyze_scheme(const SchemeDescriptor& input, const AuditConfig& config) {
  SchemeAnalysis a{input.is_symmetric() ? input : symmetrize(input), !input.is_symmetric(),
                   std::nullopt, std::nullopt, ojson::object(), {}, {}};
  ojson& j = a.spectral_json;
  try {
    a.spectral = compute_spectral(a.scheme, config.spectral);
  } catch (const SchemeError& e) {
    j["error"] = e.what();
    a.outcomes.emplace_back("spectral_identities", Outcome::Failed);
    a.findings.push_back(std::string("spectral: ") + e.what());
    return a;
  }
  const SpectralData& s = *a.spectral;
  j["P"] = matrix_json(s.P);
  j["Q"] = matrix_json(s.Q);
  j["multiplicities"] = s.multiplicities;

  const SpectralIdentities id = spectral_identities(a.scheme, s);
  const bool identities_ok = id.qp_residual < config.identity_tolerance &&
                             id.q_row_sum_residual < config.identity_tolerance &&
                             id.trace_residual < config.trace_tolerance &&
                             id.pq_relation_residual < config.identity_tolerance &&
                             id.q_routes_residual < config.identity_tolerance &&
                             id.idempotent_residual < config.identity_tolerance &&
                             id.multiplicities_sum_to_v;
  ojson ij;
  ij["ok"] = identities_ok;
  ij["qp_below_tolerance"] = id.qp_residual < config.identity_tolerance;
  ij["q_row_sums_below_tolerance"] = id.q_row_sum_residual < config.identity_tolerance;
  ij["traces_integral"] = id.trace_residual < config.trace_tolerance;
  ij["pq_relation_below_tolerance"] = id.pq_relation_residual < config.identity_tolerance;
  ij["q_matches_v_p_inverse"] = id.q_routes_residual < config.identity_tolerance;
  ij["idempotents_orthogonal"] = id.idempotent_residual < config.identity_tolerance;
  ij["multiplicities_sum_to_v"] = id.multiplicities_sum_to_v;
  j["identities"] = ij;
  a.outcomes.emplace_back("spectral_identities", judge(true, identities_ok));
  if (!identities_ok) a.findings.push_back("spectral identities out of tolerance");

  try {
    a.primitivity = primitivity(a.scheme, s, config.spectral);
    ojson pj;
    pj["primitive"] = a.primitivity->primitive;
    pj["witness_relation"] = a.primitivity->witness_relation;
    pj["witness_idempotent"] = a.primitivity->witness_idempotent;
    pj["block_count"] = a.primitivity->blocks.size();
    j["primitivity"] = pj;
    a.outcomes.emplace_back("primitivity_detectors", Outcome::Passed);
  } catch (const SchemeError& e) {
    j["primitivity"] = {{"error", e.what()}};
    a.outcomes.emplace_back("primitivity_detectors", Outcome::Failed);
    a.findings.push_back(std::string("primitivity: ") + e.what());
  }
  return a;
}

RelationReport analyze_relation(const SchemeAnalysis& analysis, int i, const AuditConfig& config) {
  const SchemeDescriptor& s = analysis.scheme;
  RelationReport out;
  out.relation = i;
  const RelationContext ctx = make_relation_context(s, i);
  const Graph& g = ctx.graph;
  const std::int64_t v1 = s.valency(i);
  auto record = [&](const std::string& name, Outcome o, const std::string& detail = {}) {
    out.outcomes.emplace_back(name, o);
    if (o == Outcome::Failed) out.findings.push_back(detail.empty() ? name : name + ": " + detail);
  };

  ojson& j = out.json;
  j["scheme"] = s.name();
  j["relation"] = i;
  j["v"] = s.v();
  j["d"] = s.d();
  j["valency"] = v1;
  j["diameter"] = ctx.connected ? ojson(diameter(g)) : ojson(nullptr);

  std::optional<CutReport> cuts;
  if (ctx.connected && g.live_count() >= 2) cuts = cut_report(g, static_cast<int>(v1), true, config.cut_budget);
  const Rational bound = godsil_bound(v1, s.v());
  j["kappa"] = cuts ? cuts->kappa : 0;
  j["lambda"] = cuts ? cuts->lambda : 0;
  j["godsil_bound_num"] = bound.num;
  j["godsil_bound_den"] = bound.den;

  const Theorem1Audit t1 = theorem1_audit(ctx);
  j["twin_pairs"] = t1.twin_pairs;
  j["h_prime_connected"] = t1.h_prime_connected;
  j["theorem1"] = {{"status", audit_status_name(t1.status)},
                   {"exists_a_connected", t1.exists_a_connected},
                   {"forall_a_connected", t1.forall_a_connected},
                   {"h_prime_connected", t1.h_prime_connected},
                   {"twin_free", t1.twin_free},
                   {"equivalent", t1.equivalent}};
  record("theorem1", judge(t1.status == AuditStatus::Checked, t1.equivalent));

  const CorollaryAudit co = corollary_audits(ctx, config.corollaries, cuts ? cuts->kappa : -1);
  ojson cj = {{"C1_ok", co.c1_ok},
              {"C2_ok", co.c2_ok},
              {"C3_ok", co.c3_ok},
              {"C1_mode", co.c1_exhaustive ? "exhaustive" : "sampled"},
              {"C1_sets_searched", co.c1_sets_searched},
              {"C1_sets_certified_by_kappa", co.c1_sets_certified},
              {"C3_cliques", co.c3_cliques},
              {"C3_truncated", co.c3_truncated},
              {"scope", ctx.connected ? "graph" : "component"}};
  if (!co.c1_witness.empty()) cj["C1_witness"] = co.c1_witness;
  if (!co.c2_witness.empty()) cj["C2_witness"] = co.c2_witness;
  if (!co.c3_witness.empty()) cj["C3_witness"] = co.c3_witness;
  j["corollaries"] = cj;
  record("corollary_c1", judge(true, co.c1_ok), co.c1_witness);
  record("corollary_c2", judge(true, co.c2_ok), co.c2_witness);
  record("corollary_c3", judge(true, co.c3_ok), co.c3_witness);

  const WEmptyAudit we = w_empty_audit(ctx);
  ojson wj = {{"applicable", we.applicable},
              {"ok", we.ok},
              {"h_prime_connected", we.h_prime_connected},
              {"I_tilde", we.i_tilde},
              {"U_tilde", we.u_tilde},
              {"W_tilde", we.w_tilde},
              {"sizes_basepoint_independent", we.sizes_basepoint_independent},
              {"twins_match_I_tilde", we.twins_match_i_tilde},
              {"U_at_distance_two", we.lemma_u_dist2},
              {"W_disjoint_from_twins_of_U", we.prop_w_i_disjoint},
              {"components_respect_diagram", we.prop_components_respect_h},
              {"common_neighbours_in_gamma_a", we.prop_common_neighbours},
              {"common_neighbours_ok", we.prop_common_neighbours_ok}};
  if (!we.witness.empty()) wj["witness"] = we.witness;
  j["w_empty"] = wj;
  record("w_empty", we.applicable || !we.ok ? judge(true, we.ok) : Outcome::Skipped, we.witness);

  SmallCutAudit sc;
  sc.applicable = false;
  if (cuts) sc = small_cut_theorems_audit(ctx, cuts->kappa);
  j["small_cut"] = {{"applicable", sc.applicable},
                    {"tcut2_ok", sc.tcut2_ok},
                    {"cycle_iff_kappa2", sc.cycle_iff_kappa2},
                    {"tdiam2_ok", sc.tdiam2_ok},
                    {"tdiam2_max_t", sc.tdiam2_max_t},
                    {"tdiam2_t_equals_valency_reported", sc.tdiam2_t_eq_v1},
                    {"tcut3_ok", sc.tcut3_ok},
                    {"tcut3_match", sc.tcut3_match},
                    {"is_cycle", sc.is_cycle}};
  record("small_cut", judge(sc.applicable, sc.tcut2_ok && sc.cycle_iff_kappa2 && sc.tdiam2_ok && sc.tcut3_ok),
         sc.details);

  if (cuts && cuts->min_cuts)
    j["min_cuts_are_neighborhoods"] = cuts->min_cuts->all_neighborhoods;
  else
    j["min_cuts_are_neighborhoods"] = nullptr;

  // Extended sections.
  j["connected"] = ctx.connected;
  j["complete"] = ctx.complete;
  j["complete_multipartite"] = ctx.complete_multipartite;
  j["symmetrized"] = analysis.symmetrized;

  ojson conn;
  if (cuts) {
    const bool conjecture = cuts->kappa == v1 && cuts->lambda == v1;
    out.conjecture_counterexample = !conjecture;
    conn = {{"whitney_ok", cuts->whitney_ok},
            {"godsil_ok", cuts->godsil_ok},
            {"conjecture_holds", conjecture},
            {"min_cut_count", cuts->min_cuts ? ojson(cuts->min_cuts->cuts.size()) : ojson(nullptr)},
            {"min_cuts_note", cuts->min_cuts_note}};
    record("whitney", judge(true, cuts->whitney_ok));
    record("godsil_bound", judge(true, cuts->godsil_ok));
    record("conjecture_kappa_lambda_valency", judge(true, conjecture),
           "kappa=" + std::to_string(cuts->kappa) + " lambda=" + std::to_string(cuts->lambda) +
               " valency=" + std::to_string(v1));
  } else {
    conn = {{"whitney_ok", nullptr}, {"godsil_ok", nullptr}, {"conjecture_holds", nullptr}};
    record("whitney", Outcome::Skipped);
    record("godsil_bound", Outcome::Skipped);
    record("conjecture_kappa_lambda_valency", Outcome::Skipped);
  }
  j["connectivity"] = conn;

  ojson geo;
  const CheckResult corr = geodesic_correspondence_check(s, i);
  geo["geodesic_correspondence"] = check_json(corr);
  record("geodesic_correspondence", judge(true, corr.ok), corr.detail);
  geo["levels"] = ctx.diagram.levels;
  geo["p_polynomial_generator"] = is_p_polynomial_generator(ctx.diagram);
  if (ctx.connected) {
    geo["c_values"] = geodesic_data(s, ctx.diagram).c_values;
    const CheckResult mono = c_monotone_check(s, ctx.diagram);
    const CheckResult uniq = unique_geodesic_check(s, i);
    geo["c_monotone"] = check_json(mono);
    geo["unique_geodesic"] = check_json(uniq);
    record("c_monotone", judge(true, mono.ok), mono.detail);
    record("unique_geodesic", judge(true, uniq.ok), uniq.detail);
  } else {
    record("c_monotone", Outcome::Skipped);
    record("unique_geodesic", Outcome::Skipped);
  }
  j["geometry"] = geo;

  const BallDeletionAudit bd = ball_deletion_audit(ctx);
  ojson bj = {{"applicable", bd.applicable},
              {"ok", bd.ok},
              {"part_a_checks", bd.part_a_checks},
              {"part_b_triggers", bd.part_b_triggers}};
  if (!bd.witness.empty()) bj["witness"] = bd.witness;
  j["ball_deletion"] = bj;
  record("ball_deletion", judge(bd.applicable, bd.ok), bd.witness);

  if (analysis.spectral) {
    const SpectralData& sd = *analysis.spectral;
    ojson spj;
    if (cuts) {
      const SpectralCutAudit sca = spec_cut_audit(s, sd, i, g, *cuts);
      spj = {{"status", sca.status},
             {"ok", sca.ok},
             {"p_iii", sca.p_iii},
             {"slack", sca.slack},
             {"theta", format_real(sca.theta)},
             {"theta_positive_ok", sca.theta_positive_ok}};
      record("spectral_cut", judge(sca.status == "checked", sca.ok));
      record("second_eigenvalue_positive", judge(!ctx.complete_multipartite, sca.theta_positive_ok));
    } else {
      spj = {{"status", "skipped_disconnected"}};
      record("spectral_cut", Outcome::Skipped);
      record("second_eigenvalue_positive", Outcome::Skipped);
    }
    j["spectral_cut"] = spj;
    if (analysis.primitivity) {
      const bool implication = t1.twin_pairs == 0 || !analysis.primitivity->primitive;
      j["twins_imply_imprimitive"] = implication;
      record("twins_imply_imprimitive", judge(true, implication));
    }
  }
  j["spectral"] = analysis.spectral_json;

  j["findings"] = out.findings;
  j["tool"] = {{"name", "schemeconn"}, {"version", tool_version()}};
  j["config"] = config_json(config);
  return out;
}

}  // namespace schemeconn
