#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schemeconn/connectivity.hpp"
#include "schemeconn/diagram.hpp"
#include "schemeconn/graph.hpp"
#include "schemeconn/scheme.hpp"

namespace schemeconn {

// Everything derived once per (scheme, relation) and shared by the audits.
// Holds a reference to the scheme, which must outlive it.
struct RelationContext {
  const SchemeDescriptor& scheme;
  int relation;
  Graph graph;
  Diagram diagram;
  bool connected;
  bool complete;
  bool complete_multipartite;
  std::vector<int> component_of;  // vertex -> index into `components`
  std::vector<std::vector<int>> components;
};
RelationContext make_relation_context(const SchemeDescriptor& scheme, int i);

enum class AuditStatus { Checked, SkippedCompleteMultipartite, SkippedDisconnected };
const char* audit_status_name(AuditStatus s);

struct Theorem1Audit {
  AuditStatus status = AuditStatus::Checked;
  bool exists_a_connected = false;
  bool forall_a_connected = false;
  bool h_prime_connected = false;
  bool twin_free = false;
  bool equivalent = true;  // all four agree; meaningful when Checked
  int twin_pairs = 0;
};
Theorem1Audit theorem1_audit(const RelationContext& ctx);

struct CorollaryConfig {
  int exhaustive_max_valency = 12;
  int samples_per_basepoint = 200;
  std::uint64_t seed = 0x5EED;
  long long clique_cap = 100000;
};

// Corollaries are checked inside the component of Gamma containing the
// basepoint (or clique), so disconnected relations are covered too.
struct CorollaryAudit {
  bool c1_ok = true;
  bool c2_ok = true;
  bool c3_ok = true;
  bool c1_exhaustive = true;
  long long c1_sets_searched = 0;   // BFS-checked
  long long c1_sets_certified = 0;  // smaller than the component's kappa
  long long c3_cliques = 0;
  bool c3_truncated = false;
  std::string c1_witness, c2_witness, c3_witness;
};
// `known_kappa` (>= 0) skips recomputing kappa for a connected relation.
CorollaryAudit corollary_audits(const RelationContext& ctx, const CorollaryConfig& config = {},
                                int known_kappa = -1);

struct IUWDecomposition {
  int basepoint = 0;
  bool h_prime_connected = true;  // decomposition is all-empty when true
  std::vector<int> i_tilde, u_tilde, w_tilde;
  bool u_tilde_singleton_fallback = false;
  std::vector<std::vector<int>> h_prime_components;
  std::vector<int> i_a, u_a, w_a;
  std::vector<std::vector<int>> component_map;  // components of Gamma minus a-perp
};
// Classes {j != 0, i : p_ii^j = v_i}, independent of H' connectivity.
std::vector<int> twin_classes(const SchemeDescriptor& scheme, int i);
IUWDecomposition iuw_decompose(const RelationContext& ctx, int a);

struct WEmptyAudit {
  bool applicable = true;  // Gamma connected
  bool ok = true;
  bool h_prime_connected = true;
  std::vector<int> i_tilde, u_tilde, w_tilde;
  bool sizes_basepoint_independent = true;
  bool twins_match_i_tilde = true;
  std::string lemma_u_dist2 = "vacuous";  // vacuous | checked
  bool lemma_u_dist2_ok = true;
  std::string prop_w_i_disjoint = "vacuous";
  bool prop_w_i_disjoint_ok = true;
  bool prop_components_respect_h = true;  // no path across H' components
  std::string prop_common_neighbours = "skipped";  // checked when v <= 64
  bool prop_common_neighbours_ok = true;
  std::string witness;
};
WEmptyAudit w_empty_audit(const RelationContext& ctx);

struct SmallCutAudit {
  bool applicable = true;
  bool tcut2_ok = true;   // not complete and kappa <= 2 implies a cycle
  bool cycle_iff_kappa2 = true;
  bool tdiam2_ok = true;
  bool tcut3_ok = true;
  bool is_cycle = false;
  int diameter = 0;
  int kappa = 0;
  int tdiam2_max_t = 0;          // largest t < v_1 asserted
  bool tdiam2_t_eq_v1 = false;   // hypothesis held at t = v_1 (reported only)
  std::string tcut3_match;       // C4 | C5 | K33 | Petersen | ""
  std::string details;
};
SmallCutAudit small_cut_theorems_audit(const RelationContext& ctx, int kappa);

struct BallDeletionAudit {
  bool applicable = true;
  bool ok = true;
  int part_a_checks = 0;  // (a, b) pairs where Gamma minus the ball split
  int part_b_triggers = 0;
  std::string witness;
};
BallDeletionAudit ball_deletion_audit(const RelationContext& ctx, int t);
BallDeletionAudit ball_deletion_audit(const RelationContext& ctx);  // all t in 1..D

}  // namespace schemeconn
