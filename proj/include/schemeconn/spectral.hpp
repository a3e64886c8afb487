#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "schemeconn/connectivity.hpp"
#include "schemeconn/scheme.hpp"

namespace schemeconn {

struct SpectralConfig {
  double group_tolerance = 1e-9;   // relative to max(1, |A|)
  double column_tolerance = 1e-8;  // equal idempotent columns
};

// Common eigenspaces of the Bose-Mesner algebra. E_0 is the all-ones space;
// the rest are ordered by descending eigenvalue of A_1, then A_2, ...
struct SpectralData {
  int v = 0;
  int d = 0;
  Eigen::MatrixXd P;          // P(j, i): eigenvalue of A_i on E_j
  Eigen::MatrixXd Q;          // Q(i, j) = v (E_j)_{ab} for (a, b) in R_i
  Eigen::MatrixXd Q_inverse;  // v P^{-1}, compared against Q
  std::vector<int> multiplicities;
  std::vector<double> traces;
  std::vector<Eigen::MatrixXd> idempotents;
  double tolerance = 0;
};

// Requires a symmetric scheme. Throws RefinementFailed when the refined
// blocks do not diagonalise every A_i or their number differs from d + 1.
SpectralData compute_spectral(const SchemeDescriptor& scheme, const SpectralConfig& config = {});

struct SpectralIdentities {
  double qp_residual = 0;          // max |QP - vI|
  double q_row_sum_residual = 0;   // max over i > 0 of |sum_j Q(i, j)|
  double trace_residual = 0;       // max distance of trace(E_j) from an integer
  double pq_relation_residual = 0; // max |P(j,i) - v_i Q(i,j) / m_j|
  double q_routes_residual = 0;    // max |Q - v P^{-1}|
  double idempotent_residual = 0;  // max |E_j E_k - delta E_j| and |sum E_j - I|
  bool multiplicities_sum_to_v = true;
};
SpectralIdentities spectral_identities(const SchemeDescriptor& scheme, const SpectralData& s);

struct PrimitivityVerdict {
  bool primitive = true;
  bool disconnected_relation = false;  // detector (a)
  bool repeated_columns = false;       // detector (b)
  int witness_relation = -1;           // disconnected Gamma_i
  int witness_idempotent = -1;         // E_l with repeated columns
  std::vector<std::vector<int>> blocks;
};
// Throws DetectorDisagreement when the two detectors differ.
PrimitivityVerdict primitivity(const SchemeDescriptor& scheme, const SpectralData& s,
                               const SpectralConfig& config = {});

// Largest eigenvalue of A_i strictly below v_i.
double second_eigenvalue(const SchemeDescriptor& scheme, const SpectralData& s, int i);

struct SpectralCutAudit {
  std::string status = "checked";  // checked | skipped_not_k211_free | skipped_disconnected
  bool ok = true;
  std::int64_t p_iii = 0;
  int slack = 0;  // kappa - p_ii^i
  double theta = 0;
  bool theta_positive_ok = true;  // asserted unless complete multipartite
};
SpectralCutAudit spec_cut_audit(const SchemeDescriptor& scheme, const SpectralData& s, int i,
                                const Graph& g, const CutReport& cuts);

}  // namespace schemeconn
