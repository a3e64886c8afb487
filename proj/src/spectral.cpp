#include "schemeconn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "schemeconn/error.hpp"

namespace schemeconn {

namespace {

using Eigen::MatrixXd;

std::size_t at(int x) { return static_cast<std::size_t>(x); }

MatrixXd relation_matrix(const SchemeDescriptor& s, int i) {
  MatrixXd a = MatrixXd::Zero(s.v(), s.v());
  for (int x = 0; x < s.v(); ++x)
    for (int y = 0; y < s.v(); ++y)
      if (s.table()(x, y) == i) a(x, y) = 1.0;
  return a;
}

struct Eigenpairs {
  Eigen::VectorXd values;  // ascending
  MatrixXd vectors;
};

// Eigen's tridiagonal QR occasionally fails to converge on highly
// degenerate matrices; retry on a deterministic orthogonal conjugate.
Eigenpairs symmetric_eigen(const MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(m);
  if (es.info() == Eigen::Success) return {es.eigenvalues(), es.eigenvectors()};
  std::mt19937_64 rng(0xE16E);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int attempt = 0; attempt < 4; ++attempt) {
    MatrixXd r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < r.size(); ++i) r.data()[i] = unit(rng);
    const MatrixXd q = Eigen::HouseholderQR<MatrixXd>(r).householderQ();
    es.compute(q.transpose() * m * q);
    if (es.info() == Eigen::Success) return {es.eigenvalues(), q * es.eigenvectors()};
  }
  throw SchemeError(ErrorKind::RefinementFailed, "symmetric eigensolver did not converge");
}

// Splits the columns of `basis` into groups of (numerically) equal
// eigenvalue of basis^T a basis.
std::vector<MatrixXd> split_block(const MatrixXd& basis, const MatrixXd& a, double tol) {
  const MatrixXd m = basis.transpose() * a * basis;
  const Eigenpairs es = symmetric_eigen(m);
  const auto& vals = es.values;
  std::vector<MatrixXd> out;
  Eigen::Index start = 0;
  for (Eigen::Index k = 1; k <= vals.size(); ++k) {
    if (k == vals.size() || vals(k) - vals(k - 1) > tol) {
      out.push_back(basis * es.vectors.middleCols(start, k - start));
      start = k;
    }
  }
  return out;
}

}  // namespace

SpectralData compute_spectral(const SchemeDescriptor& scheme, const SpectralConfig& config) {
  if (!scheme.is_symmetric())
    throw SchemeError(ErrorKind::NotSymmetric, "spectral data needs a symmetric scheme");
  const int v = scheme.v();
  const int d = scheme.d();
  SpectralData out;
  out.v = v;
  out.d = d;

  std::vector<MatrixXd> a;
  double norm = 1.0;
  for (int i = 0; i <= d; ++i) {
    a.push_back(relation_matrix(scheme, i));
    norm = std::max(norm, static_cast<double>(scheme.valency(i)));
  }
  out.tolerance = config.group_tolerance * norm;

  std::vector<MatrixXd> blocks{MatrixXd::Identity(v, v)};
  for (int i = 1; i <= d; ++i) {
    std::vector<MatrixXd> next;
    for (const auto& b : blocks)
      for (auto& part : split_block(b, a[at(i)], out.tolerance)) next.push_back(std::move(part));
    blocks = std::move(next);
  }
  if (static_cast<int>(blocks.size()) != d + 1) {
    throw SchemeError(ErrorKind::RefinementFailed,
                      "found " + std::to_string(blocks.size()) + " common eigenspaces, expected " +
                          std::to_string(d + 1));
  }

  const double residual_tol = std::max(1e-6, 1e3 * out.tolerance);
  MatrixXd p(d + 1, d + 1);
  for (int j = 0; j <= d; ++j) {
    const MatrixXd& b = blocks[at(j)];
    for (int i = 0; i <= d; ++i) {
      const MatrixXd ab = a[at(i)] * b;
      const double lambda = (b.transpose() * ab).trace() / static_cast<double>(b.cols());
      const double res = (ab - lambda * b).cwiseAbs().maxCoeff();
      if (res > residual_tol) {
        throw SchemeError(ErrorKind::RefinementFailed,
                          "A_" + std::to_string(i) + " is not scalar on a refined block",
                          "residual=" + std::to_string(res));
      }
      p(j, i) = lambda;
    }
  }

  // Order: trivial eigenspace first, then descending eigenvalue rows.
  std::vector<int> order(at(d + 1));
  std::iota(order.begin(), order.end(), 0);
  auto is_trivial = [&](int j) {
    for (int i = 0; i <= d; ++i)
      if (std::abs(p(j, i) - static_cast<double>(scheme.valency(i))) > residual_tol) return false;
    return blocks[at(j)].cols() == 1;
  };
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    const bool tx = is_trivial(x), ty = is_trivial(y);
    if (tx != ty) return tx;
    for (int i = 1; i <= d; ++i) {
      if (std::abs(p(x, i) - p(y, i)) > residual_tol) return p(x, i) > p(y, i);
    }
    return false;
  });
  if (!is_trivial(order[0]))
    throw SchemeError(ErrorKind::RefinementFailed, "no eigenspace carries the valencies");

  out.P.resize(d + 1, d + 1);
  for (int j = 0; j <= d; ++j) {
    const MatrixXd& b = blocks[at(order[at(j)])];
    out.P.row(j) = p.row(order[at(j)]);
    out.idempotents.push_back(b * b.transpose());
    const double tr = out.idempotents.back().trace();
    out.traces.push_back(tr);
    out.multiplicities.push_back(static_cast<int>(std::lround(tr)));
  }

  // Representative pair (0, b_i) for each class; every class meets row 0.
  std::vector<int> rep(at(d + 1), -1);
  for (int y = 0; y < v; ++y)
    if (rep[at(scheme.table()(0, y))] < 0) rep[at(scheme.table()(0, y))] = y;
  out.Q.resize(d + 1, d + 1);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) out.Q(i, j) = v * out.idempotents[at(j)](0, rep[at(i)]);
  out.Q_inverse = static_cast<double>(v) * out.P.inverse();
  return out;
}

SpectralIdentities spectral_identities(const SchemeDescriptor& scheme, const SpectralData& s) {
  SpectralIdentities r;
  const int d = s.d;
  const MatrixXd qp = s.Q * s.P - static_cast<double>(s.v) * MatrixXd::Identity(d + 1, d + 1);
  r.qp_residual = qp.cwiseAbs().maxCoeff();
  for (int i = 1; i <= d; ++i) r.q_row_sum_residual = std::max(r.q_row_sum_residual, std::abs(s.Q.row(i).sum()));
  long long total = 0;
  for (int j = 0; j <= d; ++j) {
    r.trace_residual = std::max(r.trace_residual, std::abs(s.traces[at(j)] - std::round(s.traces[at(j)])));
    total += s.multiplicities[at(j)];
    if (s.multiplicities[at(j)] <= 0) r.multiplicities_sum_to_v = false;
  }
  r.multiplicities_sum_to_v = r.multiplicities_sum_to_v && total == s.v;
  for (int j = 0; j <= d; ++j)
    for (int i = 0; i <= d; ++i) {
      const double expected = static_cast<double>(scheme.valency(i)) * s.Q(i, j) /
                              static_cast<double>(s.multiplicities[at(j)]);
      r.pq_relation_residual = std::max(r.pq_relation_residual, std::abs(s.P(j, i) - expected));
    }
  r.q_routes_residual = (s.Q - s.Q_inverse).cwiseAbs().maxCoeff();
  MatrixXd sum = MatrixXd::Zero(s.v, s.v);
  for (int j = 0; j <= d; ++j) {
    sum += s.idempotents[at(j)];
    for (int k = j; k <= d; ++k) {
      MatrixXd prod = s.idempotents[at(j)] * s.idempotents[at(k)];
      if (j == k) prod -= s.idempotents[at(j)];
      r.idempotent_residual = std::max(r.idempotent_residual, prod.cwiseAbs().maxCoeff());
    }
  }
  r.idempotent_residual = std::max(
      r.idempotent_residual, (sum - MatrixXd::Identity(s.v, s.v)).cwiseAbs().maxCoeff());
  return r;
}

PrimitivityVerdict primitivity(const SchemeDescriptor& scheme, const SpectralData& s,
                               const SpectralConfig& config) {
  PrimitivityVerdict r;
  const int v = scheme.v();
  for (int i = 1; i <= scheme.d() && !r.disconnected_relation; ++i) {
    auto comps = components(relation_graph(scheme, i));
    if (comps.size() > 1) {
      r.disconnected_relation = true;
      r.witness_relation = i;
      r.blocks = std::move(comps);
    }
  }
  for (int l = 1; l <= s.d && !r.repeated_columns; ++l) {
    const MatrixXd& e = s.idempotents[at(l)];
    auto equal_columns = [&](int x, int y) {
      return (e.col(x) - e.col(y)).cwiseAbs().maxCoeff() <= config.column_tolerance;
    };
    bool repeated = false;
    for (int y = 1; y < v && !repeated; ++y) repeated = equal_columns(0, y);
    if (!repeated) continue;
    r.repeated_columns = true;
    r.witness_idempotent = l;
    if (r.blocks.empty()) {
      std::vector<int> rep;
      for (int x = 0; x < v; ++x) {
        std::size_t k = 0;
        while (k < rep.size() && !equal_columns(rep[k], x)) ++k;
        if (k == rep.size()) {
          rep.push_back(x);
          r.blocks.emplace_back();
        }
        r.blocks[k].push_back(x);
      }
    }
  }
  if (r.disconnected_relation != r.repeated_columns) {
    throw SchemeError(ErrorKind::DetectorDisagreement,
                      "relation connectivity and idempotent columns disagree on primitivity");
  }
  r.primitive = !r.disconnected_relation;
  return r;
}

double second_eigenvalue(const SchemeDescriptor& scheme, const SpectralData& s, int i) {
  const double vi = static_cast<double>(scheme.valency(i));
  const double tol = 1e-6 * std::max(1.0, vi);
  double best = -vi;
  for (int j = 0; j <= s.d; ++j)
    if (s.P(j, i) < vi - tol) best = std::max(best, s.P(j, i));
  return best;
}

SpectralCutAudit spec_cut_audit(const SchemeDescriptor& scheme, const SpectralData& s, int i,
                                const Graph& g, const CutReport& cuts) {
  SpectralCutAudit r;
  r.p_iii = scheme.p(i, i, i);
  if (!is_connected(g)) {
    r.status = "skipped_disconnected";
    return r;
  }
  r.theta = second_eigenvalue(scheme, s, i);
  r.theta_positive_ok = is_complete_multipartite(g) || r.theta > 1e-9;
  if (!k211_free(g)) {
    r.status = "skipped_not_k211_free";
    return r;
  }
  r.slack = static_cast<int>(cuts.kappa - r.p_iii);
  r.ok = cuts.kappa > r.p_iii;
  if (cuts.min_cuts)
    for (const auto& cut : cuts.min_cuts->cuts)
      if (static_cast<std::int64_t>(cut.vertices.size()) <= r.p_iii) r.ok = false;
  return r;
}

}  // namespace schemeconn
