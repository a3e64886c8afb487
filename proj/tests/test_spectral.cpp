#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "schemeconn/catalog.hpp"
#include "schemeconn/connectivity.hpp"
#include "schemeconn/error.hpp"
#include "schemeconn/spectral.hpp"

using namespace schemeconn;

namespace {

constexpr double kTol = 1e-8;

SchemeDescriptor petersen_scheme() { return scheme_from_drg(petersen_graph(), "petersen"); }

// Krawtchouk polynomial K_i(j) for H(n, q).
double krawtchouk(int n, int q, int i, int j) {
  double sum = 0;
  for (int h = 0; h <= i; ++h) {
    if (h > j || i - h > n - j) continue;
    sum += (h % 2 ? -1.0 : 1.0) * std::pow(q - 1, i - h) * oracle::binomial(j, h) *
           oracle::binomial(n - j, i - h);
  }
  return sum;
}

}  // namespace

TEST(Spectral, PentagonValencyRow) {
  const auto sd = compute_spectral(gen_cyclic(5));
  EXPECT_EQ(sd.multiplicities, (std::vector<int>{1, 2, 2}));
  for (int i = 0; i <= 2; ++i) EXPECT_NEAR(sd.P(0, i), (i == 0 ? 1 : 2), kTol);
}

TEST(Spectral, PetersenEigenvalues) {
  const auto sd = compute_spectral(petersen_scheme());
  EXPECT_EQ(sd.multiplicities, (std::vector<int>{1, 5, 4}));
  EXPECT_NEAR(sd.P(0, 1), 3, kTol);
  EXPECT_NEAR(sd.P(1, 1), 1, kTol);
  EXPECT_NEAR(sd.P(2, 1), -2, kTol);
}

TEST(Spectral, K33Eigenvalues) {
  const auto sd = compute_spectral(scheme_from_drg(complete_bipartite_graph(3, 3)));
  EXPECT_EQ(sd.multiplicities, (std::vector<int>{1, 4, 1}));
  EXPECT_NEAR(sd.P(1, 1), 0, kTol);
  EXPECT_NEAR(sd.P(2, 1), -3, kTol);
}

TEST(Spectral, PolygonsMatchCosineFormula) {
  for (int n = 3; n <= 12; ++n) {
    const auto sd = compute_spectral(gen_cyclic(n));
    const int d = n / 2;
    for (int j = 0; j <= d; ++j) {
      EXPECT_EQ(sd.multiplicities[j], (j == 0 || 2 * j == n) ? 1 : 2) << n;
      for (int i = 1; i <= d; ++i) {
        const double theta = 2 * std::numbers::pi * i * j / n;
        const double want = (2 * i == n) ? std::cos(theta) : 2 * std::cos(theta);
        EXPECT_NEAR(sd.P(j, i), want, 1e-9) << "n=" << n << " j=" << j << " i=" << i;
      }
    }
  }
}

TEST(Spectral, HammingMatchesKrawtchouk) {
  for (const auto& [n, q] : {std::pair{4, 2}, std::pair{6, 2}, std::pair{2, 5}, std::pair{3, 3}}) {
    const auto sd = compute_spectral(gen_hamming(n, q));
    for (int j = 0; j <= n; ++j) {
      EXPECT_EQ(sd.multiplicities[j], oracle::binomial(n, j) * static_cast<int>(std::pow(q - 1, j)));
      for (int i = 0; i <= n; ++i) {
        EXPECT_NEAR(sd.P(j, i), krawtchouk(n, q, i, j), 1e-8);
        EXPECT_NEAR(sd.Q(i, j), krawtchouk(n, q, j, i), 1e-8);  // self-dual
      }
    }
  }
}

TEST(Spectral, JohnsonFirstEigenmatrixColumn) {
  for (const auto& [v, k] : {std::pair{7, 3}, std::pair{10, 4}, std::pair{9, 2}}) {
    const auto sd = compute_spectral(gen_johnson(v, k));
    for (int j = 0; j <= k; ++j) {
      EXPECT_EQ(sd.multiplicities[j], oracle::binomial(v, j) - (j ? oracle::binomial(v, j - 1) : 0));
      EXPECT_NEAR(sd.P(j, 1), (k - j) * (v - k - j) - j, 1e-8);
    }
  }
}

TEST(Spectral, IdentitiesHold) {
  for (const auto& s : {gen_cyclic(7), gen_hamming(5, 2), gen_johnson(8, 3), petersen_scheme(),
                        gen_conjugacy(quaternion_group_q8())}) {
    const auto sym = s.is_symmetric() ? s : symmetrize(s);
    const auto sd = compute_spectral(sym);
    const auto id = spectral_identities(sym, sd);
    EXPECT_LT(id.qp_residual, 1e-8);
    EXPECT_LT(id.q_row_sum_residual, 1e-8);
    EXPECT_LT(id.trace_residual, 1e-6);
    EXPECT_LT(id.pq_relation_residual, 1e-8);
    EXPECT_LT(id.q_routes_residual, 1e-8);
    EXPECT_LT(id.idempotent_residual, 1e-8);
    EXPECT_TRUE(id.multiplicities_sum_to_v);
  }
}

TEST(Spectral, NonSymmetricRejected) {
  try {
    (void)compute_spectral(gen_conjugacy(cyclic_group(5)));
    FAIL();
  } catch (const SchemeError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSymmetric);
  }
}

TEST(Primitivity, Examples) {
  const auto h = gen_hamming(4, 2);
  const auto ph = primitivity(h, compute_spectral(h));
  EXPECT_FALSE(ph.primitive);
  EXPECT_TRUE(ph.disconnected_relation);
  EXPECT_TRUE(ph.repeated_columns);
  for (const auto& s : {gen_cyclic(5), petersen_scheme()}) {
    const auto p = primitivity(s, compute_spectral(s));
    EXPECT_TRUE(p.primitive);
    EXPECT_FALSE(p.repeated_columns);
  }
}

TEST(SecondEigenvalue, Examples) {
  const auto pet = petersen_scheme();
  EXPECT_NEAR(second_eigenvalue(pet, compute_spectral(pet), 1), 1, kTol);
  const auto k33 = scheme_from_drg(complete_bipartite_graph(3, 3));
  EXPECT_NEAR(second_eigenvalue(k33, compute_spectral(k33), 1), 0, kTol);
  const auto h23 = gen_hamming(2, 3);
  EXPECT_NEAR(second_eigenvalue(h23, compute_spectral(h23), 1), 1, kTol);
}

TEST(SpecCut, Examples) {
  {
    const auto s = gen_hamming(2, 3);
    const Graph g = relation_graph(s, 1);
    const auto r = spec_cut_audit(s, compute_spectral(s), 1, g, cut_report(g, 4, true));
    EXPECT_EQ(r.status, "checked");
    EXPECT_EQ(r.p_iii, 1);
    EXPECT_EQ(r.slack, 3);
    EXPECT_TRUE(r.ok);
  }
  for (const auto& s : {petersen_scheme(), gen_cyclic(5)}) {
    const Graph g = relation_graph(s, 1);
    const auto r = spec_cut_audit(s, compute_spectral(s), 1, g,
                                  cut_report(g, static_cast<int>(s.valency(1)), true));
    EXPECT_EQ(r.p_iii, 0);
    EXPECT_TRUE(r.ok);
  }
  {
    // J(5,2) relation 1 is the triangular graph T(5): not K_{2,1,1}-free.
    const auto s = gen_johnson(5, 2);
    const Graph g = relation_graph(s, 1);
    const auto r = spec_cut_audit(s, compute_spectral(s), 1, g, cut_report(g, 6, false));
    EXPECT_EQ(r.status, "skipped_not_k211_free");
  }
}
