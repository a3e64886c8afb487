#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "schemeconn/catalog.hpp"
#include "schemeconn/diagram.hpp"
#include "schemeconn/error.hpp"

using namespace schemeconn;

namespace {

SchemeDescriptor petersen_scheme() { return scheme_from_drg(petersen_graph(), "petersen"); }

std::vector<std::pair<int, int>> edges_of(const Diagram& h) {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j <= h.d; ++j)
    for (int k = j + 1; k <= h.d; ++k)
      if (h.adjacent(j, k)) out.emplace_back(j, k);
  return out;
}

std::vector<int> loops_of(const Diagram& h) {
  std::vector<int> out;
  for (int j = 0; j <= h.d; ++j)
    if (h.loop(j)) out.push_back(j);
  return out;
}

// j ~ k iff p_ij^k + p_ik^j > 0, straight from the oracle tensor.
void expect_diagram_matches_oracle(const SchemeDescriptor& s, int i) {
  const auto p = *oracle::triple_counts(oracle::table_rows(s), s.d());
  const Diagram h = distribution_diagram(s, i);
  for (int j = 0; j <= s.d(); ++j)
    for (int k = 0; k <= s.d(); ++k)
      EXPECT_EQ(h.adjacent(j, k), p[i][j][k] + p[i][k][j] > 0) << j << "," << k;
}

}  // namespace

TEST(Diagram, PetersenIsPathWithLoopAtTwo) {
  const Diagram h = distribution_diagram(petersen_scheme(), 1);
  EXPECT_EQ(edges_of(h), (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
  EXPECT_EQ(loops_of(h), (std::vector<int>{2}));
  EXPECT_EQ(h.levels, (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(h_prime_connected(h));
  EXPECT_TRUE(is_p_polynomial_generator(h));
  expect_diagram_matches_oracle(petersen_scheme(), 1);
}

TEST(Diagram, PentagonLoopAtTwo) {
  const Diagram h = distribution_diagram(gen_cyclic(5), 1);
  EXPECT_EQ(edges_of(h), (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
  EXPECT_EQ(loops_of(h), (std::vector<int>{2}));
  EXPECT_TRUE(h_prime_connected(h));
}

TEST(Diagram, HammingFourTwoRelationTwoHasIsolatedAntipode) {
  const auto s = gen_hamming(4, 2);
  const Diagram h = distribution_diagram(s, 2);
  EXPECT_EQ(h_prime_vertices(h), (std::vector<int>{1, 3, 4}));
  for (int j : {1, 3}) EXPECT_FALSE(h.adjacent(4, j));
  EXPECT_FALSE(h_prime_connected(h));
  const auto comps = diagram_components(h, h_prime_vertices(h));
  EXPECT_EQ(comps, (std::vector<std::vector<int>>{{1, 3}, {4}}));
  for (int i = 1; i <= 4; ++i) expect_diagram_matches_oracle(s, i);
}

TEST(Diagram, RejectsIdentityAndOutOfRange) {
  const auto s = gen_cyclic(5);
  EXPECT_THROW((void)distribution_diagram(s, 0), SchemeError);
  EXPECT_THROW((void)distribution_diagram(s, 3), SchemeError);
}

TEST(Walks, PentagonLiftFollowsUniqueGeodesic) {
  const auto s = gen_cyclic(5);
  // a = 0, b = 2 has class 2; walking back through class 1 to class 0.
  EXPECT_EQ(lift_walk(s, 1, 0, 2, {2, 1, 0}), (std::vector<int>{2, 1, 0}));
}

TEST(Walks, PetersenLiftFromDistanceTwo) {
  const auto s = petersen_scheme();
  for (int b = 0; b < 10; ++b) {
    if (s.table()(0, b) != 2) continue;
    const auto walk = lift_walk(s, 1, 0, b, {2, 2, 1});
    ASSERT_EQ(walk.size(), 3U);
    EXPECT_EQ(project_walk(s, 1, 0, walk), (std::vector<int>{2, 2, 1}));
  }
}

TEST(Walks, ProjectThenLiftRoundTrip) {
  const auto s = gen_johnson(7, 3);
  const Graph g = relation_graph(s, 1);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int a = static_cast<int>(rng() % 35);
    std::vector<int> walk{static_cast<int>(rng() % 35)};
    for (int step = 0; step < 6; ++step) {
      const auto nb = g.neighbors(walk.back()).to_vector();
      walk.push_back(nb[rng() % nb.size()]);
    }
    const auto classes = project_walk(s, 1, a, walk);
    const auto lifted = lift_walk(s, 1, a, walk.front(), classes);
    EXPECT_EQ(project_walk(s, 1, a, lifted), classes);
  }
}

TEST(Walks, Errors) {
  const auto s = gen_cyclic(5);
  EXPECT_THROW((void)project_walk(s, 1, 0, {0, 2}), SchemeError);  // not adjacent
  try {
    (void)lift_walk(s, 1, 0, 2, {1, 0});
    FAIL();
  } catch (const SchemeError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LiftImpossible);
  }
  try {
    (void)lift_walk(s, 1, 0, 1, {1, 1});  // p_11^1 = 0 on C5
    FAIL();
  } catch (const SchemeError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LiftImpossible);
  }
}

TEST(Geodesic, CorrespondenceAgainstBfs) {
  for (const auto& s : {petersen_scheme(), gen_cyclic(6), gen_hamming(4, 2), gen_johnson(6, 3)}) {
    for (int i = 1; i <= s.d(); ++i) {
      EXPECT_TRUE(geodesic_correspondence_check(s, i).ok);
      const Diagram h = distribution_diagram(s, i);
      const auto adj = oracle::adjacency(relation_graph(s, i));
      for (int a = 0; a < s.v(); ++a) {
        const auto d = oracle::bfs(adj, a);
        for (int b = 0; b < s.v(); ++b) EXPECT_EQ(d[b], h.levels[s.table()(a, b)]);
      }
    }
  }
}

TEST(Geodesic, HexagonDistancesAndHammingWeights) {
  const Diagram c6 = distribution_diagram(gen_cyclic(6), 1);
  EXPECT_EQ(c6.levels, (std::vector<int>{0, 1, 2, 3}));
  const Diagram h42 = distribution_diagram(gen_hamming(4, 2), 1);
  EXPECT_EQ(h42.levels, (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(Geodesic, CValues) {
  const auto pent = gen_cyclic(5);
  EXPECT_EQ(c_of(pent, distribution_diagram(pent, 1), 1), 1);
  EXPECT_EQ(c_of(pent, distribution_diagram(pent, 1), 2), 1);
  const auto pet = petersen_scheme();
  EXPECT_EQ(c_of(pet, distribution_diagram(pet, 1), 2), 1);
  const auto h23 = gen_hamming(2, 3);
  const Diagram h = distribution_diagram(h23, 1);
  EXPECT_EQ(c_of(h23, h, 2), 2);
  EXPECT_EQ(geodesic_data(h23, h).unique_geodesic_classes, (std::vector<int>{1}));
  EXPECT_TRUE(c_monotone_check(h23, h).ok);
  EXPECT_TRUE(unique_geodesic_check(h23, 1).ok);
  EXPECT_TRUE(unique_geodesic_check(pet, 1).ok);
}

TEST(Interval, Examples) {
  const Graph c5 = relation_graph(gen_cyclic(5), 1);
  EXPECT_EQ(interval(c5, 3, 3).to_vector(), (std::vector<int>{3}));
  EXPECT_EQ(interval(c5, 0, 2).count(), 3);
  const Graph rook = relation_graph(gen_hamming(2, 3), 1);
  // Vertices 0 = (0,0) and 4 = (1,1) differ in both coordinates.
  EXPECT_EQ(interval(rook, 0, 4).count(), 4);
  const Graph two = Graph::from_edges(3, {{0, 1}});
  try {
    (void)interval(two, 0, 2);
    FAIL();
  } catch (const SchemeError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DisconnectedPair);
  }
}

TEST(Proximal, Examples) {
  const Graph c6 = relation_graph(gen_cyclic(6), 1);
  const auto single = proximal_partition(c6, {2});
  for (int x = 0; x < 6; ++x) EXPECT_EQ(single[x].only, 2);
  const auto anti = proximal_partition(c6, {0, 3});
  EXPECT_EQ(anti[1].only, 0);           // adjacent to 0, distance 2 from 3
  EXPECT_EQ(anti[2].only, 3);
  const Graph c8 = relation_graph(gen_cyclic(8), 1);
  const auto tie = proximal_partition(c8, {0, 4});
  EXPECT_EQ(tie[2].proximal, (std::vector<int>{0, 4}));
  EXPECT_EQ(tie[2].only, -1);
}

TEST(Dot, ContainsEdgesAndLoops) {
  const std::string dot = diagram_to_dot(distribution_diagram(gen_cyclic(5), 1));
  EXPECT_NE(dot.find("graph H1"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1"), std::string::npos);
  EXPECT_NE(dot.find("2 -- 2"), std::string::npos);
}
