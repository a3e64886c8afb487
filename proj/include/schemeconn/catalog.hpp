#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schemeconn/graph.hpp"
#include "schemeconn/scheme.hpp"

namespace schemeconn {

inline constexpr int kMaxSchemeVertices = 4096;
inline constexpr int kMaxGroupOrder = 256;

// Cayley table of a finite group on elements 0..v-1; mul[a*v+b] = a*b.
struct GroupTable {
  int v = 0;
  std::vector<int> mul;

  int operator()(int a, int b) const {
    return mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(v) +
               static_cast<std::size_t>(b)];
  }
};

// Checks closure, identity, inverses and associativity (exhaustive).
// Throws NotAGroup with a witness; returns the identity element.
int check_group(const GroupTable& group);

GroupTable cyclic_group(int n);
GroupTable symmetric_group_s3();
GroupTable dihedral_group_d4();
GroupTable quaternion_group_q8();

SchemeDescriptor gen_hamming(int n, int q);
SchemeDescriptor gen_johnson(int ground, int k);
SchemeDescriptor gen_cyclic(int n);
SchemeDescriptor gen_conjugacy(const GroupTable& group, std::string name = "conjugacy");
// Distance partition of a connected graph; throws NotDistanceRegular with a
// witness pair when the partition is not a scheme.
SchemeDescriptor scheme_from_drg(const Graph& graph, std::string name = "drg");

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph petersen_graph();  // Kneser K(5,2), vertices in lexicographic 2-subset order
Graph hypercube_graph(int n);

enum class Family { Hamming, Johnson, Cyclic, Conjugacy, FromDrg };

struct FamilySpec {
  Family family = Family::Cyclic;
  std::vector<int> params;           // hamming n q | johnson v k | cyclic n
  std::optional<GroupTable> group;   // conjugacy
  std::optional<Graph> graph;        // from_drg
  std::string label;                 // scheme name

  SchemeDescriptor build() const;
};

FamilySpec hamming_spec(int n, int q);
FamilySpec johnson_spec(int ground, int k);
FamilySpec cyclic_spec(int n);
FamilySpec conjugacy_spec(GroupTable group, std::string label);
FamilySpec drg_spec(Graph graph, std::string label);

// Resolve a named family as written on the command line, e.g.
// {"hamming","4","2"}, {"johnson","5","2"}, {"cyclic","7"},
// {"conjugacy","s3"|"d4"|"q8"|"z5"}, {"drg","petersen"|"k33"}.
FamilySpec parse_family(const std::vector<std::string>& words);

// The named acceptance set, in canonical order.
std::vector<FamilySpec> builtin_catalog();

}  // namespace schemeconn
