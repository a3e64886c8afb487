#include "schemeconn/catalog.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "schemeconn/error.hpp"

namespace schemeconn {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (1LL << 40)) return r;
  }
  return r;
}

void check_cap(long long v, const std::string& what) {
  if (v > kMaxSchemeVertices) {
    throw SchemeError(ErrorKind::SizeCap,
                      what + " would have " + std::to_string(v) + " vertices (cap " +
                          std::to_string(kMaxSchemeVertices) + ")");
  }
}

[[noreturn]] void not_a_group(const std::string& what, const std::string& witness) {
  throw SchemeError(ErrorKind::NotAGroup, what, witness);
}

GroupTable table_from_permutations(const std::vector<std::vector<int>>& elems) {
  // Composition (a*b)(x) = a(b(x)); elements must be closed under it.
  GroupTable g;
  g.v = static_cast<int>(elems.size());
  g.mul.resize(elems.size() * elems.size());
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      std::vector<int> prod(elems[a].size());
      for (std::size_t x = 0; x < prod.size(); ++x)
        prod[x] = elems[a][static_cast<std::size_t>(elems[b][x])];
      auto it = std::find(elems.begin(), elems.end(), prod);
      g.mul[a * elems.size() + b] = static_cast<int>(it - elems.begin());
    }
  }
  return g;
}

}  // namespace

int check_group(const GroupTable& group) {
  const int v = group.v;
  if (v < 1 || group.mul.size() != static_cast<std::size_t>(v) * static_cast<std::size_t>(v)) {
    not_a_group("table is not v x v", std::to_string(v));
  }
  if (v > kMaxGroupOrder) {
    throw SchemeError(ErrorKind::SizeCap, "group order above " + std::to_string(kMaxGroupOrder));
  }
  for (int a = 0; a < v; ++a)
    for (int b = 0; b < v; ++b)
      if (group(a, b) < 0 || group(a, b) >= v) {
        not_a_group("product out of range",
                    "(" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
  int identity = -1;
  for (int e = 0; e < v && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < v && ok; ++a) ok = group(e, a) == a && group(a, e) == a;
    if (ok) identity = e;
  }
  if (identity < 0) not_a_group("no identity element", "");
  for (int a = 0; a < v; ++a) {
    bool found = false;
    for (int b = 0; b < v && !found; ++b)
      found = group(a, b) == identity && group(b, a) == identity;
    if (!found) not_a_group("element without inverse", std::to_string(a));
  }
  for (int a = 0; a < v; ++a)
    for (int b = 0; b < v; ++b)
      for (int c = 0; c < v; ++c)
        if (group(group(a, b), c) != group(a, group(b, c))) {
          not_a_group("associativity fails", "(" + std::to_string(a) + "," +
                                                 std::to_string(b) + "," +
                                                 std::to_string(c) + ")");
        }
  return identity;
}

GroupTable cyclic_group(int n) {
  if (n < 1) throw SchemeError(ErrorKind::InvalidArgument, "cyclic group order must be >= 1");
  GroupTable g;
  g.v = n;
  g.mul.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g.mul[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
  return g;
}

GroupTable symmetric_group_s3() {
  std::vector<int> p{0, 1, 2};
  std::vector<std::vector<int>> elems;
  do {
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return table_from_permutations(elems);
}

GroupTable dihedral_group_d4() {
  // Symmetries of the square on corners 0..3: rotations r^k, then r^k s.
  std::vector<std::vector<int>> elems;
  for (int k = 0; k < 4; ++k) {
    std::vector<int> rot(4);
    for (int x = 0; x < 4; ++x) rot[static_cast<std::size_t>(x)] = (x + k) % 4;
    elems.push_back(rot);
  }
  for (int k = 0; k < 4; ++k) {
    std::vector<int> refl(4);
    for (int x = 0; x < 4; ++x) refl[static_cast<std::size_t>(x)] = ((k - x) % 4 + 4) % 4;
    elems.push_back(refl);
  }
  return table_from_permutations(elems);
}

GroupTable quaternion_group_q8() {
  // Elements sign * unit with unit in {1,i,j,k}; index = 4*(sign<0) + unit.
  static constexpr std::array<std::array<int, 4>, 4> unit_prod{{
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  }};
  static constexpr std::array<std::array<int, 4>, 4> unit_sign{{
      {1, 1, 1, 1},
      {1, -1, 1, -1},
      {1, -1, -1, 1},
      {1, 1, -1, -1},
  }};
  GroupTable g;
  g.v = 8;
  g.mul.resize(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int ua = a % 4, ub = b % 4;
      int sign = (a >= 4 ? -1 : 1) * (b >= 4 ? -1 : 1) *
                 unit_sign[static_cast<std::size_t>(ua)][static_cast<std::size_t>(ub)];
      const int unit = unit_prod[static_cast<std::size_t>(ua)][static_cast<std::size_t>(ub)];
      g.mul[static_cast<std::size_t>(a * 8 + b)] = unit + (sign < 0 ? 4 : 0);
    }
  }
  return g;
}

SchemeDescriptor gen_hamming(int n, int q) {
  if (n < 1 || q < 2) throw SchemeError(ErrorKind::InvalidArgument, "hamming needs n >= 1, q >= 2");
  long long v = 1;
  for (int i = 0; i < n; ++i) {
    v *= q;
    check_cap(v, "H(" + std::to_string(n) + "," + std::to_string(q) + ")");
  }
  const int vi = static_cast<int>(v);
  std::vector<int> digits(static_cast<std::size_t>(vi) * static_cast<std::size_t>(n));
  for (int x = 0; x < vi; ++x) {
    int r = x;
    for (int pos = n - 1; pos >= 0; --pos) {
      digits[static_cast<std::size_t>(x * n + pos)] = r % q;
      r /= q;
    }
  }
  std::vector<int> classes(static_cast<std::size_t>(vi) * static_cast<std::size_t>(vi));
  for (int x = 0; x < vi; ++x)
    for (int y = 0; y < vi; ++y) {
      int dist = 0;
      for (int pos = 0; pos < n; ++pos)
        dist += digits[static_cast<std::size_t>(x * n + pos)] !=
                digits[static_cast<std::size_t>(y * n + pos)];
      classes[static_cast<std::size_t>(x) * static_cast<std::size_t>(vi) +
              static_cast<std::size_t>(y)] = dist;
    }
  return validate_scheme(RelationTable(vi, n, std::move(classes)),
                         "hamming-" + std::to_string(n) + "-" + std::to_string(q));
}

SchemeDescriptor gen_johnson(int ground, int k) {
  if (k < 1 || 2 * k > ground) {
    throw SchemeError(ErrorKind::InvalidArgument, "johnson needs 1 <= k <= v/2");
  }
  const long long v = binomial(ground, k);
  check_cap(v, "J(" + std::to_string(ground) + "," + std::to_string(k) + ")");
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    subsets.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == ground - k + pos) --pos;
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)] + 1;
  }
  const int vi = static_cast<int>(subsets.size());
  std::vector<int> classes(static_cast<std::size_t>(vi) * static_cast<std::size_t>(vi));
  for (int x = 0; x < vi; ++x)
    for (int y = 0; y < vi; ++y) {
      std::vector<int> common;
      std::set_intersection(subsets[static_cast<std::size_t>(x)].begin(),
                            subsets[static_cast<std::size_t>(x)].end(),
                            subsets[static_cast<std::size_t>(y)].begin(),
                            subsets[static_cast<std::size_t>(y)].end(),
                            std::back_inserter(common));
      classes[static_cast<std::size_t>(x) * static_cast<std::size_t>(vi) +
              static_cast<std::size_t>(y)] = k - static_cast<int>(common.size());
    }
  return validate_scheme(RelationTable(vi, k, std::move(classes)),
                         "johnson-" + std::to_string(ground) + "-" + std::to_string(k));
}

SchemeDescriptor gen_cyclic(int n) {
  if (n < 3) throw SchemeError(ErrorKind::InvalidArgument, "polygon needs n >= 3");
  check_cap(n, "C_" + std::to_string(n));
  std::vector<int> classes(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int diff = std::abs(x - y);
      classes[static_cast<std::size_t>(x * n + y)] = std::min(diff, n - diff);
    }
  return validate_scheme(RelationTable(n, n / 2, std::move(classes)),
                         "cyclic-" + std::to_string(n));
}

SchemeDescriptor gen_conjugacy(const GroupTable& group, std::string name) {
  const int e = check_group(group);
  const int v = group.v;
  std::vector<int> inverse(static_cast<std::size_t>(v));
  for (int a = 0; a < v; ++a)
    for (int b = 0; b < v; ++b)
      if (group(a, b) == e) inverse[static_cast<std::size_t>(a)] = b;
  // Class label per element: identity first, then by least member index.
  std::vector<int> label(static_cast<std::size_t>(v), -1);
  label[static_cast<std::size_t>(e)] = 0;
  int next = 1;
  for (int g = 0; g < v; ++g) {
    if (label[static_cast<std::size_t>(g)] >= 0) continue;
    for (int h = 0; h < v; ++h)
      label[static_cast<std::size_t>(group(group(h, g), inverse[static_cast<std::size_t>(h)]))] = next;
    ++next;
  }
  std::vector<int> classes(static_cast<std::size_t>(v) * static_cast<std::size_t>(v));
  for (int a = 0; a < v; ++a)
    for (int b = 0; b < v; ++b)
      classes[static_cast<std::size_t>(a * v + b)] =
          label[static_cast<std::size_t>(group(a, inverse[static_cast<std::size_t>(b)]))];
  return validate_scheme(RelationTable(v, next - 1, std::move(classes)), std::move(name));
}

SchemeDescriptor scheme_from_drg(const Graph& graph, std::string name) {
  const int n = graph.n();
  check_cap(n, "distance scheme");
  if (graph.live_count() != n) {
    throw SchemeError(ErrorKind::InvalidArgument, "graph has deleted vertices");
  }
  if (!is_connected(graph)) {
    throw SchemeError(ErrorKind::Disconnected, "distance partition needs a connected graph");
  }
  auto dist = all_pairs_distances(graph);
  const int d = *std::max_element(dist.begin(), dist.end());
  try {
    return validate_scheme(RelationTable(n, d, std::move(dist)), std::move(name));
  } catch (const SchemeError& err) {
    if (err.kind() != ErrorKind::NonConstantIntersection) throw;
    throw SchemeError(ErrorKind::NotDistanceRegular,
                      "distance partition is not an association scheme", err.witness());
  }
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int x = 0; x < n; ++x) g.add_edge(x, (x + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int x = 0; x + 1 < n; ++x) g.add_edge(x, x + 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) g.add_edge(x, y);
  return g;
}

Graph complete_bipartite_graph(int m, int n) {
  Graph g(m + n);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < n; ++y) g.add_edge(x, m + y);
  return g;
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  Graph g(10);
  for (int x = 0; x < 10; ++x)
    for (int y = x + 1; y < 10; ++y) {
      auto [a, b] = pairs[static_cast<std::size_t>(x)];
      auto [c, d] = pairs[static_cast<std::size_t>(y)];
      if (a != c && a != d && b != c && b != d) g.add_edge(x, y);
    }
  return g;
}

Graph hypercube_graph(int n) {
  const int v = 1 << n;
  Graph g(v);
  for (int x = 0; x < v; ++x)
    for (int bit = 0; bit < n; ++bit)
      if (x < (x ^ (1 << bit))) g.add_edge(x, x ^ (1 << bit));
  return g;
}

SchemeDescriptor FamilySpec::build() const {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw SchemeError(ErrorKind::InvalidArgument,
                        "family " + label + " expects " + std::to_string(count) + " parameters");
    }
  };
  switch (family) {
    case Family::Hamming:
      need(2);
      return gen_hamming(params[0], params[1]).renamed(label);
    case Family::Johnson:
      need(2);
      return gen_johnson(params[0], params[1]).renamed(label);
    case Family::Cyclic:
      need(1);
      return gen_cyclic(params[0]).renamed(label);
    case Family::Conjugacy:
      if (!group) throw SchemeError(ErrorKind::InvalidArgument, "conjugacy family needs a group");
      return gen_conjugacy(*group, label);
    case Family::FromDrg:
      if (!graph) throw SchemeError(ErrorKind::InvalidArgument, "from_drg family needs a graph");
      return scheme_from_drg(*graph, label);
  }
  throw SchemeError(ErrorKind::InvalidArgument, "unknown family");
}

FamilySpec hamming_spec(int n, int q) {
  return {Family::Hamming, {n, q}, {}, {},
          "hamming-" + std::to_string(n) + "-" + std::to_string(q)};
}

FamilySpec johnson_spec(int ground, int k) {
  return {Family::Johnson, {ground, k}, {}, {},
          "johnson-" + std::to_string(ground) + "-" + std::to_string(k)};
}

FamilySpec cyclic_spec(int n) {
  return {Family::Cyclic, {n}, {}, {}, "cyclic-" + std::to_string(n)};
}

FamilySpec conjugacy_spec(GroupTable group, std::string label) {
  return {Family::Conjugacy, {}, std::move(group), {}, std::move(label)};
}

FamilySpec drg_spec(Graph graph, std::string label) {
  return {Family::FromDrg, {}, {}, std::move(graph), std::move(label)};
}

namespace {

int parse_int(const std::string& word) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(word, &used);
    if (used != word.size()) throw std::invalid_argument(word);
    return value;
  } catch (const std::exception&) {
    throw SchemeError(ErrorKind::ParseError, "expected an integer", word);
  }
}

}  // namespace

FamilySpec parse_family(const std::vector<std::string>& words) {
  if (words.empty()) throw SchemeError(ErrorKind::ParseError, "empty family spec");
  const std::string& kind = words[0];
  auto arity = [&](std::size_t n) {
    if (words.size() != n + 1) {
      throw SchemeError(ErrorKind::ParseError,
                        "family '" + kind + "' takes " + std::to_string(n) + " argument(s)");
    }
  };
  if (kind == "hamming") {
    arity(2);
    return hamming_spec(parse_int(words[1]), parse_int(words[2]));
  }
  if (kind == "johnson") {
    arity(2);
    return johnson_spec(parse_int(words[1]), parse_int(words[2]));
  }
  if (kind == "cyclic") {
    arity(1);
    return cyclic_spec(parse_int(words[1]));
  }
  if (kind == "conjugacy") {
    arity(1);
    const std::string& g = words[1];
    if (g == "s3") return conjugacy_spec(symmetric_group_s3(), "conj-S3");
    if (g == "d4") return conjugacy_spec(dihedral_group_d4(), "conj-D4");
    if (g == "q8") return conjugacy_spec(quaternion_group_q8(), "conj-Q8");
    if (g.size() > 1 && g[0] == 'z') {
      const int n = parse_int(g.substr(1));
      return conjugacy_spec(cyclic_group(n), "conj-Z" + std::to_string(n));
    }
    throw SchemeError(ErrorKind::ParseError, "unknown builtin group", g);
  }
  if (kind == "drg") {
    arity(1);
    const std::string& g = words[1];
    if (g == "petersen") return drg_spec(petersen_graph(), "drg-petersen");
    if (g == "k33") return drg_spec(complete_bipartite_graph(3, 3), "drg-K33");
    if (g.rfind("cube", 0) == 0) {
      const int n = parse_int(g.substr(4));
      return drg_spec(hypercube_graph(n), "drg-cube" + std::to_string(n));
    }
    throw SchemeError(ErrorKind::ParseError, "unknown builtin graph", g);
  }
  throw SchemeError(ErrorKind::ParseError, "unknown family", kind);
}

std::vector<FamilySpec> builtin_catalog() {
  std::vector<FamilySpec> out;
  for (int n = 3; n <= 12; ++n) out.push_back(cyclic_spec(n));
  for (int n = 1; n <= 6; ++n) out.push_back(hamming_spec(n, 2));
  for (int q = 3; q <= 5; ++q) out.push_back(hamming_spec(2, q));
  for (int ground = 2; ground <= 12; ++ground) out.push_back(johnson_spec(ground, 1));
  for (int ground = 4; ground <= 300; ++ground)
    for (int k = 2; 2 * k <= ground; ++k)
      if (binomial(ground, k) <= 300) out.push_back(johnson_spec(ground, k));
  out.push_back(conjugacy_spec(symmetric_group_s3(), "conj-S3"));
  out.push_back(conjugacy_spec(dihedral_group_d4(), "conj-D4"));
  out.push_back(conjugacy_spec(quaternion_group_q8(), "conj-Q8"));
  for (int n = 2; n <= 12; ++n)
    out.push_back(conjugacy_spec(cyclic_group(n), "conj-Z" + std::to_string(n)));
  out.push_back(drg_spec(petersen_graph(), "drg-petersen"));
  out.push_back(drg_spec(complete_bipartite_graph(3, 3), "drg-K33"));
  return out;
}

}  // namespace schemeconn
