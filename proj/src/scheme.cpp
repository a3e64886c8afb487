#include "schemeconn/scheme.hpp"

#include <algorithm>
#include <sstream>

#include "schemeconn/error.hpp"

namespace schemeconn {

namespace {

std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

RelationTable::RelationTable(int v, int d, std::vector<int> classes)
    : v_(v), d_(d), classes_(std::move(classes)) {
  if (v < 1 || d < 0) {
    throw SchemeError(ErrorKind::InvalidArgument, "need v >= 1 and d >= 0");
  }
  if (classes_.size() != static_cast<std::size_t>(v) * static_cast<std::size_t>(v)) {
    throw SchemeError(ErrorKind::InvalidArgument, "classes matrix is not v x v");
  }
  std::vector<char> used(static_cast<std::size_t>(d) + 1, 0);
  for (int x = 0; x < v; ++x) {
    for (int y = 0; y < v; ++y) {
      const int c = (*this)(x, y);
      if (c < 0 || c > d) {
        throw SchemeError(ErrorKind::InvalidArgument, "class index out of range",
                          pair_str(x, y) + " -> " + std::to_string(c));
      }
      if ((x == y) != (c == 0)) {
        throw SchemeError(ErrorKind::NotAPartition,
                          "class 0 must be exactly the identity relation",
                          pair_str(x, y) + " -> " + std::to_string(c));
      }
      used[static_cast<std::size_t>(c)] = 1;
    }
  }
  for (int c = 0; c <= d; ++c) {
    if (!used[static_cast<std::size_t>(c)]) {
      throw SchemeError(ErrorKind::NotAPartition, "class index never used",
                        std::to_string(c));
    }
  }
  transpose_.assign(static_cast<std::size_t>(d) + 1, -1);
  for (int x = 0; x < v; ++x) {
    for (int y = 0; y < v; ++y) {
      const auto c = static_cast<std::size_t>((*this)(x, y));
      const int t = (*this)(y, x);
      if (transpose_[c] < 0) {
        transpose_[c] = t;
      } else if (transpose_[c] != t) {
        throw SchemeError(ErrorKind::NotClosedUnderTranspose,
                          "transpose of class " + std::to_string(c) +
                              " is not a single class",
                          pair_str(y, x));
      }
    }
  }
  for (int c = 0; c <= d; ++c) {
    if (transpose_[static_cast<std::size_t>(transpose_[static_cast<std::size_t>(c)])] != c) {
      throw SchemeError(ErrorKind::NotClosedUnderTranspose,
                        "transpose map is not an involution", std::to_string(c));
    }
  }
  symmetric_ = true;
  for (int c = 0; c <= d; ++c) {
    if (transpose_[static_cast<std::size_t>(c)] != c) symmetric_ = false;
  }
}

RelationTable RelationTable::from_rows(const std::vector<std::vector<int>>& rows) {
  const int v = static_cast<int>(rows.size());
  std::vector<int> flat;
  flat.reserve(rows.size() * rows.size());
  int d = 0;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) {
      throw SchemeError(ErrorKind::InvalidArgument, "classes matrix is not square");
    }
    for (int c : r) {
      flat.push_back(c);
      d = std::max(d, c);
    }
  }
  return RelationTable(v, d, std::move(flat));
}

std::vector<std::vector<int>> RelationTable::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(v_));
  for (int x = 0; x < v_; ++x) {
    auto begin = classes_.begin() + static_cast<std::ptrdiff_t>(x) * v_;
    out[static_cast<std::size_t>(x)].assign(begin, begin + v_);
  }
  return out;
}

IntersectionTensor::IntersectionTensor(int d)
    : d_(d),
      p_(static_cast<std::size_t>(d + 1) * static_cast<std::size_t>(d + 1) *
             static_cast<std::size_t>(d + 1),
         0),
      valencies_(static_cast<std::size_t>(d + 1), 0) {}

SchemeDescriptor SchemeDescriptor::renamed(std::string name) const {
  SchemeDescriptor copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

SchemeDescriptor validate_scheme(const RelationTable& table, std::string name) {
  const int v = table.v();
  const int d = table.d();
  const auto n = static_cast<std::size_t>(d + 1);
  IntersectionTensor tensor(d);
  std::vector<std::pair<int, int>> reference(n, {-1, -1});
  std::vector<std::int64_t> counts(n * n);

  for (int a = 0; a < v; ++a) {
    for (int b = 0; b < v; ++b) {
      std::fill(counts.begin(), counts.end(), 0);
      for (int c = 0; c < v; ++c) {
        counts[static_cast<std::size_t>(table(a, c)) * n +
               static_cast<std::size_t>(table(c, b))]++;
      }
      const int k = table(a, b);
      auto& ref = reference[static_cast<std::size_t>(k)];
      if (ref.first < 0) {
        ref = {a, b};
        for (int i = 0; i <= d; ++i)
          for (int j = 0; j <= d; ++j)
            tensor.at(i, j, k) = counts[static_cast<std::size_t>(i) * n +
                                        static_cast<std::size_t>(j)];
        continue;
      }
      for (int i = 0; i <= d; ++i) {
        for (int j = 0; j <= d; ++j) {
          const auto got = counts[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)];
          if (got != tensor.p(i, j, k)) {
            std::ostringstream w;
            w << "i=" << i << " j=" << j << " k=" << k << " pair1="
              << pair_str(ref.first, ref.second) << " count1=" << tensor.p(i, j, k)
              << " pair2=" << pair_str(a, b) << " count2=" << got;
            throw SchemeError(ErrorKind::NonConstantIntersection,
                              "intersection count depends on the pair", w.str());
          }
        }
      }
    }
  }

  for (int i = 0; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      for (int k = 0; k <= d; ++k) {
        if (tensor.p(i, j, k) != tensor.p(j, i, k)) {
          std::ostringstream w;
          w << "i=" << i << " j=" << j << " k=" << k << " p_ij^k=" << tensor.p(i, j, k)
            << " p_ji^k=" << tensor.p(j, i, k);
          throw SchemeError(ErrorKind::NotCommutative, "p_ij^k != p_ji^k", w.str());
        }
      }
    }
  }

  std::vector<std::int64_t> vals(n);
  for (int i = 0; i <= d; ++i) {
    vals[static_cast<std::size_t>(i)] =
        tensor.p(i, table.transpose_map()[static_cast<std::size_t>(i)], 0);
  }
  tensor.set_valencies(std::move(vals));
  return SchemeDescriptor(table, std::move(tensor), std::move(name));
}

RelationTable symmetrize(const RelationTable& table) {
  if (table.symmetric()) return table;
  const auto& t = table.transpose_map();
  std::vector<int> relabel(t.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (relabel[i] >= 0) continue;
    relabel[i] = next;
    relabel[static_cast<std::size_t>(t[i])] = next;
    ++next;
  }
  std::vector<int> merged(table.classes().size());
  std::transform(table.classes().begin(), table.classes().end(), merged.begin(),
                 [&](int c) { return relabel[static_cast<std::size_t>(c)]; });
  return RelationTable(table.v(), next - 1, std::move(merged));
}

SchemeDescriptor symmetrize(const SchemeDescriptor& scheme) {
  if (scheme.is_symmetric()) return scheme;
  return validate_scheme(symmetrize(scheme.table()), scheme.name());
}

Graph relation_graph(const SchemeDescriptor& scheme, int i) {
  if (i == 0) {
    throw SchemeError(ErrorKind::IdentityClassRequested,
                      "class 0 is the identity relation");
  }
  if (i < 0 || i > scheme.d()) {
    throw SchemeError(ErrorKind::InvalidArgument, "relation index out of range",
                      std::to_string(i));
  }
  if (!scheme.is_symmetric()) {
    throw SchemeError(ErrorKind::NotSymmetric,
                      "relation graphs need a symmetric scheme; symmetrize first");
  }
  const auto& table = scheme.table();
  Graph g(table.v());
  for (int x = 0; x < table.v(); ++x)
    for (int y = x + 1; y < table.v(); ++y)
      if (table(x, y) == i) g.add_edge(x, y);
  return g;
}

bool is_complete_multipartite(const Graph& g) {
  bool ok = true;
  g.alive().for_each([&](int v) {
    if (!ok) return;
    const VertexSet part = g.alive() - g.row(v);  // non-neighbours plus v
    part.for_each([&](int u) {
      if (ok && !(g.alive() - g.row(u) == part)) ok = false;
    });
  });
  return ok;
}

}  // namespace schemeconn
