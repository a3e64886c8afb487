#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schemeconn/graph.hpp"

namespace schemeconn {

// v x v matrix of class indices. Construction enforces the partition
// invariants (identity class on the diagonal only, every class used,
// closure under transpose); intersection numbers are checked separately by
// validate_scheme.
class RelationTable {
 public:
  RelationTable() = default;
  // classes is row-major v*v. Throws NotAPartition / NotClosedUnderTranspose
  // / InvalidArgument.
  RelationTable(int v, int d, std::vector<int> classes);
  static RelationTable from_rows(const std::vector<std::vector<int>>& rows);

  int v() const noexcept { return v_; }
  int d() const noexcept { return d_; }
  int operator()(int x, int y) const noexcept {
    return classes_[static_cast<std::size_t>(x) * static_cast<std::size_t>(v_) +
                    static_cast<std::size_t>(y)];
  }
  const std::vector<int>& classes() const noexcept { return classes_; }
  bool symmetric() const noexcept { return symmetric_; }
  // i -> i', the class of the transposed relation.
  const std::vector<int>& transpose_map() const noexcept { return transpose_; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const RelationTable& a, const RelationTable& b) {
    return a.v_ == b.v_ && a.d_ == b.d_ && a.classes_ == b.classes_;
  }

 private:
  int v_ = 0;
  int d_ = 0;
  std::vector<int> classes_;
  bool symmetric_ = true;
  std::vector<int> transpose_;
};

// Exact intersection numbers p[i][j][k] and valencies.
class IntersectionTensor {
 public:
  IntersectionTensor() = default;
  explicit IntersectionTensor(int d);

  int d() const noexcept { return d_; }
  std::int64_t p(int i, int j, int k) const noexcept { return p_[index(i, j, k)]; }
  std::int64_t& at(int i, int j, int k) noexcept { return p_[index(i, j, k)]; }
  std::int64_t valency(int i) const noexcept { return valencies_[static_cast<std::size_t>(i)]; }
  const std::vector<std::int64_t>& valencies() const noexcept { return valencies_; }
  void set_valencies(std::vector<std::int64_t> vals) { valencies_ = std::move(vals); }

  friend bool operator==(const IntersectionTensor& a, const IntersectionTensor& b) {
    return a.d_ == b.d_ && a.p_ == b.p_ && a.valencies_ == b.valencies_;
  }

 private:
  std::size_t index(int i, int j, int k) const noexcept {
    const auto n = static_cast<std::size_t>(d_ + 1);
    return (static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n +
           static_cast<std::size_t>(k);
  }
  int d_ = 0;
  std::vector<std::int64_t> p_;
  std::vector<std::int64_t> valencies_;
};

// A validated commutative association scheme. Only validate_scheme builds
// one, so the tensor always matches the table.
class SchemeDescriptor {
 public:
  const RelationTable& table() const noexcept { return table_; }
  const IntersectionTensor& tensor() const noexcept { return tensor_; }
  bool is_symmetric() const noexcept { return table_.symmetric(); }
  const std::string& name() const noexcept { return name_; }
  int v() const noexcept { return table_.v(); }
  int d() const noexcept { return table_.d(); }
  std::int64_t valency(int i) const noexcept { return tensor_.valency(i); }
  std::int64_t p(int i, int j, int k) const noexcept { return tensor_.p(i, j, k); }

  SchemeDescriptor renamed(std::string name) const;

 private:
  friend SchemeDescriptor validate_scheme(const RelationTable&, std::string);
  SchemeDescriptor(RelationTable table, IntersectionTensor tensor, std::string name)
      : table_(std::move(table)), tensor_(std::move(tensor)), name_(std::move(name)) {}

  RelationTable table_;
  IntersectionTensor tensor_;
  std::string name_;
};

// Full triple count over all ordered pairs. Throws NonConstantIntersection or
// NotCommutative with a witness.
SchemeDescriptor validate_scheme(const RelationTable& table, std::string name = {});

// Merge each class with its transpose; classes are renumbered by their least
// original index. The result is re-validated.
RelationTable symmetrize(const RelationTable& table);
SchemeDescriptor symmetrize(const SchemeDescriptor& scheme);

// Graph of basis relation i (1 <= i <= d) of a symmetric scheme.
Graph relation_graph(const SchemeDescriptor& scheme, int i);

// Complement of the live graph is a disjoint union of cliques.
bool is_complete_multipartite(const Graph& g);

}  // namespace schemeconn
