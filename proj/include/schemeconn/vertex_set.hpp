#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace schemeconn {

// Fixed-universe bitset over vertices 0..size()-1. All binary operations
// require both operands to share the same universe size.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe, bool full = false);
  VertexSet(int universe, std::initializer_list<int> members);
  static VertexSet from_list(int universe, const std::vector<int>& members);

  int universe() const noexcept { return universe_; }
  int count() const noexcept;
  bool empty() const noexcept;
  bool test(int v) const noexcept {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  void set(int v) noexcept {
    words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void reset(int v) noexcept {
    words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  void clear() noexcept;

  // Smallest member >= from, or -1.
  int next(int from) const noexcept;
  int first() const noexcept { return next(0); }

  std::vector<int> to_vector() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  VertexSet& operator|=(const VertexSet& o) noexcept;
  VertexSet& operator&=(const VertexSet& o) noexcept;
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) noexcept;
  VertexSet complement() const;

  bool intersects(const VertexSet& o) const noexcept;
  bool is_subset_of(const VertexSet& o) const noexcept;
  int intersection_count(const VertexSet& o) const noexcept;

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    return a.to_vector() < b.to_vector();
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

 private:
  void trim() noexcept;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace schemeconn
