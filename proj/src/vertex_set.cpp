#include "schemeconn/vertex_set.hpp"

namespace schemeconn {

VertexSet::VertexSet(int universe, bool full)
    : universe_(universe),
      words_((static_cast<std::size_t>(universe) + 63) / 64,
             full ? ~std::uint64_t{0} : 0) {
  trim();
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members)
    : VertexSet(universe) {
  for (int v : members) set(v);
}

VertexSet VertexSet::from_list(int universe, const std::vector<int>& members) {
  VertexSet s(universe);
  for (int v : members) s.set(v);
  return s;
}

void VertexSet::trim() noexcept {
  const int rem = universe_ & 63;
  if (rem != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << rem) - 1;
  }
}

int VertexSet::count() const noexcept {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words_)
    if (w) return false;
  return true;
}

void VertexSet::clear() noexcept {
  for (auto& w : words_) w = 0;
}

int VertexSet::next(int from) const noexcept {
  if (from >= universe_) return -1;
  std::size_t w = static_cast<std::size_t>(from) >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (bits) return static_cast<int>(w * 64 + std::countr_zero(bits));
    if (++w >= words_.size()) return -1;
    bits = words_[w];
  }
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet out = *this;
  for (auto& w : out.words_) w = ~w;
  out.trim();
  return out;
}

bool VertexSet::intersects(const VertexSet& o) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

int VertexSet::intersection_count(const VertexSet& o) const noexcept {
  int c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    c += std::popcount(words_[i] & o.words_[i]);
  return c;
}

}  // namespace schemeconn
