#include "mintrans/vertex_set.hpp"

#include <algorithm>
#include <string>

namespace mintrans {

namespace {

std::size_t word_count(std::size_t n) { return (n + VertexSet::kWordBits - 1) / VertexSet::kWordBits; }

}  // namespace

VertexSet::VertexSet(std::size_t universe_size) : n_(universe_size), words_(word_count(universe_size), 0) {}

VertexSet::VertexSet(std::size_t universe_size, std::initializer_list<VertexId> members)
    : VertexSet(universe_size, std::span<const VertexId>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe_size, std::span<const VertexId> members) : VertexSet(universe_size) {
  for (VertexId v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe_size) {
  VertexSet s(universe_size);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  s.clear_tail();
  return s;
}

VertexSet VertexSet::singleton(std::size_t universe_size, VertexId v) {
  VertexSet s(universe_size);
  s.insert(v);
  return s;
}

std::size_t VertexSet::count() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void VertexSet::check_vertex(VertexId v) const {
  if (v >= n_) {
    throw VertexOutOfRange("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(n_));
  }
}

void VertexSet::insert(VertexId v) {
  check_vertex(v);
  words_[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(VertexId v) {
  check_vertex(v);
  words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
}

VertexSet VertexSet::with(VertexId v) const {
  VertexSet s = *this;
  s.insert(v);
  return s;
}

VertexSet VertexSet::without(VertexId v) const {
  VertexSet s = *this;
  s.erase(v);
  return s;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet s = *this;
  for (Word& w : s.words_) w = ~w;
  s.clear_tail();
  return s;
}

void VertexSet::clear_tail() noexcept {
  const std::size_t rem = n_ % kWordBits;
  if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::size_t VertexSet::intersection_count(const VertexSet& other) const {
  check_same_universe(other);
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return total;
}

VertexId VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return kNoVertex;
}

VertexId VertexSet::next(VertexId v) const noexcept {
  const VertexId start = v + 1;
  if (start >= n_) return kNoVertex;
  std::size_t w = start / kWordBits;
  Word bits = words_[w] & (~Word{0} << (start % kWordBits));
  while (true) {
    if (bits != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w == words_.size()) return kNoVertex;
    bits = words_[w];
  }
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(count());
  for_each([&](VertexId v) { out.push_back(v); });
  return out;
}

std::size_t VertexSet::hash() const noexcept {
  // splitmix-style mixing per word
  std::size_t h = n_ * 0x9E3779B97F4A7C15ULL;
  for (Word w : words_) {
    Word x = w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    h ^= static_cast<std::size_t>(x ^ (x >> 31));
  }
  return h;
}

std::strong_ordering operator<=>(const VertexSet& lhs, const VertexSet& rhs) noexcept {
  if (auto c = lhs.n_ <=> rhs.n_; c != 0) return c;
  for (std::size_t i = lhs.words_.size(); i-- > 0;) {
    if (auto c = lhs.words_[i] <=> rhs.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void normalize(Family& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

Family normalized(Family family) {
  normalize(family);
  return family;
}

bool same_family(const Family& lhs, const Family& rhs) { return normalized(lhs) == normalized(rhs); }

}  // namespace mintrans
