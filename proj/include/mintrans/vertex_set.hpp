#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "mintrans/error.hpp"

namespace mintrans {

/// Dense 0-based vertex index into a hypergraph's universe.
using VertexId = std::size_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

/**
 * A subset of the fixed universe {0, ..., n-1}, stored as a bitset.
 *
 * Binary set operations require both operands to share the same universe
 * size and throw UniverseMismatch otherwise. Ordering compares the sets as
 * binary numbers (vertex i has weight 2^i), which is the "mask order" used
 * to normalize families.
 */
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe_size);
  VertexSet(std::size_t universe_size, std::initializer_list<VertexId> members);
  VertexSet(std::size_t universe_size, std::span<const VertexId> members);

  static VertexSet full(std::size_t universe_size);
  static VertexSet singleton(std::size_t universe_size, VertexId v);

  [[nodiscard]] std::size_t universe_size() const noexcept { return n_; }
  [[nodiscard]] std::size_t count() const noexcept;
  [[nodiscard]] bool empty() const noexcept;

  [[nodiscard]] bool contains(VertexId v) const noexcept {
    return v < n_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }

  void insert(VertexId v);
  void erase(VertexId v);

  [[nodiscard]] VertexSet with(VertexId v) const;
  [[nodiscard]] VertexSet without(VertexId v) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet lhs, const VertexSet& rhs) { return lhs |= rhs; }
  friend VertexSet operator&(VertexSet lhs, const VertexSet& rhs) { return lhs &= rhs; }
  friend VertexSet operator-(VertexSet lhs, const VertexSet& rhs) { return lhs -= rhs; }

  [[nodiscard]] VertexSet complement() const;

  [[nodiscard]] bool is_subset_of(const VertexSet& other) const;
  [[nodiscard]] bool intersects(const VertexSet& other) const;
  /// |this ∩ other| without materializing the intersection.
  [[nodiscard]] std::size_t intersection_count(const VertexSet& other) const;

  /// Smallest member, or kNoVertex when empty.
  [[nodiscard]] VertexId first() const noexcept;
  /// Smallest member strictly greater than v, or kNoVertex.
  [[nodiscard]] VertexId next(VertexId v) const noexcept;

  /// Members in ascending order.
  [[nodiscard]] std::vector<VertexId> members() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        fn(static_cast<VertexId>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
  }

  [[nodiscard]] std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }
  [[nodiscard]] std::size_t hash() const noexcept;

  friend bool operator==(const VertexSet& lhs, const VertexSet& rhs) noexcept {
    return lhs.n_ == rhs.n_ && std::equal(lhs.words_.begin(), lhs.words_.end(), rhs.words_.begin());
  }
  friend std::strong_ordering operator<=>(const VertexSet& lhs, const VertexSet& rhs) noexcept;

 private:
  void check_same_universe(const VertexSet& other) const {
    if (other.n_ != n_) throw UniverseMismatch(n_, other.n_);
  }
  void check_vertex(VertexId v) const;
  void clear_tail() noexcept;

  std::size_t n_ = 0;
  boost::container::small_vector<Word, 2> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

/// Families of vertex sets share a universe by convention.
using Family = std::vector<VertexSet>;

/// Sorts a family by mask order and removes duplicates.
void normalize(Family& family);
[[nodiscard]] Family normalized(Family family);

/// True when both families contain the same sets, ignoring order and multiplicity.
[[nodiscard]] bool same_family(const Family& lhs, const Family& rhs);

}  // namespace mintrans

template <>
struct std::hash<mintrans::VertexSet> {
  std::size_t operator()(const mintrans::VertexSet& s) const noexcept { return s.hash(); }
};
