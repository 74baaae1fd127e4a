#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "mintrans/hypergraph.hpp"

namespace mintrans {

/// Bit j set iff the j-th smallest vertex of the support belongs to the set.
using TraceMask = std::uint64_t;

/// Widest support a mask can describe.
inline constexpr std::size_t kMaxTraceWidth = 63;

/// A trace (T, S): a support S and the part T ⊆ S a set must cut out of it.
struct Trace {
  VertexSet part;
  VertexSet support;

  friend bool operator==(const Trace&, const Trace&) = default;
};

/// The distinct traces F ∩ S realized by a family's edges on one support S.
class TraceTable {
 public:
  explicit TraceTable(std::vector<VertexId> support);

  [[nodiscard]] const std::vector<VertexId>& support() const noexcept { return support_; }
  [[nodiscard]] std::size_t width() const noexcept { return support_.size(); }
  /// Number of distinct realized masks.
  [[nodiscard]] std::size_t size() const noexcept { return count_; }

  [[nodiscard]] TraceMask mask_of(const VertexSet& x) const noexcept {
    TraceMask mask = 0;
    for (std::size_t j = 0; j < support_.size(); ++j) {
      if (x.contains(support_[j])) mask |= TraceMask{1} << j;
    }
    return mask;
  }
  [[nodiscard]] VertexSet set_of(TraceMask mask, std::size_t universe_size) const;
  [[nodiscard]] VertexSet support_set(std::size_t universe_size) const;

  void add(TraceMask mask);
  [[nodiscard]] bool contains(TraceMask mask) const noexcept;
  [[nodiscard]] bool contains(const VertexSet& x) const noexcept { return contains(mask_of(x)); }

  /// Realized masks in ascending order.
  [[nodiscard]] std::vector<TraceMask> realized() const;

 private:
  // Flat bitmap for narrow supports, hash set beyond.
  static constexpr std::size_t kBitmapWidth = 20;

  std::vector<VertexId> support_;
  std::vector<bool> bitmap_;
  std::unordered_set<TraceMask> sparse_;
  std::size_t count_ = 0;
};

[[nodiscard]] TraceTable traces_on(std::span<const VertexSet> edges, std::vector<VertexId> support);
[[nodiscard]] TraceTable traces_on(const Hypergraph& h, const VertexSet& support);

/// All missing masks of one support, ascending.
struct MissingTraceBlock {
  std::vector<VertexId> support;
  std::vector<TraceMask> missing;
};

/**
 * Visits every k-trace not realized by h, supports in lexicographic order
 * and masks ascending within a support. The visitor returns false to stop.
 * Throws KOutOfRange unless 0 < k <= min(n, 63).
 */
void for_each_missing_block(const Hypergraph& h, std::size_t k,
                            const std::function<bool(const MissingTraceBlock&)>& visit);

[[nodiscard]] std::vector<MissingTraceBlock> missing_trace_blocks(const Hypergraph& h, std::size_t k);
[[nodiscard]] std::vector<Trace> missing_k_traces(const Hypergraph& h, std::size_t k);

/// Every k-trace of e is realized by some edge of h.
[[nodiscard]] bool is_k_compatible(const VertexSet& e, const Hypergraph& h, std::size_t k);

[[nodiscard]] bool shatters(const Hypergraph& h, const VertexSet& u);

/// Size of the largest shattered set; -1 for a hypergraph without edges.
[[nodiscard]] int vc_dim(const Hypergraph& h);

/// First shattered set of the given size in lexicographic order, if any.
[[nodiscard]] std::optional<VertexSet> find_shattered_set(const Hypergraph& h, std::size_t size);

/**
 * Largest size of an inclusion-minimal set contained in no edge. Found by a
 * level-wise scan over covered sets, so exponential in the largest edge.
 * Throws InstanceTooLarge once more than `covered_cap` covered sets exist.
 */
[[nodiscard]] std::size_t conformality(const Hypergraph& h, std::size_t covered_cap = std::size_t{1} << 22);
[[nodiscard]] bool is_k_conformal(const Hypergraph& h, std::size_t k);

}  // namespace mintrans
