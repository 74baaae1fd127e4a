#pragma once

#include <cstddef>
#include <optional>
#include <unordered_set>

#include "mintrans/hypergraph.hpp"

namespace mintrans {

/// The k-extension of a hypergraph: every vertex set all of whose k-traces
/// are realized by some edge. Members keep their construction order.
class ExtensionFamily {
 public:
  ExtensionFamily(std::size_t universe_size, std::size_t k) : n_(universe_size), k_(k) {}

  [[nodiscard]] std::size_t universe_size() const noexcept { return n_; }
  [[nodiscard]] std::size_t k() const noexcept { return k_; }
  [[nodiscard]] const Family& members() const noexcept { return members_; }
  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
  [[nodiscard]] bool contains(const VertexSet& e) const { return index_.contains(e); }

  /// Returns false when e was already present.
  bool add(VertexSet e);

  [[nodiscard]] Hypergraph as_hypergraph() const { return Hypergraph(n_, members_); }

 private:
  std::size_t n_;
  std::size_t k_;
  Family members_;
  std::unordered_set<VertexSet, VertexSetHash> index_;
};

/// 4 · Σ_{i<k} C(n, i), saturating.
[[nodiscard]] std::size_t default_extension_cap(std::size_t n, std::size_t k) noexcept;

/**
 * Computes ext_k(h) by growing the vertex prefix v_0..v_i one vertex at a
 * time. The family on the first k vertices is the set of distinct edge
 * traces there; each later level keeps E and E ∪ {v_i} when their traces on
 * the k-subsets containing v_i are realized. Throws SizeOverflow once a level
 * holds more than `cap` members (default_extension_cap when omitted) and
 * KOutOfRange unless 0 < k <= n.
 */
[[nodiscard]] ExtensionFamily ext_k(const Hypergraph& h, std::size_t k, std::optional<std::size_t> cap = std::nullopt);

/// Members of ext_k(h) contained in no edge of h, in construction order.
[[nodiscard]] Family ext_k_nondominated(const Hypergraph& h, std::size_t k,
                                        std::optional<std::size_t> cap = std::nullopt);

}  // namespace mintrans
