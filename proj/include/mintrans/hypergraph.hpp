#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mintrans/vertex_set.hpp"

namespace mintrans {

/**
 * A hypergraph over the dense universe {0, ..., n-1}.
 *
 * Edges keep their insertion order and may repeat or dominate one another;
 * only sperner_reduce() removes them. An empty edge list is a valid
 * hypergraph (its dual is {∅}), and so is an edge list containing ∅ (its
 * dual is empty). Optional labels name the vertices for I/O.
 */
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::size_t universe_size, Family edges = {}, std::vector<std::string> labels = {});

  /// Builds a hypergraph from edge member lists.
  static Hypergraph from_lists(std::size_t universe_size, const std::vector<std::vector<VertexId>>& edges);

  [[nodiscard]] std::size_t universe_size() const noexcept { return n_; }
  [[nodiscard]] const Family& edges() const noexcept { return edges_; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
  [[nodiscard]] const VertexSet& edge(std::size_t i) const { return edges_.at(i); }
  [[nodiscard]] bool empty() const noexcept { return edges_.empty(); }
  [[nodiscard]] bool has_empty_edge() const noexcept;

  /// True once produced by sperner_reduce (no duplicates, no containments).
  [[nodiscard]] bool is_sperner() const noexcept { return sperner_; }

  [[nodiscard]] bool has_labels() const noexcept { return !labels_.empty(); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// The vertex's external name, or its 1-based index when unlabeled.
  [[nodiscard]] std::string label(VertexId v) const;

  [[nodiscard]] VertexSet universe() const { return VertexSet::full(n_); }

  friend bool operator==(const Hypergraph& lhs, const Hypergraph& rhs) {
    return lhs.n_ == rhs.n_ && lhs.edges_ == rhs.edges_ && lhs.labels_ == rhs.labels_;
  }

 private:
  friend Hypergraph sperner_reduce(const Hypergraph& h);

  std::size_t n_ = 0;
  Family edges_;
  std::vector<std::string> labels_;
  bool sperner_ = false;
};

/// Inclusion-minimal, deduplicated edges in first-occurrence order.
[[nodiscard]] Hypergraph sperner_reduce(const Hypergraph& h);
[[nodiscard]] Family sperner_reduce(std::span<const VertexSet> edges);

[[nodiscard]] bool is_transversal(std::span<const VertexSet> edges, const VertexSet& x);
[[nodiscard]] bool is_transversal(const Hypergraph& h, const VertexSet& x);

/// Transversal whose every member has a private edge.
[[nodiscard]] bool is_minimal_transversal(std::span<const VertexSet> edges, const VertexSet& x);
[[nodiscard]] bool is_minimal_transversal(const Hypergraph& h, const VertexSet& x);

/**
 * Shrinks the transversal x to a minimal one by visiting its members in
 * ascending order and dropping each vertex whose removal keeps x a
 * transversal. Throws PreconditionViolation when x is not a transversal.
 */
[[nodiscard]] VertexSet minimalize(std::span<const VertexSet> edges, const VertexSet& x);
[[nodiscard]] VertexSet minimalize(const Hypergraph& h, const VertexSet& x);

enum class EmptyEdgePolicy { Drop, Keep };

/// A derived hypergraph on a vertex subset, re-indexed densely.
struct SubHypergraph {
  Hypergraph graph;
  /// to_parent[i] is the parent vertex of sub-vertex i (ascending).
  std::vector<VertexId> to_parent;
  /// Parent edge index of each derived edge.
  std::vector<std::size_t> edge_origin;

  [[nodiscard]] VertexSet lift(const VertexSet& sub_set, std::size_t parent_universe) const;
};

/**
 * The partial subhypergraph on `vertices` over the selected edges (all edges
 * when `edge_indices` is empty): each edge F becomes F ∩ vertices. Drop
 * discards edges whose intersection is empty; Keep retains them as ∅.
 */
[[nodiscard]] SubHypergraph derive_sub(const Hypergraph& h, const VertexSet& vertices,
                                       std::optional<std::vector<std::size_t>> edge_indices = std::nullopt,
                                       EmptyEdgePolicy policy = EmptyEdgePolicy::Drop);

/// Keeps only the edges lying entirely inside `vertices`, re-indexed.
[[nodiscard]] SubHypergraph restriction(const Hypergraph& h, const VertexSet& vertices);

}  // namespace mintrans
