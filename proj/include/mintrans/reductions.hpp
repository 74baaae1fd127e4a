#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mintrans/hypergraph.hpp"

namespace mintrans {

enum class LiftKind {
  HatUp,    ///< k new vertices added to every edge
  HatDown,  ///< one new vertex x plus an edge X ∪ {x} for every k-subset X
};

/**
 * A base hypergraph embedded into a larger one. Base vertices keep their
 * indices; the new vertices occupy n, n+1, ... Lifted edges are not
 * Sperner-reduced.
 */
struct LiftedHypergraph {
  Hypergraph base;
  LiftKind kind;
  std::size_t k;
  Hypergraph lifted;
  std::vector<VertexId> new_vertices;
};

/// Base edges each extended by x_1..x_k. Requires k >= 1 and at least one edge.
[[nodiscard]] LiftedHypergraph hat_up(const Hypergraph& h, std::size_t k);

/// Base edges plus X ∪ {x} for every k-subset X of the base universe. Requires 1 <= k <= n.
[[nodiscard]] LiftedHypergraph hat_down(const Hypergraph& h, std::size_t k);

/// Tr(base) from Tr(lifted) of a HatUp lift: drops the singletons {x_i}.
[[nodiscard]] Family recover_from_hat_up(const Family& lifted_transversals, const LiftedHypergraph& lift);

/// Tr(base) from Tr(lifted) of a HatDown lift: T \ {x} for members with x,
/// and the members without x that are minimal transversals of the base.
[[nodiscard]] Family recover_from_hat_down(const Family& lifted_transversals, const LiftedHypergraph& lift);

/// A copy of `pattern` inside `host` as a partial subhypergraph.
struct PartialEmbedding {
  /// vertex_map[i] is the host vertex playing pattern vertex i.
  std::vector<VertexId> vertex_map;
  /// edge_map[j] is a host edge whose trace on the image equals pattern edge j.
  std::vector<std::size_t> edge_map;
};

/**
 * Embeds `pattern` into `host` through a shattered set of size
 * |V(pattern)|. Returns nullopt exactly when vc_dim(host) < |V(pattern)|.
 */
[[nodiscard]] std::optional<PartialEmbedding> embed_partial(const Hypergraph& host, const Hypergraph& pattern);

}  // namespace mintrans
