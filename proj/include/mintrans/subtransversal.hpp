#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mintrans/hypergraph.hpp"
#include "mintrans/traces.hpp"

namespace mintrans {

/// Proof that T extends to a minimal transversal.
struct SubtransversalCertificate {
  /// (v, index of an edge F_v with F_v ∩ T = {v}) for each v ∈ T, ascending in v.
  std::vector<std::pair<VertexId, std::size_t>> selection;
  /// Union of F_v \ {v}; the witness avoids it so every F_v stays private.
  VertexSet blocker_union;
  /// A minimal transversal containing T.
  VertexSet witness;
};

/**
 * Decides whether t is contained in some minimal transversal of g.
 *
 * Edges are split into those missing t and, for each v ∈ t, those meeting t
 * exactly in v; edges meeting t twice are ignored. A selection of one
 * private edge F_v per member is accepted when no edge missing t fits
 * inside W = ∪(F_v \ {v}). Selections are tried depth-first in member
 * order, candidates with smaller F_v \ {v} first, pruning as soon as W
 * swallows an edge and skipping a partial W that already failed at the same
 * depth. Cost is O(n·|g|^{|t|+1}) in the worst case.
 */
[[nodiscard]] std::optional<SubtransversalCertificate> is_subtransversal(const Hypergraph& g, const VertexSet& t);

/**
 * Same decision for the partial subhypergraph {F ∩ allowed : F ∈ edges}
 * (empty intersections kept) without materializing it. Requires t ⊆ allowed.
 * Edge indices in the certificate refer to `edges`.
 */
[[nodiscard]] std::optional<SubtransversalCertificate> find_subtransversal(std::span<const VertexSet> edges,
                                                                           const VertexSet& allowed,
                                                                           const VertexSet& t);

/**
 * A minimal transversal E of g with E ∩ S = T, or nullopt when none exists.
 * Such E are exactly the minimal transversals of {F \ (S \ T)} that
 * contain T. Throws InvalidTrace when T ⊄ S or the universes differ.
 */
[[nodiscard]] std::optional<VertexSet> realize_trace(const Hypergraph& g, const Trace& trace);
/**
 * fresh_from > 0 asserts that the trace has no realization in
 * edges[0, fresh_from). Only selections using a later edge are then searched,
 * since older selections now face more edges missing T. The witness is the
 * same as with fresh_from = 0; the answer is unspecified if the assertion is
 * false.
 */
[[nodiscard]] std::optional<VertexSet> realize_trace(std::span<const VertexSet> edges, const Trace& trace,
                                                     std::size_t fresh_from = 0);

/// Sets over a universe of at most 64 vertices, one bit per vertex.
using Mask64 = std::uint64_t;

/// realize_trace on word-sized sets; the dualizer's fast path.
[[nodiscard]] std::optional<Mask64> realize_trace(std::span<const Mask64> edges, Mask64 part, Mask64 support,
                                                  std::size_t universe_size, std::size_t fresh_from = 0);

[[nodiscard]] Mask64 to_mask(const VertexSet& s);
[[nodiscard]] VertexSet from_mask(Mask64 m, std::size_t universe_size);

}  // namespace mintrans
