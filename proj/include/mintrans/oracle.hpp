#pragma once

// Exhaustive reference implementations. They are slow on purpose and share no
// code path with the enumeration algorithms beyond the set primitives.

#include <cstddef>

#include "mintrans/hypergraph.hpp"

namespace mintrans::oracle {

inline constexpr std::size_t kMaxScanUniverse = 22;
inline constexpr std::size_t kMaxExtensionScanUniverse = 18;
inline constexpr std::size_t kMaxProductFamily = std::size_t{1} << 20;

/// Tr(h) by scanning all 2^n subsets and keeping the inclusion-minimal transversals.
[[nodiscard]] Family tr_subset_scan(const Hypergraph& h);

/// Tr(h) by multiplying out the edges one at a time with absorption.
[[nodiscard]] Family tr_edge_product(const Hypergraph& h);

/// Tr(h) in mask order. Runs both methods when n <= kMaxScanUniverse and
/// throws std::logic_error if they disagree; only the product otherwise.
[[nodiscard]] Family brute_tr(const Hypergraph& h);

/// {E ⊆ V : every k-trace of E is realized by h}, by full subset scan, in mask order.
[[nodiscard]] Family brute_ext_k(const Hypergraph& h, std::size_t k);

/// brute_tr(h) equals g as families.
[[nodiscard]] bool brute_is_dual(const Hypergraph& h, const Hypergraph& g);

}  // namespace mintrans::oracle
