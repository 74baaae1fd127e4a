#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "mintrans/dualizer.hpp"
#include "mintrans/hypergraph.hpp"

namespace mintrans {

namespace k_policy {
struct Fixed {
  std::size_t k;
};
/// k = vc_dim(H) + 1, found by exhaustive search.
struct AutoVC {};
/// k = floor(log2 |H|) + 1, always above vc_dim(H).
struct AutoLog {};
}  // namespace k_policy

using KPolicy = std::variant<k_policy::Fixed, k_policy::AutoVC, k_policy::AutoLog>;

struct EnumConfig {
  KPolicy k_policy = k_policy::AutoVC{};
  /// Conformal mode skips the extension loop and uses this k instead of k_policy.
  std::optional<std::size_t> conformal_k;
  std::optional<std::size_t> limit;
  unsigned threads = 1;
  /// Re-check every emitted set with is_minimal_transversal.
  bool verify = false;
};

struct EnumStats {
  std::size_t emitted = 0;
  /// Dual checks performed (the last one answers "dual" unless truncated).
  std::size_t steps = 0;
  std::size_t k = 0;
  /// Stopped by the limit before completeness was confirmed.
  bool truncated = false;
  std::vector<double> step_seconds;
};

/// Resolves the trace width for a Sperner hypergraph with at least one edge, clamped to [1, n].
[[nodiscard]] std::size_t choose_k(const Hypergraph& h, const KPolicy& policy);

using EmitFn = std::function<void(const VertexSet&)>;

/**
 * Streams Tr(h): reduce h, emit minimalize(h, V), then alternate dual checks
 * and emissions until the checker answers "dual". Each minimal transversal
 * is emitted exactly once, in discovery order.
 */
EnumStats enumerate_all(const Hypergraph& h, const EnumConfig& config, const EmitFn& emit);

/// Collecting variant.
[[nodiscard]] Family enumerate_all(const Hypergraph& h, const EnumConfig& config = {});

/// Tr(h) as a Sperner hypergraph over the same universe and labels.
[[nodiscard]] Hypergraph transversal_hypergraph(const Hypergraph& h, const EnumConfig& config = {});

}  // namespace mintrans
