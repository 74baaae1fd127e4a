#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mintrans/hypergraph.hpp"
#include "mintrans/subtransversal.hpp"
#include "mintrans/traces.hpp"

namespace mintrans {

enum class DualizeMode {
  General,    ///< trace loop, then extension loop
  Conformal,  ///< trace loop only; sound only when H is k-conformal
};

enum class WitnessSource { None, Precheck, TraceLoop, ExtensionLoop };

[[nodiscard]] std::string_view to_string(WitnessSource source) noexcept;

/// Result of the core dual check: either "dual" or some E ∈ Tr(G) \ H.
struct DualCheckOutcome {
  std::optional<VertexSet> witness;
  WitnessSource source = WitnessSource::None;
  /// The unrealized trace of H that E realizes (trace loop only).
  std::optional<Trace> trace;

  [[nodiscard]] bool is_dual() const noexcept { return !witness.has_value(); }
};

/// Result of one incremental step: either "dual" or a new T ∈ Tr(H) \ G.
struct StepResult {
  std::optional<VertexSet> transversal;
  WitnessSource source = WitnessSource::None;
  /// The set the new transversal was derived from (E ∈ Tr(G) \ H or the precheck edge).
  std::optional<VertexSet> origin;
  std::optional<Trace> trace;

  [[nodiscard]] bool is_dual() const noexcept { return !transversal.has_value(); }
};

struct PrecheckHit {
  std::size_t edge_index;
  VertexId vertex;
};

/**
 * First edge E of h (with its smallest x ∈ E) such that E \ {x} still hits
 * every member of g, i.e. E is not a minimal transversal of g. Throws
 * PreconditionViolation when some edge of h misses a member of g, which
 * means g is not a subset of Tr(h).
 */
[[nodiscard]] std::optional<PrecheckHit> precheck_minimal(const Hypergraph& h, std::span<const VertexSet> g);

struct DualizeOptions {
  DualizeMode mode = DualizeMode::General;
  /// Workers for the trace loop; the answer does not depend on this.
  unsigned threads = 1;
  /// Cap on the extension family; default_extension_cap(n, k) when unset.
  std::optional<std::size_t> extension_cap;
};

/**
 * Dual checker bound to one Sperner hypergraph H and trace width k.
 *
 * The unrealized k-traces of H and the non-dominated part of ext_k(H) only
 * depend on H, so they are computed once and reused across calls with a
 * growing G. The verdict is correct for every k; k > vc_dim(H) keeps the
 * extension family polynomial.
 *
 * When a call's G extends the previous call's G, the trace loop starts at the
 * trace that produced the last witness and wraps around, and a trace that
 * failed before is only retried with selections that use the new members.
 * Calls on one Dualizer are serialized.
 */
class Dualizer {
 public:
  Dualizer(Hypergraph h, std::size_t k, DualizeOptions options = {});

  [[nodiscard]] const Hypergraph& hypergraph() const noexcept { return h_; }
  [[nodiscard]] std::size_t k() const noexcept { return k_; }
  [[nodiscard]] const DualizeOptions& options() const noexcept { return options_; }

  /// Decides Tr(g) = H, assuming H ⊆ Tr(g).
  [[nodiscard]] DualCheckOutcome dualize_core(std::span<const VertexSet> g) const;

  /// Decides g = Tr(H) for g ⊆ Tr(H) and returns a missing minimal transversal otherwise.
  /// Throws InvalidPartialDual when some member of g is not a minimal transversal of H.
  [[nodiscard]] StepResult step(std::span<const VertexSet> g) const;

  /// step() without re-validating g; for callers that build g from earlier steps.
  [[nodiscard]] StepResult step_unchecked(std::span<const VertexSet> g) const;

  /// Number of unrealized k-traces of H.
  [[nodiscard]] std::size_t missing_trace_count() const noexcept { return flat_.size(); }
  /// Members of ext_k(H) not inside an edge of H (computes them on first use).
  [[nodiscard]] const Family& nondominated_extension() const;

 private:
  struct TraceRef {
    std::size_t block;
    TraceMask mask;
    Mask64 part;  // T over the whole universe; only filled when word_sized_
  };

  [[nodiscard]] Trace trace_at(const TraceRef& ref) const;
  [[nodiscard]] std::optional<VertexSet> realize_at(std::size_t index, std::span<const VertexSet> g,
                                                    std::span<const Mask64> g_masks) const;
  [[nodiscard]] std::optional<DualCheckOutcome> trace_loop(std::span<const VertexSet> g,
                                                           std::span<const Mask64> g_masks) const;
  [[nodiscard]] std::optional<DualCheckOutcome> trace_loop_parallel(std::span<const VertexSet> g,
                                                                    std::span<const Mask64> g_masks) const;

  Hypergraph h_;
  std::size_t k_;
  DualizeOptions options_;
  std::vector<MissingTraceBlock> blocks_;
  std::vector<VertexSet> block_supports_;
  std::vector<Mask64> block_support_masks_;
  bool word_sized_ = false;
  std::vector<TraceRef> flat_;

  mutable std::mutex call_mutex_;
  mutable std::vector<VertexSet> last_g_;
  mutable std::vector<std::size_t> failed_upto_;  // per trace: it fails against last_g_[0, value)
  mutable std::size_t resume_ = 0;                // the trace loop starts at the last trace that succeeded

  mutable std::once_flag extension_once_;
  mutable Family nondominated_;
};

[[nodiscard]] DualCheckOutcome dualize_core(const Hypergraph& h, const Hypergraph& g, std::size_t k,
                                            DualizeMode mode = DualizeMode::General);

[[nodiscard]] StepResult trans_hyp_step(const Hypergraph& h, const Hypergraph& g, std::size_t k,
                                        DualizeMode mode = DualizeMode::General);

/// Throws InvalidPartialDual unless every member of g is a minimal transversal of h.
void validate_partial_dual(const Hypergraph& h, std::span<const VertexSet> g);

}  // namespace mintrans
