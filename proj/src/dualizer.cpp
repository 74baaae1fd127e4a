#include "mintrans/dualizer.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "mintrans/extension.hpp"
#include "mintrans/subtransversal.hpp"

namespace mintrans {

std::string_view to_string(WitnessSource source) noexcept {
  switch (source) {
    case WitnessSource::None:
      return "none";
    case WitnessSource::Precheck:
      return "precheck";
    case WitnessSource::TraceLoop:
      return "trace-loop";
    case WitnessSource::ExtensionLoop:
      return "extension-loop";
  }
  return "unknown";
}

std::optional<PrecheckHit> precheck_minimal(const Hypergraph& h, std::span<const VertexSet> g) {
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const VertexSet& e = h.edge(i);
    std::optional<VertexId> removable;
    bool transversal = true;
    // x is removable iff no member of g meets e only in x.
    VertexSet pinned(h.universe_size());
    for (const auto& member : g) {
      const std::size_t hits = member.intersection_count(e);
      if (hits == 0) {
        transversal = false;
        break;
      }
      if (hits == 1) pinned.insert((member & e).first());
    }
    if (!transversal) {
      throw PreconditionViolation("edge #" + std::to_string(i) +
                                  " of H misses a member of G, so G is not contained in Tr(H)");
    }
    const VertexSet free = e - pinned;
    if (!free.empty()) removable = free.first();
    if (removable) return PrecheckHit{i, *removable};
  }
  return std::nullopt;
}

void validate_partial_dual(const Hypergraph& h, std::span<const VertexSet> g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].universe_size() != h.universe_size()) throw UniverseMismatch(h.universe_size(), g[i].universe_size());
    if (!is_minimal_transversal(h, g[i])) throw InvalidPartialDual(i, "is not a minimal transversal of H");
  }
}

Dualizer::Dualizer(Hypergraph h, std::size_t k, DualizeOptions options)
    : h_(std::move(h)), k_(k), options_(options) {
  if (!h_.is_sperner() && sperner_reduce(std::span<const VertexSet>(h_.edges())).size() != h_.edge_count()) {
    throw PreconditionViolation("dual check requires a Sperner hypergraph; reduce it first");
  }
  blocks_ = missing_trace_blocks(h_, k_);
  word_sized_ = h_.universe_size() <= 64;
  block_supports_.reserve(blocks_.size());
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& support = blocks_[b].support;
    block_supports_.emplace_back(h_.universe_size(), std::span<const VertexId>(support));
    if (word_sized_) block_support_masks_.push_back(to_mask(block_supports_.back()));
    for (TraceMask m : blocks_[b].missing) {
      Mask64 part = 0;
      for (std::size_t j = 0; word_sized_ && j < support.size(); ++j) {
        if ((m >> j) & 1U) part |= Mask64{1} << support[j];
      }
      flat_.push_back(TraceRef{b, m, part});
    }
  }
  if (options_.threads == 0) options_.threads = 1;
  failed_upto_.assign(flat_.size(), 0);
}

const Family& Dualizer::nondominated_extension() const {
  std::call_once(extension_once_, [this] { nondominated_ = ext_k_nondominated(h_, k_, options_.extension_cap); });
  return nondominated_;
}

Trace Dualizer::trace_at(const TraceRef& ref) const {
  const auto& support = blocks_[ref.block].support;
  VertexSet part(h_.universe_size());
  for (std::size_t j = 0; j < support.size(); ++j) {
    if ((ref.mask >> j) & 1U) part.insert(support[j]);
  }
  return Trace{std::move(part), block_supports_[ref.block]};
}

std::optional<VertexSet> Dualizer::realize_at(std::size_t index, std::span<const VertexSet> g,
                                               std::span<const Mask64> g_masks) const {
  const TraceRef& ref = flat_[index];
  const std::size_t fresh_from = failed_upto_[index];
  std::optional<VertexSet> e;
  if (!word_sized_) {
    e = realize_trace(g, trace_at(ref), fresh_from);
  } else if (auto m = realize_trace(g_masks, ref.part, block_support_masks_[ref.block], h_.universe_size(), fresh_from)) {
    e = from_mask(*m, h_.universe_size());
  }
  // each index is handled by one worker, so no lock is needed
  if (!e) failed_upto_[index] = g.size();
  return e;
}

std::optional<DualCheckOutcome> Dualizer::trace_loop(std::span<const VertexSet> g,
                                                     std::span<const Mask64> g_masks) const {
  for (std::size_t j = 0; j < flat_.size(); ++j) {
    const std::size_t i = (resume_ + j) % flat_.size();
    if (auto e = realize_at(i, g, g_masks)) {
      resume_ = i;
      return DualCheckOutcome{std::move(e), WitnessSource::TraceLoop, trace_at(flat_[i])};
    }
  }
  return std::nullopt;
}

std::optional<DualCheckOutcome> Dualizer::trace_loop_parallel(std::span<const VertexSet> g,
                                                              std::span<const Mask64> g_masks) const {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{kNone};
  std::mutex guard;
  std::optional<VertexSet> best_witness;
  std::exception_ptr failure;

  const auto worker = [&] {
    try {
      while (true) {
        const std::size_t j = next.fetch_add(1);
        if (j >= flat_.size() || j >= best.load()) return;
        auto e = realize_at((resume_ + j) % flat_.size(), g, g_masks);
        if (!e) continue;
        std::lock_guard lock(guard);
        if (j < best.load()) {
          best.store(j);
          best_witness = std::move(e);
        }
      }
    } catch (...) {
      std::lock_guard lock(guard);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
  };

  std::vector<std::thread> pool;
  for (unsigned t = 0; t < options_.threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  if (best.load() == kNone) return std::nullopt;
  // Every position before `best` was claimed and checked before the workers stopped.
  resume_ = (resume_ + best.load()) % flat_.size();
  return DualCheckOutcome{std::move(best_witness), WitnessSource::TraceLoop, trace_at(flat_[resume_])};
}

DualCheckOutcome Dualizer::dualize_core(std::span<const VertexSet> g) const {
  for (const auto& member : g) {
    if (member.universe_size() != h_.universe_size()) throw UniverseMismatch(h_.universe_size(), member.universe_size());
  }
  std::lock_guard lock(call_mutex_);
  const bool extends = last_g_.size() <= g.size() && std::equal(last_g_.begin(), last_g_.end(), g.begin());
  if (!extends) {
    std::fill(failed_upto_.begin(), failed_upto_.end(), 0);
    resume_ = 0;
  }
  last_g_.assign(g.begin(), g.end());
  std::vector<Mask64> g_masks;
  if (word_sized_) {
    g_masks.reserve(g.size());
    for (const auto& member : g) g_masks.push_back(to_mask(member));
  }
  auto found = options_.threads > 1 ? trace_loop_parallel(g, g_masks) : trace_loop(g, g_masks);
  if (found) return std::move(*found);

  if (options_.mode == DualizeMode::General) {
    for (const auto& e : nondominated_extension()) {
      if (is_minimal_transversal(g, e)) return DualCheckOutcome{e, WitnessSource::ExtensionLoop, std::nullopt};
    }
  }
  return DualCheckOutcome{};
}

StepResult Dualizer::step(std::span<const VertexSet> g) const {
  validate_partial_dual(h_, g);
  return step_unchecked(g);
}

StepResult Dualizer::step_unchecked(std::span<const VertexSet> g) const {
  const std::size_t n = h_.universe_size();
  if (auto hit = precheck_minimal(h_, g)) {
    const VertexSet& e = h_.edge(hit->edge_index);
    VertexSet start = (VertexSet::full(n) - e).with(hit->vertex);
    return StepResult{minimalize(h_, start), WitnessSource::Precheck, e, std::nullopt};
  }
  DualCheckOutcome core = dualize_core(g);
  if (core.is_dual()) return StepResult{};
  VertexSet start = VertexSet::full(n) - *core.witness;
  return StepResult{minimalize(h_, start), core.source, std::move(core.witness), std::move(core.trace)};
}

DualCheckOutcome dualize_core(const Hypergraph& h, const Hypergraph& g, std::size_t k, DualizeMode mode) {
  if (g.universe_size() != h.universe_size()) throw UniverseMismatch(h.universe_size(), g.universe_size());
  DualizeOptions options;
  options.mode = mode;
  const Dualizer dualizer(h, k, options);
  return dualizer.dualize_core(g.edges());
}

StepResult trans_hyp_step(const Hypergraph& h, const Hypergraph& g, std::size_t k, DualizeMode mode) {
  if (g.universe_size() != h.universe_size()) throw UniverseMismatch(h.universe_size(), g.universe_size());
  DualizeOptions options;
  options.mode = mode;
  const Dualizer dualizer(h, k, options);
  return dualizer.step(g.edges());
}

}  // namespace mintrans
