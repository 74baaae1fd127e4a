#include "mintrans/traces.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "mintrans/combinations.hpp"

namespace mintrans {

TraceTable::TraceTable(std::vector<VertexId> support) : support_(std::move(support)) {
  if (support_.size() > kMaxTraceWidth) throw KOutOfRange(support_.size(), "trace support wider than 63 vertices");
  if (support_.size() <= kBitmapWidth) bitmap_.assign(std::size_t{1} << support_.size(), false);
}

VertexSet TraceTable::set_of(TraceMask mask, std::size_t universe_size) const {
  VertexSet out(universe_size);
  for (std::size_t j = 0; j < support_.size(); ++j) {
    if ((mask >> j) & 1U) out.insert(support_[j]);
  }
  return out;
}

VertexSet TraceTable::support_set(std::size_t universe_size) const {
  return VertexSet(universe_size, std::span<const VertexId>(support_));
}

void TraceTable::add(TraceMask mask) {
  if (!bitmap_.empty()) {
    if (!bitmap_[mask]) {
      bitmap_[mask] = true;
      ++count_;
    }
  } else if (sparse_.insert(mask).second) {
    ++count_;
  }
}

bool TraceTable::contains(TraceMask mask) const noexcept {
  if (!bitmap_.empty()) return bitmap_[mask];
  return sparse_.contains(mask);
}

std::vector<TraceMask> TraceTable::realized() const {
  std::vector<TraceMask> out;
  out.reserve(count_);
  if (!bitmap_.empty()) {
    for (TraceMask m = 0; m < bitmap_.size(); ++m) {
      if (bitmap_[m]) out.push_back(m);
    }
  } else {
    out.assign(sparse_.begin(), sparse_.end());
    std::sort(out.begin(), out.end());
  }
  return out;
}

TraceTable traces_on(std::span<const VertexSet> edges, std::vector<VertexId> support) {
  TraceTable table(std::move(support));
  for (const auto& f : edges) table.add(table.mask_of(f));
  return table;
}

TraceTable traces_on(const Hypergraph& h, const VertexSet& support) {
  if (support.universe_size() != h.universe_size()) throw UniverseMismatch(h.universe_size(), support.universe_size());
  return traces_on(std::span<const VertexSet>(h.edges()), support.members());
}

namespace {

void check_k(std::size_t k, std::size_t n) {
  if (k == 0 || k > n) throw KOutOfRange(k, n);
  if (k > kMaxTraceWidth) throw KOutOfRange(k, "trace width above 63 is not supported");
}

std::vector<VertexId> iota_vertices(std::size_t n) {
  std::vector<VertexId> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace

void for_each_missing_block(const Hypergraph& h, std::size_t k,
                            const std::function<bool(const MissingTraceBlock&)>& visit) {
  check_k(k, h.universe_size());
  const auto vertices = iota_vertices(h.universe_size());
  const TraceMask all = (TraceMask{1} << k) - 1;
  MissingTraceBlock block;
  for_each_combination(std::span<const VertexId>(vertices), k, [&](std::span<const VertexId> support) {
    const TraceTable table = traces_on(std::span<const VertexSet>(h.edges()), {support.begin(), support.end()});
    if (table.size() == std::size_t{all} + 1) return true;
    block.support.assign(support.begin(), support.end());
    block.missing.clear();
    for (TraceMask m = 0;; ++m) {
      if (!table.contains(m)) block.missing.push_back(m);
      if (m == all) break;
    }
    return visit(block);
  });
}

std::vector<MissingTraceBlock> missing_trace_blocks(const Hypergraph& h, std::size_t k) {
  std::vector<MissingTraceBlock> out;
  for_each_missing_block(h, k, [&](const MissingTraceBlock& b) {
    out.push_back(b);
    return true;
  });
  return out;
}

std::vector<Trace> missing_k_traces(const Hypergraph& h, std::size_t k) {
  std::vector<Trace> out;
  const std::size_t n = h.universe_size();
  for_each_missing_block(h, k, [&](const MissingTraceBlock& b) {
    TraceTable shape(b.support);
    const VertexSet support = shape.support_set(n);
    for (TraceMask m : b.missing) out.push_back(Trace{shape.set_of(m, n), support});
    return true;
  });
  return out;
}

bool is_k_compatible(const VertexSet& e, const Hypergraph& h, std::size_t k) {
  if (e.universe_size() != h.universe_size()) throw UniverseMismatch(h.universe_size(), e.universe_size());
  check_k(k, h.universe_size());
  const auto vertices = iota_vertices(h.universe_size());
  return for_each_combination(std::span<const VertexId>(vertices), k, [&](std::span<const VertexId> support) {
    TraceTable probe({support.begin(), support.end()});
    const TraceMask want = probe.mask_of(e);
    return std::any_of(h.edges().begin(), h.edges().end(),
                       [&](const VertexSet& f) { return probe.mask_of(f) == want; });
  });
}

bool shatters(const Hypergraph& h, const VertexSet& u) {
  if (u.universe_size() != h.universe_size()) throw UniverseMismatch(h.universe_size(), u.universe_size());
  const std::size_t width = u.count();
  if (width > kMaxTraceWidth) return false;
  if (h.edge_count() < (std::size_t{1} << std::min<std::size_t>(width, 62))) return false;
  return traces_on(h, u).size() == (std::size_t{1} << width);
}

std::optional<VertexSet> find_shattered_set(const Hypergraph& h, std::size_t size) {
  const std::size_t n = h.universe_size();
  if (h.empty() || size > n || size > kMaxTraceWidth) return std::nullopt;
  if (size == 0) return VertexSet(n);
  if (h.edge_count() < (std::size_t{1} << size)) return std::nullopt;

  // Only vertices that are in some edge and missing from another can be shattered.
  std::vector<VertexId> pool;
  for (VertexId v = 0; v < n; ++v) {
    bool in_some = false;
    bool out_some = false;
    for (const auto& f : h.edges()) {
      (f.contains(v) ? in_some : out_some) = true;
      if (in_some && out_some) break;
    }
    if (in_some && out_some) pool.push_back(v);
  }

  std::optional<VertexSet> found;
  for_each_combination(std::span<const VertexId>(pool), size, [&](std::span<const VertexId> support) {
    const TraceTable table = traces_on(std::span<const VertexSet>(h.edges()), {support.begin(), support.end()});
    if (table.size() == (std::size_t{1} << size)) {
      found = VertexSet(n, support);
      return false;
    }
    return true;
  });
  return found;
}

int vc_dim(const Hypergraph& h) {
  if (h.empty()) return -1;
  // A shattered d-set needs 2^d distinct edges.
  const std::size_t distinct = normalized(h.edges()).size();
  const auto bound = static_cast<std::size_t>(std::bit_width(distinct) - 1);
  std::size_t d = 0;
  while (d < bound && find_shattered_set(h, d + 1)) ++d;
  return static_cast<int>(d);
}

std::size_t conformality(const Hypergraph& h, std::size_t covered_cap) {
  const std::size_t n = h.universe_size();
  const auto covered = [&](const VertexSet& x) {
    return std::any_of(h.edges().begin(), h.edges().end(), [&](const VertexSet& f) { return x.is_subset_of(f); });
  };

  std::size_t largest = 0;
  Family level;
  const VertexSet nothing(n);
  if (!covered(nothing)) return 0;
  level.push_back(nothing);
  std::size_t total = 1;

  for (std::size_t size = 1; !level.empty(); ++size) {
    const std::unordered_set<VertexSet, VertexSetHash> previous(level.begin(), level.end());
    Family next;
    for (const auto& base : level) {
      const VertexId top = base.empty() ? 0 : base.members().back() + 1;
      for (VertexId v = top; v < n; ++v) {
        const VertexSet candidate = base.with(v);
        bool all_covered = true;
        base.for_each([&](VertexId u) {
          if (all_covered && !previous.contains(candidate.without(u))) all_covered = false;
        });
        if (!all_covered) continue;
        if (covered(candidate)) {
          next.push_back(candidate);
          if (++total > covered_cap) {
            throw InstanceTooLarge("conformality scan exceeded " + std::to_string(covered_cap) + " covered sets");
          }
        } else {
          largest = size;
        }
      }
    }
    level = std::move(next);
  }
  return largest;
}

bool is_k_conformal(const Hypergraph& h, std::size_t k) { return conformality(h) <= k; }

}  // namespace mintrans
