#include "mintrans/extension.hpp"

#include <algorithm>
#include <limits>

#include "mintrans/combinations.hpp"
#include "mintrans/traces.hpp"

namespace mintrans {

bool ExtensionFamily::add(VertexSet e) {
  if (e.universe_size() != n_) throw UniverseMismatch(n_, e.universe_size());
  if (!index_.insert(e).second) return false;
  members_.push_back(std::move(e));
  return true;
}

std::size_t default_extension_cap(std::size_t n, std::size_t k) noexcept {
  const std::size_t bound = sauer_bound(n, k);
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  return bound > kMax / 4 ? kMax : 4 * bound;
}

namespace {

bool compatible_on_all(const VertexSet& e, const std::vector<TraceTable>& tables) {
  return std::all_of(tables.begin(), tables.end(), [&](const TraceTable& t) { return t.contains(e); });
}

}  // namespace

ExtensionFamily ext_k(const Hypergraph& h, std::size_t k, std::optional<std::size_t> cap) {
  const std::size_t n = h.universe_size();
  if (k == 0 || k > n) throw KOutOfRange(k, n);
  if (k > kMaxTraceWidth) throw KOutOfRange(k, "trace width above 63 is not supported");
  const std::size_t limit = cap.value_or(default_extension_cap(n, k));

  VertexSet prefix(n);
  for (VertexId v = 0; v < k; ++v) prefix.insert(v);

  ExtensionFamily family(n, k);
  for (const auto& f : h.edges()) family.add(f & prefix);
  if (family.size() > limit) throw SizeOverflow(limit, k);

  std::vector<VertexId> earlier;
  for (VertexId v = 0; v + 1 < k; ++v) earlier.push_back(v);

  for (VertexId vi = k; vi < n; ++vi) {
    earlier.push_back(vi - 1);
    // Supports avoiding vi were already checked at an earlier level.
    std::vector<TraceTable> tables;
    tables.reserve(binomial(vi, k - 1));
    for_each_combination(std::span<const VertexId>(earlier), k - 1, [&](std::span<const VertexId> rest) {
      std::vector<VertexId> support(rest.begin(), rest.end());
      support.push_back(vi);
      tables.push_back(traces_on(std::span<const VertexSet>(h.edges()), std::move(support)));
      return true;
    });

    ExtensionFamily next(n, k);
    for (const auto& e : family.members()) {
      if (compatible_on_all(e, tables)) next.add(e);
      VertexSet grown = e.with(vi);
      if (compatible_on_all(grown, tables)) next.add(std::move(grown));
      if (next.size() > limit) throw SizeOverflow(limit, vi + 1);
    }
    family = std::move(next);
  }
  return family;
}

Family ext_k_nondominated(const Hypergraph& h, std::size_t k, std::optional<std::size_t> cap) {
  const ExtensionFamily family = ext_k(h, k, cap);
  Family out;
  for (const auto& e : family.members()) {
    const bool dominated =
        std::any_of(h.edges().begin(), h.edges().end(), [&](const VertexSet& f) { return e.is_subset_of(f); });
    if (!dominated) out.push_back(e);
  }
  return out;
}

}  // namespace mintrans
