#include "mintrans/reductions.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <unordered_set>

#include "mintrans/combinations.hpp"
#include "mintrans/traces.hpp"

namespace mintrans {

namespace {

std::vector<std::string> lifted_labels(const Hypergraph& h, std::size_t extra) {
  std::vector<std::string> labels;
  std::unordered_set<std::string> taken;
  for (VertexId v = 0; v < h.universe_size(); ++v) {
    labels.push_back(h.label(v));
    taken.insert(labels.back());
  }
  for (std::size_t i = 1; i <= extra; ++i) {
    std::string name = "_x" + std::to_string(i);
    while (taken.contains(name)) name += "_";
    taken.insert(name);
    labels.push_back(std::move(name));
  }
  return labels;
}

VertexSet widen(const VertexSet& s, std::size_t n) {
  VertexSet out(n);
  s.for_each([&](VertexId v) { out.insert(v); });
  return out;
}

VertexSet narrow(const VertexSet& s, std::size_t n) {
  VertexSet out(n);
  s.for_each([&](VertexId v) {
    if (v < n) out.insert(v);
  });
  return out;
}

void check_lift(const Family& transversals, const LiftedHypergraph& lift) {
  for (const auto& t : transversals) {
    if (t.universe_size() != lift.lifted.universe_size()) {
      throw UniverseMismatch(lift.lifted.universe_size(), t.universe_size());
    }
  }
}

}  // namespace

LiftedHypergraph hat_up(const Hypergraph& h, std::size_t k) {
  if (k == 0) throw PreconditionViolation("hat_up needs k >= 1");
  if (h.empty()) throw PreconditionViolation("hat_up needs at least one edge");
  const std::size_t n = h.universe_size();
  const std::size_t wide = n + k;

  LiftedHypergraph lift{h, LiftKind::HatUp, k, {}, {}};
  VertexSet extra(wide);
  for (std::size_t i = 0; i < k; ++i) {
    lift.new_vertices.push_back(n + i);
    extra.insert(n + i);
  }
  Family edges;
  for (const auto& f : h.edges()) edges.push_back(widen(f, wide) | extra);
  lift.lifted = Hypergraph(wide, std::move(edges), lifted_labels(h, k));
  return lift;
}

LiftedHypergraph hat_down(const Hypergraph& h, std::size_t k) {
  const std::size_t n = h.universe_size();
  if (k == 0 || k > n) throw KOutOfRange(k, n);
  const std::size_t wide = n + 1;
  const VertexId x = n;

  LiftedHypergraph lift{h, LiftKind::HatDown, k, {}, {x}};
  Family edges;
  for (const auto& f : h.edges()) edges.push_back(widen(f, wide));
  std::vector<VertexId> base(n);
  for (VertexId v = 0; v < n; ++v) base[v] = v;
  for_each_combination(std::span<const VertexId>(base), k, [&](std::span<const VertexId> subset) {
    edges.push_back(VertexSet(wide, subset).with(x));
    return true;
  });
  lift.lifted = Hypergraph(wide, std::move(edges), lifted_labels(h, 1));
  return lift;
}

Family recover_from_hat_up(const Family& lifted_transversals, const LiftedHypergraph& lift) {
  check_lift(lifted_transversals, lift);
  const std::size_t n = lift.base.universe_size();
  Family out;
  for (const auto& t : lifted_transversals) {
    const bool new_singleton = t.count() == 1 && t.first() >= n;
    if (!new_singleton) out.push_back(narrow(t, n));
  }
  return normalized(std::move(out));
}

Family recover_from_hat_down(const Family& lifted_transversals, const LiftedHypergraph& lift) {
  check_lift(lifted_transversals, lift);
  const std::size_t n = lift.base.universe_size();
  const VertexId x = lift.new_vertices.front();
  Family out;
  for (const auto& t : lifted_transversals) {
    VertexSet base_part = narrow(t, n);
    if (t.contains(x) || is_minimal_transversal(lift.base, base_part)) out.push_back(std::move(base_part));
  }
  return normalized(std::move(out));
}

std::optional<PartialEmbedding> embed_partial(const Hypergraph& host, const Hypergraph& pattern) {
  const std::size_t width = pattern.universe_size();
  const auto shattered = find_shattered_set(host, width);
  if (!shattered) return std::nullopt;

  PartialEmbedding embedding;
  embedding.vertex_map = shattered->members();
  for (const auto& f : pattern.edges()) {
    VertexSet image(host.universe_size());
    f.for_each([&](VertexId v) { image.insert(embedding.vertex_map[v]); });
    const auto it = std::find_if(host.edges().begin(), host.edges().end(),
                                 [&](const VertexSet& e) { return (e & *shattered) == image; });
    // A shattered set realizes every trace, so the search cannot fail.
    embedding.edge_map.push_back(static_cast<std::size_t>(it - host.edges().begin()));
  }
  return embedding;
}

}  // namespace mintrans
