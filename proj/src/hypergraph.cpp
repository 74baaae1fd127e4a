#include "mintrans/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace mintrans {

Hypergraph::Hypergraph(std::size_t universe_size, Family edges, std::vector<std::string> labels)
    : n_(universe_size), edges_(std::move(edges)), labels_(std::move(labels)) {
  for (const auto& e : edges_) {
    if (e.universe_size() != n_) throw UniverseMismatch(n_, e.universe_size());
  }
  if (!labels_.empty() && labels_.size() != n_) {
    throw PreconditionViolation("label table has " + std::to_string(labels_.size()) + " entries for " +
                                std::to_string(n_) + " vertices");
  }
}

Hypergraph Hypergraph::from_lists(std::size_t universe_size, const std::vector<std::vector<VertexId>>& edges) {
  Family family;
  family.reserve(edges.size());
  for (const auto& members : edges) family.emplace_back(universe_size, std::span<const VertexId>(members));
  return Hypergraph(universe_size, std::move(family));
}

bool Hypergraph::has_empty_edge() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(), [](const VertexSet& e) { return e.empty(); });
}

std::string Hypergraph::label(VertexId v) const {
  if (v >= n_) throw VertexOutOfRange("vertex " + std::to_string(v) + " has no label");
  return labels_.empty() ? std::to_string(v + 1) : labels_[v];
}

Family sperner_reduce(std::span<const VertexSet> edges) {
  std::vector<std::size_t> by_size(edges.size());
  std::iota(by_size.begin(), by_size.end(), std::size_t{0});
  std::vector<std::size_t> sizes(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) sizes[i] = edges[i].count();
  std::stable_sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });

  std::vector<std::size_t> kept;
  for (std::size_t i : by_size) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [&](std::size_t j) { return edges[j].is_subset_of(edges[i]); });
    if (!dominated) kept.push_back(i);
  }
  std::sort(kept.begin(), kept.end());

  Family out;
  out.reserve(kept.size());
  for (std::size_t i : kept) out.push_back(edges[i]);
  return out;
}

Hypergraph sperner_reduce(const Hypergraph& h) {
  Hypergraph out(h.n_, sperner_reduce(std::span<const VertexSet>(h.edges_)), h.labels_);
  out.sperner_ = true;
  return out;
}

bool is_transversal(std::span<const VertexSet> edges, const VertexSet& x) {
  return std::all_of(edges.begin(), edges.end(), [&](const VertexSet& f) { return f.intersects(x); });
}

bool is_transversal(const Hypergraph& h, const VertexSet& x) {
  if (x.universe_size() != h.universe_size()) throw UniverseMismatch(h.universe_size(), x.universe_size());
  return is_transversal(std::span<const VertexSet>(h.edges()), x);
}

bool is_minimal_transversal(std::span<const VertexSet> edges, const VertexSet& x) {
  VertexSet has_private(x.universe_size());
  for (const auto& f : edges) {
    const std::size_t hits = f.intersection_count(x);
    if (hits == 0) return false;
    if (hits == 1) has_private.insert((f & x).first());
  }
  return has_private == x;
}

bool is_minimal_transversal(const Hypergraph& h, const VertexSet& x) {
  if (x.universe_size() != h.universe_size()) throw UniverseMismatch(h.universe_size(), x.universe_size());
  return is_minimal_transversal(std::span<const VertexSet>(h.edges()), x);
}

VertexSet minimalize(std::span<const VertexSet> edges, const VertexSet& x) {
  std::vector<std::size_t> hits(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    hits[e] = edges[e].intersection_count(x);
    if (hits[e] == 0) throw PreconditionViolation("minimalize: input set is not a transversal");
  }
  VertexSet result = x;
  x.for_each([&](VertexId v) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (hits[e] == 1 && edges[e].contains(v)) return;
    }
    result.erase(v);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges[e].contains(v)) --hits[e];
    }
  });
  return result;
}

VertexSet minimalize(const Hypergraph& h, const VertexSet& x) {
  if (x.universe_size() != h.universe_size()) throw UniverseMismatch(h.universe_size(), x.universe_size());
  return minimalize(std::span<const VertexSet>(h.edges()), x);
}

VertexSet SubHypergraph::lift(const VertexSet& sub_set, std::size_t parent_universe) const {
  if (sub_set.universe_size() != to_parent.size()) throw UniverseMismatch(to_parent.size(), sub_set.universe_size());
  VertexSet out(parent_universe);
  sub_set.for_each([&](VertexId v) { out.insert(to_parent[v]); });
  return out;
}

namespace {

SubHypergraph reindex(const VertexSet& vertices) {
  SubHypergraph sub;
  sub.to_parent = vertices.members();
  return sub;
}

VertexSet project(const VertexSet& edge, const std::vector<VertexId>& to_parent) {
  VertexSet out(to_parent.size());
  for (std::size_t i = 0; i < to_parent.size(); ++i) {
    if (edge.contains(to_parent[i])) out.insert(i);
  }
  return out;
}

std::vector<std::string> project_labels(const Hypergraph& h, const std::vector<VertexId>& to_parent) {
  std::vector<std::string> labels;
  if (!h.has_labels()) return labels;
  labels.reserve(to_parent.size());
  for (VertexId v : to_parent) labels.push_back(h.label(v));
  return labels;
}

}  // namespace

SubHypergraph derive_sub(const Hypergraph& h, const VertexSet& vertices,
                         std::optional<std::vector<std::size_t>> edge_indices, EmptyEdgePolicy policy) {
  if (vertices.universe_size() != h.universe_size()) throw UniverseMismatch(h.universe_size(), vertices.universe_size());
  std::vector<std::size_t> selected;
  if (edge_indices) {
    selected = std::move(*edge_indices);
    for (std::size_t i : selected) {
      if (i >= h.edge_count()) {
        throw VertexOutOfRange("edge index " + std::to_string(i) + " out of range (" +
                               std::to_string(h.edge_count()) + " edges)");
      }
    }
  } else {
    selected.resize(h.edge_count());
    std::iota(selected.begin(), selected.end(), std::size_t{0});
  }

  SubHypergraph sub = reindex(vertices);
  Family edges;
  for (std::size_t i : selected) {
    VertexSet projected = project(h.edge(i), sub.to_parent);
    if (projected.empty() && policy == EmptyEdgePolicy::Drop) continue;
    edges.push_back(std::move(projected));
    sub.edge_origin.push_back(i);
  }
  sub.graph = Hypergraph(sub.to_parent.size(), std::move(edges), project_labels(h, sub.to_parent));
  return sub;
}

SubHypergraph restriction(const Hypergraph& h, const VertexSet& vertices) {
  if (vertices.universe_size() != h.universe_size()) throw UniverseMismatch(h.universe_size(), vertices.universe_size());
  SubHypergraph sub = reindex(vertices);
  Family edges;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    if (!h.edge(i).is_subset_of(vertices)) continue;
    edges.push_back(project(h.edge(i), sub.to_parent));
    sub.edge_origin.push_back(i);
  }
  sub.graph = Hypergraph(sub.to_parent.size(), std::move(edges), project_labels(h, sub.to_parent));
  return sub;
}

}  // namespace mintrans
