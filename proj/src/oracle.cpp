#include "mintrans/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mintrans::oracle {

namespace {

VertexSet from_bits(std::size_t n, std::uint64_t bits) {
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v) {
    if ((bits >> v) & 1U) s.insert(v);
  }
  return s;
}

std::vector<std::uint64_t> edge_bits(const Hypergraph& h) {
  std::vector<std::uint64_t> out;
  for (const auto& f : h.edges()) {
    std::uint64_t bits = 0;
    f.for_each([&](VertexId v) { bits |= std::uint64_t{1} << v; });
    out.push_back(bits);
  }
  return out;
}

void require_scan_size(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw InstanceTooLarge(std::string(what) + ": universe of " + std::to_string(n) + " vertices exceeds " +
                           std::to_string(limit));
  }
}

// Keeps the sets that contain no other member.
Family keep_minimal(Family family) {
  std::sort(family.begin(), family.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.count() < b.count(); });
  Family out;
  for (auto& s : family) {
    const bool absorbed = std::any_of(out.begin(), out.end(), [&](const VertexSet& m) { return m.is_subset_of(s); });
    if (!absorbed) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

Family tr_subset_scan(const Hypergraph& h) {
  const std::size_t n = h.universe_size();
  require_scan_size(n, kMaxScanUniverse, "subset scan");
  const auto edges = edge_bits(h);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> transversal(total, false);
  for (std::uint64_t x = 0; x < total; ++x) {
    transversal[x] = std::all_of(edges.begin(), edges.end(), [&](std::uint64_t f) { return (f & x) != 0; });
  }
  Family out;
  for (std::uint64_t x = 0; x < total; ++x) {
    if (!transversal[x]) continue;
    bool minimal = true;
    for (std::uint64_t rest = x; rest != 0 && minimal; rest &= rest - 1) {
      const std::uint64_t bit = rest & (~rest + 1);
      if (transversal[x & ~bit]) minimal = false;
    }
    if (minimal) out.push_back(from_bits(n, x));
  }
  return normalized(std::move(out));
}

Family tr_edge_product(const Hypergraph& h) {
  const std::size_t n = h.universe_size();
  Family family{VertexSet(n)};
  for (const auto& f : h.edges()) {
    Family grown;
    for (const auto& phi : family) {
      if (phi.intersects(f)) {
        grown.push_back(phi);
      } else {
        f.for_each([&](VertexId v) { grown.push_back(phi.with(v)); });
      }
    }
    if (grown.size() > kMaxProductFamily) throw InstanceTooLarge("edge product exceeded family cap");
    family = keep_minimal(normalized(std::move(grown)));
  }
  return normalized(std::move(family));
}

Family brute_tr(const Hypergraph& h) {
  Family product = tr_edge_product(h);
  if (h.universe_size() > kMaxScanUniverse) return product;
  if (tr_subset_scan(h) != product) throw std::logic_error("oracle methods disagree on Tr(H)");
  return product;
}

Family brute_ext_k(const Hypergraph& h, std::size_t k) {
  const std::size_t n = h.universe_size();
  if (k == 0 || k > n) throw KOutOfRange(k, n);
  require_scan_size(n, kMaxExtensionScanUniverse, "extension scan");
  const auto edges = edge_bits(h);

  // For every k-subset S, the set of realized traces F ∩ S.
  std::vector<std::uint64_t> supports;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (static_cast<std::size_t>(__builtin_popcountll(s)) == k) supports.push_back(s);
  }
  std::vector<std::vector<std::uint64_t>> realized(supports.size());
  for (std::size_t i = 0; i < supports.size(); ++i) {
    for (std::uint64_t f : edges) realized[i].push_back(f & supports[i]);
    std::sort(realized[i].begin(), realized[i].end());
  }

  Family out;
  for (std::uint64_t e = 0; e < (std::uint64_t{1} << n); ++e) {
    bool compatible = true;
    for (std::size_t i = 0; i < supports.size() && compatible; ++i) {
      compatible = std::binary_search(realized[i].begin(), realized[i].end(), e & supports[i]);
    }
    if (compatible) out.push_back(from_bits(n, e));
  }
  return normalized(std::move(out));
}

bool brute_is_dual(const Hypergraph& h, const Hypergraph& g) {
  if (g.universe_size() != h.universe_size()) throw UniverseMismatch(h.universe_size(), g.universe_size());
  return brute_tr(h) == normalized(g.edges());
}

}  // namespace mintrans::oracle
