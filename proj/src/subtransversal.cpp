#include "mintrans/subtransversal.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <type_traits>
#include <unordered_set>

namespace mintrans {

namespace {

// The search runs on either VertexSet or a single 64-bit word; these
// overloads are the whole set vocabulary it needs.
bool subset(Mask64 a, Mask64 b) { return (a & ~b) == 0; }
bool subset(const VertexSet& a, const VertexSet& b) { return a.is_subset_of(b); }
bool none(Mask64 a) { return a == 0; }
bool none(const VertexSet& a) { return a.empty(); }
std::size_t card(Mask64 a) { return static_cast<std::size_t>(std::popcount(a)); }
std::size_t card(const VertexSet& a) { return a.count(); }
std::size_t common(Mask64 a, Mask64 b) { return static_cast<std::size_t>(std::popcount(a & b)); }
std::size_t common(const VertexSet& a, const VertexSet& b) { return a.intersection_count(b); }
VertexId lowest(Mask64 a) { return static_cast<VertexId>(std::countr_zero(a)); }
VertexId lowest(const VertexSet& a) { return a.first(); }
Mask64 drop(Mask64 a, VertexId v) { return a & ~(Mask64{1} << v); }
VertexSet drop(const VertexSet& a, VertexId v) { return a.without(v); }
bool has(Mask64 a, VertexId v) { return (a >> v & 1U) != 0; }
bool has(const VertexSet& a, VertexId v) { return a.contains(v); }
Mask64 minus(Mask64 a, Mask64 b) { return a & ~b; }
VertexSet minus(const VertexSet& a, const VertexSet& b) { return a - b; }
Mask64 blank(Mask64) { return 0; }
VertexSet blank(const VertexSet& like) { return VertexSet(like.universe_size()); }

template <typename Fn>
void each(Mask64 a, Fn&& fn) {
  for (; a != 0; a &= a - 1) fn(static_cast<VertexId>(std::countr_zero(a)));
}
template <typename Fn>
void each(const VertexSet& a, Fn&& fn) {
  a.for_each(fn);
}

template <typename Set>
using SetHash = std::conditional_t<std::is_same_v<Set, Mask64>, std::hash<Mask64>, VertexSetHash>;

template <typename Set>
struct Candidate {
  std::size_t edge;
  Set rest;  // (F ∩ allowed) \ {v}
};

template <typename Set>
struct Found {
  std::vector<std::pair<VertexId, std::size_t>> selection;
  Set blockers;
  Set witness;
};

// Keeps the inclusion-minimal sets, first occurrence on ties. The result is
// ordered by size.
template <typename Set>
std::vector<Set> minimal_sets(std::vector<Set> sets) {
  if (sets.size() < 2) return sets;
  std::vector<std::size_t> cards(sets.size());
  std::size_t top = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) top = std::max(top, cards[i] = card(sets[i]));
  // counting sort by size keeps equal sizes in input order
  std::vector<std::size_t> start(top + 2, 0);
  for (std::size_t c : cards) ++start[c + 1];
  for (std::size_t c = 1; c < start.size(); ++c) start[c] += start[c - 1];
  std::vector<std::size_t> order(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) order[start[cards[i]]++] = i;
  std::vector<Set> kept;
  for (std::size_t i : order) {
    const bool covered = std::any_of(kept.begin(), kept.end(), [&](const Set& m) { return subset(m, sets[i]); });
    if (!covered) kept.push_back(std::move(sets[i]));
  }
  return kept;
}

// A candidate whose rest contains another's can only make W larger.
template <typename Set>
void drop_dominated(std::vector<Candidate<Set>>& options) {
  std::stable_sort(options.begin(), options.end(),
                   [](const Candidate<Set>& a, const Candidate<Set>& b) { return card(a.rest) < card(b.rest); });
  std::vector<Candidate<Set>> kept;
  for (auto& c : options) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [&](const Candidate<Set>& m) { return subset(m.rest, c.rest); });
    if (!dominated) kept.push_back(std::move(c));
  }
  options = std::move(kept);
}

std::size_t width(Mask64) { return 64; }
std::size_t width(const VertexSet& like) { return like.universe_size(); }

// One bit per option of a depth.
using Bits = std::vector<std::uint64_t>;

bool all_clear(const Bits& bits) {
  return std::all_of(bits.begin(), bits.end(), [](std::uint64_t w) { return w == 0; });
}

template <typename Set>
class SelectionSearch {
 public:
  SelectionSearch(std::vector<std::vector<Candidate<Set>>> choices, const Set& empty)
      : choices_(std::move(choices)),
        depth_count_(choices_.size()),
        reach_(depth_count_ + 1, empty),
        own_reach_(depth_count_, empty),
        containing_(depth_count_),
        domains_(depth_count_, std::vector<Bits>(depth_count_)),
        residues_(depth_count_ + 1),
        failed_(depth_count_) {
    for (std::size_t d = depth_count_; d-- > 0;) {
      const std::size_t words = (choices_[d].size() + 63) / 64;
      containing_[d].assign(width(empty), Bits(words, 0));
      for (std::size_t i = 0; i < choices_[d].size(); ++i) {
        own_reach_[d] = own_reach_[d] | choices_[d][i].rest;
        each(choices_[d][i].rest, [&](VertexId u) { containing_[d][u][i / 64] |= std::uint64_t{1} << (i % 64); });
      }
      reach_[d] = reach_[d + 1] | own_reach_[d];
      full_.emplace_back(words, ~std::uint64_t{0});
      if (choices_[d].size() % 64 != 0) full_.back().back() = (std::uint64_t{1} << (choices_[d].size() % 64)) - 1;
    }
    std::reverse(full_.begin(), full_.end());
  }

  /// Depth-first over selections; true once an accepted selection is found.
  bool run(const std::vector<Set>& missing, const Set& empty) {
    chosen_.assign(depth_count_, 0);
    auto& root = residues_[0];
    for (const auto& m : missing) {
      if (subset(m, reach_[0])) root.push_back(m);
    }
    root = minimal_sets(std::move(root));
    return descend(0, empty);
  }

  [[nodiscard]] const Set& blockers() const { return accepted_; }
  [[nodiscard]] std::size_t chosen_edge(std::size_t depth) const { return choices_[depth][chosen_[depth]].edge; }

 private:
  // Clears from `domain` the options of `depth` that contain r.
  void strike(Bits& domain, std::size_t depth, const Set& r) const {
    const auto& index = containing_[depth];
    for (std::size_t w = 0; w < domain.size(); ++w) {
      if (domain[w] == 0) continue;
      std::uint64_t hit = ~std::uint64_t{0};
      each(r, [&](VertexId u) { hit &= index[u][w]; });
      domain[w] &= ~hit;
    }
  }

  // residues_[depth] holds m \ w for the missing edges the choices from
  // `depth` on could still complete. Every later depth keeps only the options
  // that swallow none of them.
  bool descend(std::size_t depth, const Set& w) {
    if (depth == depth_count_) {
      accepted_ = w;
      return true;
    }
    // a W that failed here once fails again, whatever selection produced it
    if (depth > 0 && !failed_[depth].insert(w).second) return false;
    auto& residue = residues_[depth];
    // only nodes with children pay for dropping redundant residues
    if (depth + 1 < depth_count_) residue = minimal_sets(std::move(residue));
    for (std::size_t j = depth; j < depth_count_; ++j) {
      Bits& domain = domains_[depth][j];
      domain = depth == 0 ? full_[j] : domains_[depth - 1][j];
      for (const auto& r : residue) {
        if (!subset(r, own_reach_[j])) continue;
        strike(domain, j, r);
        if (all_clear(domain)) return false;
      }
    }
    const auto& domain = domains_[depth][depth];
    const auto& options = choices_[depth];
    auto& next_residue = residues_[depth + 1];
    for (std::size_t word = 0; word < domain.size(); ++word) {
      for (std::uint64_t bits = domain[word]; bits != 0; bits &= bits - 1) {
        const std::size_t i = word * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        const Set& rest = options[i].rest;
        const Set next = w | rest;
        const Set completable = rest | reach_[depth + 1];
        next_residue.clear();
        for (const auto& r : residue) {
          if (subset(r, completable)) next_residue.push_back(minus(r, rest));
        }
        chosen_[depth] = i;
        if (descend(depth + 1, next)) return true;
      }
    }
    return false;
  }

  std::vector<std::vector<Candidate<Set>>> choices_;
  std::size_t depth_count_;
  std::vector<Set> reach_;                   // union of the rests offered at this depth or later
  std::vector<Set> own_reach_;               // union of the rests offered at this depth
  std::vector<std::vector<Bits>> containing_;  // [depth][vertex]: options whose rest holds the vertex
  std::vector<Bits> full_;
  std::vector<std::vector<Bits>> domains_;   // [node depth][depth]: options still compatible with W
  std::vector<std::vector<Set>> residues_;
  std::vector<std::unordered_set<Set, SetHash<Set>>> failed_;
  std::vector<std::size_t> chosen_;
  Set accepted_{};
};

// Whether some selection whose first edge at index >= fresh_from sits at
// depth d is accepted, for some d. Selections made only of older edges are
// skipped.
template <typename Set>
bool fresh_selection_exists(const std::vector<std::vector<Candidate<Set>>>& choices, const std::vector<Set>& missing,
                            std::size_t fresh_from, const Set& empty) {
  for (std::size_t d = 0; d < choices.size(); ++d) {
    std::vector<std::vector<Candidate<Set>>> split(choices.size());
    bool possible = true;
    for (std::size_t j = 0; j < choices.size() && possible; ++j) {
      for (const auto& c : choices[j]) {
        const bool fresh = c.edge >= fresh_from;
        if (j > d || (j == d) == fresh) split[j].push_back(c);
      }
      possible = !split[j].empty();
    }
    if (possible && SelectionSearch<Set>(std::move(split), empty).run(missing, empty)) return true;
  }
  return false;
}

// Drops members of `start` in ascending order while every edge stays hit.
template <typename Set>
Set shrink(const std::vector<Set>& edges, const Set& start) {
  std::vector<std::size_t> hits(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) hits[e] = common(edges[e], start);
  Set result = start;
  each(start, [&](VertexId v) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (hits[e] == 1 && has(edges[e], v)) return;
    }
    result = drop(result, v);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (has(edges[e], v)) --hits[e];
    }
  });
  return result;
}

template <typename Set>
std::optional<Found<Set>> search(std::span<const Set> edges, const Set& allowed, const Set& t,
                                 std::size_t fresh_from = 0) {
  if (fresh_from > 0) {
    // an accepted selection needs some fresh edge private to a member of t
    // whose rest does not already swallow an edge missing t
    std::vector<Set> fresh_rests;
    for (std::size_t e = std::min(fresh_from, edges.size()); e < edges.size(); ++e) {
      if (common(edges[e], t) == 1) fresh_rests.push_back(minus(edges[e] & allowed, t));
    }
    for (const auto& e : edges) {
      if (fresh_rests.empty()) return std::nullopt;
      if (common(e, t) != 0) continue;
      const Set m = e & allowed;
      std::erase_if(fresh_rests, [&](const Set& rest) { return subset(m, rest); });
    }
    if (fresh_rests.empty()) return std::nullopt;
  }
  std::vector<VertexId> members;
  each(t, [&](VertexId v) { members.push_back(v); });
  std::vector<std::vector<Candidate<Set>>> choices(members.size());
  std::vector<Set> missing;  // restricted edges disjoint from t
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::size_t hits = common(edges[e], t);
    if (hits == 0) {
      Set restricted = edges[e] & allowed;
      if (none(restricted)) return std::nullopt;
      missing.push_back(std::move(restricted));
    } else if (hits == 1) {
      const VertexId v = lowest(edges[e] & t);
      const auto slot = static_cast<std::size_t>(std::lower_bound(members.begin(), members.end(), v) - members.begin());
      choices[slot].push_back(Candidate<Set>{e, drop(edges[e] & allowed, v)});
    }
  }
  const std::vector<Set> minimal_missing = minimal_sets(missing);
  for (auto& options : choices) {
    // a rest that alone swallows a missing edge is never part of an accepted selection
    std::erase_if(options, [&](const Candidate<Set>& c) {
      return std::any_of(minimal_missing.begin(), minimal_missing.end(), [&](const Set& m) { return subset(m, c.rest); });
    });
    if (options.empty()) return std::nullopt;
    if (members.size() > 1) drop_dominated(options);
  }

  if (fresh_from > 0) {
    if (!fresh_selection_exists(choices, minimal_missing, fresh_from, blank(t))) return std::nullopt;
    // the witness always comes from the first selection of the unrestricted order
    return search(edges, allowed, t);
  }
  SelectionSearch<Set> dfs(std::move(choices), blank(t));
  if (!dfs.run(minimal_missing, blank(t))) return std::nullopt;

  Found<Set> found;
  found.blockers = dfs.blockers();
  for (std::size_t i = 0; i < members.size(); ++i) found.selection.emplace_back(members[i], dfs.chosen_edge(i));
  Set start = allowed;
  each(t, [&](VertexId v) { start = drop(start, v); });
  each(found.blockers, [&](VertexId v) { start = drop(start, v); });
  found.witness = t | shrink(missing, start);
  return found;
}

}  // namespace

std::optional<SubtransversalCertificate> find_subtransversal(std::span<const VertexSet> edges,
                                                             const VertexSet& allowed, const VertexSet& t) {
  const std::size_t n = allowed.universe_size();
  if (t.universe_size() != n) throw UniverseMismatch(n, t.universe_size());
  if (!t.is_subset_of(allowed)) throw PreconditionViolation("sub-transversal candidate leaves the allowed vertices");
  for (const auto& e : edges) {
    if (e.universe_size() != n) throw UniverseMismatch(n, e.universe_size());
  }
  auto found = search<VertexSet>(edges, allowed, t);
  if (!found) return std::nullopt;
  return SubtransversalCertificate{std::move(found->selection), std::move(found->blockers), std::move(found->witness)};
}

std::optional<SubtransversalCertificate> is_subtransversal(const Hypergraph& g, const VertexSet& t) {
  if (t.universe_size() != g.universe_size()) throw UniverseMismatch(g.universe_size(), t.universe_size());
  return find_subtransversal(std::span<const VertexSet>(g.edges()), g.universe(), t);
}

std::optional<VertexSet> realize_trace(std::span<const VertexSet> edges, const Trace& trace, std::size_t fresh_from) {
  const std::size_t n = trace.support.universe_size();
  if (trace.part.universe_size() != n) throw InvalidTrace("trace part and support use different universes");
  if (!trace.part.is_subset_of(trace.support)) throw InvalidTrace("trace part is not inside its support");
  const VertexSet allowed = VertexSet::full(n) - (trace.support - trace.part);
  for (const auto& e : edges) {
    if (e.universe_size() != n) throw InvalidTrace("trace universe does not match the edges");
  }
  auto found = search<VertexSet>(edges, allowed, trace.part, fresh_from);
  if (!found) return std::nullopt;
  return std::move(found->witness);
}

std::optional<VertexSet> realize_trace(const Hypergraph& g, const Trace& trace) {
  if (trace.support.universe_size() != g.universe_size()) {
    throw InvalidTrace("trace universe " + std::to_string(trace.support.universe_size()) +
                       " does not match hypergraph universe " + std::to_string(g.universe_size()));
  }
  return realize_trace(std::span<const VertexSet>(g.edges()), trace);
}

std::optional<Mask64> realize_trace(std::span<const Mask64> edges, Mask64 part, Mask64 support,
                                    std::size_t universe_size, std::size_t fresh_from) {
  if (universe_size > 64) throw PreconditionViolation("word-sized sets need a universe of at most 64 vertices");
  if (!subset(part, support)) throw InvalidTrace("trace part is not inside its support");
  const Mask64 full = universe_size == 64 ? ~Mask64{0} : (Mask64{1} << universe_size) - 1;
  if (!subset(support, full)) throw InvalidTrace("trace support leaves the universe");
  const Mask64 allowed = full & ~(support & ~part);
  auto found = search<Mask64>(edges, allowed, part, fresh_from);
  if (!found) return std::nullopt;
  return found->witness;
}

Mask64 to_mask(const VertexSet& s) {
  if (s.universe_size() > 64) throw PreconditionViolation("word-sized sets need a universe of at most 64 vertices");
  return s.words().empty() ? 0 : s.words().front();
}

VertexSet from_mask(Mask64 m, std::size_t universe_size) {
  VertexSet s(universe_size);
  each(m, [&](VertexId v) { s.insert(v); });
  return s;
}

}  // namespace mintrans
