#include <doctest.h>

#include "mintrans/subtransversal.hpp"
#include "printers.hpp"
#include "test_support.hpp"

using namespace mintrans;
using namespace mintrans::test;

namespace {

Family reference_tr(const Hypergraph& g) { return ref::to_family(g.universe_size(), ref::tr(g.universe_size(), ref::masks(g))); }

}  // namespace

TEST_CASE("is_subtransversal worked examples") {
  const Hypergraph g = H(4, {{2, 3}, {2, 4}});
  REQUIRE(same_family(reference_tr(g), F(4, {{2}, {3, 4}})));

  const auto cert = is_subtransversal(g, S(4, {3}));
  REQUIRE(cert.has_value());
  CHECK(cert->selection.size() == 1);
  CHECK(cert->selection.front().first == 2);
  CHECK(g.edge(cert->selection.front().second) == S(4, {2, 3}));
  CHECK(cert->blocker_union == S(4, {2}));
  CHECK(cert->witness == S(4, {3, 4}));

  CHECK_FALSE(is_subtransversal(g, S(4, {1})).has_value());
}

TEST_CASE("empty T") {
  const auto cert = is_subtransversal(h1(), VertexSet(4));
  REQUIRE(cert.has_value());
  CHECK(cert->witness == minimalize(h1(), h1().universe()));
  CHECK_FALSE(is_subtransversal(H(2, {{}, {1}}), VertexSet(2)).has_value());
}

TEST_CASE("every covered vertex of a Sperner hypergraph is a sub-transversal") {
  Rng rng(29);
  for (int i = 0; i < 100; ++i) {
    const Hypergraph g = sperner_reduce(random_hypergraph(rng, 4 + i % 6, 1 + i % 9, 0.4));
    if (g.has_empty_edge()) continue;
    for (VertexId v = 0; v < g.universe_size(); ++v) {
      const bool covered = std::any_of(g.edges().begin(), g.edges().end(), [&](const VertexSet& e) { return e.contains(v); });
      if (!covered) continue;
      const auto cert = is_subtransversal(g, VertexSet::singleton(g.universe_size(), v));
      REQUIRE(cert.has_value());
      CHECK(cert->witness.contains(v));
      CHECK(is_minimal_transversal(g, cert->witness));
    }
  }
}

TEST_CASE("certificates are consistent") {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 4 + i % 6;
    const Hypergraph g = random_hypergraph(rng, n, 1 + i % 10, 0.35);
    const auto tr = reference_tr(g);
    std::uniform_int_distribution<ref::Mask> pick(0, (ref::Mask{1} << n) - 1);
    ref::Mask tm = pick(rng);
    while (std::popcount(tm) > 3) tm &= tm - 1;
    const VertexSet t = ref::to_family(n, {tm}).front();
    const bool expected = std::any_of(tr.begin(), tr.end(), [&](const VertexSet& e) { return t.is_subset_of(e); });
    const auto cert = is_subtransversal(g, t);
    INFO("G = ", g.edges(), " T = ", t);
    REQUIRE(cert.has_value() == expected);
    if (!cert) continue;
    CHECK(t.is_subset_of(cert->witness));
    CHECK(is_minimal_transversal(g, cert->witness));
    CHECK(cert->selection.size() == t.count());
    VertexSet w(n);
    for (const auto& [v, idx] : cert->selection) {
      CHECK((g.edge(idx) & t) == VertexSet::singleton(n, v));
      w |= g.edge(idx).without(v);
    }
    CHECK(w == cert->blocker_union);
  }
}

TEST_CASE("realize_trace worked examples") {
  const Hypergraph g1 = H(4, {{1, 3}, {2, 4}});
  REQUIRE(same_family(reference_tr(g1), F(4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}})));
  const auto e = realize_trace(g1, Trace{S(4, {1}), S(4, {1, 2})});
  REQUIRE(e.has_value());
  CHECK(*e == S(4, {1, 4}));

  const Hypergraph g2 = H(4, {{2, 3}, {2, 4}});
  CHECK_FALSE(realize_trace(g2, Trace{S(4, {1}), S(4, {1, 2})}).has_value());

  CHECK_FALSE(realize_trace(H(2, {{1, 2}}), Trace{VertexSet(2), S(2, {1, 2})}).has_value());
}

TEST_CASE("realize_trace rejects malformed traces") {
  CHECK_THROWS_AS((void)realize_trace(h1(), Trace{S(4, {3}), S(4, {1, 2})}), InvalidTrace);
  CHECK_THROWS_AS((void)realize_trace(h1(), Trace{VertexSet(5), VertexSet(5)}), InvalidTrace);
}

TEST_CASE("word-sized sets round-trip") {
  const VertexSet s = S(40, {1, 33, 40});
  CHECK(to_mask(s) == ((Mask64{1} << 0) | (Mask64{1} << 32) | (Mask64{1} << 39)));
  CHECK(from_mask(to_mask(s), 40) == s);
  CHECK(to_mask(VertexSet(0)) == 0);
  CHECK_THROWS_AS((void)to_mask(VertexSet(65)), PreconditionViolation);
  CHECK_THROWS_AS((void)realize_trace(std::span<const Mask64>(), 0b10, 0b01, 4), InvalidTrace);
  CHECK_THROWS_AS((void)realize_trace(std::span<const Mask64>(), 0, 0b10000, 4), InvalidTrace);
}

TEST_CASE("word-sized and fresh-edge searches agree with the full search") {
  Rng rng(37);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 4 + i % 7;
    const Hypergraph g = random_hypergraph(rng, n, 2 + i % 12, 0.4);
    std::vector<Mask64> masks;
    for (const auto& e : g.edges()) masks.push_back(to_mask(e));
    std::uniform_int_distribution<Mask64> pick(0, (Mask64{1} << n) - 1);
    Mask64 support = pick(rng);
    while (std::popcount(support) > 3) support &= support - 1;
    const Mask64 part = support & pick(rng);
    const Trace trace{from_mask(part, n), from_mask(support, n)};
    INFO("G = ", g.edges(), " T = ", trace.part, " S = ", trace.support);

    const auto full = realize_trace(g, trace);
    const auto word = realize_trace(masks, part, support, n);
    REQUIRE(word.has_value() == full.has_value());
    if (full) CHECK(from_mask(*word, n) == *full);

    // fresh_from may be any prefix on which the trace has no realization
    for (std::size_t p = 1; p <= g.edge_count(); ++p) {
      const std::span<const VertexSet> prefix(g.edges().data(), p);
      if (realize_trace(prefix, trace)) continue;
      CHECK(realize_trace(g.edges(), trace, p) == full);
      const auto fresh_word = realize_trace(masks, part, support, n, p);
      CHECK(fresh_word.has_value() == full.has_value());
    }
  }
}
