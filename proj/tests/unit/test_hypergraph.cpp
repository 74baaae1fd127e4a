#include <doctest.h>

#include "mintrans/hypergraph.hpp"
#include "printers.hpp"
#include "test_support.hpp"

using namespace mintrans;
using namespace mintrans::test;

TEST_CASE("sperner_reduce") {
  CHECK(sperner_reduce(H(3, {{1, 2}, {1, 2, 3}})).edges() == F(3, {{1, 2}}));
  CHECK(sperner_reduce(h1()).edges() == h1().edges());
  CHECK(sperner_reduce(H(2, {{1}, {1}, {1, 2}})).edges() == F(2, {{1}}));
  CHECK(sperner_reduce(h1()).is_sperner());
  CHECK_FALSE(h1().is_sperner());
}

TEST_CASE("sperner_reduce keeps first occurrences of minimal edges") {
  const Hypergraph h = H(4, {{3, 4}, {1, 2, 3}, {2}, {4}});
  CHECK(sperner_reduce(h).edges() == F(4, {{2}, {4}}));
}

TEST_CASE("is_transversal") {
  CHECK(is_transversal(h1(), S(4, {2, 3})));
  CHECK_FALSE(is_transversal(h1(), S(4, {1, 4})));
  CHECK(is_transversal(Hypergraph(3), VertexSet(3)));
}

TEST_CASE("is_minimal_transversal") {
  // Tr(H1) = {{2,3},{2,4},{1,3}} per the subset-scan reference
  const auto tr = ref::to_family(4, ref::tr(4, ref::masks(h1())));
  CHECK(same_family(tr, F(4, {{2, 3}, {2, 4}, {1, 3}})));
  CHECK(is_minimal_transversal(h1(), S(4, {2, 3})));
  CHECK_FALSE(is_minimal_transversal(h1(), S(4, {2, 3, 4})));
  CHECK_FALSE(is_minimal_transversal(h1(), S(4, {1, 4})));
}

TEST_CASE("minimalize drops vertices in ascending order") {
  CHECK(minimalize(h1(), S(4, {1, 2, 3, 4})) == S(4, {2, 4}));
  CHECK(minimalize(h1(), S(4, {2, 3})) == S(4, {2, 3}));
  CHECK(minimalize(h1(), S(4, {1, 3, 4})) == S(4, {1, 3}));
  CHECK_THROWS_AS((void)minimalize(h1(), S(4, {1, 4})), PreconditionViolation);
}

TEST_CASE("derive_sub") {
  SUBCASE("keep-empty intersects every edge") {
    const auto sub = derive_sub(h1(), S(4, {1, 3, 4}), std::nullopt, EmptyEdgePolicy::Keep);
    CHECK(sub.graph.universe_size() == 3);
    CHECK(sub.to_parent == std::vector<VertexId>{0, 2, 3});
    Family lifted;
    for (const auto& e : sub.graph.edges()) lifted.push_back(sub.lift(e, 4));
    CHECK(lifted == F(4, {{1}, {3}, {3, 4}}));
  }
  SUBCASE("full universe is the identity") {
    const auto sub = derive_sub(h1(), h1().universe());
    CHECK(sub.graph.edges() == h1().edges());
  }
  SUBCASE("drop-empty") {
    const auto sub = derive_sub(h1(), S(4, {2}));
    CHECK(sub.edge_origin == std::vector<std::size_t>{0, 1});
    for (const auto& e : sub.graph.edges()) CHECK(sub.lift(e, 4) == S(4, {2}));
  }
  SUBCASE("edge subset") {
    const auto sub = derive_sub(h1(), h1().universe(), std::vector<std::size_t>{2});
    CHECK(sub.graph.edges() == F(4, {{3, 4}}));
  }
}

TEST_CASE("restriction keeps edges inside the vertex set") {
  const auto r = restriction(h1(), S(4, {1, 2, 3}));
  Family lifted;
  for (const auto& e : r.graph.edges()) lifted.push_back(r.lift(e, 4));
  CHECK(lifted == F(4, {{1, 2}, {2, 3}}));
  CHECK(restriction(h1(), VertexSet(4)).graph.empty());
  CHECK(restriction(h1(), h1().universe()).graph.edges() == h1().edges());
}

TEST_CASE("construction validates universes and labels") {
  CHECK_THROWS_AS(Hypergraph(3, Family{VertexSet(4)}), UniverseMismatch);
  CHECK_THROWS(Hypergraph(3, {}, {"a"}));
  CHECK(h1().label(0) == "1");
  CHECK(Hypergraph(2, {}, {"a", "b"}).label(1) == "b");
}
