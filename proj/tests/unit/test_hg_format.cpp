#include <doctest.h>

#include "mintrans/hg_format.hpp"
#include "printers.hpp"
#include "test_support.hpp"

using namespace mintrans;
using namespace mintrans::test;

TEST_CASE("parse") {
  const Hypergraph h = parse_hg("1 2\n2 3\n3 4\n");
  CHECK(h.universe_size() == 4);
  CHECK(h.edges() == h1().edges());

  const Hypergraph empty = parse_hg("vertices: a b c\n# none\n");
  CHECK(empty.universe_size() == 3);
  CHECK(empty.empty());
  CHECK(empty.label(2) == "c");

  CHECK_THROWS_AS((void)parse_hg("1 1\n"), ParseError);
  CHECK_THROWS_AS((void)parse_hg(""), ParseError);
  CHECK_THROWS_AS((void)parse_hg("# only a comment\n\n"), ParseError);
  CHECK_THROWS_AS((void)parse_hg("vertices: a b\na c\n"), ParseError);
  CHECK_THROWS_AS((void)parse_hg("vertices: a a\n"), ParseError);
}

TEST_CASE("parse details") {
  const Hypergraph h = parse_hg("# header\nb a   # trailing\n\n-\nc\n");
  CHECK(h.labels() == std::vector<std::string>{"b", "a", "c"});
  CHECK(h.edge_count() == 3);
  CHECK(h.edge(1).empty());
  CHECK(parse_hg("vertices:x y\nx\n").universe_size() == 2);
  try {
    (void)parse_hg("1 2\n\n3 3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("parse against a reference universe") {
  const Hypergraph h = parse_hg("vertices: 1 2 3 4\n1 2\n");
  const Hypergraph g = parse_hg("2 4\n1\n", h);
  CHECK(g.universe_size() == 4);
  CHECK(g.edges() == F(4, {{2, 4}, {1}}));
  CHECK(parse_hg("", h).empty());
  CHECK_THROWS_AS((void)parse_hg("5\n", h), ParseError);
}

TEST_CASE("round trip") {
  Rng rng(59);
  for (int i = 0; i < 50; ++i) {
    const Hypergraph h = random_hypergraph(rng, 1 + i % 9, i % 7, 0.4);
    const Hypergraph back = parse_hg(serialize_hg(h));
    CHECK(back.universe_size() == h.universe_size());
    CHECK(back.edges() == h.edges());
    for (VertexId v = 0; v < h.universe_size(); ++v) CHECK(back.label(v) == h.label(v));
  }
  const Hypergraph labelled = parse_hg("vertices: z y\ny\n-\n");
  CHECK(parse_hg(serialize_hg(labelled)) == labelled);
}

TEST_CASE("format_set") {
  CHECK(format_set(h1(), S(4, {2, 4})) == "2 4");
  CHECK(format_set(h1(), VertexSet(4)) == "-");
}
