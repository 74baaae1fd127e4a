#include <doctest.h>

#include <limits>

#include "mintrans/combinations.hpp"
#include "mintrans/extension.hpp"
#include "mintrans/traces.hpp"
#include "printers.hpp"
#include "test_support.hpp"

using namespace mintrans;
using namespace mintrans::test;

namespace {

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

Family reference_ext(const Hypergraph& h, std::size_t k) {
  return ref::to_family(h.universe_size(), ref::ext(h.universe_size(), ref::masks(h), k));
}

}  // namespace

TEST_CASE("ext_k goldens") {
  REQUIRE(same_family(reference_ext(h1(), 2), h1().edges()));
  CHECK(same_family(ext_k(h1(), 2).members(), h1().edges()));

  const Family h2_ext = F(3, {{}, {1}, {2}, {3}});
  REQUIRE(same_family(reference_ext(h2(), 2), h2_ext));
  CHECK(same_family(ext_k(h2(), 2).members(), h2_ext));
}

TEST_CASE("ext_n is the edge set") {
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    const Hypergraph h = random_hypergraph(rng, 3 + i % 5, 1 + i % 6, 0.5);
    CHECK(same_family(ext_k(h, h.universe_size()).members(), h.edges()));
  }
}

TEST_CASE("ext_k matches the definition on random inputs") {
  Rng rng(17);
  for (int i = 0; i < 120; ++i) {
    const std::size_t n = 3 + i % 7;
    const Hypergraph h = random_hypergraph(rng, n, 1 + i % 12, 0.25 + 0.05 * (i % 9));
    for (std::size_t k = 1; k <= std::min<std::size_t>(n, 4); ++k) {
      const auto family = ext_k(h, k, kUnbounded);
      CHECK(same_family(family.members(), reference_ext(h, k)));
      for (const auto& e : h.edges()) CHECK(family.contains(e));
    }
  }
}

TEST_CASE("ext_k cap") {
  // ext_1 of the empty-set-plus-singletons family is everything
  const Hypergraph h = H(6, {{}, {1, 2, 3, 4, 5, 6}});
  CHECK(ext_k(h, 1, 64).size() == 64);
  CHECK_THROWS_AS((void)ext_k(h, 1), SizeOverflow);
  CHECK_THROWS_AS((void)ext_k(h, 1, 10), SizeOverflow);
  try {
    (void)ext_k(h, 1, 10);
  } catch (const SizeOverflow& e) {
    CHECK(e.cap() == 10);
  }
  CHECK(default_extension_cap(10, 3) == 4 * sauer_bound(10, 3));
}

TEST_CASE("ext_k_nondominated") {
  CHECK(ext_k_nondominated(h1(), 2).empty());
  CHECK(ext_k_nondominated(h2(), 2).empty());

  const Hypergraph h3 = H(4, {{1, 2}, {3, 4}});
  const Family expected = [&] {
    Family out;
    for (const auto& e : reference_ext(h3, 2)) {
      const bool dominated = std::any_of(h3.edges().begin(), h3.edges().end(),
                                         [&](const VertexSet& f) { return e.is_subset_of(f); });
      if (!dominated) out.push_back(e);
    }
    return out;
  }();
  const Family got = ext_k_nondominated(h3, 2);
  CHECK(same_family(got, expected));
  CHECK(std::find(got.begin(), got.end(), S(4, {1, 3})) == got.end());
}

TEST_CASE("conformal hypergraphs have no nondominated extension") {
  Rng rng(23);
  int conformal = 0;
  for (int i = 0; i < 150; ++i) {
    const Hypergraph h = random_hypergraph(rng, 4 + i % 5, 2 + i % 10, 0.5);
    for (std::size_t k = 1; k <= 3; ++k) {
      if (!is_k_conformal(h, k)) continue;
      ++conformal;
      CHECK(ext_k_nondominated(h, k, kUnbounded).empty());
    }
  }
  CHECK(conformal > 20);
}
