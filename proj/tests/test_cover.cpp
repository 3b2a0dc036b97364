#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "twistlab/cover.hpp"
#include "twistlab/errors.hpp"

using namespace twistlab;

TEST_SUITE("cover-nerve") {

TEST_CASE("nerve of a two-set cover") {
  const Cover cover = fixture::two_set_cover();
  const Nerve nerve = build_nerve(cover);
  CHECK(nerve.num_vertices() == 2);
  CHECK(nerve.count(0) == 2);
  CHECK(nerve.count(1) == 1);
  CHECK(nerve.dimension() == 1);
  CHECK(nerve.carrier(std::vector<int>{0, 1}) == std::vector<int>{1});
  CHECK(nerve.carrier(std::vector<int>{0, 0, 1}) == std::vector<int>{1});
  CHECK(index_set_at(cover, "a") == std::vector<int>{0});
  CHECK(index_set_at(cover, "b") == std::vector<int>{0, 1});
  CHECK(euler_characteristic(nerve) == 1);
}

TEST_CASE("nerve simplices are exactly the index sets with common points") {
  fixture::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Cover cover = random_cover(rng, 2 + trial % 6, 2 + trial % 4, 0.45);
    const Nerve nerve = build_nerve(cover);
    const int n = static_cast<int>(cover.num_sets());
    for (int len = 1; len <= n; ++len)
      for (const auto& t : oracle::all_tuples(n, len)) {
        if (!std::is_sorted(t.begin(), t.end()) || std::adjacent_find(t.begin(), t.end()) != t.end()) continue;
        const auto pts = oracle::common_points(cover, t);
        CHECK(nerve.contains(t) == !pts.empty());
        if (!pts.empty()) CHECK(nerve.carrier(t) == pts);
      }
  }
}

TEST_CASE("Moore complex has the expected face counts") {
  const auto m = fixture::moore_complex();
  CHECK(m->count(0) == 8);
  CHECK(m->count(1) == 27);
  CHECK(m->count(2) == 40);
  CHECK(m->count(3) == 20);
  CHECK(euler_characteristic(*m) == 1);
  CHECK(!m->has_carrier());
  CHECK_THROWS_AS(m->cover(), PreconditionError);
  const Nerve star = build_nerve(fixture::moore_star_cover());
  for (int d = 0; d <= 3; ++d) CHECK(star.simplices(d) == m->simplices(d));
}

TEST_CASE("malformed covers are rejected") {
  CHECK_THROWS_AS(FinSpace({"a", "a"}), InputError);
  CHECK_THROWS_AS(Cover(FinSpace({"a", "b"}), {"U"}, {{0}}), InputError);
  CHECK_THROWS_AS(Cover(FinSpace({"a"}), {"U", "V"}, {{0}, {}}), InputError);
  CHECK_THROWS_AS(Cover(FinSpace({"a"}), {"U", "U"}, {{0}, {0}}), InputError);
  CHECK_THROWS_AS(load_complex({"a", "b"}, {{"a", "c"}}), InputError);
}

}  // TEST_SUITE
