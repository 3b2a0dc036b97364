#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "twistlab/cech.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/sampling.hpp"

using namespace twistlab;

namespace {

struct Config {
  std::shared_ptr<const Cover> cover;
  std::shared_ptr<const Nerve> nerve;
  FinAbGroup group;
};

std::vector<Config> configs(std::uint64_t seed, int count, std::size_t max_points = 6, std::size_t max_sets = 4) {
  Rng rng(seed);
  std::vector<Config> out;
  for (int k = 0; k < count; ++k) {
    const std::size_t points = 1 + static_cast<std::size_t>(k) % max_points;
    const std::size_t sets = 1 + static_cast<std::size_t>(k / 2) % max_sets;
    auto cover = std::make_shared<const Cover>(random_cover(rng, points, sets, 0.6));
    out.push_back({cover, fixture::nerve_of(*cover), random_small_group(rng)});
  }
  return out;
}

}  // namespace

TEST_SUITE("cech") {

TEST_CASE("delta squares to zero and is_cocycle agrees with the definition") {
  Rng rng(21);
  for (const auto& cfg : configs(1, 16)) {
    for (auto mode : {CochainMode::nerve, CochainMode::pointwise}) {
      const CechCochain b = random_cochain(rng, cfg.nerve, cfg.group, 1, mode);
      const CechCochain c = coboundary(b);
      CHECK(is_cocycle(c));
      CHECK(oracle::is_cocycle(c));
      CHECK(coboundary(c).is_zero());
      const CechCochain r = random_cochain(rng, cfg.nerve, cfg.group, 2, mode);
      CHECK(is_cocycle(r) == oracle::is_cocycle(r));
    }
  }
}

TEST_CASE("normalize produces a cohomologous normalized cocycle") {
  Rng rng(22);
  for (const auto& cfg : configs(2, 12)) {
    CechCochain c = coboundary(random_cochain(rng, cfg.nerve, cfg.group, 1, CochainMode::pointwise));
    const Normalization n = normalize(c);
    CHECK(is_normalized(n.normalized));
    CHECK(n.normalized == c - coboundary(n.b));
  }
  const auto cfg = configs(3, 4).back();
  CechCochain bad(cfg.nerve, cfg.group, 2, CochainMode::nerve);
  const auto key = bad.domain().front();
  bad.set(key, cfg.group.element_at(1));
  if (!is_cocycle(bad)) CHECK_THROWS_AS(normalize(bad), PreconditionError);
}

TEST_CASE("identity suite holds on normalized cocycles and catches corruption") {
  Rng rng(23);
  for (const auto& cfg : configs(4, 14)) {
    for (auto mode : {CochainMode::nerve, CochainMode::pointwise}) {
      CechCochain c = random_normalized_cocycle(rng, cfg.nerve, cfg.group, mode);
      const IdentityReport r = check_norm_identities(c);
      const auto o = oracle::identities(c);
      CHECK(r.ok());
      CHECK(o.failed == 0);
      if (mode == CochainMode::pointwise) {
        CHECK(5 * r.instances_checked == o.checked);
      } else {
        CHECK(r.instances_checked == ordered_tuples(*cfg.nerve, 3).size());
      }
    }
  }
  // a deliberate corruption at a triple with two distinct indices
  Rng rng2(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto cover = std::make_shared<const Cover>(random_cover(rng2, 3, 3, 0.9));
    auto nerve = fixture::nerve_of(*cover);
    if (nerve->count(1) == 0) continue;
    CechCochain c = random_normalized_cocycle(rng2, nerve, FinAbGroup::cyclic(3), CochainMode::nerve);
    const auto& e = nerve->simplices(1).front();
    const std::vector<int> t{e[0], e[1], e[0]};
    c.set(t, -1, FinAbGroup::cyclic(3).add(c.at(t), GroupElem{{1}}));
    CHECK(!check_norm_identities(c).ok());
    CHECK(oracle::identities(c).failed > 0);
  }
}

TEST_CASE("pointwise cocycles are always coboundaries") {
  Rng rng(24);
  for (const auto& cfg : configs(5, 20)) {
    const CechCochain c = random_normalized_cocycle(rng, cfg.nerve, cfg.group, CochainMode::pointwise);
    const auto b = solve_coboundary(c);
    REQUIRE(b.has_value());
    CHECK(coboundary(*b) == c);
  }
}

TEST_CASE("solve_coboundary matches exhaustive search on tiny nerves") {
  Rng rng(25);
  int nontrivial = 0;
  for (int trial = 0; trial < 40; ++trial) {
    // the boundary of a triangle or of a tetrahedron with a few spare points
    const bool sphere = trial % 2 == 1;
    auto cover = std::make_shared<const Cover>(
        sphere ? Cover(FinSpace({"p", "q", "r", "s"}), {"a", "b", "c", "d"},
                       {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}})
               : Cover(FinSpace({"p", "q", "r"}), {"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}}));
    auto nerve = fixture::nerve_of(*cover);
    const FinAbGroup g = FinAbGroup::cyclic(2);
    CechCochain c = random_cochain(rng, nerve, g, 2, CochainMode::nerve);
    if (!is_cocycle(c)) c = coboundary(random_cochain(rng, nerve, g, 1, CochainMode::nerve));
    if (sphere && trial % 4 == 1) c = c + cohomology(nerve, g, 2).generators().front();
    const auto sol = solve_coboundary(c);
    std::vector<std::int64_t> simplicial = c.simplicial_component(0);
    const bool exists = oracle::z2_coboundary_search(*nerve, simplicial);
    CHECK(sol.has_value() == exists);
    if (sol) CHECK(coboundary(*sol) == c);
    if (!exists) ++nontrivial;
  }
  CHECK(nontrivial > 0);
}

TEST_CASE("cohomology dimensions agree with ranks modulo primes") {
  std::vector<std::shared_ptr<const Nerve>> nerves{fixture::moore_complex()};
  for (const auto& cfg : configs(6, 12, 6, 5)) nerves.push_back(cfg.nerve);
  for (const auto& nerve : nerves)
    for (std::int64_t p : {2, 3})
      for (int d = 0; d <= 3; ++d) {
        const SimplicialCohomology h(nerve, d, p);
        CHECK(h.orders().size() == oracle::betti_mod(*nerve, d, p));
        for (auto o : h.orders()) CHECK(o == p);
      }
}

TEST_CASE("integer cohomology of the Moore complex") {
  const auto m = fixture::moore_complex();
  CHECK(integer_cohomology(m, 0).orders() == std::vector<std::int64_t>{0});
  CHECK(integer_cohomology(m, 1).is_trivial());
  CHECK(integer_cohomology(m, 2).is_trivial());
  CHECK(integer_cohomology(m, 3).orders() == std::vector<std::int64_t>{2});
  const CohomologyGroup h2 = cohomology(m, FinAbGroup::cyclic(2), 2);
  CHECK(h2.cyclic_orders() == std::vector<std::int64_t>{2});
  const CechCochain c = fixture::moore_generator(m);
  CHECK(is_cocycle(c));
  CHECK(h2.class_of(c) == std::vector<std::int64_t>{1});
  Rng rng(26);
  for (int trial = 0; trial < 10; ++trial) {
    const CechCochain b = random_cochain(rng, m, FinAbGroup::cyclic(2), 1, CochainMode::nerve);
    CHECK(h2.class_of(c + coboundary(b)) == std::vector<std::int64_t>{1});
    CHECK(h2.class_of(coboundary(b)) == std::vector<std::int64_t>{0});
  }
}

TEST_CASE("cohomology generators are normalized cocycles with independent classes") {
  for (const auto& cfg : configs(7, 10, 6, 5)) {
    const CohomologyGroup h = cohomology(cfg.nerve, cfg.group, 2);
    for (std::size_t k = 0; k < h.generators().size(); ++k) {
      const auto& gen = h.generators()[k];
      CHECK(is_cocycle(gen));
      CHECK(is_normalized(gen));
      auto coords = h.class_of(gen);
      for (std::size_t j = 0; j < coords.size(); ++j) CHECK(coords[j] == (j == k ? 1 : 0));
    }
  }
}

}  // TEST_SUITE
