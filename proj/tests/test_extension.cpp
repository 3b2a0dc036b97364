#include <numeric>
#include <set>

#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/extension.hpp"
#include "twistlab/sampling.hpp"

using namespace twistlab;

namespace {

// Exhaustive search for f with phi = d f, arrows of a tiny groupoid only.
bool brute_groupoid_coboundary(const GroupoidCocycle2& phi) {
  const FinGroupoid& g = phi.base();
  const FinAbGroup& a = phi.group();
  const auto elems = a.elements();
  std::vector<std::size_t> digits(g.num_arrows(), 0);
  while (true) {
    bool ok = true;
    for (std::size_t p = 0; p < g.num_pairs() && ok; ++p) {
      const auto [x, y] = g.pair_at(p);
      const GroupElem df = a.sub(a.add(elems[digits[static_cast<std::size_t>(x)]], elems[digits[static_cast<std::size_t>(y)]]),
                                 elems[digits[static_cast<std::size_t>(g.compose(x, y))]]);
      ok = df == phi.at_pair(p);
    }
    if (ok) return true;
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == elems.size()) digits[k++] = 0;
    if (k == digits.size()) return false;
  }
}

struct Sample {
  std::shared_ptr<const FinGroupoid> base;
  GroupoidCocycle2 phi;
};

std::vector<Sample> samples(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Sample> out;
  for (int trial = 0; trial < 8; ++trial) {
    auto cover = std::make_shared<const Cover>(random_cover(rng, 1 + trial % 4, 1 + trial % 3, 0.6));
    auto nerve = fixture::nerve_of(*cover);
    const FinAbGroup g = random_small_group(rng);
    const auto c = random_normalized_cocycle(rng, nerve, g, trial % 2 ? CochainMode::nerve : CochainMode::pointwise);
    const Blowup b = blowup_groupoid(*cover);
    out.push_back({b.groupoid, cech_to_groupoid_cocycle(c, b)});
  }
  for (const auto& [perm, m] : {std::pair{std::vector<int>{1, 0}, std::size_t{2}}, std::pair{std::vector<int>{0}, std::size_t{3}},
                                std::pair{std::vector<int>{1, 0}, std::size_t{4}}}) {
    auto action = std::make_shared<const FinGroupoid>(action_groupoid(perm, m));
    const FinAbGroup g = FinAbGroup::cyclic(static_cast<std::int64_t>(m));
    out.push_back({action, perturb_by_coboundary(rng, carry_cocycle(action, m, g, g.element({1})))});
  }
  return out;
}

}  // namespace

TEST_SUITE("extension") {

TEST_CASE("groupoid coboundaries and normalization") {
  Rng rng(41);
  for (const auto& s : samples(1)) {
    CHECK(s.phi.is_cocycle());
    CHECK(s.phi.is_normalized());
    std::vector<GroupElem> f;
    for (std::size_t a = 0; a < s.base->num_arrows(); ++a)
      f.push_back(s.phi.group().element_at(std::uniform_int_distribution<std::size_t>(0, s.phi.group().order() - 1)(rng)));
    const GroupoidCocycle2 d = groupoid_coboundary(s.base, s.phi.group(), f);
    CHECK(d.is_cocycle());
    const auto sol = solve_groupoid_coboundary(d);
    REQUIRE(sol.has_value());
    CHECK(groupoid_coboundary(s.base, s.phi.group(), *sol) == d);
    const auto n = normalize_groupoid_cocycle(s.phi + d);
    CHECK(n.normalized.is_normalized());
    CHECK(n.normalized + groupoid_coboundary(s.base, s.phi.group(), n.f) == s.phi + d);
  }
}

TEST_CASE("carry cocycles: coboundary decision agrees with exhaustive search") {
  for (std::size_t m : {2, 3, 4})
    for (std::int64_t n : {2, 3, 4}) {
      auto action = std::make_shared<const FinGroupoid>(action_groupoid({0}, m));
      const FinAbGroup g = FinAbGroup::cyclic(n);
      const auto phi = carry_cocycle(action, m, g, g.element({1}));
      CHECK(phi.is_cocycle());
      const bool exists = brute_groupoid_coboundary(phi);
      CHECK(solve_groupoid_coboundary(phi).has_value() == exists);
      // H^2(Z/m; Z/n) = Z/gcd(m, n) with the carry class as generator
      CHECK(exists == (std::gcd(static_cast<std::int64_t>(m), n) == 1));
    }
}

TEST_CASE("build and extract round trip") {
  Rng rng(42);
  for (const auto& s : samples(2)) {
    const CentralExtension e = build_extension(s.phi);
    CHECK(extension_axioms_check(e).ok());
    const auto ex = extract_cocycle(e);
    CHECK(ex.phi == s.phi);
    CHECK(oracle::proper_isomorphism(build_extension(ex.phi), e, ex.witness));

    // shifting the section by iota(f) changes the cocycle by d f
    std::vector<GroupElem> f(s.base->num_arrows(), s.phi.group().zero());
    std::vector<int> section(*e.section);
    for (int a = 0; a < static_cast<int>(s.base->num_arrows()); ++a) {
      if (s.base->is_unit(a)) continue;
      f[static_cast<std::size_t>(a)] =
          s.phi.group().element_at(std::uniform_int_distribution<std::size_t>(0, s.phi.group().order() - 1)(rng));
      section[static_cast<std::size_t>(a)] =
          e.total->compose(e.iota_at(s.base->range(a), f[static_cast<std::size_t>(a)]), section[static_cast<std::size_t>(a)]);
    }
    const auto shifted = extract_cocycle(e, section);
    CHECK(shifted.phi == s.phi + groupoid_coboundary(s.base, s.phi.group(), f));
    CHECK(oracle::proper_isomorphism(build_extension(shifted.phi), e, shifted.witness));
  }
}

TEST_CASE("a non-cocycle fails the extension axioms") {
  auto action = std::make_shared<const FinGroupoid>(action_groupoid({0}, 3));
  GroupoidCocycle2 phi(action, FinAbGroup::cyclic(2));
  phi.set(1, 1, GroupElem{{1}});
  CHECK(phi.is_normalized());
  CHECK_FALSE(phi.is_cocycle());
  CHECK_FALSE(extension_axioms_check(build_extension(phi)).ok());
}

TEST_CASE("Baer sum and inverse realise addition of classes") {
  Rng rng(43);
  const auto all = samples(3);
  for (const auto& s : all) {
    const GroupoidCocycle2 other = perturb_by_coboundary(rng, s.phi + s.phi);
    const CentralExtension e1 = build_extension(s.phi), e2 = build_extension(other);
    const CentralExtension sum = baer_sum(e1, e2);
    CHECK(extension_axioms_check(sum).ok());
    const auto target = build_extension(s.phi + other);
    const auto iso = properly_isomorphic(sum, target);
    REQUIRE(iso.has_value());
    CHECK(oracle::proper_isomorphism(sum, target, *iso));
    CHECK(check_proper_isomorphism(sum, target, *iso));

    const CentralExtension inv = inverse_extension(e1);
    CHECK(extension_axioms_check(inv).ok());
    const auto zero = baer_sum(e1, inv);
    const auto trivial = build_extension(GroupoidCocycle2(s.base, s.phi.group()));
    const auto iso0 = properly_isomorphic(zero, trivial);
    REQUIRE(iso0.has_value());
    CHECK(oracle::proper_isomorphism(zero, trivial, *iso0));
  }
}

TEST_CASE("non-isomorphic extensions are told apart") {
  auto action = std::make_shared<const FinGroupoid>(action_groupoid({0}, 2));
  const FinAbGroup g = FinAbGroup::cyclic(2);
  const auto carry = build_extension(carry_cocycle(action, 2, g, g.element({1})));
  const auto trivial = build_extension(GroupoidCocycle2(action, g));
  CHECK_FALSE(properly_isomorphic(carry, trivial).has_value());
  std::vector<int> identity(carry.total->num_arrows());
  std::iota(identity.begin(), identity.end(), 0);
  CHECK_FALSE(check_proper_isomorphism(carry, trivial, identity));
  CHECK_FALSE(oracle::proper_isomorphism(carry, trivial, identity));
}

TEST_CASE("blow-up of an extension is an extension of the blow-up") {
  for (const auto& s : samples(4)) {
    const CentralExtension e = build_extension(s.phi);
    std::vector<std::vector<int>> subsets;
    const int units = static_cast<int>(s.base->num_units());
    for (int u = 0; u < units; ++u) subsets.push_back({u});
    std::vector<int> all(static_cast<std::size_t>(units));
    std::iota(all.begin(), all.end(), 0);
    subsets.push_back(all);
    const BlownUpExtension b = blowup_extension(e, subsets);
    CHECK(extension_axioms_check(b.extension).ok());
    CHECK(b.extension.total->num_arrows() == b.extension.base->num_arrows() * s.phi.group().order());
    const auto ex = extract_cocycle(b.extension);
    CHECK(ex.phi.is_cocycle());
    // the blown-up cocycle is the pullback of phi along (i, gamma, j) -> gamma
    for (std::size_t p = 0; p < b.base.groupoid->num_pairs(); ++p) {
      const auto [x, y] = b.base.groupoid->pair_at(p);
      CHECK(ex.phi.at_pair(p) == s.phi.at(b.base.triples[static_cast<std::size_t>(x)][1], b.base.triples[static_cast<std::size_t>(y)][1]));
    }
  }
}

TEST_CASE("cech cocycles become groupoid cocycles") {
  Rng rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    auto cover = std::make_shared<const Cover>(random_cover(rng, 3, 3, 0.6));
    auto nerve = fixture::nerve_of(*cover);
    const FinAbGroup g = FinAbGroup::cyclic(3);
    auto c = random_normalized_cocycle(rng, nerve, g, CochainMode::pointwise);
    const Blowup b = blowup_groupoid(*cover);
    const auto phi = cech_to_groupoid_cocycle(c, b);
    CHECK(phi.is_cocycle());
    CHECK(phi.is_normalized());
    for (std::size_t p = 0; p < b.groupoid->num_pairs(); ++p) {
      const auto [x, y] = b.groupoid->pair_at(p);
      const auto [i, pt, j] = b.triples[static_cast<std::size_t>(x)];
      const int k = b.triples[static_cast<std::size_t>(y)][2];
      CHECK(phi.at_pair(p) == c.at(std::vector<int>{i, j, k}, pt));
    }
    auto bad = c;
    const auto key = std::vector<int>{0, 0, 0};
    if (!cover->set(0).empty()) {
      bad.set(key, cover->set(0).front(), g.element({1}));
      CHECK_THROWS_AS(cech_to_groupoid_cocycle(bad, b), PreconditionError);
    }
  }
}

}  // TEST_SUITE
