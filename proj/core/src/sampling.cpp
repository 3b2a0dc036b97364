#include "twistlab/sampling.hpp"

#include <algorithm>

#include "twistlab/errors.hpp"

namespace twistlab {

Cover random_cover(Rng& rng, std::size_t num_points, std::size_t num_sets, double density) {
  if (num_points == 0 || num_sets == 0) throw InputError("random_cover needs points and sets");
  std::bernoulli_distribution join(density);
  std::uniform_int_distribution<std::size_t> pick_set(0, num_sets - 1), pick_point(0, num_points - 1);
  std::vector<std::vector<char>> member(num_sets, std::vector<char>(num_points, 0));
  for (auto& row : member)
    for (auto& m : row) m = join(rng) ? 1 : 0;
  for (std::size_t x = 0; x < num_points; ++x) {
    bool covered = false;
    for (const auto& row : member) covered = covered || row[x];
    if (!covered) member[pick_set(rng)][x] = 1;
  }
  for (auto& row : member)
    if (std::find(row.begin(), row.end(), 1) == row.end()) row[pick_point(rng)] = 1;
  std::vector<std::string> ids, labels;
  for (std::size_t x = 0; x < num_points; ++x) ids.push_back("x" + std::to_string(x));
  std::vector<std::vector<int>> sets;
  for (std::size_t i = 0; i < num_sets; ++i) {
    labels.push_back("U" + std::to_string(i));
    std::vector<int> s;
    for (std::size_t x = 0; x < num_points; ++x)
      if (member[i][x]) s.push_back(static_cast<int>(x));
    sets.push_back(std::move(s));
  }
  return Cover(FinSpace(std::move(ids)), std::move(labels), std::move(sets));
}

FinAbGroup random_small_group(Rng& rng) {
  static const std::vector<std::vector<std::int64_t>> choices{{2}, {3}, {4}, {2, 2}};
  return FinAbGroup(choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)]);
}

namespace {

GroupElem random_elem(Rng& rng, const FinAbGroup& group) {
  return group.element_at(std::uniform_int_distribution<std::size_t>(0, group.order() - 1)(rng));
}

}  // namespace

CechCochain random_cochain(Rng& rng, std::shared_ptr<const Nerve> nerve, const FinAbGroup& group, int degree,
                           CochainMode mode) {
  CechCochain c(nerve, group, degree, mode);
  for (const auto& key : c.domain()) c.set(key, random_elem(rng, group));
  return c;
}

CechCochain random_normalized_cocycle(Rng& rng, std::shared_ptr<const Nerve> nerve, const FinAbGroup& group,
                                      CochainMode mode) {
  CechCochain c = coboundary(random_cochain(rng, nerve, group, 1, mode));
  if (mode == CochainMode::nerve) {
    const CohomologyGroup h = cohomology(nerve, group, 2);
    for (std::size_t k = 0; k < h.generators().size(); ++k) {
      const std::int64_t n = h.cyclic_orders()[k];
      const std::int64_t times = std::uniform_int_distribution<std::int64_t>(0, n - 1)(rng);
      for (std::int64_t t = 0; t < times; ++t) c = c + h.generators()[k];
    }
  }
  return normalize(c).normalized;
}

FinGroupoid action_groupoid(const std::vector<int>& perm, std::size_t m) {
  const std::size_t n = perm.size();
  if (m == 0 || n == 0) throw InputError("action_groupoid needs points and m >= 1");
  std::vector<std::vector<int>> power(m, std::vector<int>(n));
  for (std::size_t x = 0; x < n; ++x) power[0][x] = static_cast<int>(x);
  for (std::size_t k = 1; k < m; ++k)
    for (std::size_t x = 0; x < n; ++x) power[k][x] = perm.at(static_cast<std::size_t>(power[k - 1][x]));
  for (std::size_t x = 0; x < n; ++x)
    if (perm.at(static_cast<std::size_t>(power[m - 1][x])) != static_cast<int>(x))
      throw InputError("perm^m is not the identity");
  const std::size_t arrows = m * n;
  std::vector<int> source(arrows), range(arrows), inverse(arrows), unit(n);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t a = k * n + x;
      source[a] = static_cast<int>(x);
      range[a] = power[k][x];
      inverse[a] = static_cast<int>(((m - k) % m) * n + static_cast<std::size_t>(power[k][x]));
    }
  for (std::size_t x = 0; x < n; ++x) unit[x] = static_cast<int>(x);
  const auto nn = static_cast<int>(n), mm = static_cast<int>(m);
  return FinGroupoid(n, std::move(source), std::move(range), std::move(unit), std::move(inverse),
                     [nn, mm](int a, int b) { return ((a / nn + b / nn) % mm) * nn + b % nn; });
}

GroupoidCocycle2 carry_cocycle(std::shared_ptr<const FinGroupoid> action, std::size_t m, const FinAbGroup& group,
                               const GroupElem& g) {
  GroupoidCocycle2 phi(action, group);
  const auto n = action->num_units();
  for (std::size_t p = 0; p < action->num_pairs(); ++p) {
    const auto [a, b] = action->pair_at(p);
    const std::size_t k1 = static_cast<std::size_t>(a) / n, k2 = static_cast<std::size_t>(b) / n;
    if (k1 + k2 >= m) phi.set_pair(p, g);
  }
  return phi;
}

GroupoidCocycle2 perturb_by_coboundary(Rng& rng, const GroupoidCocycle2& base) {
  std::vector<GroupElem> f(base.base().num_arrows(), base.group().zero());
  for (std::size_t a = 0; a < f.size(); ++a)
    if (!base.base().is_unit(static_cast<int>(a))) f[a] = random_elem(rng, base.group());
  return base + groupoid_coboundary(base.base_ptr(), base.group(), f);
}

}  // namespace twistlab
