#include "twistlab/groupoid.hpp"

#include <algorithm>
#include <deque>

#include "twistlab/errors.hpp"

namespace twistlab {

FinGroupoid::FinGroupoid(std::size_t num_units, std::vector<int> source, std::vector<int> range,
                         std::vector<int> unit_arrow, std::vector<int> inverse, const ComposeFn& compose)
    : source_(std::move(source)), range_(std::move(range)), unit_arrow_(std::move(unit_arrow)),
      inverse_(std::move(inverse)) {
  const std::size_t n = source_.size();
  if (range_.size() != n || inverse_.size() != n) throw InputError("groupoid tables have inconsistent sizes");
  if (unit_arrow_.size() != num_units) throw InputError("one unit arrow per unit expected");
  auto arrow_ok = [&](int a) { return a >= 0 && static_cast<std::size_t>(a) < n; };
  auto unit_ok = [&](int u) { return u >= 0 && static_cast<std::size_t>(u) < num_units; };
  unit_of_.assign(n, -1);
  for (std::size_t u = 0; u < num_units; ++u) {
    const int a = unit_arrow_[u];
    if (!arrow_ok(a)) throw InputError("unit arrow out of range");
    if (unit_of_[static_cast<std::size_t>(a)] >= 0) throw InputError("two units share an arrow");
    unit_of_[static_cast<std::size_t>(a)] = static_cast<int>(u);
  }
  with_range_.assign(num_units, {});
  with_source_.assign(num_units, {});
  pos_in_range_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (!unit_ok(source_[a]) || !unit_ok(range_[a]) || !arrow_ok(inverse_[a]))
      throw InputError("groupoid table entry out of range");
    auto& wr = with_range_[static_cast<std::size_t>(range_[a])];
    pos_in_range_[a] = wr.size();
    wr.push_back(static_cast<int>(a));
    with_source_[static_cast<std::size_t>(source_[a])].push_back(static_cast<int>(a));
  }
  offset_.assign(n, 0);
  std::size_t total = 0;
  for (std::size_t a = 0; a < n; ++a) {
    offset_[a] = total;
    total += with_range_[static_cast<std::size_t>(source_[a])].size();
  }
  table_.reserve(total);
  pairs_.reserve(total);
  for (std::size_t a = 0; a < n; ++a)
    for (int b : with_range_[static_cast<std::size_t>(source_[a])]) {
      const int ab = compose(static_cast<int>(a), b);
      if (!arrow_ok(ab)) throw InputError("composition returned an arrow out of range");
      table_.push_back(ab);
      pairs_.emplace_back(static_cast<int>(a), b);
    }
}

int FinGroupoid::compose(int a, int b) const {
  if (!composable(a, b)) throw InputError("arrows are not composable");
  return compose_unchecked(a, b);
}

std::size_t FinGroupoid::pair_index(int a, int b) const {
  if (!composable(a, b)) throw InputError("arrows are not composable");
  return offset_[static_cast<std::size_t>(a)] + pos_in_range_[static_cast<std::size_t>(b)];
}

bool same_groupoid(const FinGroupoid& a, const FinGroupoid& b) {
  if (a.num_units() != b.num_units() || a.num_arrows() != b.num_arrows()) return false;
  for (std::size_t u = 0; u < a.num_units(); ++u)
    if (a.unit_arrow(static_cast<int>(u)) != b.unit_arrow(static_cast<int>(u))) return false;
  for (int x = 0; x < static_cast<int>(a.num_arrows()); ++x)
    if (a.source(x) != b.source(x) || a.range(x) != b.range(x) || a.inverse(x) != b.inverse(x)) return false;
  for (std::size_t p = 0; p < a.num_pairs(); ++p) {
    const auto [x, y] = a.pair_at(p);
    if (a.compose_unchecked(x, y) != b.compose_unchecked(x, y)) return false;
  }
  return true;
}

void AxiomReport::add(std::string message) {
  ++violations;
  if (messages.size() < 8) messages.push_back(std::move(message));
}

AxiomReport check_groupoid_axioms(const FinGroupoid& g) {
  AxiomReport rep;
  const int n = static_cast<int>(g.num_arrows());
  for (int u = 0; u < static_cast<int>(g.num_units()); ++u) {
    const int e = g.unit_arrow(u);
    if (g.source(e) != u || g.range(e) != u) rep.add("unit arrow of " + std::to_string(u) + " has wrong ends");
  }
  if (!rep.ok()) return rep;
  for (int a = 0; a < n; ++a) {
    const std::string s = std::to_string(a);
    if (g.compose(g.unit_arrow(g.range(a)), a) != a) rep.add("left unit law fails at arrow " + s);
    if (g.compose(a, g.unit_arrow(g.source(a))) != a) rep.add("right unit law fails at arrow " + s);
    const int inv = g.inverse(a);
    if (g.source(inv) != g.range(a) || g.range(inv) != g.source(a)) {
      rep.add("inverse of arrow " + s + " has wrong ends");
      continue;
    }
    if (g.compose(a, inv) != g.unit_arrow(g.range(a))) rep.add("a a^-1 != r(a) at arrow " + s);
    if (g.compose(inv, a) != g.unit_arrow(g.source(a))) rep.add("a^-1 a != s(a) at arrow " + s);
  }
  for (std::size_t p = 0; p < g.num_pairs(); ++p) {
    const auto [a, b] = g.pair_at(p);
    const int ab = g.compose_unchecked(a, b);
    if (g.range(ab) != g.range(a) || g.source(ab) != g.source(b))
      rep.add("product of " + std::to_string(a) + " and " + std::to_string(b) + " has wrong ends");
  }
  if (!rep.ok()) return rep;
  for (std::size_t p = 0; p < g.num_pairs(); ++p) {
    const auto [a, b] = g.pair_at(p);
    const int ab = g.compose_unchecked(a, b);
    for (int c : g.arrows_with_range(g.source(b)))
      if (g.compose_unchecked(ab, c) != g.compose_unchecked(a, g.compose_unchecked(b, c)))
        rep.add("associativity fails at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                std::to_string(c) + ")");
  }
  return rep;
}

FinGroupoid unit_groupoid(std::size_t n) {
  std::vector<int> ids(n);
  for (std::size_t k = 0; k < n; ++k) ids[k] = static_cast<int>(k);
  return FinGroupoid(n, ids, ids, ids, ids, [](int a, int) { return a; });
}

int Blowup::index_of(int i, int gamma, int j) const {
  if (i < 0 || j < 0 || gamma < 0 || static_cast<std::size_t>(i) >= num_sets ||
      static_cast<std::size_t>(j) >= num_sets || static_cast<std::size_t>(gamma) >= base_arrows)
    return -1;
  return lookup[(static_cast<std::size_t>(i) * base_arrows + static_cast<std::size_t>(gamma)) * num_sets +
                static_cast<std::size_t>(j)];
}

Blowup blowup(const FinGroupoid& g, const std::vector<std::vector<int>>& unit_subsets, bool require_cover) {
  Blowup out;
  out.num_sets = unit_subsets.size();
  out.base_arrows = g.num_arrows();
  const std::size_t nu = g.num_units();
  std::vector<char> member(out.num_sets * nu, 0);
  for (std::size_t i = 0; i < out.num_sets; ++i)
    for (int u : unit_subsets[i]) {
      if (u < 0 || static_cast<std::size_t>(u) >= nu) throw InputError("blow-up subset names an unknown unit");
      member[i * nu + static_cast<std::size_t>(u)] = 1;
    }
  std::vector<char> covered(nu, 0);
  for (std::size_t i = 0; i < out.num_sets; ++i)
    for (std::size_t u = 0; u < nu; ++u) covered[u] |= member[i * nu + u];
  if (require_cover && std::find(covered.begin(), covered.end(), 0) != covered.end())
    throw InputError("blow-up subsets do not cover the unit space");
  auto in = [&](std::size_t i, int u) { return member[i * nu + static_cast<std::size_t>(u)] != 0; };

  std::vector<int> unit_index(out.num_sets * nu, -1);
  for (std::size_t u = 0; u < nu; ++u)
    for (std::size_t i = 0; i < out.num_sets; ++i)
      if (in(i, static_cast<int>(u))) {
        unit_index[i * nu + u] = static_cast<int>(out.units.size());
        out.units.emplace_back(static_cast<int>(i), static_cast<int>(u));
      }
  out.lookup.assign(out.num_sets * out.base_arrows * out.num_sets, -1);
  for (int gamma = 0; gamma < static_cast<int>(g.num_arrows()); ++gamma)
    for (std::size_t i = 0; i < out.num_sets; ++i) {
      if (!in(i, g.range(gamma))) continue;
      for (std::size_t j = 0; j < out.num_sets; ++j) {
        if (!in(j, g.source(gamma))) continue;
        out.lookup[(i * out.base_arrows + static_cast<std::size_t>(gamma)) * out.num_sets + j] =
            static_cast<int>(out.triples.size());
        out.triples.push_back({static_cast<int>(i), gamma, static_cast<int>(j)});
      }
    }
  const std::size_t n = out.triples.size();
  std::vector<int> source(n), range(n), inverse(n), unit_arrow(out.units.size());
  for (std::size_t a = 0; a < n; ++a) {
    const auto [i, gamma, j] = out.triples[a];
    range[a] = unit_index[static_cast<std::size_t>(i) * nu + static_cast<std::size_t>(g.range(gamma))];
    source[a] = unit_index[static_cast<std::size_t>(j) * nu + static_cast<std::size_t>(g.source(gamma))];
    inverse[a] = out.index_of(j, g.inverse(gamma), i);
  }
  for (std::size_t v = 0; v < out.units.size(); ++v) {
    const auto [i, u] = out.units[v];
    unit_arrow[v] = out.index_of(i, g.unit_arrow(u), i);
  }
  const Blowup& ref = out;
  out.groupoid = std::make_shared<const FinGroupoid>(
      out.units.size(), std::move(source), std::move(range), std::move(unit_arrow), std::move(inverse),
      [&](int a, int b) {
        const auto& ta = ref.triples[static_cast<std::size_t>(a)];
        const auto& tb = ref.triples[static_cast<std::size_t>(b)];
        return ref.index_of(ta[0], g.compose(ta[1], tb[1]), tb[2]);
      });
  return out;
}

Blowup blowup_groupoid(const Cover& cover) {
  std::vector<std::vector<int>> subsets;
  for (std::size_t i = 0; i < cover.num_sets(); ++i) subsets.push_back(cover.set(static_cast<int>(i)));
  return blowup(unit_groupoid(cover.space().size()), subsets);
}

int RelationGroupoid::index_of(int y1, int y2) const {
  const std::size_t ny = groupoid->num_units();
  if (y1 < 0 || y2 < 0 || static_cast<std::size_t>(y1) >= ny || static_cast<std::size_t>(y2) >= ny) return -1;
  return lookup[static_cast<std::size_t>(y1) * ny + static_cast<std::size_t>(y2)];
}

RelationGroupoid relation_groupoid(const std::vector<int>& psi, std::size_t num_base_points) {
  const std::size_t ny = psi.size();
  std::vector<char> hit(num_base_points, 0);
  for (int x : psi) {
    if (x < 0 || static_cast<std::size_t>(x) >= num_base_points) throw InputError("psi maps outside the base");
    hit[static_cast<std::size_t>(x)] = 1;
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) throw InputError("psi is not surjective");
  RelationGroupoid out;
  out.lookup.assign(ny * ny, -1);
  for (std::size_t a = 0; a < ny; ++a)
    for (std::size_t b = 0; b < ny; ++b)
      if (psi[a] == psi[b]) {
        out.lookup[a * ny + b] = static_cast<int>(out.pairs.size());
        out.pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
  const std::size_t n = out.pairs.size();
  std::vector<int> source(n), range(n), inverse(n), unit_arrow(ny);
  for (std::size_t k = 0; k < n; ++k) {
    const auto [a, b] = out.pairs[k];
    range[k] = a;
    source[k] = b;
    inverse[k] = out.lookup[static_cast<std::size_t>(b) * ny + static_cast<std::size_t>(a)];
  }
  for (std::size_t y = 0; y < ny; ++y) unit_arrow[y] = out.lookup[y * ny + y];
  out.groupoid = std::make_shared<const FinGroupoid>(
      ny, std::move(source), std::move(range), std::move(unit_arrow), std::move(inverse), [&](int a, int b) {
        const auto y1 = static_cast<std::size_t>(out.pairs[static_cast<std::size_t>(a)].first);
        const auto y3 = static_cast<std::size_t>(out.pairs[static_cast<std::size_t>(b)].second);
        return out.lookup[y1 * ny + y3];
      });
  return out;
}

Isotropy isotropy(const FinGroupoid& g) {
  Isotropy out;
  std::vector<int> local(g.num_arrows(), -1);
  for (int a = 0; a < static_cast<int>(g.num_arrows()); ++a)
    if (g.source(a) == g.range(a)) {
      local[static_cast<std::size_t>(a)] = static_cast<int>(out.arrows.size());
      out.arrows.push_back(a);
    }
  const std::size_t n = out.arrows.size();
  std::vector<int> source(n), range(n), inverse(n), unit_arrow(g.num_units());
  for (std::size_t k = 0; k < n; ++k) {
    const int a = out.arrows[k];
    source[k] = range[k] = g.source(a);
    inverse[k] = local[static_cast<std::size_t>(g.inverse(a))];
  }
  for (std::size_t u = 0; u < g.num_units(); ++u)
    unit_arrow[u] = local[static_cast<std::size_t>(g.unit_arrow(static_cast<int>(u)))];
  const auto& arrows = out.arrows;
  out.groupoid = std::make_shared<const FinGroupoid>(
      g.num_units(), std::move(source), std::move(range), std::move(unit_arrow), std::move(inverse),
      [&](int a, int b) {
        return local[static_cast<std::size_t>(
            g.compose(arrows[static_cast<std::size_t>(a)], arrows[static_cast<std::size_t>(b)]))];
      });
  return out;
}

CentralIsotropyReport has_central_isotropy(const FinGroupoid& g) {
  CentralIsotropyReport rep;
  const std::size_t nu = g.num_units();
  std::vector<std::vector<int>> iso(nu);
  for (int a = 0; a < static_cast<int>(g.num_arrows()); ++a)
    if (g.source(a) == g.range(a)) iso[static_cast<std::size_t>(g.source(a))].push_back(a);
  for (std::size_t u = 0; u < nu; ++u)
    for (int a : iso[u])
      for (int b : iso[u])
        if (g.compose(a, b) != g.compose(b, a)) {
          rep.reason = "isotropy at unit " + std::to_string(u) + " is not abelian: arrows " + std::to_string(a) +
                       " and " + std::to_string(b) + " do not commute";
          return rep;
        }
  // transport arrows t_u : rep(u) -> u
  rep.orbit_rep.assign(nu, -1);
  std::vector<int> transport(nu, -1);
  for (std::size_t u0 = 0; u0 < nu; ++u0) {
    if (rep.orbit_rep[u0] >= 0) continue;
    for (int a : g.arrows_with_source(static_cast<int>(u0))) {
      const auto v = static_cast<std::size_t>(g.range(a));
      if (rep.orbit_rep[v] >= 0) continue;
      rep.orbit_rep[v] = static_cast<int>(u0);
      transport[v] = a;
    }
  }
  auto iota = [&](int u, int a) {
    const int t = transport[static_cast<std::size_t>(u)];
    return g.compose(g.compose(t, a), g.inverse(t));
  };
  for (int s = 0; s < static_cast<int>(g.num_arrows()); ++s) {
    const int r = g.range(s), src = g.source(s);
    const int base = rep.orbit_rep[static_cast<std::size_t>(r)];
    for (int a : iso[static_cast<std::size_t>(base)])
      if (g.compose(iota(r, a), s) != g.compose(s, iota(src, a))) {
        rep.reason = "iota(r(s), a) s != s iota(s(s), a) at arrow " + std::to_string(s);
        return rep;
      }
  }
  rep.central = true;
  return rep;
}

}  // namespace twistlab
