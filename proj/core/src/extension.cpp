#include "twistlab/extension.hpp"

#include <algorithm>
#include <limits>

#include "twistlab/errors.hpp"
#include "twistlab/smith.hpp"

namespace twistlab {

GroupoidCocycle2::GroupoidCocycle2(std::shared_ptr<const FinGroupoid> base, FinAbGroup group)
    : base_(std::move(base)), group_(std::move(group)) {
  if (!base_) throw InputError("groupoid cocycle needs a base groupoid");
  values_.assign(base_->num_pairs(), group_.zero());
}

void GroupoidCocycle2::set(int a, int b, const GroupElem& v) { set_pair(base_->pair_index(a, b), v); }

void GroupoidCocycle2::set_pair(std::size_t pair, const GroupElem& v) {
  if (!group_.contains(v)) throw InputError("cocycle value is not an element of " + group_.to_string());
  values_.at(pair) = v;
}

bool GroupoidCocycle2::is_cocycle() const {
  const FinGroupoid& g = *base_;
  for (std::size_t p = 0; p < g.num_pairs(); ++p) {
    const auto [a, b] = g.pair_at(p);
    const int ab = g.compose_unchecked(a, b);
    for (int c : g.arrows_with_range(g.source(b))) {
      const GroupElem lhs = group_.add(values_[p], at(ab, c));
      const GroupElem rhs = group_.add(at(b, c), at(a, g.compose_unchecked(b, c)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool GroupoidCocycle2::is_normalized() const {
  const FinGroupoid& g = *base_;
  for (std::size_t p = 0; p < g.num_pairs(); ++p) {
    const auto [a, b] = g.pair_at(p);
    if ((g.is_unit(a) || g.is_unit(b)) && !group_.is_zero(values_[p])) return false;
  }
  return true;
}

bool GroupoidCocycle2::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [&](const GroupElem& v) { return group_.is_zero(v); });
}

void GroupoidCocycle2::check_compatible(const GroupoidCocycle2& o) const {
  if (!(group_ == o.group_) || (base_ != o.base_ && !same_groupoid(*base_, *o.base_)))
    throw InputError("groupoid cocycles live on different groupoids or groups");
}

GroupoidCocycle2 GroupoidCocycle2::operator+(const GroupoidCocycle2& o) const {
  check_compatible(o);
  GroupoidCocycle2 out = *this;
  for (std::size_t p = 0; p < values_.size(); ++p) out.values_[p] = group_.add(values_[p], o.values_[p]);
  return out;
}

GroupoidCocycle2 GroupoidCocycle2::operator-(const GroupoidCocycle2& o) const {
  check_compatible(o);
  GroupoidCocycle2 out = *this;
  for (std::size_t p = 0; p < values_.size(); ++p) out.values_[p] = group_.sub(values_[p], o.values_[p]);
  return out;
}

GroupoidCocycle2 groupoid_coboundary(std::shared_ptr<const FinGroupoid> base, const FinAbGroup& group,
                                     const std::vector<GroupElem>& f) {
  if (f.size() != base->num_arrows()) throw InputError("1-cochain must have one value per arrow");
  GroupoidCocycle2 out(base, group);
  for (std::size_t p = 0; p < base->num_pairs(); ++p) {
    const auto [a, b] = base->pair_at(p);
    const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
    const auto uab = static_cast<std::size_t>(base->compose_unchecked(a, b));
    out.set_pair(p, group.sub(group.add(f[ua], f[ub]), f[uab]));
  }
  return out;
}

GroupoidNormalization normalize_groupoid_cocycle(const GroupoidCocycle2& phi) {
  if (!phi.is_cocycle()) throw PreconditionError("normalize_groupoid_cocycle expects a cocycle");
  const FinGroupoid& g = phi.base();
  std::vector<GroupElem> f(g.num_arrows(), phi.group().zero());
  for (std::size_t u = 0; u < g.num_units(); ++u) {
    const int e = g.unit_arrow(static_cast<int>(u));
    f[static_cast<std::size_t>(e)] = phi.at(e, e);
  }
  GroupoidCocycle2 normalized = phi - groupoid_coboundary(phi.base_ptr(), phi.group(), f);
  return {std::move(normalized), std::move(f)};
}

std::optional<std::vector<GroupElem>> solve_groupoid_coboundary(const GroupoidCocycle2& phi) {
  const FinGroupoid& g = phi.base();
  const FinAbGroup& group = phi.group();
  IntMatrix a(g.num_pairs(), g.num_arrows());
  for (std::size_t p = 0; p < g.num_pairs(); ++p) {
    const auto [x, y] = g.pair_at(p);
    a(p, static_cast<std::size_t>(x)) += 1;
    a(p, static_cast<std::size_t>(y)) += 1;
    a(p, static_cast<std::size_t>(g.compose_unchecked(x, y))) -= 1;
  }
  std::vector<std::vector<std::int64_t>> sol(group.rank());
  for (std::size_t j = 0; j < group.rank(); ++j) {
    std::vector<std::int64_t> rhs(g.num_pairs());
    for (std::size_t p = 0; p < g.num_pairs(); ++p) rhs[p] = phi.at_pair(p).c[j];
    auto s = solve_mod(a, rhs, group.cyclic_orders()[j]);
    if (!s) return std::nullopt;
    sol[j] = std::move(*s);
  }
  std::vector<GroupElem> f;
  f.reserve(g.num_arrows());
  for (std::size_t k = 0; k < g.num_arrows(); ++k) {
    std::vector<std::int64_t> comps(group.rank());
    for (std::size_t j = 0; j < group.rank(); ++j) comps[j] = sol[j][k];
    f.push_back(group.element(std::move(comps)));
  }
  return f;
}

GroupoidCocycle2 cech_to_groupoid_cocycle(const CechCochain& c, const Blowup& bl) {
  if (c.degree() != 2) throw PreconditionError("a Cech 2-cochain is required");
  if (!c.nerve().has_carrier()) throw PreconditionError("the cochain's nerve must come from a cover");
  const Cover& cover = c.nerve().cover();
  if (bl.num_sets != cover.num_sets() || bl.base_arrows != cover.space().size())
    throw InputError("blow-up does not belong to the cochain's cover");
  GroupoidCocycle2 out(bl.groupoid, c.group());
  const FinGroupoid& g = *bl.groupoid;
  for (std::size_t p = 0; p < g.num_pairs(); ++p) {
    const auto [a, b] = g.pair_at(p);
    const auto& ta = bl.triples[static_cast<std::size_t>(a)];
    const auto& tb = bl.triples[static_cast<std::size_t>(b)];
    out.set_pair(p, c.at(std::vector<int>{ta[0], ta[2], tb[2]}, ta[1]));
  }
  if (!out.is_normalized()) throw PreconditionError("c is not normalized: c_iij or c_ijj is nonzero");
  return out;
}

CentralExtension build_extension(const GroupoidCocycle2& phi) {
  if (!phi.is_normalized()) throw PreconditionError("build_extension expects a normalized cocycle");
  const FinGroupoid& base = phi.base();
  const FinAbGroup& group = phi.group();
  const auto elems = group.elements();
  const int ng = static_cast<int>(group.order());
  const std::size_t n = base.num_arrows() * elems.size();
  std::vector<int> source(n), range(n), inverse(n), unit_arrow(base.num_units());
  for (int gamma = 0; gamma < static_cast<int>(base.num_arrows()); ++gamma) {
    const int ginv = base.inverse(gamma);
    for (int k = 0; k < ng; ++k) {
      const auto a = static_cast<std::size_t>(gamma * ng + k);
      source[a] = base.source(gamma);
      range[a] = base.range(gamma);
      const GroupElem inv = group.sub(group.neg(elems[static_cast<std::size_t>(k)]), phi.at(ginv, gamma));
      inverse[a] = extension_arrow(group, ginv, inv);
    }
  }
  for (std::size_t u = 0; u < base.num_units(); ++u)
    unit_arrow[u] = extension_arrow(group, base.unit_arrow(static_cast<int>(u)), group.zero());
  CentralExtension e{nullptr, phi.base_ptr(), group, {}, {}, std::nullopt};
  e.total = std::make_shared<const FinGroupoid>(
      base.num_units(), std::move(source), std::move(range), std::move(unit_arrow), std::move(inverse),
      [&](int a, int b) {
        const int ga = a / ng, gb = b / ng;
        const GroupElem sum = group.add(group.add(elems[static_cast<std::size_t>(a % ng)],
                                                  elems[static_cast<std::size_t>(b % ng)]),
                                        phi.at(ga, gb));
        return extension_arrow(group, base.compose(ga, gb), sum);
      });
  e.iota.resize(base.num_units() * elems.size());
  for (std::size_t u = 0; u < base.num_units(); ++u)
    for (int k = 0; k < ng; ++k)
      e.iota[u * elems.size() + static_cast<std::size_t>(k)] = base.unit_arrow(static_cast<int>(u)) * ng + k;
  e.pi.resize(n);
  for (std::size_t a = 0; a < n; ++a) e.pi[a] = static_cast<int>(a) / ng;
  std::vector<int> section(base.num_arrows());
  for (std::size_t gamma = 0; gamma < section.size(); ++gamma) section[gamma] = static_cast<int>(gamma) * ng;
  e.section = std::move(section);
  return e;
}

AxiomReport extension_axioms_check(const CentralExtension& e) {
  AxiomReport rep = check_groupoid_axioms(*e.total);
  if (!rep.ok()) return rep;
  const FinGroupoid& s = *e.total;
  const FinGroupoid& b = *e.base;
  const FinAbGroup& group = e.group;
  const auto elems = group.elements();
  const std::size_t ng = elems.size();
  if (s.num_units() != b.num_units()) rep.add("total and base have different unit spaces");
  if (e.pi.size() != s.num_arrows()) rep.add("pi has the wrong size");
  if (e.iota.size() != s.num_units() * ng) rep.add("iota has the wrong size");
  if (!rep.ok()) return rep;
  auto pi = [&](int a) { return e.pi[static_cast<std::size_t>(a)]; };
  auto iota = [&](std::size_t u, std::size_t k) { return e.iota[u * ng + k]; };

  std::vector<char> hit(b.num_arrows(), 0);
  for (int a = 0; a < static_cast<int>(s.num_arrows()); ++a) {
    const int pa = pi(a);
    if (pa < 0 || static_cast<std::size_t>(pa) >= b.num_arrows()) {
      rep.add("pi maps arrow " + std::to_string(a) + " outside the base");
      return rep;
    }
    hit[static_cast<std::size_t>(pa)] = 1;
    if (b.source(pa) != s.source(a) || b.range(pa) != s.range(a))
      rep.add("pi does not preserve the ends of arrow " + std::to_string(a));
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) rep.add("pi is not surjective");
  for (std::size_t u = 0; u < s.num_units(); ++u)
    if (pi(s.unit_arrow(static_cast<int>(u))) != b.unit_arrow(static_cast<int>(u)))
      rep.add("pi does not send unit " + std::to_string(u) + " to a unit");
  for (std::size_t p = 0; p < s.num_pairs(); ++p) {
    const auto [x, y] = s.pair_at(p);
    if (pi(s.compose_unchecked(x, y)) != b.compose(pi(x), pi(y)))
      rep.add("pi is not multiplicative at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
  }

  std::vector<int> iota_hits(s.num_arrows(), 0);
  for (std::size_t u = 0; u < s.num_units(); ++u) {
    for (std::size_t k = 0; k < ng; ++k) {
      const int a = iota(u, k);
      if (a < 0 || static_cast<std::size_t>(a) >= s.num_arrows()) {
        rep.add("iota out of range");
        return rep;
      }
      ++iota_hits[static_cast<std::size_t>(a)];
      if (s.source(a) != static_cast<int>(u) || s.range(a) != static_cast<int>(u))
        rep.add("iota(" + std::to_string(u) + ", g) is not in the isotropy at " + std::to_string(u));
      if (pi(a) != b.unit_arrow(static_cast<int>(u))) rep.add("pi o iota is not the unit at " + std::to_string(u));
    }
    if (iota(u, 0) != s.unit_arrow(static_cast<int>(u))) rep.add("iota(u, 0) != u at unit " + std::to_string(u));
  }
  if (!rep.ok()) return rep;
  for (std::size_t u = 0; u < s.num_units(); ++u)
    for (std::size_t k = 0; k < ng; ++k)
      for (std::size_t l = 0; l < ng; ++l) {
        const auto sum = group.index_of(group.add(elems[k], elems[l]));
        if (s.compose(iota(u, k), iota(u, l)) != iota(u, sum))
          rep.add("iota is not a homomorphism at unit " + std::to_string(u));
      }
  for (int a = 0; a < static_cast<int>(s.num_arrows()); ++a) {
    if (iota_hits[static_cast<std::size_t>(a)] > 1) rep.add("iota is not injective at arrow " + std::to_string(a));
    if (b.is_unit(pi(a)) && iota_hits[static_cast<std::size_t>(a)] == 0)
      rep.add("arrow " + std::to_string(a) + " lies over a unit but not in the image of iota");
  }
  for (int a = 0; a < static_cast<int>(s.num_arrows()); ++a) {
    const auto r = static_cast<std::size_t>(s.range(a)), src = static_cast<std::size_t>(s.source(a));
    for (std::size_t k = 0; k < ng; ++k)
      if (s.compose(iota(r, k), a) != s.compose(a, iota(src, k)))
        rep.add("centrality fails: iota(r(s), g) s != s iota(s(s), g) for arrow " + std::to_string(a) + ", g = " +
                std::to_string(k));
  }
  if (e.section) {
    if (e.section->size() != b.num_arrows()) {
      rep.add("section has the wrong size");
    } else {
      for (std::size_t gamma = 0; gamma < b.num_arrows(); ++gamma) {
        const int k = (*e.section)[gamma];
        if (k < 0 || static_cast<std::size_t>(k) >= s.num_arrows() || pi(k) != static_cast<int>(gamma))
          rep.add("section is not a section of pi at base arrow " + std::to_string(gamma));
      }
    }
  }
  return rep;
}

namespace {

// arrow -> unit * |G| + index(g) for arrows in the image of iota, -1 elsewhere
std::vector<int> iota_inverse(const CentralExtension& e) {
  std::vector<int> inv(e.total->num_arrows(), -1);
  for (std::size_t k = 0; k < e.iota.size(); ++k) inv[static_cast<std::size_t>(e.iota[k])] = static_cast<int>(k);
  return inv;
}

}  // namespace

ExtractedCocycle extract_cocycle(const CentralExtension& e, const std::vector<int>& kappa) {
  const FinGroupoid& s = *e.total;
  const FinGroupoid& b = *e.base;
  const FinAbGroup& group = e.group;
  const std::size_t ng = group.order();
  if (kappa.size() != b.num_arrows()) throw PreconditionError("section has the wrong size");
  for (std::size_t gamma = 0; gamma < kappa.size(); ++gamma) {
    const int k = kappa[gamma];
    if (k < 0 || static_cast<std::size_t>(k) >= s.num_arrows() || e.pi[static_cast<std::size_t>(k)] != static_cast<int>(gamma))
      throw PreconditionError("kappa is not a section of pi at base arrow " + std::to_string(gamma));
  }
  std::vector<int> kp(b.num_arrows());
  for (int gamma = 0; gamma < static_cast<int>(b.num_arrows()); ++gamma) {
    const int at_range = kappa[static_cast<std::size_t>(b.unit_arrow(b.range(gamma)))];
    kp[static_cast<std::size_t>(gamma)] = s.compose(s.inverse(at_range), kappa[static_cast<std::size_t>(gamma)]);
  }
  const auto inv = iota_inverse(e);
  const auto elems = group.elements();
  GroupoidCocycle2 phi(e.base, group);
  for (std::size_t p = 0; p < b.num_pairs(); ++p) {
    const auto [g1, g2] = b.pair_at(p);
    const int prod = s.compose(s.compose(kp[static_cast<std::size_t>(g1)], kp[static_cast<std::size_t>(g2)]),
                               s.inverse(kp[static_cast<std::size_t>(b.compose_unchecked(g1, g2))]));
    const int k = inv[static_cast<std::size_t>(prod)];
    if (k < 0 || static_cast<std::size_t>(k) / ng != static_cast<std::size_t>(b.range(g1)))
      throw PreconditionError("the section defect does not lie in iota(r(gamma1), G); not a central extension");
    phi.set_pair(p, elems[static_cast<std::size_t>(k) % ng]);
  }
  std::vector<int> witness(b.num_arrows() * ng);
  for (int gamma = 0; gamma < static_cast<int>(b.num_arrows()); ++gamma)
    for (std::size_t k = 0; k < ng; ++k)
      witness[static_cast<std::size_t>(gamma) * ng + k] =
          s.compose(e.iota[static_cast<std::size_t>(b.range(gamma)) * ng + k], kp[static_cast<std::size_t>(gamma)]);
  return {std::move(phi), std::move(witness)};
}

ExtractedCocycle extract_cocycle(const CentralExtension& e) {
  if (!e.section) throw PreconditionError("extension carries no section");
  return extract_cocycle(e, *e.section);
}

namespace {

void require_same_base(const CentralExtension& a, const CentralExtension& b) {
  if (!(a.group == b.group)) throw InputError("extensions have different groups");
  if (a.base != b.base && !same_groupoid(*a.base, *b.base)) throw InputError("extensions have different bases");
}

}  // namespace

CentralExtension baer_sum(const CentralExtension& e1, const CentralExtension& e2) {
  require_same_base(e1, e2);
  const FinGroupoid& s1 = *e1.total;
  const FinGroupoid& s2 = *e2.total;
  const FinGroupoid& b = *e1.base;
  const FinAbGroup& group = e1.group;
  const auto elems = group.elements();
  const std::size_t ng = elems.size();
  const std::size_t n2 = s2.num_arrows();
  std::vector<std::vector<int>> fiber1(b.num_arrows()), fiber2(b.num_arrows());
  for (int a = 0; a < static_cast<int>(s1.num_arrows()); ++a) fiber1[static_cast<std::size_t>(e1.pi[static_cast<std::size_t>(a)])].push_back(a);
  for (int a = 0; a < static_cast<int>(s2.num_arrows()); ++a) fiber2[static_cast<std::size_t>(e2.pi[static_cast<std::size_t>(a)])].push_back(a);
  auto act1 = [&](std::size_t k, int a) { return s1.compose(e1.iota[static_cast<std::size_t>(s1.range(a)) * ng + k], a); };
  auto act2 = [&](std::size_t k, int a) { return s2.compose(e2.iota[static_cast<std::size_t>(s2.range(a)) * ng + k], a); };

  std::vector<int> cls(s1.num_arrows() * n2, -1);
  std::vector<std::pair<int, int>> reps;
  for (std::size_t gamma = 0; gamma < b.num_arrows(); ++gamma)
    for (int a1 : fiber1[gamma])
      for (int a2 : fiber2[gamma]) {
        if (cls[static_cast<std::size_t>(a1) * n2 + static_cast<std::size_t>(a2)] >= 0) continue;
        const int id = static_cast<int>(reps.size());
        reps.emplace_back(a1, a2);
        for (std::size_t k = 0; k < ng; ++k) {
          const std::size_t neg = group.index_of(group.neg(elems[k]));
          cls[static_cast<std::size_t>(act1(neg, a1)) * n2 + static_cast<std::size_t>(act2(k, a2))] = id;
        }
      }
  auto class_of = [&](int a1, int a2) {
    const int c = cls[static_cast<std::size_t>(a1) * n2 + static_cast<std::size_t>(a2)];
    if (c < 0) throw InternalError("pair outside the fibered product");
    return c;
  };
  const std::size_t n = reps.size();
  std::vector<int> source(n), range(n), inverse(n), unit_arrow(s1.num_units());
  for (std::size_t c = 0; c < n; ++c) {
    const auto [a1, a2] = reps[c];
    source[c] = s1.source(a1);
    range[c] = s1.range(a1);
    inverse[c] = class_of(s1.inverse(a1), s2.inverse(a2));
  }
  for (std::size_t u = 0; u < s1.num_units(); ++u)
    unit_arrow[u] = class_of(s1.unit_arrow(static_cast<int>(u)), s2.unit_arrow(static_cast<int>(u)));
  CentralExtension out{nullptr, e1.base, group, {}, {}, std::nullopt};
  out.total = std::make_shared<const FinGroupoid>(
      s1.num_units(), std::move(source), std::move(range), std::move(unit_arrow), std::move(inverse),
      [&](int x, int y) {
        const auto [x1, x2] = reps[static_cast<std::size_t>(x)];
        const auto [y1, y2] = reps[static_cast<std::size_t>(y)];
        return class_of(s1.compose(x1, y1), s2.compose(x2, y2));
      });
  out.iota.resize(e1.iota.size());
  for (std::size_t u = 0; u < s1.num_units(); ++u)
    for (std::size_t k = 0; k < ng; ++k)
      out.iota[u * ng + k] = class_of(e1.iota[u * ng + k], s2.unit_arrow(static_cast<int>(u)));
  out.pi.resize(n);
  for (std::size_t c = 0; c < n; ++c) out.pi[c] = e1.pi[static_cast<std::size_t>(reps[c].first)];
  if (e1.section && e2.section) {
    std::vector<int> sec(b.num_arrows());
    for (std::size_t gamma = 0; gamma < sec.size(); ++gamma) sec[gamma] = class_of((*e1.section)[gamma], (*e2.section)[gamma]);
    out.section = std::move(sec);
  }
  return out;
}

CentralExtension inverse_extension(const CentralExtension& e) {
  CentralExtension out = e;
  const auto elems = e.group.elements();
  const std::size_t ng = elems.size();
  for (std::size_t u = 0; u < e.total->num_units(); ++u)
    for (std::size_t k = 0; k < ng; ++k)
      out.iota[u * ng + k] = e.iota[u * ng + e.group.index_of(e.group.neg(elems[k]))];
  return out;
}

bool check_proper_isomorphism(const CentralExtension& a, const CentralExtension& b, const std::vector<int>& map) {
  const FinGroupoid& sa = *a.total;
  const FinGroupoid& sb = *b.total;
  if (!(a.group == b.group) || (a.base != b.base && !same_groupoid(*a.base, *b.base))) return false;
  if (map.size() != sa.num_arrows() || sa.num_arrows() != sb.num_arrows() || sa.num_units() != sb.num_units())
    return false;
  std::vector<char> hit(sb.num_arrows(), 0);
  for (int x = 0; x < static_cast<int>(map.size()); ++x) {
    const int y = map[static_cast<std::size_t>(x)];
    if (y < 0 || static_cast<std::size_t>(y) >= sb.num_arrows() || hit[static_cast<std::size_t>(y)]) return false;
    hit[static_cast<std::size_t>(y)] = 1;
    if (sb.source(y) != sa.source(x) || sb.range(y) != sa.range(x)) return false;
    if (b.pi[static_cast<std::size_t>(y)] != a.pi[static_cast<std::size_t>(x)]) return false;
  }
  for (std::size_t p = 0; p < sa.num_pairs(); ++p) {
    const auto [x, y] = sa.pair_at(p);
    const int lhs = map[static_cast<std::size_t>(sa.compose_unchecked(x, y))];
    if (lhs != sb.compose(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)])) return false;
  }
  for (std::size_t k = 0; k < a.iota.size(); ++k)
    if (map[static_cast<std::size_t>(a.iota[k])] != b.iota[k]) return false;
  return true;
}

std::optional<std::vector<int>> properly_isomorphic(const CentralExtension& a, const CentralExtension& b) {
  require_same_base(a, b);
  if (!a.section || !b.section) throw PreconditionError("proper isomorphism is decided for extensions with sections");
  const ExtractedCocycle ea = extract_cocycle(a);
  const ExtractedCocycle eb = extract_cocycle(b);
  const auto f = solve_groupoid_coboundary(eb.phi - ea.phi);
  if (!f) return std::nullopt;
  const FinAbGroup& group = a.group;
  const FinGroupoid& base = *a.base;
  const std::size_t ng = group.order();
  const auto elems = group.elements();
  std::vector<int> map(a.total->num_arrows(), -1);
  for (int gamma = 0; gamma < static_cast<int>(base.num_arrows()); ++gamma)
    for (std::size_t k = 0; k < ng; ++k) {
      const int from = ea.witness[static_cast<std::size_t>(gamma) * ng + k];
      const GroupElem shifted = group.sub(elems[k], (*f)[static_cast<std::size_t>(gamma)]);
      map[static_cast<std::size_t>(from)] = eb.witness[static_cast<std::size_t>(extension_arrow(group, gamma, shifted))];
    }
  if (!check_proper_isomorphism(a, b, map)) throw InternalError("constructed proper isomorphism failed verification");
  return map;
}

BlownUpExtension blowup_extension(const CentralExtension& e, const std::vector<std::vector<int>>& unit_subsets,
                                  bool require_cover) {
  Blowup total = blowup(*e.total, unit_subsets, require_cover);
  Blowup base = blowup(*e.base, unit_subsets, require_cover);
  const std::size_t ng = e.group.order();
  CentralExtension out{total.groupoid, base.groupoid, e.group, {}, {}, std::nullopt};
  out.pi.resize(total.triples.size());
  for (std::size_t a = 0; a < total.triples.size(); ++a) {
    const auto [i, s, j] = total.triples[a];
    out.pi[a] = base.index_of(i, e.pi[static_cast<std::size_t>(s)], j);
  }
  out.iota.resize(total.units.size() * ng);
  for (std::size_t v = 0; v < total.units.size(); ++v) {
    const auto [i, u] = total.units[v];
    for (std::size_t k = 0; k < ng; ++k)
      out.iota[v * ng + k] = total.index_of(i, e.iota[static_cast<std::size_t>(u) * ng + k], i);
  }
  if (e.section) {
    std::vector<int> sec(base.triples.size());
    for (std::size_t a = 0; a < base.triples.size(); ++a) {
      const auto [i, gamma, j] = base.triples[a];
      sec[a] = total.index_of(i, (*e.section)[static_cast<std::size_t>(gamma)], j);
    }
    out.section = std::move(sec);
  }
  return {std::move(out), std::move(total), std::move(base)};
}

}  // namespace twistlab
