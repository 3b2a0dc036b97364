#include "twistlab/dd.hpp"

#include <algorithm>
#include <random>

#include "twistlab/algebra.hpp"
#include "twistlab/errors.hpp"

namespace twistlab {

std::vector<UnimodularCochain> m_star(const CechCochain& c) {
  if (c.degree() != 2) throw PreconditionError("m_star applies to 2-cochains");
  if (!is_normalized(c)) throw PreconditionError("m_star needs a normalized cochain");
  std::vector<UnimodularCochain> rows;
  for (const auto& tau : dual_group(c.group())) {
    UnimodularCochain nu(c.nerve_ptr(), 2, c.mode());
    for (const auto& [key, g] : c.entries()) nu.set(key.tuple, key.point, char_eval(c.group(), tau, g).conj());
    rows.push_back(std::move(nu));
  }
  return rows;
}

namespace {

std::int64_t exponent_over(const RootOfUnity& r, std::int64_t d) {
  if (d % r.den() != 0) throw InternalError("root of unity of order " + std::to_string(r.den()) + " is not a d-th root");
  return r.num() * (d / r.den());
}

CechCochain exponent_cochain(const UnimodularCochain& nu, std::int64_t d) {
  CechCochain a(nu.nerve_ptr(), FinAbGroup::cyclic(d), nu.degree(), nu.mode());
  for (const auto& [key, r] : nu.entries()) a.set(key.tuple, key.point, GroupElem{{exponent_over(r, d)}});
  return a;
}

}  // namespace

DDReport dd_class(const CechCochain& c, const DDOptions& options) {
  if (c.degree() != 2) throw PreconditionError("dd_class applies to 2-cochains");
  if (!is_normalized(c)) throw PreconditionError("dd_class needs a normalized cochain");
  if (!is_cocycle(c)) throw PreconditionError("dd_class needs a cocycle");
  DDReport report;
  report.group = c.group();
  report.mode = c.mode();
  const auto chars = dual_group(c.group());
  auto nus = m_star(c);

  std::optional<SimplicialCohomology> h3;
  IntMatrix delta;
  if (c.mode() == CochainMode::nerve) {
    h3.emplace(integer_cohomology(c.nerve_ptr(), 3));
    report.h3_orders = h3->orders();
    delta = coboundary_matrix(c.nerve(), 2);
  } else {
    report.note = "pointwise cochains live on the disjoint union of full simplices, which is acyclic; every class is trivial";
  }
  std::mt19937_64 rng(options.lift_seed.value_or(0));
  std::uniform_int_distribution<std::int64_t> shift(-3, 3);

  for (std::size_t t = 0; t < chars.size(); ++t) {
    const std::int64_t d = character_order(c.group(), chars[t]);
    DDRow row{t, chars[t], d, std::move(nus[t]), false, std::nullopt, {}, false};
    const CechCochain a = exponent_cochain(row.nu, d);
    row.witness_b = solve_coboundary(a);
    row.mu_trivial = row.witness_b.has_value();
    if (h3) {
      const auto& tri = c.nerve().simplices(2);
      std::vector<std::int64_t> lift(tri.size());
      for (std::size_t s = 0; s < tri.size(); ++s) {
        lift[s] = exponent_over(row.nu.at(tri[s]), d);
        if (options.lift_seed) lift[s] += d * shift(rng);
      }
      auto z = delta.apply(lift);
      for (auto& v : z) {
        if (v % d != 0) throw InternalError("delta of the lift is not divisible by the character order");
        v /= d;
      }
      row.h3_class = h3->class_of(z);
      row.trivial = std::all_of(row.h3_class.begin(), row.h3_class.end(), [](std::int64_t v) { return v == 0; });
    } else {
      if (!row.mu_trivial) throw InternalError("pointwise cocycle is not a coboundary");
      row.trivial = true;
    }
    report.trivial = report.trivial && row.trivial;
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

using Exact = ExactTwistedMatrix;

bool same(const Exact& a, const Exact& b) {
  for (const auto& [k, v] : a.entries)
    if (!(v == b.at(k[0], k[1], k[2]))) return false;
  for (const auto& [k, v] : b.entries)
    if (!(v == a.at(k[0], k[1], k[2]))) return false;
  return true;
}

std::string tuple_text(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "," : "") + std::to_string(t[k]);
  return s + ")";
}

}  // namespace

RankOneReport rank_one_relations_check(const UnimodularCochain& nu) {
  if (nu.degree() != 2) throw PreconditionError("rank_one_relations_check needs a 2-cochain");
  const Nerve& nerve = nu.nerve();
  if (!nerve.has_carrier()) throw PreconditionError("rank_one_relations_check needs the nerve of a cover");
  const int n = static_cast<int>(nerve.num_vertices());
  RankOneReport report;
  auto fail = [&](const std::string& what) {
    if (report.failures++ == 0) report.first_failure = what;
  };

  std::vector<Exact> p(static_cast<std::size_t>(n));
  std::map<std::pair<int, int>, Exact> v;
  for (int i = 0; i < n; ++i)
    for (int x : nerve.carrier(std::vector<int>{i})) p[static_cast<std::size_t>(i)].entries[{i, i, x}] = Cyclotomic::integer(1);
  for (const auto& t : ordered_tuples(nerve, 2)) {
    Exact m;
    for (int x : nerve.carrier(t)) m.entries[{t[0], t[1], x}] = Cyclotomic::integer(1);
    v.emplace(std::make_pair(t[0], t[1]), std::move(m));
  }
  auto restrict_to = [](const Exact& m, const std::vector<int>& points) {
    Exact out;
    for (const auto& [k, val] : m.entries)
      if (std::binary_search(points.begin(), points.end(), k[2])) out.entries[k] = val;
    return out;
  };

  for (int i = 0; i < n; ++i) {
    const Exact& pi = p[static_cast<std::size_t>(i)];
    ++report.projection_checks;
    if (!same(rt_product(nu, pi, pi), pi) || !same(rt_star(nu, pi), pi))
      fail("p(" + std::to_string(i) + ") is not a self-adjoint idempotent");
  }
  for (const auto& [ij, vij] : v) {
    const auto [i, j] = ij;
    const auto& overlap = nerve.carrier(std::vector<int>{i, j});
    const Exact adj = rt_star(nu, vij);
    ++report.partial_isometry_checks;
    if (!same(rt_product(nu, vij, adj), restrict_to(p[static_cast<std::size_t>(i)], overlap)))
      fail("v v* != p(i) for (i,j) = " + tuple_text({i, j}));
    ++report.partial_isometry_checks;
    if (!same(rt_product(nu, adj, vij), restrict_to(p[static_cast<std::size_t>(j)], overlap)))
      fail("v* v != p(j) for (i,j) = " + tuple_text({i, j}));
  }
  for (const auto& t : ordered_tuples(nerve, 3)) {
    const Exact prod = rt_product(nu, v.at({t[0], t[1]}), v.at({t[1], t[2]}));
    Exact expected;
    for (int x : nerve.carrier(t)) {
      ++report.product_checks;
      expected.entries[{t[0], t[2], x}] = Cyclotomic(nu.at(t, x).conj());
    }
    if (!same(prod, expected)) fail("v(i,j) v(j,k) != conj(nu_ijk) v(i,k) at " + tuple_text(t));
  }
  for (const auto& t : ordered_tuples(nerve, 4)) {
    const Exact& a = v.at({t[0], t[1]});
    const Exact& b = v.at({t[1], t[2]});
    const Exact& c = v.at({t[2], t[3]});
    ++report.associativity_checks;
    if (!same(rt_product(nu, rt_product(nu, a, b), c), rt_product(nu, a, rt_product(nu, b, c))))
      fail("(v v) v != v (v v) at " + tuple_text(t));
  }
  return report;
}

PipelineResult pipeline_local_homeo(const PipelineInput& in) {
  if (!in.base_cover) throw InputError("pipeline needs a cover of the base");
  const Cover& w = *in.base_cover;
  const std::size_t nx = w.space().size();
  const std::size_t ny = in.psi.size();
  const RelationGroupoid rel = relation_groupoid(in.psi, nx);
  if (!in.extension.base || !same_groupoid(*in.extension.base, *rel.groupoid))
    throw InputError("the extension does not live over R(psi)");
  if (in.lifts.size() != w.num_sets()) throw InputError("need one lift V_j per cover set W_j");

  std::vector<int> lift(w.num_sets() * nx, -1);
  for (std::size_t j = 0; j < in.lifts.size(); ++j) {
    for (int y : in.lifts[j]) {
      if (y < 0 || static_cast<std::size_t>(y) >= ny) throw InputError("V_j names an unknown point of Y");
      const int x = in.psi[static_cast<std::size_t>(y)];
      if (!w.contains(static_cast<int>(j), x)) throw InputError("psi maps V_" + w.label(static_cast<int>(j)) + " outside W_j");
      int& slot = lift[j * nx + static_cast<std::size_t>(x)];
      if (slot >= 0 && slot != y) throw InputError("psi is not injective on V_" + w.label(static_cast<int>(j)));
      slot = y;
    }
    for (int x : w.set(static_cast<int>(j)))
      if (lift[j * nx + static_cast<std::size_t>(x)] < 0)
        throw InputError("psi(V_" + w.label(static_cast<int>(j)) + ") misses a point of W_j");
  }

  const BlownUpExtension bl = blowup_extension(in.extension, in.lifts, false);
  std::vector<int> kappa;
  if (in.section) {
    kappa = *in.section;
  } else {
    if (!bl.extension.section) throw PreconditionError("no section given and the extension carries none");
    kappa = *bl.extension.section;
  }
  ExtractedCocycle ex = extract_cocycle(bl.extension, kappa);

  auto nerve = std::make_shared<const Nerve>(build_nerve(w));
  CechCochain c(nerve, in.extension.group, 2, CochainMode::pointwise);
  auto arrow = [&](int i, int j, int x) {
    const int y1 = lift[static_cast<std::size_t>(i) * nx + static_cast<std::size_t>(x)];
    const int y2 = lift[static_cast<std::size_t>(j) * nx + static_cast<std::size_t>(x)];
    return bl.base.index_of(i, rel.index_of(y1, y2), j);
  };
  for (int x = 0; x < static_cast<int>(nx); ++x) {
    const auto idx = index_set_at(w, x);
    for (int i : idx)
      for (int j : idx)
        for (int k : idx) c.set(std::vector<int>{i, j, k}, x, ex.phi.at(arrow(i, j, x), arrow(j, k, x)));
  }
  if (!is_normalized(c)) c = normalize(c).normalized;

  std::optional<CechCochain> flat;
  {
    CechCochain candidate(nerve, in.extension.group, 2, CochainMode::nerve);
    bool constant = true;
    for (const auto& t : ordered_tuples(*nerve, 3)) {
      const auto& carrier = nerve->carrier(t);
      const GroupElem first = c.at(t, carrier.front());
      for (int x : carrier) constant = constant && c.at(t, x) == first;
      if (!constant) break;
      candidate.set(t, -1, first);
    }
    if (constant) flat = std::move(candidate);
  }
  DDReport report = dd_class(flat ? *flat : c);
  return PipelineResult{std::move(ex.phi), std::move(c), std::move(flat), std::move(report)};
}

CentralExtension pullback_extension(const std::vector<int>& psi, const std::vector<std::vector<int>>& lifts,
                                    const CechCochain& c0) {
  if (c0.degree() != 2 || !c0.nerve().has_carrier()) throw PreconditionError("c0 must be a 2-cochain on the nerve of W");
  const Cover& w = c0.nerve().cover();
  const std::size_t nx = w.space().size();
  const RelationGroupoid rel = relation_groupoid(psi, nx);
  std::vector<int> chart(psi.size(), -1);
  for (std::size_t j = lifts.size(); j-- > 0;)
    for (int y : lifts[j]) chart.at(static_cast<std::size_t>(y)) = static_cast<int>(j);
  for (std::size_t y = 0; y < psi.size(); ++y)
    if (chart[y] < 0) chart[y] = index_set_at(w, psi[y]).front();
  GroupoidCocycle2 phi(rel.groupoid, c0.group());
  const FinGroupoid& g = *rel.groupoid;
  for (std::size_t p = 0; p < g.num_pairs(); ++p) {
    const auto [a, b] = g.pair_at(p);
    const auto [y1, y2] = rel.pairs[static_cast<std::size_t>(a)];
    const int y3 = rel.pairs[static_cast<std::size_t>(b)].second;
    const int x = psi[static_cast<std::size_t>(y1)];
    phi.set_pair(p, c0.at(std::vector<int>{chart[static_cast<std::size_t>(y1)], chart[static_cast<std::size_t>(y2)],
                                          chart[static_cast<std::size_t>(y3)]},
                          x));
  }
  return build_extension(phi);
}

}  // namespace twistlab
