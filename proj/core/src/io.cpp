#include "twistlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "twistlab/errors.hpp"

namespace twistlab {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

namespace {

void check_schema(const Json& j) {
  if (!j.is_object()) throw InputError("top level must be an object");
  if (!j.contains("schema_version")) throw InputError("missing schema_version");
  if (j.at("schema_version").get<int>() != kSchemaVersion)
    throw InputError("unsupported schema_version " + j.at("schema_version").dump());
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(std::string("schema violation: ") + e.what());
  }
}

int vertex_of(const Nerve& nerve, const Json& v) {
  if (v.is_number_integer()) {
    const int k = v.get<int>();
    if (k < 0 || static_cast<std::size_t>(k) >= nerve.num_vertices()) throw InputError("vertex index out of range");
    return k;
  }
  const auto s = v.get<std::string>();
  const auto k = nerve.find_vertex(s);
  if (!k) throw InputError("unknown cover label " + s);
  return *k;
}

int point_of(const FinSpace& space, const Json& v) {
  if (v.is_number_integer()) {
    const int k = v.get<int>();
    if (k < 0 || static_cast<std::size_t>(k) >= space.size()) throw InputError("point index out of range");
    return k;
  }
  return space.index_of(v.get<std::string>());
}

GroupElem parse_elem(const Json& j, const FinAbGroup& group) {
  auto comps = j.is_array() ? j.get<std::vector<std::int64_t>>() : std::vector<std::int64_t>{j.get<std::int64_t>()};
  if (comps.size() != group.rank()) throw InputError("group element " + j.dump() + " has the wrong number of components");
  return group.element(std::move(comps));
}

std::vector<std::vector<int>> parse_sets(const Json& sets, const FinSpace& space, std::vector<std::string>& labels) {
  std::vector<std::vector<int>> out;
  for (const auto& s : sets) {
    labels.push_back(s.at("label").get<std::string>());
    std::vector<int> pts;
    for (const auto& p : s.at("points")) pts.push_back(point_of(space, p));
    out.push_back(std::move(pts));
  }
  return out;
}

CechCochain parse_alternating(const Json& j, std::shared_ptr<const Nerve> nerve, const FinAbGroup& group, int degree,
                              CochainMode mode) {
  if (mode != CochainMode::nerve) throw InputError("alternating cochains are nerve-mode only");
  std::vector<std::vector<std::int64_t>> values(group.rank(), std::vector<std::int64_t>(nerve->count(degree), 0));
  if (!j.contains("values")) return from_simplicial(nerve, group, degree, values);
  for (const auto& v : j.at("values")) {
    std::vector<int> tuple;
    for (const auto& t : v.at("tuple")) tuple.push_back(vertex_of(*nerve, t));
    if (tuple.size() != static_cast<std::size_t>(degree) + 1) throw InputError("tuple length does not match the degree");
    int sign = 1;
    for (std::size_t a = 0; a < tuple.size(); ++a)
      for (std::size_t b = a + 1; b < tuple.size(); ++b) {
        if (tuple[a] == tuple[b]) throw InputError("alternating values need distinct vertices");
        if (tuple[a] > tuple[b]) sign = -sign;
      }
    std::sort(tuple.begin(), tuple.end());
    const auto idx = nerve->index_of(tuple);
    if (!idx) throw InputError("tuple " + v.at("tuple").dump() + " is not a simplex");
    const GroupElem g = parse_elem(v.at("elem"), group);
    for (std::size_t f = 0; f < group.rank(); ++f)
      values[f][static_cast<std::size_t>(*idx)] = sign * g.c[f];
  }
  return from_simplicial(nerve, group, degree, values);
}

}  // namespace

Cover parse_cover(const Json& j) {
  return guarded([&] {
    FinSpace space(j.at("points").get<std::vector<std::string>>());
    std::vector<std::string> labels;
    auto sets = parse_sets(j.at("sets"), space, labels);
    return Cover(std::move(space), std::move(labels), std::move(sets));
  });
}

Nerve parse_complex(const Json& j) {
  return guarded([&] {
    return load_complex(j.at("vertices").get<std::vector<std::string>>(),
                        j.at("maximal_simplices").get<std::vector<std::vector<std::string>>>());
  });
}

FinAbGroup parse_group(const Json& j) {
  return guarded([&] { return FinAbGroup(j.at("cyclic_orders").get<std::vector<std::int64_t>>()); });
}

CechCochain parse_cochain(const Json& j, std::shared_ptr<const Nerve> nerve, const FinAbGroup& group) {
  return guarded([&] {
    const int degree = j.at("degree").get<int>();
    if (degree < 0) throw InputError("negative degree");
    const CochainMode mode = j.contains("mode") ? parse_mode(j.at("mode").get<std::string>()) : CochainMode::nerve;
    if (mode == CochainMode::pointwise && !nerve->has_carrier())
      throw InputError("pointwise cochains need a cover, not an abstract complex");
    if (j.value("alternating", false)) return parse_alternating(j, std::move(nerve), group, degree, mode);
    CechCochain c(nerve, group, degree, mode);
    if (!j.contains("values")) return c;
    for (const auto& v : j.at("values")) {
      std::vector<int> tuple;
      for (const auto& t : v.at("tuple")) tuple.push_back(vertex_of(*nerve, t));
      if (tuple.size() != static_cast<std::size_t>(degree) + 1) throw InputError("tuple length does not match the degree");
      int point = -1;
      if (mode == CochainMode::pointwise) {
        if (!v.contains("point")) throw InputError("pointwise values need a point");
        point = point_of(nerve->cover().space(), v.at("point"));
      }
      c.set(tuple, point, parse_elem(v.at("elem"), group));
    }
    return c;
  });
}

Problem parse_problem(const Json& j) {
  return guarded([&] {
    check_schema(j);
    Problem p;
    if (j.contains("cover") == j.contains("complex")) throw InputError("give exactly one of cover and complex");
    if (j.contains("cover")) {
      p.cover = std::make_shared<const Cover>(parse_cover(j.at("cover")));
      p.nerve = std::make_shared<const Nerve>(build_nerve(*p.cover));
    } else {
      p.nerve = std::make_shared<const Nerve>(parse_complex(j.at("complex")));
    }
    p.group = j.contains("group") ? parse_group(j.at("group")) : FinAbGroup::trivial();
    if (j.contains("cochain")) p.cochain = parse_cochain(j.at("cochain"), p.nerve, p.group);
    return p;
  });
}

Json cover_to_json(const Cover& cover) {
  Json sets = Json::array();
  for (std::size_t i = 0; i < cover.num_sets(); ++i) {
    Json pts = Json::array();
    for (int x : cover.set(static_cast<int>(i))) pts.push_back(cover.space().id(x));
    sets.push_back({{"label", cover.label(static_cast<int>(i))}, {"points", pts}});
  }
  return {{"points", cover.space().ids()}, {"sets", sets}};
}

Json to_json(const GroupElem& g) { return g.c; }

Json to_json(const Character& tau) { return tau.exponents; }

namespace {

Json key_to_json(const Nerve& nerve, const CochainKey& key) {
  Json tuple = Json::array();
  for (int v : key.tuple) tuple.push_back(nerve.vertex_label(v));
  Json out{{"tuple", tuple}};
  if (key.point >= 0) out["point"] = nerve.cover().space().id(key.point);
  return out;
}

}  // namespace

Json problem_to_json(const Problem& p) {
  Json out{{"schema_version", kSchemaVersion}, {"group", {{"cyclic_orders", p.group.cyclic_orders()}}}};
  if (p.cover) {
    out["cover"] = cover_to_json(*p.cover);
  } else {
    std::vector<Simplex> maximal;
    for (int d = p.nerve->dimension(); d >= 0; --d)
      for (const auto& s : p.nerve->simplices(d))
        if (std::none_of(maximal.begin(), maximal.end(),
                         [&](const Simplex& m) { return std::includes(m.begin(), m.end(), s.begin(), s.end()); }))
          maximal.push_back(s);
    Json labels = Json::array();
    for (const auto& m : maximal) {
      Json l = Json::array();
      for (int v : m) l.push_back(p.nerve->vertex_label(v));
      labels.push_back(l);
    }
    out["complex"] = {{"vertices", p.nerve->vertex_labels()}, {"maximal_simplices", labels}};
  }
  if (p.cochain) {
    Json c = to_json(*p.cochain);
    c.erase("group");
    out["cochain"] = c;
  }
  return out;
}

Json to_json(const CechCochain& c) {
  Json values = Json::array();
  for (const auto& [key, g] : c.entries()) {
    Json v = key_to_json(c.nerve(), key);
    v["elem"] = to_json(g);
    values.push_back(v);
  }
  return {{"degree", c.degree()},
          {"mode", to_string(c.mode())},
          {"group", c.group().cyclic_orders()},
          {"values", values}};
}

Json to_json(const UnimodularCochain& nu) {
  Json values = Json::array();
  for (const auto& [key, r] : nu.entries()) {
    Json v = key_to_json(nu.nerve(), key);
    v["root"] = {r.num(), r.den()};
    values.push_back(v);
  }
  return {{"degree", nu.degree()}, {"mode", to_string(nu.mode())}, {"values", values}};
}

Json to_json(const IdentityReport& r) {
  Json out{{"ok", r.ok()}, {"instances_checked", r.instances_checked}, {"violations", r.violations}};
  if (r.first) {
    out["first_violation"] = {{"identity", std::string(1, r.first->identity)},
                              {"tuple", r.first->tuple},
                              {"point", r.first->point},
                              {"detail", r.first->detail}};
  }
  return out;
}

Json to_json(const DDReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j{{"tau", to_json(row.tau)},
           {"order", row.order},
           {"mu_trivial", row.mu_trivial},
           {"h3_class", row.h3_class},
           {"trivial", row.trivial}};
    j["witness_b"] = row.witness_b ? to_json(*row.witness_b) : Json(nullptr);
    rows.push_back(j);
  }
  Json out{{"verdict", r.trivial ? "trivial" : "nontrivial"},
           {"group", r.group.cyclic_orders()},
           {"mode", to_string(r.mode)},
           {"h3_orders", r.h3_orders},
           {"rows", rows}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json to_json(const RankOneReport& r) {
  return {{"ok", r.ok()},
          {"projection_checks", r.projection_checks},
          {"partial_isometry_checks", r.partial_isometry_checks},
          {"product_checks", r.product_checks},
          {"associativity_checks", r.associativity_checks},
          {"failures", r.failures},
          {"first_failure", r.first_failure}};
}

Json to_json(const HomomorphismReport& r) {
  return {{"ok", r.ok()}, {"checks", r.checks}, {"failures", r.failures}, {"max_error", r.max_error}};
}

Json to_json(const CohomologyGroup& h) {
  Json gens = Json::array();
  for (const auto& g : h.generators()) gens.push_back(to_json(g));
  return {{"degree", h.degree()},
          {"group", h.group().cyclic_orders()},
          {"cyclic_orders", h.cyclic_orders()},
          {"generators", gens}};
}

Json to_json(const SpectrumTable& t, const SigmaCAlgebra& s) {
  const auto chars = dual_group(s.group());
  Json entries = Json::array();
  for (const auto& e : t.entries) {
    Json j{{"tau", to_json(chars[e.label.tau])},
           {"point", s.cover().space().id(e.label.x)},
           {"anchor", s.cover().label(e.label.anchor)},
           {"dimension", e.dimension}};
    if (e.commutant > 0) j["commutant_dim"] = e.commutant;
    entries.push_back(j);
  }
  return {{"labels", entries},
          {"algebra_dimension", t.algebra_dimension},
          {"sum_of_squares", t.sum_of_squares},
          {"dimension_identity", t.dimension_identity},
          {"irreducible", t.irreducible},
          {"pairs_checked", t.pairs_checked},
          {"pairwise_inequivalent", t.pairwise_inequivalent}};
}

Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

PipelineProblem parse_pipeline(const Json& j) {
  return guarded([&] {
    check_schema(j);
    PipelineProblem out;
    out.total_ids = j.at("total_points").get<std::vector<std::string>>();
    FinSpace total(out.total_ids);
    auto base = std::make_shared<const Cover>(parse_cover(j.at("base")));
    const auto images = j.at("psi").get<std::vector<std::string>>();
    if (images.size() != total.size()) throw InputError("psi needs one image per point of Y");
    std::vector<int> psi;
    for (const auto& x : images) psi.push_back(base->space().index_of(x));

    std::vector<std::vector<int>> lifts(base->num_sets());
    std::vector<char> seen(base->num_sets(), 0);
    for (const auto& l : j.at("lifts")) {
      const auto label = l.at("label").get<std::string>();
      const auto i = base->find_label(label);
      if (!i) throw InputError("lift names unknown cover label " + label);
      if (seen[static_cast<std::size_t>(*i)]++) throw InputError("duplicate lift for " + label);
      for (const auto& y : l.at("points")) lifts[static_cast<std::size_t>(*i)].push_back(point_of(total, y));
    }
    const FinAbGroup group = parse_group(j.at("group"));
    const Json& ext = j.at("extension");
    CentralExtension extension;
    if (ext.contains("pullback")) {
      auto nerve = std::make_shared<const Nerve>(build_nerve(*base));
      out.expected = parse_cochain(ext.at("pullback"), nerve, group);
      if (out.expected->degree() != 2) throw InputError("pullback cochain must have degree 2");
      if (!is_normalized(*out.expected) || !is_cocycle(*out.expected))
        throw InputError("pullback cochain must be a normalized cocycle");
      extension = pullback_extension(psi, lifts, *out.expected);
    } else if (ext.contains("cocycle")) {
      const RelationGroupoid rel = relation_groupoid(psi, base->space().size());
      GroupoidCocycle2 phi(rel.groupoid, group);
      auto arrow = [&](const Json& pair) {
        const int a = rel.index_of(point_of(total, pair.at(0)), point_of(total, pair.at(1)));
        if (a < 0) throw InputError("pair " + pair.dump() + " is not an arrow of R(psi)");
        return a;
      };
      for (const auto& v : ext.at("cocycle")) {
        const int a = arrow(v.at("pair").at(0)), b = arrow(v.at("pair").at(1));
        if (!rel.groupoid->composable(a, b)) throw InputError("pair " + v.at("pair").dump() + " is not composable");
        phi.set(a, b, parse_elem(v.at("elem"), group));
      }
      if (!phi.is_normalized()) throw InputError("groupoid cocycle must be normalized");
      extension = build_extension(phi);
    } else {
      throw InputError("extension needs a pullback or a cocycle");
    }
    if (j.contains("section_shift")) {
      const BlownUpExtension bl = blowup_extension(extension, lifts, false);
      std::vector<int> section = *bl.extension.section;
      const RelationGroupoid rel = relation_groupoid(psi, base->space().size());
      const FinGroupoid& t = *bl.extension.total;
      for (const auto& s : j.at("section_shift")) {
        const Json& a = s.at("arrow");
        const auto i = base->find_label(a.at(0).get<std::string>());
        const auto k = base->find_label(a.at(2).get<std::string>());
        if (!i || !k) throw InputError("section_shift names an unknown cover label");
        const int gamma = rel.index_of(point_of(total, a.at(1).at(0)), point_of(total, a.at(1).at(1)));
        const int arrow = gamma < 0 ? -1 : bl.base.index_of(*i, gamma, *k);
        if (arrow < 0) throw InputError("section_shift names an arrow outside the blow-up");
        const int r = bl.extension.base->range(arrow);
        const int shift = bl.extension.iota_at(r, parse_elem(s.at("elem"), group));
        section[static_cast<std::size_t>(arrow)] = t.compose(shift, section[static_cast<std::size_t>(arrow)]);
      }
      out.input.section = std::move(section);
    }
    out.input.psi = std::move(psi);
    out.input.base_cover = std::move(base);
    out.input.lifts = std::move(lifts);
    out.input.extension = std::move(extension);
    return out;
  });
}

Json to_json(const PipelineResult& r) {
  Json out{{"pointwise_cocycle", to_json(r.pointwise)},
           {"constant_on_overlaps", r.nerve.has_value()},
           {"dd", to_json(r.report)}};
  if (r.nerve) out["cocycle"] = to_json(*r.nerve);
  return out;
}

}  // namespace twistlab
