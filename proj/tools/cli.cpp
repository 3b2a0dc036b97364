#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "twistlab/algebra.hpp"
#include "twistlab/cech.hpp"
#include "twistlab/dd.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/extension.hpp"
#include "twistlab/representations.hpp"
#include "twistlab/sampling.hpp"

namespace twistlab::cli {

namespace {

struct Context {
  const JobSpec& job;
  double tol;
};

const std::string& input(const JobSpec& job, std::size_t k = 0) {
  if (job.inputs.size() <= k) throw InputError(job.command + " needs " + std::to_string(k + 1) + " --input file(s)");
  return job.inputs[k];
}

Problem load_problem(const JobSpec& job, std::size_t k = 0) {
  Json j = read_json_file(input(job, k));
  if (job.mode && j.is_object() && j.contains("cochain") && j["cochain"].is_object())
    j["cochain"]["mode"] = to_string(*job.mode);
  return parse_problem(j);
}

const CechCochain& require_cochain(const Problem& p) {
  if (!p.cochain) throw InputError("the input has no cochain");
  return *p.cochain;
}

const CechCochain& require_cocycle(const Problem& p) {
  const CechCochain& c = require_cochain(p);
  if (c.degree() != 2) throw InputError("expected a 2-cochain");
  if (!is_cocycle(c)) throw PreconditionError("the cochain is not a cocycle");
  if (!is_normalized(c)) throw PreconditionError("the cocycle is not normalized; run normalize first");
  return c;
}

const Cover& require_cover(const Problem& p) {
  if (!p.cover) throw InputError("this command needs a cover, not an abstract complex");
  return *p.cover;
}

std::vector<std::size_t> selected_taus(const JobSpec& job, const FinAbGroup& g) {
  std::vector<std::size_t> out;
  if (job.taus.empty()) {
    for (std::size_t t = 0; t < g.order(); ++t) out.push_back(t);
    return out;
  }
  for (std::size_t t : job.taus) {
    if (t >= g.order()) throw InputError("character index " + std::to_string(t) + " out of range");
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Named pass/fail checks collected into {"checks": [...], "status": ...}.
class Checklist {
 public:
  void add(const std::string& name, bool pass, Json detail = Json::object()) {
    detail["name"] = name;
    detail["pass"] = pass;
    checks_.push_back(std::move(detail));
    ok_ = ok_ && pass;
  }
  bool ok() const { return ok_; }
  Json json() const { return checks_; }

 private:
  Json checks_ = Json::array();
  bool ok_ = true;
};

RunResult finish(Json report, bool pass) {
  report["status"] = pass ? "pass" : "fail";
  return {pass ? kExitOk : kExitViolation, std::move(report)};
}

RunResult check_cocycle(const Context& ctx) {
  const Problem p = load_problem(ctx.job);
  const CechCochain& c = require_cochain(p);
  Json r{{"degree", c.degree()}, {"mode", to_string(c.mode())}};
  const bool cocycle = is_cocycle(c);
  r["is_cocycle"] = cocycle;
  bool pass = cocycle;
  if (c.degree() == 2) {
    const bool normalized = is_normalized(c);
    r["is_normalized"] = normalized;
    if (cocycle && normalized) {
      const IdentityReport id = check_norm_identities(c);
      r["identities"] = to_json(id);
      pass = id.ok();
    }
  }
  return finish(std::move(r), pass);
}

RunResult normalize_cmd(const Context& ctx) {
  const Problem p = load_problem(ctx.job);
  const CechCochain& c = require_cochain(p);
  if (c.degree() != 2) throw InputError("expected a 2-cochain");
  if (!is_cocycle(c)) return finish(Json{{"is_cocycle", false}}, false);
  const Normalization n = normalize(c);
  const IdentityReport id = check_norm_identities(n.normalized);
  return finish(Json{{"is_cocycle", true}, {"normalized", to_json(n.normalized)}, {"b", to_json(n.b)},
                     {"identities", to_json(id)}},
                id.ok());
}

RunResult cohomology_cmd(const Context& ctx) {
  const Json j = read_json_file(input(ctx.job));
  const Problem p = load_problem(ctx.job);
  int degree = 2;
  if (p.cochain) degree = p.cochain->degree();
  if (j.contains("degree")) degree = j.at("degree").get<int>();
  if (ctx.job.degree) degree = *ctx.job.degree;
  if (degree < 0) throw InputError("negative degree");
  if (p.group.order() == 1 && p.group.rank() == 0) throw InputError("cohomology needs a coefficient group");
  const CohomologyGroup h = cohomology(p.nerve, p.group, degree);
  Json r{{"degree", degree}, {"cohomology", to_json(h)}};
  if (p.cochain && p.cochain->degree() == degree) {
    CechCochain c = *p.cochain;
    if (c.mode() != CochainMode::nerve) throw InputError("class_of needs a nerve-mode cochain");
    if (!is_cocycle(c)) return finish(Json{{"degree", degree}, {"cohomology", to_json(h)}, {"is_cocycle", false}}, false);
    r["class"] = h.class_of(c);
  }
  return finish(std::move(r), true);
}

RunResult build_extension_cmd(const Context& ctx) {
  const Problem p = load_problem(ctx.job);
  require_cover(p);
  const CechCochain& c = require_cocycle(p);
  const SigmaCAlgebra s(c);
  const CentralExtension& e = s.extension();
  Checklist checks;
  const AxiomReport axioms = extension_axioms_check(e);
  checks.add("extension_axioms", axioms.ok(), Json{{"violations", axioms.violations}, {"messages", axioms.messages}});
  const ExtractedCocycle ex = extract_cocycle(e);
  checks.add("extract_roundtrip", ex.phi == cech_to_groupoid_cocycle(c, s.blowup()) &&
                                      check_proper_isomorphism(build_extension(ex.phi), e, ex.witness));
  Json r{{"base_arrows", e.base->num_arrows()}, {"total_arrows", e.total->num_arrows()},
         {"units", e.base->num_units()}, {"group", e.group.cyclic_orders()}};
  if (ctx.job.inputs.size() > 1) {
    const Json j2 = read_json_file(input(ctx.job, 1));
    if (!j2.contains("cochain")) throw InputError("the second input has no cochain");
    if (j2.contains("cover") && parse_cover(j2.at("cover")).space().ids() != p.cover->space().ids())
      throw InputError("both inputs must share a cover");
    const CechCochain c2 = parse_cochain(j2.at("cochain"), p.nerve, p.group);
    if (c2.degree() != 2 || !is_cocycle(c2) || !is_normalized(c2))
      throw PreconditionError("the second cochain is not a normalized 2-cocycle");
    const SigmaCAlgebra s2(c2);
    const CentralExtension sum = baer_sum(e, s2.extension());
    const SigmaCAlgebra target(c + c2);
    const auto witness = properly_isomorphic(sum, target.extension());
    checks.add("baer_sum", witness.has_value() && check_proper_isomorphism(sum, target.extension(), *witness));
  }
  r["checks"] = checks.json();
  return finish(std::move(r), checks.ok());
}

RunResult verify_algebra(const Context& ctx) {
  const Problem p = load_problem(ctx.job);
  require_cover(p);
  const CechCochain& c = require_cocycle(p);
  const SigmaCAlgebra s(c);
  const FourierTransform phi(s);
  Rng rng(ctx.job.seed);
  constexpr int kSamples = 20;
  std::size_t assoc = 0, star = 0, hom = 0, bij = 0;
  for (int k = 0; k < kSamples; ++k) {
    const AlgElem a = random_element(s.dimension(), rng), b = random_element(s.dimension(), rng),
                  d = random_element(s.dimension(), rng);
    assoc += !approx_equal(s.convolve(s.convolve(a, b), d), s.convolve(a, s.convolve(b, d)), ctx.tol);
    star += !approx_equal(s.star(s.convolve(a, b)), s.convolve(s.star(b), s.star(a)), ctx.tol);
    hom += !approx_equal(phi.forward(s.convolve(a, b)), phi.target->product(phi.forward(a), phi.forward(b)), ctx.tol) ||
           !approx_equal(phi.forward(s.star(a)), phi.target->star(phi.forward(a)), ctx.tol);
    const TwistedMatrix m = phi.target->random_matrix(rng);
    bij += !approx_equal(phi.inverse(phi.forward(a)), a, ctx.tol) || !approx_equal(phi.forward(phi.inverse(m)), m, ctx.tol);
  }
  Checklist checks;
  checks.add("associativity", assoc == 0, Json{{"samples", kSamples}, {"failures", assoc}});
  checks.add("star_antihomomorphism", star == 0, Json{{"samples", kSamples}, {"failures", star}});
  checks.add("fourier_star_homomorphism", hom == 0, Json{{"samples", kSamples}, {"failures", hom}});
  checks.add("fourier_bijective", bij == 0, Json{{"samples", kSamples}, {"failures", bij}});
  checks.add("dimension_identity", algebra_dimension(s) == algebra_dimension(*phi.target),
             Json{{"source", algebra_dimension(s)}, {"target", algebra_dimension(*phi.target)}});
  if (c.mode() == CochainMode::nerve) {
    const auto nus = m_star(c);
    for (std::size_t t : selected_taus(ctx.job, c.group())) {
      const RankOneReport r = rank_one_relations_check(nus[t]);
      Json detail = to_json(r);
      detail["tau"] = t;
      checks.add("rank_one_relations", r.ok(), detail);
    }
  }
  return finish(Json{{"algebra_dimension", s.dimension()}, {"tolerance", ctx.tol}, {"checks", checks.json()}}, checks.ok());
}

RunResult spectrum_cmd(const Context& ctx) {
  const Problem p = load_problem(ctx.job);
  require_cover(p);
  const CechCochain& c = require_cocycle(p);
  const SigmaCAlgebra s(c);
  SpectrumOptions opt;
  opt.seed = ctx.job.seed;
  const SpectrumTable t = spectrum(s, opt);
  Json r = to_json(t, s);
  if (!ctx.job.taus.empty()) {
    const auto keep = selected_taus(ctx.job, c.group());
    Json rows = Json::array();
    for (std::size_t k = 0; k < t.entries.size(); ++k)
      if (std::binary_search(keep.begin(), keep.end(), t.entries[k].label.tau)) rows.push_back(r["labels"][k]);
    r["labels"] = rows;
  }
  return finish(std::move(r), t.dimension_identity && t.irreducible && t.pairwise_inequivalent);
}

Json filter_rows(Json dd, const std::vector<std::size_t>& keep, const DDReport& report) {
  Json rows = Json::array();
  for (std::size_t k = 0; k < report.rows.size(); ++k)
    if (std::binary_search(keep.begin(), keep.end(), report.rows[k].tau_index)) rows.push_back(dd["rows"][k]);
  dd["rows"] = rows;
  return dd;
}

RunResult dd_class_cmd(const Context& ctx) {
  const Problem p = load_problem(ctx.job);
  const CechCochain& c = require_cocycle(p);
  const DDReport report = dd_class(c);
  Json r = filter_rows(to_json(report), selected_taus(ctx.job, c.group()), report);
  return finish(std::move(r), true);
}

CechCochain rehost(const CechCochain& c, std::shared_ptr<const Nerve> nerve) {
  CechCochain out(std::move(nerve), c.group(), c.degree(), c.mode());
  for (const auto& [key, v] : c.entries()) out.set(key, v);
  return out;
}

RunResult pipeline_cmd(const Context& ctx) {
  const PipelineProblem pp = parse_pipeline(read_json_file(input(ctx.job)));
  const PipelineResult res = pipeline_local_homeo(pp.input);
  Json r = to_json(res);
  r["dd"] = filter_rows(r["dd"], selected_taus(ctx.job, res.report.group), res.report);
  bool pass = true;
  if (pp.expected) {
    Checklist checks;
    if (res.nerve) {
      const CechCochain expected = rehost(*pp.expected, res.nerve->nerve_ptr());
      checks.add("cohomologous_to_expected", solve_coboundary(*res.nerve - expected).has_value());
    } else {
      checks.add("cohomologous_to_expected", false, Json{{"reason", "recovered cocycle is not constant on overlaps"}});
    }
    const DDReport expected_report = dd_class(*pp.expected);
    bool same = expected_report.trivial == res.report.trivial && expected_report.rows.size() == res.report.rows.size();
    for (std::size_t k = 0; same && k < expected_report.rows.size(); ++k)
      same = expected_report.rows[k].h3_class == res.report.rows[k].h3_class;
    checks.add("dd_report_matches_expected", same);
    r["checks"] = checks.json();
    pass = checks.ok();
  }
  return finish(std::move(r), pass);
}

// ---------------------------------------------------------------------------
// selftest

std::shared_ptr<const Nerve> moore_space() {
  static const int tri[10][3] = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                 {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}};
  std::vector<std::string> names{"v0", "v1", "v2", "v3", "v4", "v5", "N", "S"};
  std::vector<std::vector<std::string>> maximal;
  for (const auto& t : tri)
    for (const char* cone : {"N", "S"})
      maximal.push_back({names[static_cast<std::size_t>(t[0])], names[static_cast<std::size_t>(t[1])],
                         names[static_cast<std::size_t>(t[2])], cone});
  return std::make_shared<const Nerve>(load_complex(names, maximal));
}

std::shared_ptr<const Nerve> nerve_of(const Cover& c) { return std::make_shared<const Nerve>(build_nerve(c)); }

RunResult selftest(const Context& ctx) {
  Rng rng(ctx.job.seed);
  Checklist checks;
  const std::vector<FinAbGroup> groups{FinAbGroup::cyclic(2), FinAbGroup::cyclic(3), FinAbGroup::cyclic(4),
                                       FinAbGroup({2, 2})};
  auto random_config = [&](std::size_t k) {
    auto cover = std::make_shared<const Cover>(random_cover(rng, 1 + k % 4, 1 + k % 4, 0.6));
    return std::make_pair(cover, nerve_of(*cover));
  };

  std::size_t violations = 0, cocycles = 0;
  for (std::size_t k = 0; k < 40; ++k) {
    auto [cover, nerve] = random_config(k);
    const auto c = random_normalized_cocycle(rng, nerve, groups[k % 4], k % 2 ? CochainMode::nerve : CochainMode::pointwise);
    violations += check_norm_identities(c).violations;
    ++cocycles;
  }
  checks.add("identity_suite", violations == 0, Json{{"cocycles", cocycles}, {"violations", violations}});

  std::size_t roundtrip_failures = 0, baer_failures = 0;
  for (std::size_t k = 0; k < 12; ++k) {
    auto [cover, nerve] = random_config(k);
    const FinAbGroup& g = groups[k % 4];
    const auto c1 = random_normalized_cocycle(rng, nerve, g, CochainMode::pointwise);
    const auto c2 = random_normalized_cocycle(rng, nerve, g, CochainMode::pointwise);
    const SigmaCAlgebra s1(c1), s2(c2), s12(c1 + c2);
    const auto ex = extract_cocycle(s1.extension());
    roundtrip_failures += !(ex.phi == cech_to_groupoid_cocycle(c1, s1.blowup()));
    const auto sum = baer_sum(s1.extension(), s2.extension());
    const auto w = properly_isomorphic(sum, s12.extension());
    baer_failures += !(w && check_proper_isomorphism(sum, s12.extension(), *w));
  }
  checks.add("extension_roundtrip", roundtrip_failures == 0, Json{{"failures", roundtrip_failures}});
  checks.add("baer_sum", baer_failures == 0, Json{{"failures", baer_failures}});

  std::size_t fourier_failures = 0, label_failures = 0;
  for (std::size_t k = 0; k < 8; ++k) {
    auto [cover, nerve] = random_config(k);
    const auto c = random_normalized_cocycle(rng, nerve, groups[k % 4], k % 2 ? CochainMode::nerve : CochainMode::pointwise);
    const SigmaCAlgebra s(c);
    const FourierTransform phi(s);
    const AlgElem a = random_element(s.dimension(), rng), b = random_element(s.dimension(), rng);
    fourier_failures += !approx_equal(phi.forward(s.convolve(a, b)), phi.target->product(phi.forward(a), phi.forward(b)), ctx.tol);
    const SpectrumTable t = spectrum(s);
    label_failures += !(t.dimension_identity && t.irreducible && t.pairwise_inequivalent);
    for (int x = 0; x < static_cast<int>(s.num_points()); ++x)
      for (int i : index_set_at(s.cover(), x))
        for (std::size_t tau = 0; tau < s.group().order(); ++tau) label_failures += !intertwine_check(s, phi, a, i, x, tau, ctx.tol);
  }
  checks.add("fourier_homomorphism", fourier_failures == 0, Json{{"failures", fourier_failures}});
  checks.add("spectrum_and_intertwining", label_failures == 0, Json{{"failures", label_failures}});

  const auto moore = moore_space();
  const auto gen = cohomology(moore, FinAbGroup::cyclic(2), 2).generators().front();
  const DDReport dd = dd_class(gen);
  checks.add("moore_nontrivial", !dd.trivial && dd.rows.size() == 2 && dd.rows[1].h3_class == std::vector<std::int64_t>{1});
  std::size_t drift = 0;
  for (std::uint64_t k = 0; k < 10; ++k) {
    DDOptions opt;
    opt.lift_seed = ctx.job.seed + k;
    const auto moved = normalize(gen + coboundary(random_cochain(rng, moore, gen.group(), 1, CochainMode::nerve))).normalized;
    drift += dd_class(moved, opt).rows[1].h3_class != dd.rows[1].h3_class;
  }
  checks.add("dd_well_defined", drift == 0, Json{{"failures", drift}});

  std::size_t rank_one_failures = 0;
  for (std::size_t k = 0; k < 6; ++k) {
    auto [cover, nerve] = random_config(k + 2);
    const auto c = random_normalized_cocycle(rng, nerve, groups[k % 4], CochainMode::nerve);
    for (const auto& nu : m_star(c)) rank_one_failures += !rank_one_relations_check(nu).ok();
  }
  checks.add("rank_one_relations", rank_one_failures == 0, Json{{"failures", rank_one_failures}});

  // the 2-fold covering of the triangle's edges by its vertex sheets
  {
    const std::vector<std::vector<int>> faces{{0, 1}, {0, 2}, {1, 2}};
    std::vector<std::vector<int>> sets(3), lifts(3);
    std::vector<int> psi;
    for (std::size_t f = 0; f < faces.size(); ++f)
      for (std::size_t r = 0; r < 2; ++r) {
        sets[static_cast<std::size_t>(faces[f][r])].push_back(static_cast<int>(f));
        lifts[static_cast<std::size_t>(faces[f][r])].push_back(static_cast<int>(2 * f + r));
        psi.push_back(static_cast<int>(f));
      }
    auto base = std::make_shared<const Cover>(FinSpace({"e01", "e02", "e12"}), std::vector<std::string>{"a", "b", "c"}, sets);
    auto nerve = nerve_of(*base);
    const auto c0 =
        normalize(coboundary(random_cochain(rng, nerve, FinAbGroup::cyclic(2), 1, CochainMode::nerve))).normalized;
    const PipelineResult res = pipeline_local_homeo({psi, base, lifts, pullback_extension(psi, lifts, c0), std::nullopt});
    checks.add("pipeline_two_fold",
               res.nerve && solve_coboundary(*res.nerve - rehost(c0, res.nerve->nerve_ptr())).has_value() && res.report.trivial);
  }

  std::size_t collapse_failures = 0;
  for (std::size_t k = 0; k < 20; ++k) {
    auto [cover, nerve] = random_config(k);
    const auto c = random_normalized_cocycle(rng, nerve, groups[k % 4], CochainMode::pointwise);
    const auto b = solve_coboundary(c);
    collapse_failures += !(b && coboundary(*b) == c);
  }
  checks.add("pointwise_collapse", collapse_failures == 0, Json{{"failures", collapse_failures}});

  return finish(Json{{"seed", ctx.job.seed}, {"checks", checks.json()}}, checks.ok());
}

using Handler = std::function<RunResult(const Context&)>;

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> h{
      {"check-cocycle", check_cocycle}, {"normalize", normalize_cmd},   {"cohomology", cohomology_cmd},
      {"build-extension", build_extension_cmd}, {"verify-algebra", verify_algebra}, {"spectrum", spectrum_cmd},
      {"dd-class", dd_class_cmd},       {"pipeline", pipeline_cmd},    {"selftest", selftest}};
  return h;
}

RunResult error_result(int code, const std::string& kind, const std::string& message) {
  return {code, Json{{"status", "error"}, {"error", {{"kind", kind}, {"message", message}}}}};
}

void render_text(const Json& j, const std::string& indent, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        out << indent << k << ":\n";
        render_text(v, indent + "  ", out);
      } else {
        out << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
    }
  } else if (j.is_array()) {
    const bool flat = std::none_of(j.begin(), j.end(), [](const Json& v) { return v.is_structured(); });
    if (flat) {
      out << indent << j.dump() << '\n';
      return;
    }
    for (std::size_t k = 0; k < j.size(); ++k) {
      out << indent << "[" << k << "]\n";
      render_text(j[k], indent + "  ", out);
    }
  } else {
    out << indent << j.dump() << '\n';
  }
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

RunResult run(const JobSpec& job) {
  const auto& h = handlers();
  const auto it = std::find_if(h.begin(), h.end(), [&](const auto& p) { return p.first == job.command; });
  RunResult result;
  try {
    if (it == h.end()) throw InputError("unknown command " + job.command);
    if (job.tolerance && !(*job.tolerance > 0)) throw InputError("tolerance must be positive");
    result = it->second(Context{job, job.tolerance.value_or(kDefaultTolerance)});
  } catch (const InputError& e) {
    result = error_result(kExitInput, "input", e.what());
  } catch (const PreconditionError& e) {
    result = error_result(kExitViolation, "precondition", e.what());
  } catch (const InternalError& e) {
    result = error_result(kExitInternal, "internal", e.what());
  } catch (const std::exception& e) {
    result = error_result(kExitInternal, "internal", e.what());
  }
  result.report["command"] = job.command;
  result.report["schema_version"] = kSchemaVersion;
  return result;
}

std::string render(const RunResult& result, Format format) {
  if (format == Format::json) return result.report.dump(2) + "\n";
  std::ostringstream out;
  render_text(result.report, "", out);
  return out.str();
}

}  // namespace twistlab::cli
