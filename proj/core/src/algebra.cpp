#include "twistlab/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace twistlab {

bool approx_equal(const AlgElem& a, const AlgElem& b, double tol) {
  if (a.size() != b.size()) return false;
  if (a.size() == 0) return true;
  const double scale = std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
  return (a - b).cwiseAbs().maxCoeff() <= tol * scale;
}

TwistedGroupoidAlgebra::TwistedGroupoidAlgebra(std::shared_ptr<const FinGroupoid> groupoid, std::vector<cd> twist)
    : groupoid_(std::move(groupoid)), twist_(std::move(twist)) {
  if (twist_.size() != groupoid_->num_pairs()) throw InputError("twist must have one value per composable pair");
}

TwistedGroupoidAlgebra::TwistedGroupoidAlgebra(std::shared_ptr<const FinGroupoid> groupoid)
    : TwistedGroupoidAlgebra(groupoid, std::vector<cd>(groupoid->num_pairs(), cd{1.0, 0.0})) {}

void TwistedGroupoidAlgebra::check(const AlgElem& f) const {
  if (static_cast<std::size_t>(f.size()) != dimension()) throw InputError("element does not belong to this algebra");
}

AlgElem TwistedGroupoidAlgebra::basis(int arrow) const {
  AlgElem e = zero();
  e(arrow) = 1.0;
  return e;
}

AlgElem TwistedGroupoidAlgebra::product(const AlgElem& f, const AlgElem& g) const {
  check(f);
  check(g);
  const FinGroupoid& G = *groupoid_;
  AlgElem out = zero();
  for (int a = 0; a < static_cast<int>(G.num_arrows()); ++a) {
    if (f(a) == cd{}) continue;
    for (int b : G.arrows_with_range(G.source(a))) {
      if (g(b) == cd{}) continue;
      out(G.compose_unchecked(a, b)) += f(a) * g(b) * twist_[G.pair_index(a, b)];
    }
  }
  return out;
}

AlgElem TwistedGroupoidAlgebra::star(const AlgElem& f) const {
  check(f);
  const FinGroupoid& G = *groupoid_;
  AlgElem out = zero();
  for (int a = 0; a < static_cast<int>(G.num_arrows()); ++a) {
    const int inv = G.inverse(a);
    out(a) = std::conj(twist_[G.pair_index(a, inv)]) * std::conj(f(inv));
  }
  return out;
}

SigmaCAlgebra::SigmaCAlgebra(const CechCochain& c)
    : c_(c), group_(c.group()) {
  if (c.degree() != 2) throw PreconditionError("Sigma_c needs a 2-cochain");
  if (!c.nerve().has_carrier()) throw PreconditionError("Sigma_c needs a cochain on the nerve of a cover");
  if (!is_normalized(c)) throw PreconditionError("Sigma_c needs a normalized cochain");
  cover_ = std::make_shared<const Cover>(c.nerve().cover());
  blowup_ = blowup_groupoid(*cover_);
  const std::size_t ni = num_sets(), nx = num_points(), ng = group_.order();
  c_table_.assign(ni * ni * ni * nx, -1);
  for (int x = 0; x < static_cast<int>(nx); ++x) {
    const auto idx = index_set_at(*cover_, x);
    for (int i : idx)
      for (int j : idx)
        for (int k : idx)
          c_table_[((static_cast<std::size_t>(i) * ni + static_cast<std::size_t>(j)) * ni + static_cast<std::size_t>(k)) * nx +
                   static_cast<std::size_t>(x)] = static_cast<int>(group_.index_of(c.at(std::vector<int>{i, j, k}, x)));
  }
  const auto elems = group_.elements();
  add_.resize(ng * ng);
  neg_.resize(ng);
  for (std::size_t g = 0; g < ng; ++g) {
    neg_[g] = group_.index_of(group_.neg(elems[g]));
    for (std::size_t h = 0; h < ng; ++h) add_[g * ng + h] = group_.index_of(group_.add(elems[g], elems[h]));
  }
  extension_ = build_extension(cech_to_groupoid_cocycle(c_, blowup_));
  generic_ = std::make_unique<TwistedGroupoidAlgebra>(extension_.total);
}

std::size_t SigmaCAlgebra::c_index(int i, int j, int k, int x) const {
  const std::size_t ni = num_sets(), nx = num_points();
  const int v = c_table_.at(((static_cast<std::size_t>(i) * ni + static_cast<std::size_t>(j)) * ni + static_cast<std::size_t>(k)) * nx +
                            static_cast<std::size_t>(x));
  if (v < 0) throw InputError("point is not in U_ijk");
  return static_cast<std::size_t>(v);
}

int SigmaCAlgebra::index(std::size_t g, int i, int x, int j) const {
  const int a = blowup_.index_of(i, x, j);
  return a < 0 ? -1 : a * static_cast<int>(group_.order()) + static_cast<int>(g);
}

AlgElem SigmaCAlgebra::basis(std::size_t g, int i, int x, int j) const {
  const int k = index(g, i, x, j);
  if (k < 0) throw InputError("no arrow (i, x, j) in the blow-up");
  AlgElem e = zero();
  e(k) = 1.0;
  return e;
}

void SigmaCAlgebra::check(const AlgElem& f) const {
  if (static_cast<std::size_t>(f.size()) != dimension()) throw InputError("element does not belong to this algebra");
}

AlgElem SigmaCAlgebra::convolve(const AlgElem& f1, const AlgElem& f2) const {
  check(f1);
  check(f2);
  const std::size_t ng = group_.order();
  AlgElem out = zero();
  for (int x = 0; x < static_cast<int>(num_points()); ++x) {
    const auto idx = index_set_at(*cover_, x);
    for (int i : idx)
      for (int j : idx) {
        const std::size_t target = static_cast<std::size_t>(blowup_.index_of(i, x, j)) * ng;
        for (int k : idx) {
          const std::size_t left = static_cast<std::size_t>(blowup_.index_of(i, x, k)) * ng;
          const std::size_t right = static_cast<std::size_t>(blowup_.index_of(k, x, j)) * ng;
          const std::size_t c = c_index(i, k, j, x);
          for (std::size_t h = 0; h < ng; ++h) {
            const cd a = f1(static_cast<Eigen::Index>(left + h));
            if (a == cd{}) continue;
            const std::size_t minus_hc = neg_[add_index(h, c)];
            for (std::size_t g = 0; g < ng; ++g)
              out(static_cast<Eigen::Index>(target + g)) += a * f2(static_cast<Eigen::Index>(right + add_index(g, minus_hc)));
          }
        }
      }
  }
  return out;
}

AlgElem SigmaCAlgebra::star(const AlgElem& f) const {
  check(f);
  const std::size_t ng = group_.order();
  AlgElem out = zero();
  for (std::size_t a = 0; a < blowup_.triples.size(); ++a) {
    const auto [i, x, j] = blowup_.triples[a];
    const std::size_t back = static_cast<std::size_t>(blowup_.index_of(j, x, i)) * ng;
    const std::size_t c = c_index(i, j, i, x);
    for (std::size_t g = 0; g < ng; ++g)
      out(static_cast<Eigen::Index>(a * ng + g)) = std::conj(f(static_cast<Eigen::Index>(back + neg_[add_index(g, c)])));
  }
  return out;
}

AlgElem random_element(std::size_t dimension, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  AlgElem f(static_cast<Eigen::Index>(dimension));
  for (auto& v : f) v = cd{nd(rng), nd(rng)};
  return f;
}

namespace detail {

void check_rt_entry(const UnimodularCochain& nu, int i, int j, int x) {
  const auto& carrier = nu.nerve().carrier(std::vector<int>{i, j});
  if (!std::binary_search(carrier.begin(), carrier.end(), x))
    throw InputError("matrix entry (" + std::to_string(i) + ", " + std::to_string(j) + ") at point " +
                     std::to_string(x) + " lies outside U_ij");
}

}  // namespace detail

RTAlgebra::RTAlgebra(UnimodularCochain nu) : nu_(std::move(nu)) {
  if (nu_.degree() != 2) throw PreconditionError("A(nu) needs a 2-cochain");
  if (!nu_.nerve().has_carrier()) throw PreconditionError("A(nu) needs a cochain on the nerve of a cover");
  blowup_ = blowup_groupoid(nu_.nerve().cover());
  const FinGroupoid& g = *blowup_.groupoid;
  std::vector<cd> twist(g.num_pairs());
  for (std::size_t p = 0; p < g.num_pairs(); ++p) {
    const auto [a, b] = g.pair_at(p);
    const auto& ta = blowup_.triples[static_cast<std::size_t>(a)];
    const auto& tb = blowup_.triples[static_cast<std::size_t>(b)];
    twist[p] = std::conj(nu_.at(std::vector<int>{ta[0], ta[2], tb[2]}, ta[1]).value());
  }
  groupoid_ = std::make_unique<TwistedGroupoidAlgebra>(blowup_.groupoid, std::move(twist));
}

TwistedMatrix RTAlgebra::phi_matrix_iso(const AlgElem& f) const {
  if (static_cast<std::size_t>(f.size()) != dimension()) throw InputError("element does not belong to this algebra");
  TwistedMatrix out;
  for (std::size_t a = 0; a < blowup_.triples.size(); ++a) {
    const cd v = f(static_cast<Eigen::Index>(a));
    if (v == cd{}) continue;
    const auto [i, x, j] = blowup_.triples[a];
    out.entries[{i, j, x}] = v;
  }
  return out;
}

AlgElem RTAlgebra::phi_matrix_inverse(const TwistedMatrix& m) const {
  AlgElem f = AlgElem::Zero(static_cast<Eigen::Index>(dimension()));
  for (const auto& [key, v] : m.entries) {
    const int a = blowup_.index_of(key[0], key[2], key[1]);
    if (a < 0) throw InputError("matrix entry lies outside U_ij");
    f(a) = v;
  }
  return f;
}

TwistedMatrix RTAlgebra::random_matrix(std::mt19937_64& rng) const {
  return phi_matrix_iso(random_element(dimension(), rng));
}

bool approx_equal(const TwistedMatrix& a, const TwistedMatrix& b, double tol) {
  double scale = 1.0, diff = 0.0;
  for (const auto& [k, v] : a.entries) {
    scale = std::max(scale, std::abs(v));
    diff = std::max(diff, std::abs(v - b.at(k[0], k[1], k[2])));
  }
  for (const auto& [k, v] : b.entries) {
    scale = std::max(scale, std::abs(v));
    diff = std::max(diff, std::abs(v - a.at(k[0], k[1], k[2])));
  }
  return diff <= tol * scale;
}

DualProductCover dual_product_cover(const Cover& cover, std::size_t num_characters) {
  const std::size_t nx = cover.space().size();
  std::vector<std::string> ids;
  for (std::size_t t = 0; t < num_characters; ++t)
    for (std::size_t x = 0; x < nx; ++x) ids.push_back("tau" + std::to_string(t) + ":" + cover.space().id(static_cast<int>(x)));
  std::vector<std::vector<int>> sets;
  for (std::size_t i = 0; i < cover.num_sets(); ++i) {
    std::vector<int> s;
    for (std::size_t t = 0; t < num_characters; ++t)
      for (int x : cover.set(static_cast<int>(i))) s.push_back(static_cast<int>(t * nx) + x);
    sets.push_back(std::move(s));
  }
  DualProductCover out;
  out.cover = std::make_shared<const Cover>(FinSpace(std::move(ids)), cover.labels(), std::move(sets));
  out.nerve = std::make_shared<const Nerve>(build_nerve(*out.cover));
  out.num_characters = num_characters;
  out.num_base_points = nx;
  return out;
}

UnimodularCochain nu_c_product(const CechCochain& c, const DualProductCover& dual) {
  if (c.degree() != 2) throw PreconditionError("m_* applies to 2-cochains");
  const auto chars = dual_group(c.group());
  if (chars.size() != dual.num_characters) throw InputError("dual cover does not match the group");
  UnimodularCochain nu(dual.nerve, 2, CochainMode::pointwise);
  for (const auto& key : nu.domain()) {
    const auto t = static_cast<std::size_t>(key.point) / dual.num_base_points;
    const int x = key.point % static_cast<int>(dual.num_base_points);
    nu.set(key.tuple, key.point, char_eval(c.group(), chars[t], c.at(key.tuple, x)).conj());
  }
  return nu;
}

FourierTransform::FourierTransform(const SigmaCAlgebra& source) : source_(&source) {
  characters_ = dual_group(source.group());
  dual = dual_product_cover(source.cover(), characters_.size());
  target = std::make_unique<RTAlgebra>(nu_c_product(source.cocycle(), dual));
  const auto elems = source.group().elements();
  char_table_.assign(characters_.size(), std::vector<cd>(elems.size()));
  for (std::size_t t = 0; t < characters_.size(); ++t)
    for (std::size_t g = 0; g < elems.size(); ++g) char_table_[t][g] = char_eval(source.group(), characters_[t], elems[g]).value();
}

TwistedMatrix FourierTransform::forward(const AlgElem& f) const {
  if (static_cast<std::size_t>(f.size()) != source_->dimension()) throw InputError("element does not belong to Sigma_c");
  const std::size_t ng = source_->group_order();
  TwistedMatrix out;
  const auto& triples = source_->blowup().triples;
  for (std::size_t a = 0; a < triples.size(); ++a) {
    const auto [i, x, j] = triples[a];
    for (std::size_t t = 0; t < characters_.size(); ++t) {
      cd v = 0;
      for (std::size_t g = 0; g < ng; ++g) v += char_table_[t][g] * f(static_cast<Eigen::Index>(a * ng + g));
      if (v != cd{}) out.entries[{i, j, dual.point(t, x)}] = v;
    }
  }
  return out;
}

AlgElem FourierTransform::inverse(const TwistedMatrix& m) const {
  const std::size_t ng = source_->group_order();
  AlgElem f = source_->zero();
  for (const auto& [key, v] : m.entries) {
    const auto [i, j, p] = key;
    const std::size_t t = static_cast<std::size_t>(p) / dual.num_base_points;
    const int x = p % static_cast<int>(dual.num_base_points);
    const int a = source_->blowup().index_of(i, x, j);
    if (a < 0) throw InputError("matrix entry lies outside V_ij");
    for (std::size_t g = 0; g < ng; ++g)
      f(static_cast<Eigen::Index>(static_cast<std::size_t>(a) * ng + g)) += std::conj(char_table_[t][g]) * v / static_cast<double>(ng);
  }
  return f;
}

std::size_t algebra_dimension(const SigmaCAlgebra& a) {
  std::size_t sum = 0;
  for (int x = 0; x < static_cast<int>(a.num_points()); ++x) {
    const std::size_t n = index_set_at(a.cover(), x).size();
    sum += n * n;
  }
  return a.group_order() * sum;
}

std::size_t algebra_dimension(const RTAlgebra& a) {
  std::size_t sum = 0;
  for (int p = 0; p < static_cast<int>(a.cover().space().size()); ++p) {
    const std::size_t n = index_set_at(a.cover(), p).size();
    sum += n * n;
  }
  return sum;
}

}  // namespace twistlab
