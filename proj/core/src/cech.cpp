#include "twistlab/cech.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

std::vector<int> drop(const std::vector<int>& t, std::size_t k) {
  std::vector<int> face;
  face.reserve(t.size() - 1);
  for (std::size_t a = 0; a < t.size(); ++a)
    if (a != k) face.push_back(t[a]);
  return face;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::vector<int> block_points(const CechCochain& c) {
  if (c.mode() == CochainMode::nerve) return {-1};
  std::vector<int> pts(c.nerve().cover().space().size());
  std::iota(pts.begin(), pts.end(), 0);
  return pts;
}

}  // namespace

CechCochain coboundary(const CechCochain& c) {
  const FinAbGroup& g = c.group();
  CechCochain out(c.nerve_ptr(), g, c.degree() + 1, c.mode());
  for (const auto& key : out.domain()) {
    GroupElem acc = g.zero();
    for (std::size_t k = 0; k < key.tuple.size(); ++k) {
      const GroupElem v = c.at(drop(key.tuple, k), key.point);
      acc = k % 2 ? g.sub(acc, v) : g.add(acc, v);
    }
    out.set(key, acc);
  }
  return out;
}

bool is_cocycle(const CechCochain& c) { return coboundary(c).is_zero(); }

bool is_normalized(const CechCochain& c) {
  if (c.degree() != 2) throw PreconditionError("normalization is defined for 2-cochains");
  for (const auto& [key, v] : c.entries()) {
    (void)v;
    if (key.tuple[0] == key.tuple[1] && key.tuple[1] == key.tuple[2]) return false;
  }
  return true;
}

Normalization normalize(const CechCochain& c) {
  if (c.degree() != 2) throw PreconditionError("normalize expects a 2-cochain");
  if (!is_cocycle(c)) throw PreconditionError("normalize expects a cocycle");
  CechCochain b(c.nerve_ptr(), c.group(), 1, c.mode());
  for (const auto& [key, v] : c.entries()) {
    if (key.tuple[0] == key.tuple[1] && key.tuple[1] == key.tuple[2]) {
      const std::vector<int> pair{key.tuple[0], key.tuple[0]};
      b.set(pair, key.point, v);
    }
  }
  return {c - coboundary(b), std::move(b)};
}

IdentityReport check_norm_identities(const CechCochain& c) {
  if (c.degree() != 2) throw PreconditionError("the identity suite applies to 2-cochains");
  const FinAbGroup& g = c.group();
  IdentityReport report;
  const auto triples = ordered_tuples(c.nerve(), 3);
  auto fail = [&](char id, const std::vector<int>& t, int x, const std::string& detail) {
    ++report.violations;
    if (!report.first) report.first = IdentityViolation{id, t, x, detail};
  };
  for (int x : block_points(c)) {
    for (const auto& t : triples) {
      if (x >= 0) {
        const auto& carrier = c.nerve().carrier(t);
        if (!std::binary_search(carrier.begin(), carrier.end(), x)) continue;
      }
      const int i = t[0], j = t[1], k = t[2];
      auto v = [&](int a, int b, int d) { return c.at(std::vector<int>{a, b, d}, x); };
      ++report.instances_checked;
      if (!g.is_zero(v(i, i, j)) || !g.is_zero(v(i, j, j))) fail('a', t, x, "c_iij = c_ijj = 0");
      if (v(i, j, i) != v(j, i, j)) fail('b', t, x, "c_iji = c_jij");
      if (v(i, j, k) != g.add(g.neg(v(j, i, k)), v(i, j, i))) fail('c', t, x, "c_ijk = -c_jik + c_iji");
      if (v(i, j, k) != g.add(g.neg(v(i, k, j)), v(j, k, j))) fail('d', t, x, "c_ijk = -c_ikj + c_jkj");
      const GroupElem lhs = g.add(v(i, j, i), v(j, k, i));
      const GroupElem rhs = g.add(g.add(g.neg(v(i, k, j)), v(i, k, i)), v(j, k, j));
      if (lhs != rhs) fail('e', t, x, "c_iji + c_jki = -c_ikj + c_iki + c_jkj");
    }
  }
  return report;
}

std::optional<CechCochain> solve_coboundary(const CechCochain& c) {
  if (c.degree() < 1) throw PreconditionError("solve_coboundary needs degree at least 1");
  const FinAbGroup& g = c.group();
  const Nerve& nerve = c.nerve();
  CechCochain b(c.nerve_ptr(), g, c.degree() - 1, c.mode());
  const auto unknown_tuples = ordered_tuples(nerve, c.degree());
  const auto equation_tuples = ordered_tuples(nerve, c.degree() + 1);
  for (int x : block_points(c)) {
    auto in_block = [&](const std::vector<int>& t) {
      if (x < 0) return true;
      const auto& carrier = nerve.carrier(t);
      return std::binary_search(carrier.begin(), carrier.end(), x);
    };
    std::map<std::vector<int>, std::size_t> col;
    std::vector<const std::vector<int>*> cols;
    for (const auto& t : unknown_tuples)
      if (in_block(t)) {
        col.emplace(t, cols.size());
        cols.push_back(&t);
      }
    std::vector<const std::vector<int>*> rows;
    for (const auto& t : equation_tuples)
      if (in_block(t)) rows.push_back(&t);
    IntMatrix a(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t k = 0; k < rows[r]->size(); ++k) a(r, col.at(drop(*rows[r], k))) += k % 2 ? -1 : 1;
    std::vector<std::vector<std::int64_t>> solution(g.rank());
    for (std::size_t f = 0; f < g.rank(); ++f) {
      std::vector<std::int64_t> rhs(rows.size());
      for (std::size_t r = 0; r < rows.size(); ++r) rhs[r] = c.at(*rows[r], x).c[f];
      auto s = solve_mod(a, rhs, g.cyclic_orders()[f]);
      if (!s) return std::nullopt;
      solution[f] = std::move(*s);
    }
    for (std::size_t k = 0; k < cols.size(); ++k) {
      std::vector<std::int64_t> comps(g.rank());
      for (std::size_t f = 0; f < g.rank(); ++f) comps[f] = solution[f][k];
      b.set(*cols[k], x, g.element(std::move(comps)));
    }
  }
  if (coboundary(b) != c) throw InternalError("coboundary solver returned a non-solution");
  return b;
}

IntMatrix coboundary_matrix(const Nerve& nerve, int p) {
  if (p < 0) return IntMatrix(nerve.count(0), 0);
  const auto& cols = nerve.simplices(p);
  const auto& rows = nerve.simplices(p + 1);
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k < rows[r].size(); ++k)
      m(r, static_cast<std::size_t>(*nerve.index_of(drop(rows[r], k)))) += k % 2 ? -1 : 1;
  return m;
}

SimplicialCohomology::SimplicialCohomology(std::shared_ptr<const Nerve> nerve, int degree, std::int64_t modulus)
    : nerve_(std::move(nerve)), degree_(degree), modulus_(modulus) {
  if (degree_ < 0) throw InputError("cohomology degree must be nonnegative");
  if (modulus_ < 0) throw InputError("coefficient modulus must be nonnegative");
  const std::size_t m = nerve_->count(degree_);
  delta_ = coboundary_matrix(*nerve_, degree_);
  if (m == 0 || modulus_ == 1) return;

  SmithForm snf = smith_normal_form(delta_);
  v_inv_ = snf.V_inv;
  // cocycle lattice K = { x : delta x in n Z^rows }, basis = scaled columns of V
  for (std::size_t k = 0; k < m; ++k) {
    std::int64_t e = 1;
    if (k < snf.rank) {
      if (modulus_ == 0) continue;
      e = modulus_ / std::gcd(snf.diagonal[k], modulus_);
    }
    kernel_cols_.push_back(k);
    scale_.push_back(e);
  }
  const std::size_t q = kernel_cols_.size();
  if (q == 0) return;

  // relations: image of delta_{p-1} plus n Z^m, in K-coordinates
  const IntMatrix prev = coboundary_matrix(*nerve_, degree_ - 1);
  std::vector<std::vector<std::int64_t>> rel_cols;
  for (std::size_t c = 0; c < prev.cols(); ++c) {
    std::vector<std::int64_t> y(m);
    for (std::size_t r = 0; r < m; ++r) y[r] = prev(r, c);
    rel_cols.push_back(std::move(y));
  }
  if (modulus_ > 0)
    for (std::size_t r = 0; r < m; ++r) {
      std::vector<std::int64_t> y(m, 0);
      y[r] = modulus_;
      rel_cols.push_back(std::move(y));
    }
  IntMatrix rel(q, rel_cols.size());
  for (std::size_t c = 0; c < rel_cols.size(); ++c) {
    const auto y = v_inv_.apply(rel_cols[c]);
    for (std::size_t a = 0; a < q; ++a) {
      const std::int64_t v = y[kernel_cols_[a]];
      if (v % scale_[a] != 0) throw InternalError("relation outside the cocycle lattice");
      rel(a, c) = v / scale_[a];
    }
  }
  SmithForm quot = smith_normal_form(rel);
  for (std::size_t a = 0; a < q; ++a) {
    const std::int64_t d = a < quot.diagonal.size() ? quot.diagonal[a] : 0;
    if (d == 1) continue;
    kept_rows_.push_back(a);
    orders_.push_back(d);
    // generator: column a of U_inv in K-coordinates, mapped back to cochains
    std::vector<std::int64_t> gen(m, 0);
    for (std::size_t b = 0; b < q; ++b) {
      const std::int64_t coeff = quot.U_inv(b, a);
      if (coeff == 0) continue;
      for (std::size_t r = 0; r < m; ++r) gen[r] += coeff * scale_[b] * snf.V(r, kernel_cols_[b]);
    }
    if (modulus_ > 0)
      for (auto& v : gen) v = floor_mod(v, modulus_);
    generators_.push_back(std::move(gen));
  }
  quotient_u_ = std::move(quot.U);
}

bool SimplicialCohomology::is_cocycle(std::span<const std::int64_t> values) const {
  if (values.size() != nerve_->count(degree_)) throw InputError("cochain has the wrong length");
  const auto d = delta_.apply(values);
  for (auto v : d)
    if (modulus_ == 0 ? v != 0 : floor_mod(v, modulus_) != 0) return false;
  return true;
}

std::vector<std::int64_t> SimplicialCohomology::class_of(std::span<const std::int64_t> cocycle) const {
  if (!is_cocycle(cocycle)) throw PreconditionError("class_of expects a cocycle");
  std::vector<std::int64_t> coords;
  if (orders_.empty()) return coords;
  std::vector<std::int64_t> z(cocycle.begin(), cocycle.end());
  if (modulus_ > 0)
    for (auto& v : z) v = floor_mod(v, modulus_);
  const auto y = v_inv_.apply(z);
  std::vector<std::int64_t> t(kernel_cols_.size());
  for (std::size_t a = 0; a < t.size(); ++a) {
    const std::int64_t v = y[kernel_cols_[a]];
    if (v % scale_[a] != 0) throw InternalError("cocycle outside the cocycle lattice");
    t[a] = v / scale_[a];
  }
  for (std::size_t k = 0; k < kept_rows_.size(); ++k) {
    std::int64_t s = 0;
    const std::size_t row = kept_rows_[k];
    for (std::size_t b = 0; b < t.size(); ++b) s += quotient_u_(row, b) * t[b];
    coords.push_back(orders_[k] == 0 ? s : floor_mod(s, orders_[k]));
  }
  return coords;
}

CohomologyGroup::CohomologyGroup(std::shared_ptr<const Nerve> nerve, FinAbGroup group, int degree)
    : nerve_(std::move(nerve)), group_(std::move(group)), degree_(degree) {
  const std::size_t m = nerve_->count(degree_);
  for (std::size_t f = 0; f < group_.rank(); ++f) {
    factors_.emplace_back(nerve_, degree_, group_.cyclic_orders()[f]);
    const auto& h = factors_.back();
    for (std::size_t k = 0; k < h.orders().size(); ++k) {
      orders_.push_back(h.orders()[k]);
      std::vector<std::vector<std::int64_t>> values(group_.rank(), std::vector<std::int64_t>(m, 0));
      values[f] = h.generators()[k];
      generators_.push_back(from_simplicial(nerve_, group_, degree_, values));
    }
  }
}

std::vector<std::int64_t> CohomologyGroup::class_of(const CechCochain& c) const {
  if (c.mode() != CochainMode::nerve) throw PreconditionError("cohomology classes are computed in nerve mode");
  if (c.degree() != degree_ || !(c.group() == group_)) throw InputError("cochain does not match the cohomology group");
  if (c.nerve_ptr() != nerve_ && c.nerve().simplices(degree_) != nerve_->simplices(degree_))
    throw InputError("cochain lives on a different complex");
  if (!is_cocycle(c)) throw PreconditionError("class_of expects a cocycle");
  std::vector<std::int64_t> coords;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const auto part = factors_[f].class_of(c.simplicial_component(f));
    coords.insert(coords.end(), part.begin(), part.end());
  }
  return coords;
}

CohomologyGroup cohomology(std::shared_ptr<const Nerve> nerve, const FinAbGroup& group, int degree) {
  return CohomologyGroup(std::move(nerve), group, degree);
}

SimplicialCohomology integer_cohomology(std::shared_ptr<const Nerve> nerve, int degree) {
  return SimplicialCohomology(std::move(nerve), degree, 0);
}

}  // namespace twistlab
