#include "twistlab/representations.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

namespace twistlab {

MatRep::MatRep(RepLabel label, std::vector<int> index_set, std::size_t algebra_dimension, Fn evaluate)
    : label_(label), index_set_(std::move(index_set)), algebra_dimension_(algebra_dimension), evaluate_(std::move(evaluate)) {}

std::vector<Mat> MatRep::basis_images() const {
  std::vector<Mat> out;
  out.reserve(algebra_dimension_);
  AlgElem e = AlgElem::Zero(static_cast<Eigen::Index>(algebra_dimension_));
  for (std::size_t a = 0; a < algebra_dimension_; ++a) {
    e(static_cast<Eigen::Index>(a)) = 1.0;
    out.push_back(evaluate_(e));
    e(static_cast<Eigen::Index>(a)) = 0.0;
  }
  return out;
}

namespace {

std::vector<int> anchored_index_set(const Cover& cover, int i, int x) {
  if (x < 0 || static_cast<std::size_t>(x) >= cover.space().size()) throw InputError("point out of range");
  if (i < 0 || static_cast<std::size_t>(i) >= cover.num_sets()) throw InputError("cover index out of range");
  if (!cover.contains(i, x))
    throw InputError("point " + cover.space().id(x) + " is not in U_" + cover.label(i));
  return index_set_at(cover, x);
}

std::vector<cd> character_values(const FinAbGroup& group, std::size_t tau) {
  const auto chars = dual_group(group);
  if (tau >= chars.size()) throw InputError("character index out of range");
  std::vector<cd> out;
  for (const auto& g : group.elements()) out.push_back(char_eval(group, chars[tau], g).value());
  return out;
}

// Null space of the stacked maps vec(T) -> vec(T A1 - A2 T), via the Gram matrix.
std::vector<Mat> null_intertwiners(const std::vector<Mat>& images1, const std::vector<Mat>& images2, double tol) {
  if (images1.size() != images2.size()) throw InputError("generator lists differ in length");
  if (images1.empty()) return {};
  const Eigen::Index n1 = images1.front().rows(), n2 = images2.front().rows();
  // T is n2 x n1; vec(T A1) = (A1^T kron I_n2) vec T, vec(A2 T) = (I_n1 kron A2) vec T.
  const Eigen::Index m = n1 * n2;
  Mat gram = Mat::Zero(m, m);
  Mat k(m, m);
  for (std::size_t g = 0; g < images1.size(); ++g) {
    const Mat& a1 = images1[g];
    const Mat& a2 = images2[g];
    if (a1.isZero(0.0) && a2.isZero(0.0)) continue;
    k.setZero();
    for (Eigen::Index r = 0; r < n1; ++r)
      for (Eigen::Index c = 0; c < n1; ++c) {
        const cd v = a1(c, r);
        if (v == cd{}) continue;
        for (Eigen::Index d = 0; d < n2; ++d) k(r * n2 + d, c * n2 + d) += v;
      }
    for (Eigen::Index b = 0; b < n1; ++b) k.block(b * n2, b * n2, n2, n2) -= a2;
    gram.noalias() += k.adjoint() * k;
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(gram);
  const auto& values = solver.eigenvalues();
  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  std::vector<Mat> out;
  for (Eigen::Index v = 0; v < m; ++v) {
    if (std::abs(values(v)) > tol * scale) continue;
    const Eigen::VectorXcd col = solver.eigenvectors().col(v);
    out.push_back(Eigen::Map<const Mat>(col.data(), n2, n1));
  }
  return out;
}

}  // namespace

Mat pi_rep_matrix(const RTAlgebra& a, int i, int p, const TwistedMatrix& f) {
  const auto idx = anchored_index_set(a.cover(), i, p);
  const auto n = static_cast<Eigen::Index>(idx.size());
  Mat m = Mat::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      const int k = idx[static_cast<std::size_t>(r)], l = idx[static_cast<std::size_t>(c)];
      const cd v = f.at(k, l, p);
      if (v != cd{}) m(r, c) = std::conj(a.nu().at(std::vector<int>{i, k, l}, p).value()) * v;
    }
  return m;
}

MatRep pi_rep(const RTAlgebra& a, int i, int p) {
  auto idx = anchored_index_set(a.cover(), i, p);
  return MatRep(RepLabel{i, 0, p}, std::move(idx), a.dimension(),
                [&a, i, p](const AlgElem& f) { return pi_rep_matrix(a, i, p, a.phi_matrix_iso(f)); });
}

Mat ind_rep_matrix(const SigmaCAlgebra& s, int i, int x, std::size_t tau, const AlgElem& f) {
  const auto idx = anchored_index_set(s.cover(), i, x);
  if (static_cast<std::size_t>(f.size()) != s.dimension()) throw InputError("element does not belong to Sigma_c");
  const auto chi = character_values(s.group(), tau);
  const std::size_t ng = s.group_order();
  const auto n = static_cast<Eigen::Index>(idx.size());
  Mat m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      const int j = idx[static_cast<std::size_t>(r)], k = idx[static_cast<std::size_t>(c)];
      const int base = s.index(0, j, x, k);
      cd sum = 0;
      for (std::size_t g = 0; g < ng; ++g) sum += f(base + static_cast<Eigen::Index>(g)) * chi[g];
      m(r, c) = chi[s.c_index(i, j, k, x)] * sum;
    }
  return m;
}

MatRep ind_rep(const SigmaCAlgebra& s, int i, int x, std::size_t tau) {
  auto idx = anchored_index_set(s.cover(), i, x);
  character_values(s.group(), tau);
  return MatRep(RepLabel{i, tau, x}, std::move(idx), s.dimension(),
                [&s, i, x, tau](const AlgElem& f) { return ind_rep_matrix(s, i, x, tau, f); });
}

Eigen::VectorXcd unitary_U(const SigmaCAlgebra& s, int i, int x, std::size_t tau, const AlgElem& f) {
  const auto idx = anchored_index_set(s.cover(), i, x);
  const auto chi = character_values(s.group(), tau);
  const std::size_t ng = s.group_order();
  Eigen::VectorXcd out(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r) {
    const int j = idx[r];
    const std::size_t c = s.c_index(i, j, i, x);
    const int base = s.index(0, j, x, i);
    cd sum = 0;
    for (std::size_t g = 0; g < ng; ++g)
      sum += f(base + static_cast<Eigen::Index>(s.add_index(g, s.neg_index(c)))) * chi[g];
    out(static_cast<Eigen::Index>(r)) = sum;
  }
  return out;
}

cd induced_inner_product(const SigmaCAlgebra& s, int i, int x, std::size_t tau, const AlgElem& f1,
                         const AlgElem& f2) {
  anchored_index_set(s.cover(), i, x);
  const auto chi = character_values(s.group(), tau);
  const FinGroupoid& total = *s.extension().total;
  const FinGroupoid& base = *s.blowup().groupoid;
  const int u = base.unit_of(s.blowup().index_of(i, x, i));
  const auto ng = static_cast<int>(s.group_order());
  std::vector<int> stab;
  for (int g : total.arrows_with_range(u))
    if (total.source(g) == u) {
      if (!base.is_unit(s.extension().pi[static_cast<std::size_t>(g)]))
        throw InternalError("isotropy of Sigma_c is not central at this unit");
      stab.push_back(g);
    }
  cd sum = 0;
  for (int g : stab) {
    const cd t = chi[static_cast<std::size_t>(g % ng)];
    for (int sigma : total.arrows_with_range(u)) {
      const int inv = total.inverse(sigma);
      const cd b = f2(inv);
      if (b == cd{}) continue;
      sum += std::conj(b) * f1(total.compose_unchecked(inv, g)) * t;
    }
  }
  return sum;
}

AlgElem induced_basis_vector(const SigmaCAlgebra& s, int i, int x, int k) {
  anchored_index_set(s.cover(), i, x);
  if (!s.cover().contains(k, x)) throw InputError("k is not in I(x)");
  const std::size_t c = s.c_index(i, k, i, x);
  AlgElem e = s.zero();
  e(s.index(s.neg_index(c), k, x, i)) = 1.0;
  return e;
}

Mat induced_action(const SigmaCAlgebra& s, int i, int x, std::size_t tau, const AlgElem& f) {
  const auto idx = anchored_index_set(s.cover(), i, x);
  const auto n = static_cast<Eigen::Index>(idx.size());
  Mat m(n, n);
  for (Eigen::Index c = 0; c < n; ++c)
    m.col(c) = unitary_U(s, i, x, tau, s.convolve(f, induced_basis_vector(s, i, x, idx[static_cast<std::size_t>(c)])));
  return m;
}

bool intertwine_check(const SigmaCAlgebra& s, const FourierTransform& phi, const AlgElem& f, int i, int x,
                      std::size_t tau, double tol) {
  const Mat lhs = ind_rep_matrix(s, i, x, tau, f);
  const Mat rhs = pi_rep_matrix(*phi.target, i, phi.dual.point(tau, x), phi.forward(f));
  const double scale = std::max({1.0, lhs.cwiseAbs().maxCoeff(), rhs.cwiseAbs().maxCoeff()});
  return (lhs - rhs).cwiseAbs().maxCoeff() <= tol * scale;
}

HomomorphismReport check_star_homomorphism(const MatRep& rep,
                                           const std::function<AlgElem(const AlgElem&, const AlgElem&)>& product,
                                           const std::function<AlgElem(const AlgElem&)>& star,
                                           const std::vector<AlgElem>& elements, double tol) {
  HomomorphismReport report;
  std::vector<Mat> images;
  images.reserve(elements.size());
  for (const auto& e : elements) images.push_back(rep(e));
  auto record = [&](const Mat& a, const Mat& b) {
    ++report.checks;
    const double scale = std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
    const double err = a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff() / scale;
    report.max_error = std::max(report.max_error, err);
    if (err > tol) ++report.failures;
  };
  for (std::size_t a = 0; a < elements.size(); ++a) {
    record(rep(star(elements[a])), images[a].adjoint());
    for (std::size_t b = 0; b < elements.size(); ++b) record(rep(product(elements[a], elements[b])), images[a] * images[b]);
  }
  return report;
}

std::size_t commutant_dim(const std::vector<Mat>& generators, double tol) {
  return null_intertwiners(generators, generators, tol).size();
}

std::size_t commutant_dim(const MatRep& rep, double tol) { return commutant_dim(rep.basis_images(), tol); }

std::vector<Mat> intertwiner_space(const std::vector<Mat>& images1, const std::vector<Mat>& images2, double tol) {
  return null_intertwiners(images1, images2, tol);
}

bool equivalent(const std::vector<Mat>& images1, const std::vector<Mat>& images2, std::uint64_t seed,
                double det_threshold) {
  if (images1.size() != images2.size()) return false;
  if (images1.empty()) return true;
  if (images1.front().rows() != images2.front().rows()) return false;
  const auto basis = intertwiner_space(images1, images2);
  if (basis.empty()) return false;
  auto invertible = [&](const Mat& t) {
    const double norm = Eigen::JacobiSVD<Mat>(t).singularValues()(0);
    return norm > 0.0 && std::abs((t / norm).determinant()) > det_threshold;
  };
  for (const auto& t : basis)
    if (invertible(t)) return true;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 20; ++trial) {
    Mat t = Mat::Zero(basis.front().rows(), basis.front().cols());
    for (const auto& b : basis) t += cd{nd(rng), nd(rng)} * b;
    if (invertible(t)) return true;
  }
  return false;
}

bool equivalent(const MatRep& a, const MatRep& b, std::uint64_t seed, double det_threshold) {
  if (a.algebra_dimension() != b.algebra_dimension()) throw InputError("representations of different algebras");
  return equivalent(a.basis_images(), b.basis_images(), seed, det_threshold);
}

SpectrumTable spectrum(const SigmaCAlgebra& s, const SpectrumOptions& options) {
  SpectrumTable table;
  const std::size_t nchars = s.group_order();
  std::vector<MatRep> reps;
  for (std::size_t t = 0; t < nchars; ++t)
    for (int x = 0; x < static_cast<int>(s.num_points()); ++x) {
      const int anchor = index_set_at(s.cover(), x).front();
      reps.push_back(ind_rep(s, anchor, x, t));
      table.entries.push_back(SpectrumEntry{RepLabel{anchor, t, x}, reps.back().dimension(), 0});
    }
  table.algebra_dimension = s.dimension();
  for (const auto& e : table.entries) table.sum_of_squares += e.dimension * e.dimension;
  table.dimension_identity = table.sum_of_squares == table.algebra_dimension;
  if (!options.check_irreducible) return table;

  std::vector<std::vector<Mat>> images;
  for (const auto& r : reps) images.push_back(r.basis_images());
  table.irreducible = true;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    table.entries[k].commutant = commutant_dim(images[k]);
    table.irreducible = table.irreducible && table.entries[k].commutant == 1;
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (reps.size() <= 40) {
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = a + 1; b < reps.size(); ++b) pairs.emplace_back(a, b);
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, reps.size() - 1);
    while (pairs.size() < options.sampled_pairs) {
      const std::size_t a = pick(rng), b = pick(rng);
      if (a != b) pairs.emplace_back(a, b);
    }
  }
  table.pairwise_inequivalent = true;
  for (const auto& [a, b] : pairs) {
    ++table.pairs_checked;
    if (equivalent(images[a], images[b], options.seed)) table.pairwise_inequivalent = false;
  }
  return table;
}

double cstar_norm(const SigmaCAlgebra& s, const AlgElem& f) {
  double best = 0.0;
  for (std::size_t t = 0; t < s.group_order(); ++t)
    for (int x = 0; x < static_cast<int>(s.num_points()); ++x) {
      const Mat m = ind_rep_matrix(s, index_set_at(s.cover(), x).front(), x, t, f);
      best = std::max(best, Eigen::JacobiSVD<Mat>(m).singularValues()(0));
    }
  return best;
}

}  // namespace twistlab
