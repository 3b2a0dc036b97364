#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "twistlab/algebra.hpp"

namespace twistlab {

using Mat = Eigen::MatrixXcd;

/// (anchor i, character index tau, point x). For representations of A(nu) the point is a
/// point of nu's own space and tau is left at 0.
struct RepLabel {
  int anchor = 0;
  std::size_t tau = 0;
  int x = 0;

  friend bool operator==(const RepLabel&, const RepLabel&) = default;
};

/// Finite-dimensional representation on l^2(I(x)), rows and columns ordered like I(x).
class MatRep {
 public:
  using Fn = std::function<Mat(const AlgElem&)>;

  MatRep(RepLabel label, std::vector<int> index_set, std::size_t algebra_dimension, Fn evaluate);

  const RepLabel& label() const { return label_; }
  const std::vector<int>& index_set() const { return index_set_; }
  std::size_t dimension() const { return index_set_.size(); }
  std::size_t algebra_dimension() const { return algebra_dimension_; }

  Mat operator()(const AlgElem& f) const { return evaluate_(f); }
  /// Images of every arrow indicator, in algebra index order.
  std::vector<Mat> basis_images() const;

 private:
  RepLabel label_;
  std::vector<int> index_set_;
  std::size_t algebra_dimension_;
  Fn evaluate_;
};

/// (conj(nu_ikl(p)) f_kl(p))_{k,l in I(p)}; throws InputError unless p is in U_i.
Mat pi_rep_matrix(const RTAlgebra& a, int i, int p, const TwistedMatrix& f);
/// The same representation on the groupoid picture C_c(Gamma_V, conj nu).
MatRep pi_rep(const RTAlgebra& a, int i, int p);

/// a_jk = tau(c_ijk(x)) sum_g f(g, (j, x, k)) tau(g); throws InputError unless x is in U_i.
Mat ind_rep_matrix(const SigmaCAlgebra& s, int i, int x, std::size_t tau, const AlgElem& f);
MatRep ind_rep(const SigmaCAlgebra& s, int i, int x, std::size_t tau);

/// U(f)(j) = sum_g f(g - c_iji(x), (j, x, i)) tau(g). Only the values of f on arrows with
/// source (i, x) are read.
Eigen::VectorXcd unitary_U(const SigmaCAlgebra& s, int i, int x, std::size_t tau, const AlgElem& f);

/// sum over g in Sigma(u) and sigma in Sigma^u of conj(f2(sigma^-1)) f1(sigma^-1 g) tau(g),
/// u = (i, x), evaluated on the composition table of the extension groupoid.
cd induced_inner_product(const SigmaCAlgebra& s, int i, int x, std::size_t tau, const AlgElem& f1,
                         const AlgElem& f2);

/// The element of C_c((Sigma_c)_u) with U(e_k) = k-th basis vector: the point mass at
/// (-c_iki(x), (k, x, i)).
AlgElem induced_basis_vector(const SigmaCAlgebra& s, int i, int x, int k);

/// Matrix of left convolution by f on the induced space, in the basis e_k: column k is U(f * e_k).
Mat induced_action(const SigmaCAlgebra& s, int i, int x, std::size_t tau, const AlgElem& f);

/// ind_rep((i,x),tau)(f) against pi_{(i,(tau,x))}(Phi(f)), entrywise to tol.
bool intertwine_check(const SigmaCAlgebra& s, const FourierTransform& phi, const AlgElem& f, int i, int x,
                      std::size_t tau, double tol = kDefaultTolerance);

struct HomomorphismReport {
  std::size_t checks = 0;
  std::size_t failures = 0;
  double max_error = 0.0;
  bool ok() const { return failures == 0; }
};

/// rep(a b) = rep(a) rep(b) for all pairs and rep(a*) = rep(a)^H for all a in elements.
HomomorphismReport check_star_homomorphism(const MatRep& rep,
                                           const std::function<AlgElem(const AlgElem&, const AlgElem&)>& product,
                                           const std::function<AlgElem(const AlgElem&)>& star,
                                           const std::vector<AlgElem>& elements, double tol = kDefaultTolerance);

/// Dimension of { T : T A = A T for all A in generators }.
std::size_t commutant_dim(const std::vector<Mat>& generators, double tol = 1e-8);
std::size_t commutant_dim(const MatRep& rep, double tol = 1e-8);

/// Basis of { T : T A1 = A2 T } for paired generator images.
std::vector<Mat> intertwiner_space(const std::vector<Mat>& images1, const std::vector<Mat>& images2,
                                   double tol = 1e-8);

/// Looks for an invertible intertwiner: the basis itself, then seeded random combinations,
/// accepting |det| > det_threshold after scaling to unit operator norm.
bool equivalent(const std::vector<Mat>& images1, const std::vector<Mat>& images2, std::uint64_t seed = 1,
                double det_threshold = 1e-8);
bool equivalent(const MatRep& a, const MatRep& b, std::uint64_t seed = 1, double det_threshold = 1e-8);

struct SpectrumEntry {
  RepLabel label;
  std::size_t dimension = 0;
  std::size_t commutant = 0;  // 0 when not computed
};

struct SpectrumTable {
  std::vector<SpectrumEntry> entries;  // ordered by tau, then x
  std::size_t algebra_dimension = 0;
  std::size_t sum_of_squares = 0;
  bool dimension_identity = false;
  bool irreducible = false;
  std::size_t pairs_checked = 0;
  bool pairwise_inequivalent = false;
};

struct SpectrumOptions {
  bool check_irreducible = true;
  /// All pairs when the number of labels is at most 40, otherwise this many random pairs.
  std::size_t sampled_pairs = 100;
  std::uint64_t seed = 1;
};

/// Labels (tau, x) with anchor min I(x) and dimension |I(x)|, plus the checks above.
SpectrumTable spectrum(const SigmaCAlgebra& s, const SpectrumOptions& options = {});

/// max over labels of the operator norm of ind_rep(f).
double cstar_norm(const SigmaCAlgebra& s, const AlgElem& f);

}  // namespace twistlab
