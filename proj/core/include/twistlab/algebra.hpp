#pragma once

#include <array>
#include <complex>
#include <map>
#include <memory>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "twistlab/cech.hpp"
#include "twistlab/cochain.hpp"
#include "twistlab/cyclotomic.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/extension.hpp"
#include "twistlab/groupoid.hpp"

namespace twistlab {

using cd = std::complex<double>;
/// Dense coefficient vector of an algebra element, indexed by the parent's arrows.
using AlgElem = Eigen::VectorXcd;

inline constexpr double kDefaultTolerance = 1e-9;

bool approx_equal(const AlgElem& a, const AlgElem& b, double tol = kDefaultTolerance);

/// C_c(Sigma, twist) for a finite groupoid with a circle-valued 2-cocycle on composable
/// pairs: (f * g)(ab) += f(a) g(b) twist(a, b), f*(a) = conj(twist(a, a^-1)) conj(f(a^-1)).
class TwistedGroupoidAlgebra {
 public:
  TwistedGroupoidAlgebra(std::shared_ptr<const FinGroupoid> groupoid, std::vector<cd> twist);
  /// Untwisted convolution algebra.
  explicit TwistedGroupoidAlgebra(std::shared_ptr<const FinGroupoid> groupoid);

  const FinGroupoid& groupoid() const { return *groupoid_; }
  std::size_t dimension() const { return groupoid_->num_arrows(); }
  AlgElem zero() const { return AlgElem::Zero(static_cast<Eigen::Index>(dimension())); }
  AlgElem basis(int arrow) const;
  AlgElem product(const AlgElem& f, const AlgElem& g) const;
  AlgElem star(const AlgElem& f) const;

 private:
  void check(const AlgElem& f) const;

  std::shared_ptr<const FinGroupoid> groupoid_;
  std::vector<cd> twist_;
};

/// The convolution algebra of Sigma_c = G x Gamma_U, product (g,(i,x,j))(h,(j,x,k)) = (g+h+c_ijk(x),(i,x,k)).
/// Elements are indexed by arrow * |G| + index(g), matching build_extension.
class SigmaCAlgebra {
 public:
  /// c must be a normalized 2-cochain on a nerve built from a cover. It is not required
  /// to be a cocycle, so perturbed negative controls can be represented.
  explicit SigmaCAlgebra(const CechCochain& c);

  const Cover& cover() const { return *cover_; }
  const FinAbGroup& group() const { return group_; }
  const Blowup& blowup() const { return blowup_; }
  const CechCochain& cocycle() const { return c_; }
  std::size_t num_points() const { return cover_->space().size(); }
  std::size_t num_sets() const { return cover_->num_sets(); }
  std::size_t group_order() const { return group_.order(); }
  std::size_t dimension() const { return blowup_.triples.size() * group_.order(); }

  /// Index of c_{ijk}(x) within group().elements(); requires x in U_ijk.
  std::size_t c_index(int i, int j, int k, int x) const;
  /// Element index of (g, (i, x, j)), or -1 when x is not in U_ij.
  int index(std::size_t g, int i, int x, int j) const;

  AlgElem zero() const { return AlgElem::Zero(static_cast<Eigen::Index>(dimension())); }
  AlgElem basis(std::size_t g, int i, int x, int j) const;

  /// Convolution and involution summed directly over I(x) and G.
  AlgElem convolve(const AlgElem& f1, const AlgElem& f2) const;
  AlgElem star(const AlgElem& f) const;

  /// The same operations computed from the composition table of build_extension(phi_c).
  const TwistedGroupoidAlgebra& generic() const { return *generic_; }
  const CentralExtension& extension() const { return extension_; }

  std::size_t add_index(std::size_t g, std::size_t h) const { return add_[g * group_.order() + h]; }
  std::size_t neg_index(std::size_t g) const { return neg_[g]; }

 private:
  void check(const AlgElem& f) const;

  CechCochain c_;
  std::shared_ptr<const Cover> cover_;
  FinAbGroup group_;
  Blowup blowup_;
  std::vector<int> c_table_;
  std::vector<std::size_t> add_, neg_;
  CentralExtension extension_;
  std::unique_ptr<TwistedGroupoidAlgebra> generic_;
};

AlgElem random_element(std::size_t dimension, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Twisted matrix algebra A(nu): sparse I x I matrices of functions on X.

template <class T>
struct TwistedMatrixT {
  std::map<std::array<int, 3>, T> entries;  // (i, j, x) -> f_ij(x)

  T at(int i, int j, int x) const {
    const auto it = entries.find({i, j, x});
    return it == entries.end() ? T{} : it->second;
  }
};

using TwistedMatrix = TwistedMatrixT<cd>;
using ExactTwistedMatrix = TwistedMatrixT<Cyclotomic>;

inline cd scalar_from_root(const RootOfUnity& r, const cd*) { return r.value(); }
inline Cyclotomic scalar_from_root(const RootOfUnity& r, const Cyclotomic*) { return Cyclotomic(r); }
inline cd scalar_conj(const cd& v) { return std::conj(v); }
inline Cyclotomic scalar_conj(const Cyclotomic& v) { return v.conj(); }
inline bool scalar_is_zero(const cd& v) { return v == cd{}; }
inline bool scalar_is_zero(const Cyclotomic& v) { return v.terms().empty(); }

namespace detail {
void check_rt_entry(const UnimodularCochain& nu, int i, int j, int x);
}

/// h_ik(x) = sum_j conj(nu_ijk(x)) f_ij(x) g_jk(x).
template <class T>
TwistedMatrixT<T> rt_product(const UnimodularCochain& nu, const TwistedMatrixT<T>& a, const TwistedMatrixT<T>& b) {
  std::map<std::array<int, 2>, std::vector<std::pair<int, const T*>>> rows_b;  // (j, x) -> [(k, g_jk(x))]
  for (const auto& [key, v] : b.entries) {
    detail::check_rt_entry(nu, key[0], key[1], key[2]);
    rows_b[{key[0], key[2]}].emplace_back(key[1], &v);
  }
  TwistedMatrixT<T> out;
  for (const auto& [key, v] : a.entries) {
    const auto [i, j, x] = key;
    detail::check_rt_entry(nu, i, j, x);
    const auto it = rows_b.find({j, x});
    if (it == rows_b.end()) continue;
    for (const auto& [k, w] : it->second) {
      const T twist = scalar_conj(scalar_from_root(nu.at(std::vector<int>{i, j, k}, x), static_cast<const T*>(nullptr)));
      auto& slot = out.entries[{i, k, x}];
      slot = slot + twist * v * *w;
    }
  }
  for (auto it = out.entries.begin(); it != out.entries.end();)
    it = scalar_is_zero(it->second) ? out.entries.erase(it) : std::next(it);
  return out;
}

/// (f*)_ij(x) = nu_iji(x) conj(f_ji(x)).
template <class T>
TwistedMatrixT<T> rt_star(const UnimodularCochain& nu, const TwistedMatrixT<T>& a) {
  TwistedMatrixT<T> out;
  for (const auto& [key, v] : a.entries) {
    const auto [j, i, x] = key;
    detail::check_rt_entry(nu, j, i, x);
    out.entries[{i, j, x}] = scalar_from_root(nu.at(std::vector<int>{i, j, i}, x), static_cast<const T*>(nullptr)) *
                             scalar_conj(v);
  }
  return out;
}

/// A(nu) over a cover, together with its groupoid picture C_c(Gamma_V, conj nu).
class RTAlgebra {
 public:
  /// nu must be a degree-2 unimodular cochain on a nerve built from a cover.
  explicit RTAlgebra(UnimodularCochain nu);

  const UnimodularCochain& nu() const { return nu_; }
  const Cover& cover() const { return nu_.nerve().cover(); }
  const Blowup& blowup() const { return blowup_; }
  /// sum over points of |I(x)|^2
  std::size_t dimension() const { return blowup_.triples.size(); }

  TwistedMatrix product(const TwistedMatrix& a, const TwistedMatrix& b) const { return rt_product(nu_, a, b); }
  TwistedMatrix star(const TwistedMatrix& a) const { return rt_star(nu_, a); }

  /// C_c(Gamma_V, c_nu) with c_nu((i,x,j),(j,x,k)) = conj(nu_ijk(x)).
  const TwistedGroupoidAlgebra& groupoid_algebra() const { return *groupoid_; }
  AlgElem rt_groupoid_product(const AlgElem& f, const AlgElem& g) const { return groupoid_->product(f, g); }
  AlgElem rt_groupoid_star(const AlgElem& f) const { return groupoid_->star(f); }

  /// Phi(f)_ij(x) = f(i, x, j).
  TwistedMatrix phi_matrix_iso(const AlgElem& f) const;
  AlgElem phi_matrix_inverse(const TwistedMatrix& a) const;

  TwistedMatrix random_matrix(std::mt19937_64& rng) const;

 private:
  UnimodularCochain nu_;
  Blowup blowup_;
  std::unique_ptr<TwistedGroupoidAlgebra> groupoid_;
};

bool approx_equal(const TwistedMatrix& a, const TwistedMatrix& b, double tol = kDefaultTolerance);

/// The cover V = { G^ x U_i } of G^ x X. Point (t, x) has index t * |X| + x.
struct DualProductCover {
  std::shared_ptr<const Cover> cover;
  std::shared_ptr<const Nerve> nerve;
  std::size_t num_characters = 0;
  std::size_t num_base_points = 0;

  int point(std::size_t tau, int x) const { return static_cast<int>(tau * num_base_points) + x; }
};

DualProductCover dual_product_cover(const Cover& cover, std::size_t num_characters);

/// nu^c_ijk(tau, x) = conj(tau(c_ijk(x))), pointwise on the dual product cover.
UnimodularCochain nu_c_product(const CechCochain& c, const DualProductCover& dual);

/// Phi(f)(i, (tau, x), j) = sum_g tau(g) f(g, (i, x, j)), and its inverse by character orthogonality.
struct FourierTransform {
  DualProductCover dual;
  std::unique_ptr<RTAlgebra> target;

  explicit FourierTransform(const SigmaCAlgebra& source);
  TwistedMatrix forward(const AlgElem& f) const;
  AlgElem inverse(const TwistedMatrix& a) const;

 private:
  const SigmaCAlgebra* source_;
  std::vector<Character> characters_;
  std::vector<std::vector<cd>> char_table_;  // [tau][g]
};

/// |G| * sum_x |I(x)|^2 for Sigma_c.
std::size_t algebra_dimension(const SigmaCAlgebra& a);
/// sum over the points of G^ x X of |I(x)|^2 for A(nu^c).
std::size_t algebra_dimension(const RTAlgebra& a);

}  // namespace twistlab
