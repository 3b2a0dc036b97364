#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "twistlab/dd.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/representations.hpp"
#include "twistlab/sampling.hpp"

using namespace twistlab;

namespace {

std::vector<CechCochain> cocycles(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<CechCochain> out;
  for (int trial = 0; trial < count; ++trial) {
    auto cover = std::make_shared<const Cover>(random_cover(rng, 1 + trial % 4, 1 + trial % 4, 0.6));
    const auto mode = trial % 2 ? CochainMode::nerve : CochainMode::pointwise;
    out.push_back(random_normalized_cocycle(rng, fixture::nerve_of(*cover), random_small_group(rng), mode));
  }
  return out;
}

// The induced inner product summed literally over arrows of Sigma_c, with inverses found by search.
cd inner_product_oracle(const SigmaCAlgebra& s, int i, int x, std::size_t tau, const AlgElem& f1, const AlgElem& f2) {
  const auto arrows = oracle::sigma_arrows(s);
  const FinAbGroup& g = s.group();
  const Character chi = dual_group(g)[tau];
  auto compose = [&](const oracle::SigmaArrow& p, const oracle::SigmaArrow& q) {
    const GroupElem sum = oracle::add(g, oracle::add(g, p.g, q.g), s.cocycle().at(std::vector<int>{p.i, p.j, q.j}, x));
    return s.index(g.index_of(sum), p.i, x, q.j);
  };
  auto inverse = [&](std::size_t a) {
    for (std::size_t b = 0; b < arrows.size(); ++b) {
      const auto& p = arrows[a];
      const auto& q = arrows[b];
      if (q.x != x || q.i != p.j || q.j != p.i) continue;
      if (compose(q, p) == s.index(0, p.j, x, p.j)) return b;
    }
    throw std::logic_error("no inverse");
  };
  cd sum = 0;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const auto& sigma = arrows[a];
    if (sigma.x != x || sigma.i != i) continue;  // range (i, x)
    const std::size_t inv = inverse(a);
    for (std::size_t b = 0; b < arrows.size(); ++b) {
      const auto& gam = arrows[b];
      if (gam.x != x || gam.i != i || gam.j != i) continue;
      const int prod = compose(arrows[inv], gam);
      sum += std::conj(f2(static_cast<Eigen::Index>(inv))) * f1(prod) * oracle::character(g, chi, gam.g);
    }
  }
  return sum;
}

Mat direct_sum(const Mat& a, const Mat& b) {
  Mat m = Mat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

}  // namespace

TEST_SUITE("representations") {

TEST_CASE("induced representations match the defining formula and are *-homomorphisms") {
  Rng rng(61);
  for (const auto& c : cocycles(1, 10)) {
    const SigmaCAlgebra s(c);
    std::vector<AlgElem> elements;
    for (int k = 0; k < 4; ++k) elements.push_back(random_element(s.dimension(), rng));
    const auto ntau = s.group().order();
    for (int x = 0; x < static_cast<int>(s.num_points()); ++x)
      for (int i : index_set_at(s.cover(), x))
        for (std::size_t tau = 0; tau < ntau; ++tau) {
          const MatRep rep = ind_rep(s, i, x, tau);
          CHECK((rep(elements[0]) - oracle::induced(s, i, x, tau, elements[0])).cwiseAbs().maxCoeff() < 1e-9);
          const auto report = check_star_homomorphism(
              rep, [&](const AlgElem& a, const AlgElem& b) { return s.convolve(a, b); },
              [&](const AlgElem& a) { return s.star(a); }, elements);
          CHECK(report.ok());
          CHECK(report.checks > 0);
        }
  }
}

TEST_CASE("the unitary U carries the induced inner product and action") {
  Rng rng(62);
  for (const auto& c : cocycles(2, 10)) {
    const SigmaCAlgebra s(c);
    for (int x = 0; x < static_cast<int>(s.num_points()); ++x)
      for (int i : index_set_at(s.cover(), x))
        for (std::size_t tau = 0; tau < s.group().order(); ++tau) {
          const AlgElem f1 = random_element(s.dimension(), rng), f2 = random_element(s.dimension(), rng);
          const cd lhs = induced_inner_product(s, i, x, tau, f1, f2);
          CHECK(std::abs(lhs - inner_product_oracle(s, i, x, tau, f1, f2)) < 1e-9 * (1 + std::abs(lhs)));
          const Eigen::VectorXcd u1 = unitary_U(s, i, x, tau, f1), u2 = unitary_U(s, i, x, tau, f2);
          CHECK(std::abs(lhs - u2.dot(u1)) < 1e-9 * (1 + std::abs(lhs)));
          const auto at = index_set_at(s.cover(), x);
          for (std::size_t k = 0; k < at.size(); ++k) {
            const Eigen::VectorXcd e = unitary_U(s, i, x, tau, induced_basis_vector(s, i, x, at[k]));
            CHECK((e - Eigen::VectorXcd::Unit(static_cast<Eigen::Index>(at.size()), static_cast<Eigen::Index>(k)))
                      .cwiseAbs()
                      .maxCoeff() < 1e-12);
          }
          const Mat action = induced_action(s, i, x, tau, f1);
          CHECK((action - ind_rep_matrix(s, i, x, tau, f1)).cwiseAbs().maxCoeff() < 1e-9);
        }
  }
}

TEST_CASE("Fourier transform intertwines induced and matrix representations") {
  Rng rng(63);
  for (const auto& c : cocycles(3, 10)) {
    const SigmaCAlgebra s(c);
    const FourierTransform phi(s);
    const AlgElem f = random_element(s.dimension(), rng);
    for (int x = 0; x < static_cast<int>(s.num_points()); ++x)
      for (int i : index_set_at(s.cover(), x))
        for (std::size_t tau = 0; tau < s.group().order(); ++tau) CHECK(intertwine_check(s, phi, f, i, x, tau));
  }
}

TEST_CASE("matrix representations of A(nu)") {
  Rng rng(64);
  for (const auto& c : cocycles(4, 8)) {
    for (const auto& nu : m_star(c)) {
      const RTAlgebra a(nu);
      const TwistedMatrix m = a.random_matrix(rng);
      std::vector<AlgElem> elements{a.phi_matrix_inverse(m), a.phi_matrix_inverse(a.random_matrix(rng))};
      for (int p = 0; p < static_cast<int>(a.cover().space().size()); ++p) {
        const auto at = index_set_at(a.cover(), p);
        for (int i : at) {
          const Mat direct = pi_rep_matrix(a, i, p, m);
          for (std::size_t k = 0; k < at.size(); ++k)
            for (std::size_t l = 0; l < at.size(); ++l) {
              const cd expected = std::conj(nu.at(std::vector<int>{i, at[k], at[l]}, p).value()) * m.at(at[k], at[l], p);
              CHECK(std::abs(direct(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) - expected) < 1e-12);
            }
          const MatRep rep = pi_rep(a, i, p);
          CHECK((rep(elements[0]) - direct).cwiseAbs().maxCoeff() < 1e-12);
          const auto report = check_star_homomorphism(
              rep, [&](const AlgElem& x, const AlgElem& y) { return a.rt_groupoid_product(x, y); },
              [&](const AlgElem& x) { return a.rt_groupoid_star(x); }, elements);
          CHECK(report.ok());
          CHECK(commutant_dim(rep) == 1);
        }
      }
      CHECK_THROWS_AS(pi_rep_matrix(a, 0, -1, m), std::exception);
    }
  }
}

TEST_CASE("spectrum: irreducible, pairwise inequivalent and exhausting the dimension") {
  for (const auto& c : cocycles(5, 12)) {
    const SigmaCAlgebra s(c);
    const SpectrumTable t = spectrum(s);
    CHECK(t.entries.size() == s.group().order() * s.num_points());
    CHECK(t.algebra_dimension == s.dimension());
    CHECK(t.sum_of_squares == t.algebra_dimension);
    CHECK(t.dimension_identity);
    CHECK(t.irreducible);
    CHECK(t.pairwise_inequivalent);
    for (const auto& e : t.entries) CHECK(e.commutant == 1);
  }
}

TEST_CASE("commutant and equivalence detect reducible and equivalent representations") {
  Rng rng(65);
  const auto all = cocycles(6, 12);
  for (const auto& c : all) {
    const SigmaCAlgebra s(c);
    const MatRep a = ind_rep(s, index_set_at(s.cover(), 0).front(), 0, 0);
    const auto images = a.basis_images();
    std::vector<Mat> doubled;
    for (const auto& m : images) doubled.push_back(direct_sum(m, m));
    CHECK(commutant_dim(doubled) == 4);
    CHECK(intertwiner_space(images, images).size() == 1);

    // conjugating by a random invertible matrix gives an equivalent representation
    const auto n = static_cast<Eigen::Index>(a.dimension());
    Mat v = Mat::Random(n, n) + 3.0 * Mat::Identity(n, n);
    std::vector<Mat> conjugated;
    for (const auto& m : images) conjugated.push_back(v * m * v.inverse());
    CHECK(equivalent(images, conjugated));

    if (s.group().order() > 1) {
      const MatRep b = ind_rep(s, index_set_at(s.cover(), 0).front(), 0, 1);
      CHECK_FALSE(equivalent(a, b));
      std::vector<Mat> mixed;
      const auto other = b.basis_images();
      for (std::size_t k = 0; k < images.size(); ++k) mixed.push_back(direct_sum(images[k], other[k]));
      CHECK(commutant_dim(mixed) == 2);
    }
    if (s.num_points() > 1) {
      const MatRep b = ind_rep(s, index_set_at(s.cover(), 1).front(), 1, 0);
      CHECK_FALSE(equivalent(a, b));
    }
  }
}

TEST_CASE("C*-norm identity") {
  Rng rng(66);
  for (const auto& c : cocycles(7, 8)) {
    const SigmaCAlgebra s(c);
    const AlgElem f = random_element(s.dimension(), rng);
    const double n = cstar_norm(s, f);
    CHECK(std::abs(cstar_norm(s, s.convolve(s.star(f), f)) - n * n) < 1e-8 * (1 + n * n));
    CHECK(std::abs(cstar_norm(s, s.star(f)) - n) < 1e-9 * (1 + n));
  }
}

TEST_CASE("representations reject points outside the anchor set") {
  const Cover cover(FinSpace({"p", "q"}), {"U", "V"}, {{0}, {0, 1}});
  const CechCochain c(fixture::nerve_of(cover), FinAbGroup::cyclic(2), 2, CochainMode::nerve);
  const SigmaCAlgebra s(c);
  CHECK_THROWS_AS(ind_rep_matrix(s, 0, 1, 0, s.zero()), InputError);
  CHECK_THROWS_AS(ind_rep(s, 0, 1, 0), InputError);
}

}  // TEST_SUITE
