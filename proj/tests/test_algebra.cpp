#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "twistlab/algebra.hpp"
#include "twistlab/dd.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/sampling.hpp"

using namespace twistlab;

namespace {

std::vector<CechCochain> cocycles(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<CechCochain> out;
  for (int trial = 0; trial < count; ++trial) {
    auto cover = std::make_shared<const Cover>(random_cover(rng, 1 + trial % 4, 1 + trial % 3, 0.6));
    const auto mode = trial % 2 ? CochainMode::nerve : CochainMode::pointwise;
    out.push_back(random_normalized_cocycle(rng, fixture::nerve_of(*cover), random_small_group(rng), mode));
  }
  return out;
}

bool dense_equal(const std::vector<Eigen::MatrixXcd>& a, const std::vector<Eigen::MatrixXcd>& b, double tol = 1e-9) {
  if (a.size() != b.size()) return false;
  for (std::size_t p = 0; p < a.size(); ++p)
    if ((a[p] - b[p]).cwiseAbs().maxCoeff() > tol * std::max(1.0, a[p].cwiseAbs().maxCoeff())) return false;
  return true;
}

ExactTwistedMatrix random_exact(const RTAlgebra& a, Rng& rng) {
  ExactTwistedMatrix m;
  std::uniform_int_distribution<int> coeff(-2, 2), root(0, 5);
  for (const auto& [i, x, j] : a.blowup().triples) {
    Cyclotomic v = Cyclotomic::integer(coeff(rng)) * Cyclotomic(RootOfUnity(root(rng), 6));
    if (!v.is_zero()) m.entries[{i, j, x}] = v;
  }
  return m;
}

bool exact_equal(const ExactTwistedMatrix& a, const ExactTwistedMatrix& b) {
  for (const auto& [k, v] : a.entries)
    if (!(v == b.at(k[0], k[1], k[2]))) return false;
  for (const auto& [k, v] : b.entries)
    if (!(v == a.at(k[0], k[1], k[2]))) return false;
  return true;
}

}  // namespace

TEST_SUITE("star-algebra") {

TEST_CASE("convolution and involution agree with the arrow-by-arrow definition") {
  Rng rng(51);
  for (const auto& c : cocycles(1, 12)) {
    const SigmaCAlgebra s(c);
    CHECK(s.dimension() == algebra_dimension(s));
    const AlgElem f1 = random_element(s.dimension(), rng), f2 = random_element(s.dimension(), rng);
    CHECK(approx_equal(s.convolve(f1, f2), oracle::sigma_product(s, f1, f2)));
    CHECK(approx_equal(s.star(f1), oracle::sigma_star(s, f1)));
    CHECK(approx_equal(s.generic().product(f1, f2), s.convolve(f1, f2)));
    CHECK(approx_equal(s.generic().star(f1), s.star(f1)));
  }
}

TEST_CASE("C_c(Sigma_c) is an associative *-algebra") {
  Rng rng(52);
  for (const auto& c : cocycles(2, 12)) {
    const SigmaCAlgebra s(c);
    const AlgElem a = random_element(s.dimension(), rng), b = random_element(s.dimension(), rng),
                  d = random_element(s.dimension(), rng);
    CHECK(approx_equal(s.convolve(s.convolve(a, b), d), s.convolve(a, s.convolve(b, d))));
    CHECK(approx_equal(s.star(s.convolve(a, b)), s.convolve(s.star(b), s.star(a))));
    CHECK(approx_equal(s.star(s.star(a)), a));
  }
}

TEST_CASE("a normalized non-cocycle gives a non-associative convolution") {
  const Cover cover(FinSpace({"p"}), {"U", "V"}, {{0}, {0}});
  auto nerve = fixture::nerve_of(cover);
  CechCochain c(nerve, FinAbGroup::cyclic(2), 2, CochainMode::nerve);
  c.set(std::vector<int>{0, 1, 0}, -1, GroupElem{{1}});
  REQUIRE(is_normalized(c));
  REQUIRE_FALSE(is_cocycle(c));
  const SigmaCAlgebra s(c);
  bool associative = true;
  const auto n = static_cast<int>(s.dimension());
  for (int a = 0; a < n && associative; ++a)
    for (int b = 0; b < n && associative; ++b)
      for (int d = 0; d < n && associative; ++d) {
        const AlgElem ea = AlgElem::Unit(n, a), eb = AlgElem::Unit(n, b), ed = AlgElem::Unit(n, d);
        associative = approx_equal(s.convolve(s.convolve(ea, eb), ed), s.convolve(ea, s.convolve(eb, ed)));
      }
  CHECK_FALSE(associative);
}

TEST_CASE("twisted matrix product agrees with dense matrices and the groupoid picture") {
  Rng rng(53);
  for (const auto& c : cocycles(3, 10)) {
    for (const auto& nu : m_star(c)) {
      const RTAlgebra a(nu);
      const auto points = a.cover().space().size(), sets = a.cover().num_sets();
      const TwistedMatrix m1 = a.random_matrix(rng), m2 = a.random_matrix(rng), m3 = a.random_matrix(rng);
      CHECK(dense_equal(oracle::dense(a.product(m1, m2), points, sets),
                        oracle::rt_product(nu, oracle::dense(m1, points, sets), oracle::dense(m2, points, sets))));
      CHECK(approx_equal(a.product(a.product(m1, m2), m3), a.product(m1, a.product(m2, m3))));
      CHECK(approx_equal(a.star(a.product(m1, m2)), a.product(a.star(m2), a.star(m1))));
      CHECK(approx_equal(a.star(a.star(m1)), m1));
      const AlgElem f1 = a.phi_matrix_inverse(m1), f2 = a.phi_matrix_inverse(m2);
      CHECK(approx_equal(a.phi_matrix_iso(a.rt_groupoid_product(f1, f2)), a.product(m1, m2)));
      CHECK(approx_equal(a.phi_matrix_iso(a.rt_groupoid_star(f1)), a.star(m1)));
      CHECK(approx_equal(a.phi_matrix_iso(f1), m1));
    }
  }
}

TEST_CASE("exact arithmetic: associativity and involution hold identically") {
  Rng rng(54);
  for (const auto& c : cocycles(4, 6)) {
    for (const auto& nu : m_star(c)) {
      const RTAlgebra a(nu);
      const auto m1 = random_exact(a, rng), m2 = random_exact(a, rng), m3 = random_exact(a, rng);
      CHECK(exact_equal(rt_product(nu, rt_product(nu, m1, m2), m3), rt_product(nu, m1, rt_product(nu, m2, m3))));
      CHECK(exact_equal(rt_star(nu, rt_product(nu, m1, m2)), rt_product(nu, rt_star(nu, m2), rt_star(nu, m1))));
      CHECK(exact_equal(rt_star(nu, rt_star(nu, m1)), m1));
    }
  }
}

TEST_CASE("entries outside U_ij are rejected") {
  const Cover cover(FinSpace({"p", "q"}), {"U", "V"}, {{0}, {0, 1}});
  auto nerve = fixture::nerve_of(cover);
  const CechCochain c(nerve, FinAbGroup::cyclic(2), 2, CochainMode::nerve);
  const RTAlgebra a(m_star(c).front());
  TwistedMatrix m;
  m.entries[{0, 1, 1}] = 1.0;
  CHECK_THROWS_AS(a.product(m, m), InputError);
  CHECK_THROWS_AS(a.star(m), InputError);
}

TEST_CASE("Fourier transform is a bijective *-homomorphism") {
  Rng rng(55);
  for (const auto& c : cocycles(5, 10)) {
    const SigmaCAlgebra s(c);
    const FourierTransform phi(s);
    const RTAlgebra& target = *phi.target;
    CHECK(algebra_dimension(s) == algebra_dimension(target));
    const AlgElem f1 = random_element(s.dimension(), rng), f2 = random_element(s.dimension(), rng);
    const TwistedMatrix p1 = phi.forward(f1), p2 = phi.forward(f2);
    const auto points = target.cover().space().size(), sets = target.cover().num_sets();
    CHECK(dense_equal(oracle::dense(p1, points, sets), oracle::fourier(s, f1)));
    CHECK(approx_equal(phi.inverse(p1), f1));
    CHECK(approx_equal(phi.forward(s.convolve(f1, f2)), target.product(p1, p2)));
    CHECK(approx_equal(phi.forward(s.star(f1)), target.star(p1)));
    const TwistedMatrix m = target.random_matrix(rng);
    CHECK(approx_equal(phi.forward(phi.inverse(m)), m));
  }
}

TEST_CASE("Fourier transform on the Moore cover") {
  Rng rng(56);
  auto cover = std::make_shared<const Cover>(fixture::moore_star_cover());
  const auto c = fixture::moore_generator(fixture::nerve_of(*cover));
  const SigmaCAlgebra s(c);
  const FourierTransform phi(s);
  CHECK(s.dimension() == 2 * 20 * 16);
  const AlgElem f1 = random_element(s.dimension(), rng), f2 = random_element(s.dimension(), rng);
  CHECK(approx_equal(s.convolve(f1, f2), oracle::sigma_product(s, f1, f2)));
  CHECK(approx_equal(phi.forward(s.convolve(f1, f2)), phi.target->product(phi.forward(f1), phi.forward(f2))));
}

}  // TEST_SUITE
