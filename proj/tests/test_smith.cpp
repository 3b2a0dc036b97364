#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "twistlab/smith.hpp"

using namespace twistlab;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  IntMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = d(rng);
  return a;
}

std::vector<std::vector<std::int64_t>> rows_of(const IntMatrix& a) {
  std::vector<std::vector<std::int64_t>> out(a.rows(), std::vector<std::int64_t>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r][c] = a(r, c);
  return out;
}

}  // namespace

TEST_SUITE("smith") {

TEST_CASE("Smith form matches determinantal divisors") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    const IntMatrix a = random_matrix(rng, rows, cols, trial % 3 == 0 ? 1 : 6);
    const SmithForm s = smith_normal_form(a);
    const IntMatrix d = s.U * a * s.V;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        CHECK(d(r, c) == (r == c ? s.diagonal[r] : 0));
    CHECK(s.U * s.U_inv == IntMatrix::identity(rows));
    CHECK(s.V * s.V_inv == IntMatrix::identity(cols));
    const auto dk = oracle::determinantal_divisors(rows_of(a));
    std::int64_t prev = 1;
    for (std::size_t k = 0; k < dk.size(); ++k) {
      const std::int64_t expected = dk[k] == 0 ? 0 : dk[k] / prev;
      CHECK(s.diagonal[k] == expected);
      if (dk[k] != 0) prev = dk[k];
    }
    for (std::size_t k = 0; k + 1 < s.rank; ++k) CHECK(s.diagonal[k + 1] % s.diagonal[k] == 0);
  }
}

TEST_CASE("solve_mod finds solutions of consistent systems and rejects inconsistent ones") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t n = std::vector<std::int64_t>{2, 3, 4, 6, 5}[static_cast<std::size_t>(trial % 5)];
    const IntMatrix a = random_matrix(rng, 2 + trial % 5, 1 + trial % 4, 3);
    std::vector<std::int64_t> x(a.cols());
    std::uniform_int_distribution<int> d(0, 5);
    for (auto& v : x) v = d(rng);
    auto b = a.apply(x);
    const auto sol = solve_mod(a, b, n);
    REQUIRE(sol.has_value());
    const auto check = a.apply(*sol);
    for (std::size_t r = 0; r < b.size(); ++r) {
      const bool same = oracle::mod(check[r] - b[r], n) == 0;
      CHECK(same);
    }
  }
  IntMatrix a(2, 1);
  a(0, 0) = 2;
  a(1, 0) = 2;
  CHECK(!solve_mod(a, std::vector<std::int64_t>{1, 1}, 4).has_value());
  CHECK(!solve_mod(a, std::vector<std::int64_t>{2, 0}, 4).has_value());
  CHECK(solve_mod(a, std::vector<std::int64_t>{2, 2}, 4).has_value());
}

TEST_CASE("rank modulo primes agrees with plain elimination") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = random_matrix(rng, 1 + trial % 6, 1 + trial % 5, 2);
    for (std::int64_t p : {2, 3, 5}) CHECK(rank_mod_prime(a, p) == oracle::rank_mod(rows_of(a), p));
  }
}

}  // TEST_SUITE
