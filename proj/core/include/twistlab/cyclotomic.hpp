#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "twistlab/abelian.hpp"

namespace twistlab {

/// Exact element of Z[zeta]: a formal integer combination of roots of unity.
/// Equality is decided in the cyclotomic field, so 1 + (-1) == 0 and
/// 1 + w + w^2 == 0 for a primitive cube root w.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(const RootOfUnity& r) { terms_[r] = 1; }  // NOLINT(google-explicit-constructor)
  static Cyclotomic integer(std::int64_t n);

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic conj() const;

  bool is_zero() const;
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).is_zero(); }

  std::complex<double> value() const;
  const std::map<RootOfUnity, std::int64_t>& terms() const { return terms_; }
  std::string to_string() const;

 private:
  std::map<RootOfUnity, std::int64_t> terms_;
};

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n);

}  // namespace twistlab
