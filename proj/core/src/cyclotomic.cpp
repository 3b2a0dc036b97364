#include "twistlab/cyclotomic.hpp"

#include <mutex>
#include <numeric>
#include <vector>

#include "twistlab/errors.hpp"

namespace twistlab {

Cyclotomic Cyclotomic::integer(std::int64_t n) {
  Cyclotomic out;
  if (n != 0) out.terms_[RootOfUnity::one()] = n;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  for (const auto& [r, k] : o.terms_) {
    auto& slot = terms_[r];
    slot += k;
    if (slot == 0) terms_.erase(r);
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  for (const auto& [r, k] : o.terms_) {
    auto& slot = terms_[r];
    slot -= k;
    if (slot == 0) terms_.erase(r);
  }
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic out;
  for (const auto& [ra, ka] : a.terms_)
    for (const auto& [rb, kb] : b.terms_) {
      Cyclotomic t;
      t.terms_[ra * rb] = ka * kb;
      out += t;
    }
  return out;
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic out;
  for (const auto& [r, k] : terms_) out.terms_[r.conj()] = k;
  return out;
}

namespace {

const std::vector<std::int64_t>& phi_locked(std::int64_t n, std::map<std::int64_t, std::vector<std::int64_t>>& cache) {
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d of n
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<std::int64_t> q = phi_locked(d, cache);
    std::vector<std::int64_t> quot(p.size() - q.size() + 1, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
      const std::int64_t coeff = p[k + q.size() - 1];
      quot[k] = coeff;
      for (std::size_t t = 0; t < q.size(); ++t) p[k + t] -= coeff * q[t];
    }
    p = std::move(quot);
  }
  return cache.emplace(n, std::move(p)).first->second;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, std::vector<std::int64_t>> cache;
  if (n < 1) throw InputError("cyclotomic polynomial index must be positive");
  std::lock_guard<std::mutex> lock(mu);
  return phi_locked(n, cache);
}

bool Cyclotomic::is_zero() const {
  if (terms_.empty()) return true;
  std::int64_t n = 1;
  for (const auto& [r, k] : terms_) n = std::lcm(n, r.den());
  std::vector<std::int64_t> poly(static_cast<std::size_t>(n), 0);
  for (const auto& [r, k] : terms_) poly[static_cast<std::size_t>(r.num() * (n / r.den()))] += k;
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = poly.size(); k-- > deg;) {
    const std::int64_t coeff = poly[k];
    if (coeff == 0) continue;
    for (std::size_t t = 0; t <= deg; ++t) poly[k - deg + t] -= coeff * phi[t];
  }
  for (std::size_t k = 0; k < std::min(deg, poly.size()); ++k)
    if (poly[k] != 0) return false;
  return true;
}

std::complex<double> Cyclotomic::value() const {
  std::complex<double> v = 0;
  for (const auto& [r, k] : terms_) v += static_cast<double>(k) * r.value();
  return v;
}

std::string Cyclotomic::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [r, k] : terms_) {
    if (!out.empty()) out += " + ";
    out += std::to_string(k) + "*" + r.to_string();
  }
  return out;
}

}  // namespace twistlab
