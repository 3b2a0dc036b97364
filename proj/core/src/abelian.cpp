#include "twistlab/abelian.hpp"

#include <numbers>
#include <numeric>
#include <sstream>

#include "twistlab/errors.hpp"

namespace twistlab {

__extension__ typedef __int128 i128;

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

RootOfUnity::RootOfUnity(std::int64_t num, std::int64_t den) {
  if (den < 1) throw InputError("root of unity needs a positive denominator");
  num = mod(num, den);
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

RootOfUnity RootOfUnity::conj() const { return RootOfUnity(-num_, den_); }

RootOfUnity RootOfUnity::pow(std::int64_t k) const {
  return RootOfUnity(static_cast<std::int64_t>((static_cast<i128>(num_) * mod(k, den_)) % den_), den_);
}

std::complex<double> RootOfUnity::value() const {
  if (num_ == 0) return {1.0, 0.0};
  // exact values at the quarter turns keep small examples free of rounding noise
  if (den_ == 2) return {-1.0, 0.0};
  if (den_ == 4) return num_ == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
  return std::polar(1.0, angle);
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  const std::int64_t l = std::lcm(a.den_, b.den_);
  return RootOfUnity(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
}

std::string RootOfUnity::to_string() const {
  std::ostringstream os;
  os << "exp(2pi i " << num_ << "/" << den_ << ")";
  return os.str();
}

FinAbGroup::FinAbGroup(std::vector<std::int64_t> cyclic_orders) : orders_(std::move(cyclic_orders)) {
  for (std::int64_t n : orders_) {
    if (n < 1) throw InputError("cyclic orders must be >= 1");
    order_ *= static_cast<std::size_t>(n);
    if (order_ > (std::size_t{1} << 40)) throw InputError("group too large");
  }
}

std::int64_t FinAbGroup::exponent() const {
  std::int64_t e = 1;
  for (std::int64_t n : orders_) e = std::lcm(e, n);
  return e;
}

GroupElem FinAbGroup::zero() const { return GroupElem{std::vector<std::int64_t>(orders_.size(), 0)}; }

GroupElem FinAbGroup::element(std::vector<std::int64_t> components) const {
  if (components.size() != orders_.size())
    throw InputError("group element has " + std::to_string(components.size()) + " components, group " +
                     to_string() + " needs " + std::to_string(orders_.size()));
  for (std::size_t j = 0; j < orders_.size(); ++j) components[j] = mod(components[j], orders_[j]);
  return GroupElem{std::move(components)};
}

bool FinAbGroup::contains(const GroupElem& g) const {
  if (g.c.size() != orders_.size()) return false;
  for (std::size_t j = 0; j < orders_.size(); ++j)
    if (g.c[j] < 0 || g.c[j] >= orders_[j]) return false;
  return true;
}

void FinAbGroup::check(const GroupElem& g) const {
  if (!contains(g)) throw InputError("element does not belong to group " + to_string());
}

GroupElem FinAbGroup::add(const GroupElem& g, const GroupElem& h) const {
  check(g);
  check(h);
  GroupElem r = g;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    r.c[j] += h.c[j];
    if (r.c[j] >= orders_[j]) r.c[j] -= orders_[j];
  }
  return r;
}

GroupElem FinAbGroup::neg(const GroupElem& g) const {
  check(g);
  GroupElem r = g;
  for (std::size_t j = 0; j < orders_.size(); ++j) r.c[j] = r.c[j] == 0 ? 0 : orders_[j] - r.c[j];
  return r;
}

GroupElem FinAbGroup::sub(const GroupElem& g, const GroupElem& h) const { return add(g, neg(h)); }

GroupElem FinAbGroup::scale(const GroupElem& g, std::int64_t k) const {
  check(g);
  GroupElem r = g;
  for (std::size_t j = 0; j < orders_.size(); ++j)
    r.c[j] = static_cast<std::int64_t>((static_cast<i128>(g.c[j]) * mod(k, orders_[j])) % orders_[j]);
  return r;
}

bool FinAbGroup::is_zero(const GroupElem& g) const {
  for (std::int64_t v : g.c)
    if (v != 0) return false;
  return true;
}

std::size_t FinAbGroup::index_of(const GroupElem& g) const {
  check(g);
  std::size_t idx = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) idx = idx * static_cast<std::size_t>(orders_[j]) + static_cast<std::size_t>(g.c[j]);
  return idx;
}

GroupElem FinAbGroup::element_at(std::size_t index) const {
  if (index >= order_) throw InputError("group element index out of range");
  GroupElem g = zero();
  for (std::size_t j = orders_.size(); j-- > 0;) {
    const auto n = static_cast<std::size_t>(orders_[j]);
    g.c[j] = static_cast<std::int64_t>(index % n);
    index /= n;
  }
  return g;
}

std::vector<GroupElem> FinAbGroup::elements() const {
  std::vector<GroupElem> out;
  out.reserve(order_);
  for (std::size_t k = 0; k < order_; ++k) out.push_back(element_at(k));
  return out;
}

std::string FinAbGroup::to_string() const {
  if (orders_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t j = 0; j < orders_.size(); ++j) os << (j ? " x " : "") << "Z/" << orders_[j];
  return os.str();
}

std::vector<Character> dual_group(const FinAbGroup& group) {
  std::vector<Character> out;
  out.reserve(group.order());
  for (const GroupElem& g : group.elements()) out.push_back(Character{g.c});
  return out;
}

RootOfUnity char_eval(const FinAbGroup& group, const Character& tau, const GroupElem& g) {
  if (!group.contains(g) || tau.exponents.size() != group.rank())
    throw InputError("character and element do not belong to group " + group.to_string());
  const std::int64_t l = group.exponent();
  std::int64_t num = 0;
  const auto& n = group.cyclic_orders();
  for (std::size_t j = 0; j < n.size(); ++j) {
    const std::int64_t term = mod(tau.exponents[j] * g.c[j], n[j]) * (l / n[j]);
    num = mod(num + term, l);
  }
  return RootOfUnity(num, l);
}

std::int64_t character_order(const FinAbGroup& group, const Character& tau) {
  std::int64_t d = 1;
  const auto& n = group.cyclic_orders();
  for (std::size_t j = 0; j < n.size(); ++j) d = std::lcm(d, n[j] / std::gcd(mod(tau.exponents[j], n[j]), n[j]));
  return d;
}

bool is_trivial(const Character& tau) {
  for (std::int64_t m : tau.exponents)
    if (m != 0) return false;
  return true;
}

}  // namespace twistlab
