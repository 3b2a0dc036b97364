#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace twistlab {

/// Element of a finite abelian group Z/n_1 x ... x Z/n_k, one residue per factor.
struct GroupElem {
  std::vector<std::int64_t> c;

  friend bool operator==(const GroupElem&, const GroupElem&) = default;
  friend auto operator<=>(const GroupElem&, const GroupElem&) = default;
};

/// exp(2 pi i num/den) with 0 <= num < den and gcd(num, den) = 1.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(std::int64_t num, std::int64_t den);

  static RootOfUnity one() { return {}; }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_one() const { return num_ == 0; }
  /// Multiplicative order; equals den().
  std::int64_t order() const { return den_; }

  RootOfUnity conj() const;
  RootOfUnity pow(std::int64_t k) const;
  std::complex<double> value() const;

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;

  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Character g -> exp(2 pi i sum_j m_j g_j / n_j) of a finite abelian group.
struct Character {
  std::vector<std::int64_t> exponents;

  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character&, const Character&) = default;
};

/// Finite abelian group presented as a product of cyclic factors.
///
/// Elements are also addressable by a mixed-radix index in [0, order()), with the
/// first factor varying slowest; elements() and dual_group() both use that order.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<std::int64_t> cyclic_orders);

  static FinAbGroup cyclic(std::int64_t n) { return FinAbGroup({n}); }
  static FinAbGroup trivial() { return FinAbGroup(std::vector<std::int64_t>{}); }

  const std::vector<std::int64_t>& cyclic_orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::size_t order() const { return order_; }
  /// lcm of the cyclic orders (1 for the trivial group).
  std::int64_t exponent() const;

  GroupElem zero() const;
  /// Builds an element, reducing every component into [0, n_j).
  GroupElem element(std::vector<std::int64_t> components) const;
  bool contains(const GroupElem& g) const;

  GroupElem add(const GroupElem& g, const GroupElem& h) const;
  GroupElem neg(const GroupElem& g) const;
  GroupElem sub(const GroupElem& g, const GroupElem& h) const;
  GroupElem scale(const GroupElem& g, std::int64_t k) const;
  bool is_zero(const GroupElem& g) const;

  std::size_t index_of(const GroupElem& g) const;
  GroupElem element_at(std::size_t index) const;
  std::vector<GroupElem> elements() const;

  std::string to_string() const;

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) { return a.orders_ == b.orders_; }

 private:
  void check(const GroupElem& g) const;

  std::vector<std::int64_t> orders_;
  std::size_t order_ = 1;
};

/// All characters of G, in the same mixed-radix order as G.elements().
std::vector<Character> dual_group(const FinAbGroup& group);

RootOfUnity char_eval(const FinAbGroup& group, const Character& tau, const GroupElem& g);

/// Order of tau in the dual group.
std::int64_t character_order(const FinAbGroup& group, const Character& tau);

bool is_trivial(const Character& tau);

}  // namespace twistlab
