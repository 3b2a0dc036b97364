#pragma once

#include <compare>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "twistlab/abelian.hpp"
#include "twistlab/cover.hpp"

namespace twistlab {

enum class CochainMode { pointwise, nerve };

std::string to_string(CochainMode mode);
CochainMode parse_mode(std::string_view text);

/// Index tuple plus a point of its carrier (pointwise mode) or -1 (nerve mode).
struct CochainKey {
  std::vector<int> tuple;
  int point = -1;

  friend bool operator==(const CochainKey&, const CochainKey&) = default;
  friend auto operator<=>(const CochainKey&, const CochainKey&) = default;
};

/// All tuples in I^len whose entries span a simplex, in lexicographic order.
std::vector<std::vector<int>> ordered_tuples(const Nerve& nerve, int len);

/// Every key on which a degree-p cochain is defined, in lexicographic order.
std::vector<CochainKey> cochain_domain(const Nerve& nerve, int degree, CochainMode mode);

/// G-valued Cech p-cochain, defined on ordered (p+1)-tuples (repeats allowed) whose
/// entries span a simplex. Only nonzero values are stored; everything else reads as 0.
class CechCochain {
 public:
  CechCochain(std::shared_ptr<const Nerve> nerve, FinAbGroup group, int degree, CochainMode mode);

  const Nerve& nerve() const { return *nerve_; }
  const std::shared_ptr<const Nerve>& nerve_ptr() const { return nerve_; }
  const FinAbGroup& group() const { return group_; }
  int degree() const { return degree_; }
  CochainMode mode() const { return mode_; }

  /// Value on a tuple; in nerve mode the point is ignored, in pointwise mode it is required.
  GroupElem at(std::span<const int> tuple, int point = -1) const;
  GroupElem at(const CochainKey& key) const { return at(key.tuple, key.point); }
  void set(std::span<const int> tuple, int point, const GroupElem& value);
  void set(const CochainKey& key, const GroupElem& value) { set(key.tuple, key.point, value); }

  const std::map<CochainKey, GroupElem>& entries() const { return values_; }
  bool is_zero() const { return values_.empty(); }
  std::vector<CochainKey> domain() const { return cochain_domain(*nerve_, degree_, mode_); }

  CechCochain operator+(const CechCochain& other) const;
  CechCochain operator-(const CechCochain& other) const;
  CechCochain operator-() const;
  friend bool operator==(const CechCochain& a, const CechCochain& b);

  /// Component j of every simplicial value, on nerve.simplices(degree) (nerve mode only).
  std::vector<std::int64_t> simplicial_component(std::size_t factor) const;

 private:
  void check_compatible(const CechCochain& other) const;
  CochainKey make_key(std::span<const int> tuple, int point) const;

  std::shared_ptr<const Nerve> nerve_;
  FinAbGroup group_;
  int degree_;
  CochainMode mode_;
  std::map<CochainKey, GroupElem> values_;
};

/// The alternating Cech cochain determined by values on the increasing tuples of the
/// nerve; values[j] holds component j on nerve.simplices(degree).
CechCochain from_simplicial(std::shared_ptr<const Nerve> nerve, const FinAbGroup& group, int degree,
                            const std::vector<std::vector<std::int64_t>>& values);

/// Circle-valued cochain with root-of-unity values; missing entries read as 1.
class UnimodularCochain {
 public:
  UnimodularCochain(std::shared_ptr<const Nerve> nerve, int degree, CochainMode mode);

  const Nerve& nerve() const { return *nerve_; }
  const std::shared_ptr<const Nerve>& nerve_ptr() const { return nerve_; }
  int degree() const { return degree_; }
  CochainMode mode() const { return mode_; }

  RootOfUnity at(std::span<const int> tuple, int point = -1) const;
  void set(std::span<const int> tuple, int point, const RootOfUnity& value);
  const std::map<CochainKey, RootOfUnity>& entries() const { return values_; }
  std::vector<CochainKey> domain() const { return cochain_domain(*nerve_, degree_, mode_); }

  /// prod_k nu(face_k)^{(-1)^k} == 1 on every (degree+1)-tuple.
  bool is_cocycle() const;
  /// nu_{i...i} == 1 everywhere.
  bool is_normalized() const;

  friend bool operator==(const UnimodularCochain& a, const UnimodularCochain& b) {
    return a.degree_ == b.degree_ && a.mode_ == b.mode_ && a.values_ == b.values_;
  }

 private:
  CochainKey make_key(std::span<const int> tuple, int point) const;

  std::shared_ptr<const Nerve> nerve_;
  int degree_;
  CochainMode mode_;
  std::map<CochainKey, RootOfUnity> values_;
};

}  // namespace twistlab
