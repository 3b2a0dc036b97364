#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "twistlab/abelian.hpp"
#include "twistlab/cochain.hpp"
#include "twistlab/groupoid.hpp"

namespace twistlab {

/// G-valued function on the composable pairs of a finite groupoid.
class GroupoidCocycle2 {
 public:
  GroupoidCocycle2(std::shared_ptr<const FinGroupoid> base, FinAbGroup group);

  const FinGroupoid& base() const { return *base_; }
  const std::shared_ptr<const FinGroupoid>& base_ptr() const { return base_; }
  const FinAbGroup& group() const { return group_; }

  const GroupElem& at(int a, int b) const { return values_[base_->pair_index(a, b)]; }
  const GroupElem& at_pair(std::size_t pair) const { return values_[pair]; }
  void set(int a, int b, const GroupElem& v);
  void set_pair(std::size_t pair, const GroupElem& v);

  /// phi(a,b) + phi(ab,c) = phi(b,c) + phi(a,bc) on all composable triples.
  bool is_cocycle() const;
  /// phi(u, g) = 0 = phi(g, u) for units u.
  bool is_normalized() const;
  bool is_zero() const;

  GroupoidCocycle2 operator+(const GroupoidCocycle2& o) const;
  GroupoidCocycle2 operator-(const GroupoidCocycle2& o) const;
  friend bool operator==(const GroupoidCocycle2& a, const GroupoidCocycle2& b) {
    return a.base_ == b.base_ && a.group_ == b.group_ && a.values_ == b.values_;
  }

 private:
  void check_compatible(const GroupoidCocycle2& o) const;

  std::shared_ptr<const FinGroupoid> base_;
  FinAbGroup group_;
  std::vector<GroupElem> values_;
};

/// (d f)(a, b) = f(a) + f(b) - f(ab).
GroupoidCocycle2 groupoid_coboundary(std::shared_ptr<const FinGroupoid> base, const FinAbGroup& group,
                                     const std::vector<GroupElem>& f);

struct GroupoidNormalization {
  GroupoidCocycle2 normalized;  // phi - d f
  std::vector<GroupElem> f;     // f(u) = phi(u, u) on units, 0 elsewhere
};

/// Throws PreconditionError when phi is not a cocycle.
GroupoidNormalization normalize_groupoid_cocycle(const GroupoidCocycle2& phi);

/// Some f with d f = phi, or nullopt.
std::optional<std::vector<GroupElem>> solve_groupoid_coboundary(const GroupoidCocycle2& phi);

/// phi_c((i,x,j),(j,x,k)) = c_{ijk}(x) on the blow-up of the cover of c's nerve.
/// Throws PreconditionError for non-normalized c.
GroupoidCocycle2 cech_to_groupoid_cocycle(const CechCochain& c, const Blowup& blowup);

/// Central extension G x units -> Sigma -> Gamma. Units of Sigma and Gamma are identified.
struct CentralExtension {
  std::shared_ptr<const FinGroupoid> total;
  std::shared_ptr<const FinGroupoid> base;
  FinAbGroup group;
  std::vector<int> iota;  // u * |G| + index(g) -> arrow of total
  std::vector<int> pi;    // arrow of total -> arrow of base
  std::optional<std::vector<int>> section;  // arrow of base -> arrow of total

  int iota_at(int u, const GroupElem& g) const {
    return iota[static_cast<std::size_t>(u) * group.order() + group.index_of(g)];
  }
};

/// E(Gamma, phi): arrows (g, gamma) numbered gamma * |G| + index(g), product
/// (g + h + phi(gamma1, gamma2), gamma1 gamma2), section gamma -> (0, gamma).
/// phi must be normalized; it need not be a cocycle (the axiom check will say so).
CentralExtension build_extension(const GroupoidCocycle2& phi);

/// Index in build_extension's numbering.
inline int extension_arrow(const FinAbGroup& group, int gamma, const GroupElem& g) {
  return gamma * static_cast<int>(group.order()) + static_cast<int>(group.index_of(g));
}

/// Groupoid axioms of the total space, pi a surjective morphism, iota an injective
/// morphism onto pi^-1(units) with iota(u, 0) = u, centrality, and the section if present.
AxiomReport extension_axioms_check(const CentralExtension& e);

struct ExtractedCocycle {
  GroupoidCocycle2 phi;
  /// Proper isomorphism build_extension(phi) -> e, indexed by extension_arrow.
  std::vector<int> witness;
};

/// Renormalizes the section to kappa'(gamma) = kappa(r(gamma))^-1 kappa(gamma) and reads
/// phi off iota(r(gamma1), phi(gamma1, gamma2)) = kappa'(gamma1) kappa'(gamma2) kappa'(gamma1 gamma2)^-1.
ExtractedCocycle extract_cocycle(const CentralExtension& e, const std::vector<int>& section);
ExtractedCocycle extract_cocycle(const CentralExtension& e);

/// Fibered product over the base modulo (g s1, s2) ~ (s1, g s2); carries a section when both inputs do.
CentralExtension baer_sum(const CentralExtension& e1, const CentralExtension& e2);
/// Same groupoid with iota'(u, g) = iota(u, -g).
CentralExtension inverse_extension(const CentralExtension& e);

/// True when map (total arrows of a -> total arrows of b) is a groupoid isomorphism
/// commuting with the projections and the inclusions.
bool check_proper_isomorphism(const CentralExtension& a, const CentralExtension& b, const std::vector<int>& map);

/// Decides proper isomorphism through the cohomology of the extracted cocycles; returns the
/// explicit map when one exists. Both extensions need sections and a common base.
std::optional<std::vector<int>> properly_isomorphic(const CentralExtension& a, const CentralExtension& b);

/// Blow-up of an extension along unit subsets: Sigma' = {(i, s, j)} over Gamma' = {(i, pi(s), j)}.
struct BlownUpExtension {
  CentralExtension extension;
  Blowup total;
  Blowup base;
};

BlownUpExtension blowup_extension(const CentralExtension& e, const std::vector<std::vector<int>>& unit_subsets,
                                  bool require_cover = true);

}  // namespace twistlab
