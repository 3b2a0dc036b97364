#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twistlab/cover.hpp"

namespace twistlab {

/// Finite groupoid with units 0..num_units()-1 and arrows 0..num_arrows()-1.
/// Composition a*b is defined iff source(a) == range(b).
class FinGroupoid {
 public:
  using ComposeFn = std::function<int(int, int)>;

  /// Tabulates compose(a, b) on every composable pair. Shapes are validated;
  /// the groupoid axioms are not (see check_groupoid_axioms).
  FinGroupoid(std::size_t num_units, std::vector<int> source, std::vector<int> range, std::vector<int> unit_arrow,
              std::vector<int> inverse, const ComposeFn& compose);

  std::size_t num_units() const { return unit_arrow_.size(); }
  std::size_t num_arrows() const { return source_.size(); }
  int source(int a) const { return source_[static_cast<std::size_t>(a)]; }
  int range(int a) const { return range_[static_cast<std::size_t>(a)]; }
  int unit_arrow(int u) const { return unit_arrow_[static_cast<std::size_t>(u)]; }
  bool is_unit(int a) const { return unit_of_[static_cast<std::size_t>(a)] >= 0; }
  /// The unit u with unit_arrow(u) == a, or -1.
  int unit_of(int a) const { return unit_of_[static_cast<std::size_t>(a)]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }

  bool composable(int a, int b) const { return source(a) == range(b); }
  /// Throws InputError when source(a) != range(b).
  int compose(int a, int b) const;
  int compose_unchecked(int a, int b) const {
    return table_[offset_[static_cast<std::size_t>(a)] + pos_in_range_[static_cast<std::size_t>(b)]];
  }

  const std::vector<int>& arrows_with_range(int u) const { return with_range_[static_cast<std::size_t>(u)]; }
  const std::vector<int>& arrows_with_source(int u) const { return with_source_[static_cast<std::size_t>(u)]; }

  /// Composable pairs are numbered a-major, then by position of b in arrows_with_range(source(a)).
  std::size_t num_pairs() const { return table_.size(); }
  std::size_t pair_index(int a, int b) const;
  std::pair<int, int> pair_at(std::size_t index) const { return pairs_[index]; }

 private:
  std::vector<int> source_, range_, unit_arrow_, unit_of_, inverse_;
  std::vector<std::vector<int>> with_range_, with_source_;
  std::vector<std::size_t> offset_, pos_in_range_;
  std::vector<int> table_;
  std::vector<std::pair<int, int>> pairs_;
};

/// Same units, arrows, sources, ranges, inverses and composition.
bool same_groupoid(const FinGroupoid& a, const FinGroupoid& b);

struct AxiomReport {
  std::size_t violations = 0;
  std::vector<std::string> messages;  // the first few violations
  bool ok() const { return violations == 0; }
  void add(std::string message);
};

/// Unit laws, inverses, source/range of products and associativity, by exhaustive scan.
AxiomReport check_groupoid_axioms(const FinGroupoid& g);

/// The space with n points viewed as a groupoid: only unit arrows.
FinGroupoid unit_groupoid(std::size_t n);

/// Blow-up of a groupoid along a family of unit subsets V_i: arrows (i, gamma, j) with
/// range(gamma) in V_i and source(gamma) in V_j. Arrows are ordered by gamma, then i, then j;
/// units (i, u) by u, then i. With require_cover false the subsets may miss units, which
/// blows up the reduction to their union.
struct Blowup {
  std::shared_ptr<const FinGroupoid> groupoid;
  std::size_t num_sets = 0;
  std::vector<std::array<int, 3>> triples;          // arrow -> (i, gamma, j)
  std::vector<std::pair<int, int>> units;           // unit -> (i, u)
  std::vector<int> lookup;                          // (i * arrows + gamma) * sets + j -> arrow or -1
  std::size_t base_arrows = 0;

  /// Arrow (i, gamma, j), or -1 when it does not exist.
  int index_of(int i, int gamma, int j) const;
};

Blowup blowup(const FinGroupoid& g, const std::vector<std::vector<int>>& unit_subsets, bool require_cover = true);

/// Gamma_U = {(i, x, j) : x in U_i cap U_j}, the blow-up of X along the cover.
Blowup blowup_groupoid(const Cover& cover);

/// Principal groupoid R(psi) = {(y1, y2) : psi(y1) = psi(y2)} on Y, arrows ordered lexicographically.
struct RelationGroupoid {
  std::shared_ptr<const FinGroupoid> groupoid;
  std::vector<std::pair<int, int>> pairs;  // arrow -> (y1, y2); range y1, source y2
  std::vector<int> lookup;                  // y1 * |Y| + y2 -> arrow or -1
  int index_of(int y1, int y2) const;
};

/// psi maps Y = {0..psi.size()-1} onto X = {0..num_base_points-1}; throws InputError otherwise.
RelationGroupoid relation_groupoid(const std::vector<int>& psi, std::size_t num_base_points);

/// Arrows with equal source and range, as a subgroupoid with the same units.
struct Isotropy {
  std::shared_ptr<const FinGroupoid> groupoid;
  std::vector<int> arrows;  // isotropy arrow -> arrow of the ambient groupoid
};

Isotropy isotropy(const FinGroupoid& g);

struct CentralIsotropyReport {
  bool central = false;
  std::string reason;  // why not, when not central
  /// Orbit representative for each unit, when central.
  std::vector<int> orbit_rep;
};

/// Abelian isotropy groups plus an orbitwise identification iota(u, a) = gamma a gamma^-1 satisfying
/// iota(r(s), a) s = s iota(s(s), a) for every arrow s; checked exhaustively.
CentralIsotropyReport has_central_isotropy(const FinGroupoid& g);

}  // namespace twistlab
