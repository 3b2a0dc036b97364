#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twistlab/cochain.hpp"
#include "twistlab/smith.hpp"

namespace twistlab {

/// Alternating-sum Cech differential; faces of a tuple may contain repeats.
CechCochain coboundary(const CechCochain& c);

bool is_cocycle(const CechCochain& c);
/// Degree 2 only: c_{iii}(x) = 0 everywhere.
bool is_normalized(const CechCochain& c);

struct Normalization {
  CechCochain normalized;  // c - delta(b)
  CechCochain b;           // b_{ii} = c_{iii}, zero off the diagonal
};

/// Throws PreconditionError when c is not a 2-cocycle.
Normalization normalize(const CechCochain& c);

struct IdentityViolation {
  char identity = 'a';  // one of a..e
  std::vector<int> tuple;  // the (i, j, k) instance
  int point = -1;
  std::string detail;
};

struct IdentityReport {
  std::size_t instances_checked = 0;
  std::size_t violations = 0;
  std::optional<IdentityViolation> first;
  bool ok() const { return violations == 0; }
};

/// Checks the five consequences (a)-(e) of the cocycle identity for a normalized
/// 2-cocycle at every ordered triple (i, j, k) spanning a simplex, and every point.
IdentityReport check_norm_identities(const CechCochain& c);

/// Some (p-1)-cochain b with delta(b) = c, or nullopt when none exists.
std::optional<CechCochain> solve_coboundary(const CechCochain& c);

/// Matrix of the simplicial coboundary C^p -> C^{p+1} on increasing tuples.
IntMatrix coboundary_matrix(const Nerve& nerve, int p);

/// H^p of the simplicial cochain complex with coefficients Z/modulus (modulus 0: Z).
class SimplicialCohomology {
 public:
  SimplicialCohomology(std::shared_ptr<const Nerve> nerve, int degree, std::int64_t modulus);

  int degree() const { return degree_; }
  std::int64_t modulus() const { return modulus_; }
  /// Orders of the cyclic summands, 0 meaning a copy of Z. Trivial summands are dropped.
  const std::vector<std::int64_t>& orders() const { return orders_; }
  bool is_trivial() const { return orders_.empty(); }
  /// Cocycle representatives of the summand generators, on nerve.simplices(degree).
  const std::vector<std::vector<std::int64_t>>& generators() const { return generators_; }

  /// Coordinates of the class of a cocycle (values on nerve.simplices(degree)),
  /// reduced mod each finite order. Throws PreconditionError for non-cocycles.
  std::vector<std::int64_t> class_of(std::span<const std::int64_t> cocycle) const;
  bool is_cocycle(std::span<const std::int64_t> values) const;

 private:
  std::shared_ptr<const Nerve> nerve_;
  int degree_;
  std::int64_t modulus_;
  IntMatrix delta_;
  IntMatrix v_inv_;                    // from the Smith form of delta_p
  std::vector<std::size_t> kernel_cols_;
  std::vector<std::int64_t> scale_;    // lattice scale for each kept column
  IntMatrix quotient_u_;               // from the Smith form of the relation matrix
  std::vector<std::size_t> kept_rows_; // rows of quotient_u_ giving nontrivial summands
  std::vector<std::int64_t> orders_;
  std::vector<std::vector<std::int64_t>> generators_;
};

/// H^p(nerve, G) = sum over cyclic factors Z/n_j of H^p(nerve, Z/n_j).
class CohomologyGroup {
 public:
  CohomologyGroup(std::shared_ptr<const Nerve> nerve, FinAbGroup group, int degree);

  int degree() const { return degree_; }
  const FinAbGroup& group() const { return group_; }
  const std::vector<std::int64_t>& cyclic_orders() const { return orders_; }
  bool is_trivial() const { return orders_.empty(); }
  /// Normalized nerve-mode cocycles generating each summand.
  const std::vector<CechCochain>& generators() const { return generators_; }
  const std::vector<SimplicialCohomology>& factors() const { return factors_; }

  /// Coordinates of [c] in the generators. c must be a nerve-mode cocycle of this degree.
  std::vector<std::int64_t> class_of(const CechCochain& c) const;

 private:
  std::shared_ptr<const Nerve> nerve_;
  FinAbGroup group_;
  int degree_;
  std::vector<SimplicialCohomology> factors_;
  std::vector<std::int64_t> orders_;
  std::vector<CechCochain> generators_;
};

CohomologyGroup cohomology(std::shared_ptr<const Nerve> nerve, const FinAbGroup& group, int degree);
SimplicialCohomology integer_cohomology(std::shared_ptr<const Nerve> nerve, int degree);

}  // namespace twistlab
