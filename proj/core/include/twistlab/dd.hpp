#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twistlab/cech.hpp"
#include "twistlab/cochain.hpp"
#include "twistlab/extension.hpp"
#include "twistlab/groupoid.hpp"

namespace twistlab {

/// nu_tau = conj(tau(c)) on c's own nerve and mode, one row per character in dual_group order.
/// Throws PreconditionError unless c is a normalized 2-cochain.
std::vector<UnimodularCochain> m_star(const CechCochain& c);

struct DDRow {
  std::size_t tau_index = 0;
  Character tau;
  std::int64_t order = 1;  // order d of tau
  UnimodularCochain nu;
  /// nu_tau = exp(2 pi i a / d) with a a coboundary in Z/d coefficients.
  bool mu_trivial = false;
  std::optional<CechCochain> witness_b;
  /// Coordinates of delta(lift(a)) / d in integer_cohomology(nerve, 3); empty in pointwise mode.
  std::vector<std::int64_t> h3_class;
  bool trivial = false;  // the H^3 class is zero
};

struct DDReport {
  FinAbGroup group;
  CochainMode mode = CochainMode::nerve;
  std::vector<std::int64_t> h3_orders;  // summands of H^3(nerve, Z), 0 for Z
  std::vector<DDRow> rows;
  bool trivial = true;  // every row trivial
  std::string note;
};

struct DDOptions {
  /// When set, a is lifted to a + d k with k drawn uniformly from [-3, 3] per simplex.
  std::optional<std::uint64_t> lift_seed;
};

/// Per-character lift-and-divide connecting map into H^3(nerve, Z), plus the Z/d triviality test.
/// Throws PreconditionError unless c is a normalized 2-cocycle.
DDReport dd_class(const CechCochain& c, const DDOptions& options = {});

struct RankOneReport {
  std::size_t projection_checks = 0;
  std::size_t partial_isometry_checks = 0;
  std::size_t product_checks = 0;
  std::size_t associativity_checks = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
};

/// Builds p(i) = indicator of U_i at entry (i, i) and v(i, j) = indicator of U_ij at entry (i, j)
/// in A(nu) and checks exactly: p(i) self-adjoint idempotents, v v* = p(i) and v* v = p(j) on U_ij,
/// v(i,j) v(j,k) = conj(nu_ijk) v(i,k) on U_ijk, and associativity of the v's on quadruple overlaps.
/// nu must live on the nerve of a cover.
RankOneReport rank_one_relations_check(const UnimodularCochain& nu);

/// psi : Y -> X with the lifting data V_j of a cover W of X.
struct PipelineInput {
  std::vector<int> psi;
  std::shared_ptr<const Cover> base_cover;  // W, a cover of X = {0..|X|-1}
  std::vector<std::vector<int>> lifts;      // V_j, subsets of Y with psi|V_j a bijection onto W_j
  CentralExtension extension;               // over relation_groupoid(psi)
  /// Section of the blown-up extension, indexed by arrows of the blow-up of R(psi) by the V_j.
  /// When absent, extension.section is blown up instead.
  std::optional<std::vector<int>> section;
};

struct PipelineResult {
  GroupoidCocycle2 phi;               // extracted on the blow-up of R(psi)
  CechCochain pointwise;              // c_ijk(x) read off through the identification with Gamma_W
  std::optional<CechCochain> nerve;   // the same cochain when it is constant on every overlap
  DDReport report;
};

/// Throws InputError when psi is not surjective, a V_j is not a bijection onto W_j, or the
/// extension does not live over R(psi); PreconditionError when no usable section is given.
PipelineResult pipeline_local_homeo(const PipelineInput& input);

/// Extension of R(psi) with cocycle c0_{j(y1) j(y2) j(y3)}(psi(y)), j(y) the first V_j containing y.
/// c0 must be a normalized cocycle on the nerve of W.
CentralExtension pullback_extension(const std::vector<int>& psi, const std::vector<std::vector<int>>& lifts,
                                    const CechCochain& c0);

}  // namespace twistlab
