#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "twistlab/cech.hpp"
#include "twistlab/extension.hpp"
#include "twistlab/groupoid.hpp"

namespace twistlab {

using Rng = std::mt19937_64;

/// Each point joins each set with probability density; every point lands in at least one
/// set and every set gets at least one point. Points are "x0".., labels "U0"...
Cover random_cover(Rng& rng, std::size_t num_points, std::size_t num_sets, double density = 0.5);

/// One of Z/2, Z/3, Z/4, Z/2 x Z/2.
FinAbGroup random_small_group(Rng& rng);

/// Uniform values on every ordered tuple of the domain.
CechCochain random_cochain(Rng& rng, std::shared_ptr<const Nerve> nerve, const FinAbGroup& group, int degree,
                           CochainMode mode);

/// Normalized 2-cocycle: a random combination of cohomology generators (nerve mode only)
/// plus the coboundary of a random 1-cochain, then normalized.
CechCochain random_normalized_cocycle(Rng& rng, std::shared_ptr<const Nerve> nerve, const FinAbGroup& group,
                                      CochainMode mode);

/// Z/m acting on {0..n-1} through powers of perm (perm^m must be the identity):
/// arrow k * n + x goes from x to perm^k(x).
FinGroupoid action_groupoid(const std::vector<int>& perm, std::size_t m);

/// phi(k1, k2) = carry(k1 + k2 >= m) * g on an action groupoid of Z/m, a normalized cocycle.
GroupoidCocycle2 carry_cocycle(std::shared_ptr<const FinGroupoid> action, std::size_t m, const FinAbGroup& group,
                               const GroupElem& g);

/// base + d f for a random f vanishing on units.
GroupoidCocycle2 perturb_by_coboundary(Rng& rng, const GroupoidCocycle2& base);

}  // namespace twistlab
