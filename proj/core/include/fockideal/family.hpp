#pragma once

#include <cstdint>
#include <vector>

#include "fockideal/measure.hpp"

namespace fockideal {

/// Seeded atomic measures for randomized checks: dimensions cycle through
/// 1..max_dim, up to max_atoms atoms uniform in the sup-norm box of the given
/// radius, weights uniform in [0.1, 2].
std::vector<AtomicMeasure> seeded_atomic_family(std::uint64_t seed, int count, int max_dim,
                                                int max_atoms, double sup_radius);

/// 50 clustered measures on C^1 with at most 30 atoms inside |z| <= 5.
/// Atom count, cluster count and cluster spread are stepped deterministically
/// by index; only centers, jitter and weights come from the seed, which keeps
/// the family's ratio extremes stable across seeds.
std::vector<AtomicMeasure> clustered_family(std::uint64_t seed);

}  // namespace fockideal
