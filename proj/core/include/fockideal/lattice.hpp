#pragma once

#include <cstdint>
#include <vector>

#include "fockideal/point.hpp"

namespace fockideal {

/// Square lattice r*(Z + iZ)^n truncated at a sup-norm shell.
///
/// Shell k holds the points with |a|_inf = r*k; it has
/// (2k+1)^(2n) - (2k-1)^(2n) points (shell 0 is the origin), so the
/// cumulative count through shell m is (2m+1)^(2n).
struct LatticeSpec {
  double spacing = 1.0;  // r > 0
  int dim = 1;           // n >= 1
  int max_shell = 0;

  LatticeSpec(double r, int n, int shells) : spacing(r), dim(n), max_shell(shells) {
    if (!(r > 0.0)) throw std::invalid_argument("LatticeSpec: spacing must be > 0");
    if (n < 1) throw std::invalid_argument("LatticeSpec: dimension must be >= 1");
    if (shells < 0) throw std::invalid_argument("LatticeSpec: max_shell must be >= 0");
  }

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

/// Number of lattice points in shell k.
std::int64_t shell_count(int dim, int shell);

/// Number of lattice points with shell index <= m, i.e. (2m+1)^(2n).
std::int64_t cumulative_count(int dim, int max_shell);

/// All lattice points with |a|_inf <= r*max_shell.
///
/// Deterministic order: nondecreasing shell, then lexicographic on the
/// flattened integer tuple (Re_1, Im_1, ..., Re_n, Im_n).
std::vector<ComplexPoint> enumerate(const LatticeSpec& spec);

/// Shell index of enumerated point i (parallel to enumerate()).
std::vector<int> shell_index(const LatticeSpec& spec);

/// True iff every sample lies in some closed sup-ball B(a_j, r/2), and the
/// closed balls of sampled lattice pairs have disjoint interiors.
/// Samples must satisfy |z|_inf <= r*(max_shell - 1/2); anything outside the
/// covered region is a rejected input, not a negative verdict.
bool covering_check(const LatticeSpec& spec, const std::vector<ComplexPoint>& samples);

/// Residue-class partition of the enumerated lattice: point r*g belongs to
/// the class of (g mod m), so there are m^(2n) classes and within one class
/// distinct points are >= m*r apart in sup norm.
struct SublatticePartition {
  LatticeSpec base;
  int factor;                                  // m >= 2
  std::vector<std::vector<ComplexPoint>> classes;  // size m^(2n)
};

SublatticePartition partition(const LatticeSpec& spec, int factor);

}  // namespace fockideal
