#include "fockideal/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace fockideal {

namespace {

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

int tuple_shell(const std::vector<int>& g) {
  int s = 0;
  for (int v : g) s = std::max(s, std::abs(v));
  return s;
}

// Integer tuples g in [-m, m]^(2n), ordered by shell then lexicographically.
std::vector<std::vector<int>> enumerate_tuples(const LatticeSpec& spec) {
  const int two_n = 2 * spec.dim;
  const int m = spec.max_shell;
  std::vector<std::vector<int>> tuples;
  tuples.reserve(static_cast<std::size_t>(cumulative_count(spec.dim, m)));
  std::vector<int> g(static_cast<std::size_t>(two_n), -m);
  for (;;) {
    tuples.push_back(g);
    int k = two_n - 1;
    while (k >= 0 && g[static_cast<std::size_t>(k)] == m) {
      g[static_cast<std::size_t>(k)] = -m;
      --k;
    }
    if (k < 0) break;
    ++g[static_cast<std::size_t>(k)];
  }
  // The odometer is lexicographic, so a stable sort on the shell alone keeps
  // the lexicographic order within each shell.
  std::stable_sort(tuples.begin(), tuples.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     return tuple_shell(a) < tuple_shell(b);
                   });
  return tuples;
}

ComplexPoint to_point(const std::vector<int>& g, double r) {
  std::vector<std::complex<double>> c(g.size() / 2);
  for (std::size_t j = 0; j < c.size(); ++j)
    c[j] = std::complex<double>(r * g[2 * j], r * g[2 * j + 1]);
  return ComplexPoint(std::move(c));
}

}  // namespace

std::int64_t shell_count(int dim, int shell) {
  if (shell == 0) return 1;
  return ipow(2 * shell + 1, 2 * dim) - ipow(2 * shell - 1, 2 * dim);
}

std::int64_t cumulative_count(int dim, int max_shell) {
  return ipow(2 * max_shell + 1, 2 * dim);
}

std::vector<ComplexPoint> enumerate(const LatticeSpec& spec) {
  const auto tuples = enumerate_tuples(spec);
  std::vector<ComplexPoint> pts;
  pts.reserve(tuples.size());
  for (const auto& g : tuples) pts.push_back(to_point(g, spec.spacing));
  return pts;
}

std::vector<int> shell_index(const LatticeSpec& spec) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cumulative_count(spec.dim, spec.max_shell)));
  for (int k = 0; k <= spec.max_shell; ++k) {
    const std::int64_t c = shell_count(spec.dim, k);
    for (std::int64_t i = 0; i < c; ++i) out.push_back(k);
  }
  return out;
}

bool covering_check(const LatticeSpec& spec, const std::vector<ComplexPoint>& samples) {
  const double r = spec.spacing;
  const double half = r / 2.0;
  const double reach = r * (spec.max_shell - 0.5);
  for (const auto& z : samples) {
    if (z.dim() != spec.dim)
      throw std::invalid_argument("covering_check: sample dimension mismatch");
    if (z.sup_norm() > reach)
      throw std::invalid_argument("covering_check: sample outside the covered region");
    // Nearest lattice point per real coordinate; closed-ball membership.
    double worst = 0.0;
    for (int k = 0; k < 2 * spec.dim; ++k) {
      const double x = z.real_coord(k);
      const double g = std::round(x / r);
      worst = std::max(worst, std::abs(x - g * r));
    }
    if (worst > half * (1.0 + 1e-12)) return false;
  }
  // Interior disjointness of the closed half-spacing balls: distinct lattice
  // points must be at sup distance >= r, so the open r/2 balls cannot overlap.
  const auto pts = enumerate(LatticeSpec(r, spec.dim, std::min(spec.max_shell, 2)));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (sup_dist(pts[i], pts[j]) < r * (1.0 - 1e-12)) return false;
  return true;
}

SublatticePartition partition(const LatticeSpec& spec, int factor) {
  if (factor < 2) throw std::invalid_argument("partition: factor must be >= 2");
  const int two_n = 2 * spec.dim;
  const std::int64_t n_classes = ipow(factor, two_n);
  SublatticePartition part{spec, factor, {}};
  part.classes.assign(static_cast<std::size_t>(n_classes), {});
  // Distribute in enumeration order so each class inherits the global order.
  for (const auto& g : enumerate_tuples(spec)) {
    // Mixed-radix class id from the nonnegative residues of g mod factor.
    std::int64_t id = 0;
    for (int v : g) {
      int res = v % factor;
      if (res < 0) res += factor;
      id = id * factor + res;
    }
    part.classes[static_cast<std::size_t>(id)].push_back(to_point(g, spec.spacing));
  }
  return part;
}

}  // namespace fockideal
