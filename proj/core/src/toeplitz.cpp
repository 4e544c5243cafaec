#include "fockideal/toeplitz.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace fockideal {

namespace {

double factorial(int k) {
  double v = 1.0;
  for (int i = 2; i <= k; ++i) v *= i;
  return v;
}

// e_beta(w) = w^beta / sqrt(beta!)
std::complex<double> basis_eval(const std::vector<int>& beta, const ComplexPoint& w) {
  std::complex<double> v = 1.0;
  double norm = 1.0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    for (int p = 0; p < beta[i]; ++p) v *= w[static_cast<int>(i)];
    norm *= factorial(beta[i]);
  }
  return v / std::sqrt(norm);
}

// int_0^T t^m e^{-c t} dt
double lower_gamma_moment(int m, double c, double t_hi) {
  double v = (1.0 - std::exp(-c * t_hi)) / c;
  double tpow = 1.0;
  for (int j = 1; j <= m; ++j) {
    tpow *= t_hi;
    v = (j * v - tpow * std::exp(-c * t_hi)) / c;
  }
  return v;
}

template <typename F>
void for_each_composition_n(int k, int slots, F&& f) {
  std::vector<int> m(static_cast<std::size_t>(slots), 0);
  const double kfact = factorial(k);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == slots - 1) {
      m[static_cast<std::size_t>(pos)] = remaining;
      double denom = 1.0;
      for (int v : m) denom *= factorial(v);
      f(m, kfact / denom);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      m[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, k);
}

}  // namespace

std::vector<std::vector<int>> multi_indices(int n, int degree) {
  if (n < 1 || degree < 0) throw std::invalid_argument("multi_indices: n >= 1, degree >= 0");
  std::vector<std::vector<int>> out;
  std::vector<int> beta(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      beta[static_cast<std::size_t>(pos)] = remaining;
      out.push_back(beta);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      beta[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  for (int k = 0; k <= degree; ++k) rec(rec, 0, k);
  return out;
}

ToeplitzCompression build_atomic(const AtomicMeasure& nu) {
  const int m = static_cast<int>(nu.atoms.size());
  if (m < 1) throw std::invalid_argument("build_atomic: at least one atom required");
  Matrix g(m, m);
  for (int j = 0; j < m; ++j) {
    g(j, j) = nu.atoms[static_cast<std::size_t>(j)].weight;  // <k_w, k_w> = 1
    for (int k = 0; k < j; ++k) {
      const auto& aj = nu.atoms[static_cast<std::size_t>(j)];
      const auto& ak = nu.atoms[static_cast<std::size_t>(k)];
      g(j, k) = std::sqrt(aj.weight * ak.weight) * kernel_state_overlap(ak.location, aj.location);
    }
  }
  return ToeplitzCompression{ToeplitzCompression::Mode::AtomicGram, -1, true,
                             HermitianPSD::from_matrix(hermitian_from_lower(g))};
}

ToeplitzCompression build_truncated(const Measure& nu, int degree) {
  if (degree < 0) throw std::invalid_argument("build_truncated: degree must be >= 0");
  const int n = measure_dim(nu);
  const auto basis = multi_indices(n, degree);
  const int b = static_cast<int>(basis.size());

  if (const auto* a = std::get_if<AtomicMeasure>(&nu)) {
    // Columns sqrt(c_m) e_beta(w_m) e^{-|w_m|^2 / 2} make the compression a
    // Gram product, so it is positive semidefinite by construction.
    const int m = static_cast<int>(a->atoms.size());
    Matrix v(b, std::max(m, 1));
    v.setZero();
    for (int col = 0; col < m; ++col) {
      const auto& at = a->atoms[static_cast<std::size_t>(col)];
      const double pre = std::sqrt(at.weight) * std::exp(-0.5 * at.location.norm_sq());
      for (int row = 0; row < b; ++row)
        v(row, col) = pre * basis_eval(basis[static_cast<std::size_t>(row)], at.location);
    }
    Matrix mat = v * v.adjoint();
    return ToeplitzCompression{ToeplitzCompression::Mode::TruncatedBasis, degree, false,
                               HermitianPSD::from_matrix(hermitian_from_lower(mat))};
  }

  const auto& d = std::get<DensityMeasure>(nu);
  // Radial symbol: the monomials stay orthogonal, the matrix is diagonal.
  Matrix mat = Matrix::Zero(b, b);
  const double c = 1.0 + d.beta;
  for (int row = 0; row < b; ++row) {
    const auto& beta = basis[static_cast<std::size_t>(row)];
    double bfact = 1.0;
    for (int v : beta) bfact *= factorial(v);
    double entry = 0.0;
    for (std::size_t k = 0; k < d.poly.size(); ++k) {
      if (d.poly[k] == 0.0) continue;
      if (d.support_radius) {
        // dim 1 (enforced by truncate): pi/beta! * int_0^{N^2} t^{beta+k} e^{-ct} dt.
        entry += d.poly[k] * std::numbers::pi *
                 lower_gamma_moment(beta[0] + static_cast<int>(k), c,
                                    (*d.support_radius) * (*d.support_radius));
      } else {
        double inner = 0.0;
        for_each_composition_n(static_cast<int>(k), n, [&](const std::vector<int>& mm, double coeff) {
          double prod = coeff;
          for (int i = 0; i < n; ++i)
            prod *= std::numbers::pi * factorial(beta[static_cast<std::size_t>(i)] + mm[static_cast<std::size_t>(i)]) /
                    std::pow(c, beta[static_cast<std::size_t>(i)] + mm[static_cast<std::size_t>(i)] + 1);
          inner += prod;
        });
        entry += d.poly[k] * inner;
      }
    }
    mat(row, row) = entry / bfact;
  }
  return ToeplitzCompression{ToeplitzCompression::Mode::TruncatedBasis, degree, false,
                             HermitianPSD::from_matrix(mat)};
}

double berezin(const Measure& nu, const ComplexPoint& z) {
  if (const auto* a = std::get_if<AtomicMeasure>(&nu)) {
    double s = 0.0;
    for (const auto& at : a->atoms) s += at.weight * std::norm(kernel_state_overlap(z, at.location));
    return s;
  }
  return heat_transform(nu, 1.0, z);
}

double berezin_closed_form(const Measure& nu, const ComplexPoint& z) {
  if (const auto* a = std::get_if<AtomicMeasure>(&nu)) {
    double s = 0.0;
    for (const auto& at : a->atoms) s += at.weight * std::exp(-euclid_dist_sq(z, at.location));
    return s;
  }
  return heat_transform_closed_form(nu, 1.0, z);
}

NormBounds norm_bounds(const Measure& nu, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("norm_bounds: r must be > 0");
  NormBounds out;
  const int n = measure_dim(nu);
  double support = 0.0;
  if (const auto* a = std::get_if<AtomicMeasure>(&nu)) {
    if (!a->atoms.empty()) out.lower = s_numbers(build_atomic(*a).matrix).values.front();
    support = a->support_sup_radius();
  } else {
    const auto& d = std::get<DensityMeasure>(nu);
    if (!d.support_radius)
      throw std::invalid_argument("norm_bounds: compactly supported measure required");
    out.lower = s_numbers(build_truncated(nu, 12).matrix).values.front();
    support = *d.support_radius;
  }
  // Sup of the box mass over a half-spacing grid through the support plus the
  // surrounding r-lattice points.
  const double reach = support + r;
  const int grid_shell = static_cast<int>(std::ceil(reach / (r / 2.0)));
  for (const auto& z : enumerate(LatticeSpec(r / 2.0, n, grid_shell)))
    out.box_mass_sup = std::max(out.box_mass_sup, box_mass(nu, r, z));
  if (const auto* a = std::get_if<AtomicMeasure>(&nu))
    for (const auto& at : a->atoms)
      out.box_mass_sup = std::max(out.box_mass_sup, box_mass(nu, r, at.location));
  return out;
}

int frame_required_shell(double rho, int degree, int dim) {
  if (!(rho > 0.0)) throw std::invalid_argument("frame_required_shell: rho must be > 0");
  // |<g, k_b>|^2 <= e^{-t} sum_{k<=d} t^k / k!  at  t = |b|^2 >= (rho * shell)^2
  // for unit g in the degree-d span.
  auto envelope = [&](double t) {
    double s = 0.0, term = 1.0;
    for (int k = 0; k <= degree; ++k) {
      s += term;
      term *= t / (k + 1);
    }
    return std::exp(-t) * s;
  };
  for (int m = 1; m < 100000; ++m) {
    double tail = 0.0;
    for (int k = m + 1;; ++k) {
      const double term = static_cast<double>(shell_count(dim, k)) * envelope(rho * rho * k * k);
      tail += term;
      if (term < 1e-300 && k > m + 4) break;
    }
    if (tail < 1e-8) return m;
  }
  throw std::invalid_argument("frame_required_shell: no adequate shell below 10^5");
}

FrameEstimate frame_estimate(double rho, int degree, const LatticeSpec& spec, int trials,
                             std::uint64_t seed) {
  if (std::abs(spec.spacing - rho) > 1e-12 * std::max(rho, 1.0))
    throw std::invalid_argument("frame_estimate: lattice spacing must equal rho");
  if (trials < 1) throw std::invalid_argument("frame_estimate: trials must be >= 1");
  const int need = frame_required_shell(rho, degree, spec.dim);
  if (spec.max_shell < need)
    throw std::invalid_argument("frame_estimate: max_shell " + std::to_string(spec.max_shell) +
                                " is insufficient; required shell count is " +
                                std::to_string(need));

  const auto basis = multi_indices(spec.dim, degree);
  const auto pts = enumerate(spec);
  // Rows: basis values sqrt-normalized at every lattice point, with the
  // Gaussian half-weight folded in.
  Matrix overlap(static_cast<int>(pts.size()), static_cast<int>(basis.size()));
  for (int i = 0; i < overlap.rows(); ++i) {
    const auto& b = pts[static_cast<std::size_t>(i)];
    const double pre = std::exp(-0.5 * b.norm_sq());
    for (int j = 0; j < overlap.cols(); ++j)
      overlap(i, j) = pre * basis_eval(basis[static_cast<std::size_t>(j)], b);
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  FrameEstimate est;
  est.required_shell = need;
  est.c1 = std::numeric_limits<double>::infinity();
  est.c2 = 0.0;
  Eigen::VectorXcd coeffs(static_cast<int>(basis.size()));
  for (int t = 0; t < trials; ++t) {
    for (int j = 0; j < coeffs.size(); ++j)
      coeffs(j) = std::complex<double>(gauss(rng), gauss(rng));
    coeffs /= coeffs.norm();  // ||g||_2 = 1 in the orthonormal basis
    const double frame_sum = (overlap * coeffs).squaredNorm();
    est.c1 = std::min(est.c1, frame_sum);
    est.c2 = std::max(est.c2, frame_sum);
  }
  // Envelope tail actually certified for the chosen shell count.
  double tail = 0.0;
  auto envelope = [&](double t) {
    double s = 0.0, term = 1.0;
    for (int k = 0; k <= degree; ++k) {
      s += term;
      term *= t / (k + 1);
    }
    return std::exp(-t) * s;
  };
  for (int k = spec.max_shell + 1;; ++k) {
    const double term = static_cast<double>(shell_count(spec.dim, k)) * envelope(rho * rho * k * k);
    tail += term;
    if (term < 1e-300 && k > spec.max_shell + 4) break;
  }
  est.tail_bound = tail;
  return est;
}

}  // namespace fockideal
