#pragma once

#include <complex>
#include <optional>
#include <variant>
#include <vector>

#include "fockideal/lattice.hpp"
#include "fockideal/point.hpp"
#include "fockideal/quadrature.hpp"
#include "fockideal/snf.hpp"

namespace fockideal {

// ---------------------------------------------------------------------------
// Reproducing kernel of the Gaussian-weighted entire-function space on C^n:
// K(z, w) = exp(z_1 conj(w_1) + ... + z_n conj(w_n)), with the unit-norm
// kernel state k_z(w) = K(w, z) exp(-|z|^2 / 2).
// ---------------------------------------------------------------------------

std::complex<double> kernel(const ComplexPoint& z, const ComplexPoint& w);

/// <k_z, k_w> = K(w, z) exp(-(|z|^2 + |w|^2)/2); its modulus is
/// exp(-|z - w|^2 / 2).
std::complex<double> kernel_state_overlap(const ComplexPoint& z, const ComplexPoint& w);

/// (p/2pi)^n * int |k_z(w)|^p exp(-p|w|^2/2) dV(w), evaluated by a tensor
/// Gauss-Hermite ladder started at start_order.  The exact value is 1 for
/// every z and p > 0; the certified quadrature error is returned alongside.
Certified normalized_kernel_integral(const ComplexPoint& z, double p, int start_order = 8);

// ---------------------------------------------------------------------------
// Symbols: finitely atomic measures and radial polynomial-Gaussian densities.
// ---------------------------------------------------------------------------

struct Atom {
  ComplexPoint location;
  double weight;  // > 0
};

struct AtomicMeasure {
  int dim = 1;
  std::vector<Atom> atoms;

  AtomicMeasure(int n, std::vector<Atom> as);

  double total_mass() const;
  double support_sup_radius() const;
  double support_euclid_radius() const;
  AtomicMeasure scaled(double c) const;
};

/// d nu = q(|z|^2) exp(-beta |z|^2) dV with q a polynomial with nonnegative
/// coefficients.  beta = 0 requires a constant q (a bounded density).  An
/// optional support radius restricts the measure to the closed Euclidean
/// ball |z| <= N; clipped transforms are implemented for dim 1 only.
struct DensityMeasure {
  int dim = 1;
  std::vector<double> poly;  // q(t) = poly[0] + poly[1] t + ...
  double beta = 0.0;
  int quad_order = 16;
  std::optional<double> support_radius;

  DensityMeasure(int n, std::vector<double> coeffs, double b, int order = 16);

  double poly_eval(double t) const;
  /// int q(|w|^2) exp(-c |w|^2) dV(w) over C^n (ignores the support clip).
  double gaussian_mass(double c) const;
  double total_mass() const { return gaussian_mass(beta); }
  DensityMeasure scaled(double c) const;
};

using Measure = std::variant<AtomicMeasure, DensityMeasure>;

int measure_dim(const Measure& nu);
double total_mass(const Measure& nu);
Measure scaled(const Measure& nu, double c);

/// Restriction of nu to the closed Euclidean ball |z| <= N.
Measure truncate(const Measure& nu, double n_radius);

// ---------------------------------------------------------------------------
// The two averaging transforms.
// ---------------------------------------------------------------------------

/// Mass of the open sup-norm ball: nu({w : |w - z|_inf < r}).  Densities are
/// integrated by a certified Gauss-Legendre ladder (relative 1e-8 or better).
double box_mass(const Measure& nu, double r, const ComplexPoint& z);

/// Closed-form route for density symbols (erf moment recursions); equals
/// box_mass up to the quadrature certificate.  Atomic measures are exact in
/// both routes.
double box_mass_closed_form(const Measure& nu, double r, const ComplexPoint& z);

/// Gaussian-weighted mass  int exp(-alpha |z - w|^2) d nu(w)  (the heat
/// transform of nu; at alpha = 1 this is the Berezin transform).
double heat_transform(const Measure& nu, double alpha, const ComplexPoint& z);

double heat_transform_closed_form(const Measure& nu, double alpha, const ComplexPoint& z);

// ---------------------------------------------------------------------------
// Lattice sequences with tail certificates.
// ---------------------------------------------------------------------------

struct Transform {
  enum class Kind { BoxMass, Heat };
  Kind kind;
  double param;  // ball radius or Gaussian rate

  static Transform box_mass(double r) { return {Kind::BoxMass, r}; }
  static Transform heat(double alpha) { return {Kind::Heat, alpha}; }
};

/// Smallest max_shell for which lattice_sequence can certify the omitted
/// tail to tail_tol (absolute bound on the sum of omitted s-powered terms).
int minimal_adequate_shell(const Measure& nu, Transform t, double spacing, int dim,
                           double s_power = 1.0, double tail_tol = 1e-12);

/// The transform evaluated at every enumerated lattice point, raised to the
/// power s inside the certificate, with tail bounds covering all omitted
/// lattice points.  Throws (naming the minimal adequate shell count) if
/// spec.max_shell is too small to certify the tail.
CertifiedSequence lattice_sequence(const Measure& nu, Transform t, const LatticeSpec& spec,
                                   double s_power = 1.0, double tail_tol = 1e-12);

}  // namespace fockideal
