#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "fockideal/snf.hpp"

namespace fockideal {

using Matrix = Eigen::MatrixXcd;

/// A finite Hermitian positive-semidefinite matrix, the stand-in for an exact
/// or truncated compression of an operator on the kernel space.  Hermitian
/// symmetry must hold exactly as stored (build with hermitian_from_lower to
/// guarantee that); positive semidefiniteness is enforced at the eigensolve
/// with the relative tolerance 1e-10.
class HermitianPSD {
 public:
  static HermitianPSD from_matrix(Matrix m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }

 private:
  explicit HermitianPSD(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

/// Mirrors the strict lower triangle onto the upper one (conjugated) and
/// drops imaginary parts on the diagonal, so the result is Hermitian exactly
/// as stored.
Matrix hermitian_from_lower(const Matrix& m);

/// A certified nonincreasing nonnegative sequence of singular values; the
/// tail bound dominates everything beyond the stored prefix (0 for exact
/// finite-rank spectra).
struct SValues {
  std::vector<double> values;
  double tail_bound = 0.0;
};

/// Eigenvalues of H sorted nonincreasing; negatives within the PSD tolerance
/// are clamped to zero, genuine violations throw.
SValues s_numbers(const HermitianPSD& h);

/// Singular values of an arbitrary square complex matrix.
SValues s_numbers_general(const Matrix& a);

/// Spectral-calculus power H^s for s in (0, 1].
HermitianPSD frac_power(const HermitianPSD& h, double s);

double phi_norm(const NormingFunction& phi, const SValues& sv);
double phi_norm(const NormingFunction& phi, const HermitianPSD& h);
double phi_norm(const NormingFunction& phi, const Matrix& a);

/// Seeded randomized checks of the singular-value calculus:
///   (a) top singular value vs operator norm via two routes,
///   (b) s_j(C D C*) <= |C|^2 s_j(D) for PSD D,
///   (c) 0 <= C <= D implies s_j(C) <= s_j(D),
///   (d) the finite-rank power quasi-triangle bound with factor 2^(1-s),
///   (e) singular values of H^s equal the s-th powers of those of H,
///   (f) a diagonal matrix has Phi-norm  Phi of its entry moduli,
///   (g) Phi over an injective subsequence never exceeds Phi over the whole.
struct CalculusReport {
  int trials = 0;
  double max_rel_violation = 0.0;     // over all checks
  double norm_route_delta = 0.0;      // (a)
  double conjugation_violation = 0.0;  // (b)
  double order_violation = 0.0;       // (c)
  double quasi_triangle_violation = 0.0;  // (d)
  double power_commutation_delta = 0.0;   // (e)
  double diagonal_phi_delta = 0.0;        // (f)
  double subsequence_violation = 0.0;     // (g)
};

CalculusReport calculus_suite(std::uint64_t seed, int trials = 200, int max_dim = 50);

}  // namespace fockideal
