#pragma once

#include <cstdint>
#include <vector>

#include "fockideal/lattice.hpp"
#include "fockideal/measure.hpp"
#include "fockideal/spectra.hpp"

namespace fockideal {

/// Multi-indices beta with |beta| <= degree over n slots, graded
/// lexicographic (total degree first, then lexicographic ascending).
std::vector<std::vector<int>> multi_indices(int n, int degree);

/// A finite Hermitian compression of the Toeplitz operator with symbol nu.
///
/// AtomicGram holds the M x M matrix sqrt(c_j c_k) <k_{w_k}, k_{w_j}> whose
/// spectrum is exactly the nonzero spectrum of the operator (a finite sum of
/// weighted rank-one kernel projections).  TruncatedBasis is the compression
/// onto the normalized monomials of degree <= d; its singular values are
/// lower evidence, nondecreasing in d.
struct ToeplitzCompression {
  enum class Mode { AtomicGram, TruncatedBasis };
  Mode mode;
  int basis_degree = -1;  // TruncatedBasis only
  bool exact_nonzero_spectrum = false;
  HermitianPSD matrix;
};

/// Exact Gram compression of an atomic symbol (at least one atom).
ToeplitzCompression build_atomic(const AtomicMeasure& nu);

/// Compression onto the span of normalized monomials of degree <= d.
/// Radial density symbols give a diagonal matrix in closed form.
ToeplitzCompression build_truncated(const Measure& nu, int degree);

/// <T_nu k_z, k_z>, the Berezin transform of nu at z; equals the heat
/// transform at rate 1.  Atomic symbols go through the rank-one expansion
/// (complex overlaps); density symbols through the transform quadrature.
double berezin(const Measure& nu, const ComplexPoint& z);

/// Independent route for atomic symbols: sum of weights times squared
/// overlap moduli computed with real arithmetic.
double berezin_closed_form(const Measure& nu, const ComplexPoint& z);

/// Lower bound (top singular value of the best compression; exact for atomic
/// symbols) and a boundedness witness (sup of the box mass over a sample grid
/// and over lattice points).
struct NormBounds {
  double lower = 0.0;
  double box_mass_sup = 0.0;
};

NormBounds norm_bounds(const Measure& nu, double r);

/// Frame-bound experiment: for seeded random unit vectors g in the span of
/// monomials of degree <= d, the extremes of sum_j |<g, k_{b_j}>|^2 over the
/// rho-lattice.  Requires max_shell large enough that the omitted overlap
/// mass is below 1e-8; throws naming the required shell count otherwise.
struct FrameEstimate {
  double c1 = 0.0;  // min over trials
  double c2 = 0.0;  // max over trials
  double tail_bound = 0.0;
  int required_shell = 0;
};

FrameEstimate frame_estimate(double rho, int degree, const LatticeSpec& spec, int trials,
                             std::uint64_t seed);

/// Smallest max_shell accepted by frame_estimate for this rho, degree, n.
int frame_required_shell(double rho, int degree, int dim);

}  // namespace fockideal
