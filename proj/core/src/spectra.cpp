#include "fockideal/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace fockideal {

namespace {

constexpr double kPsdTol = 1e-10;

bool exactly_hermitian(const Matrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i <= j; ++i)
      if (m(i, j) != std::conj(m(j, i))) return false;
  return true;
}

std::vector<double> descending(Eigen::VectorXd v) {
  std::vector<double> out(v.data(), v.data() + v.size());
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

}  // namespace

Matrix hermitian_from_lower(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_from_lower: square matrix required");
  Matrix out = m;
  for (Eigen::Index j = 0; j < out.cols(); ++j) {
    out(j, j) = std::complex<double>(out(j, j).real(), 0.0);
    for (Eigen::Index i = j + 1; i < out.rows(); ++i) out(j, i) = std::conj(out(i, j));
  }
  return out;
}

HermitianPSD HermitianPSD::from_matrix(Matrix m) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw std::invalid_argument("HermitianPSD: square matrix of dim >= 1 required");
  if (!exactly_hermitian(m))
    throw std::invalid_argument("HermitianPSD: matrix is not Hermitian as stored");
  return HermitianPSD(std::move(m));
}

SValues s_numbers(const HermitianPSD& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix(), Eigen::EigenvaluesOnly);
  std::vector<double> ev = descending(es.eigenvalues());
  const double top = ev.empty() ? 0.0 : std::max(ev.front(), 0.0);
  const double floor = -kPsdTol * std::max(top, 1.0);
  for (double& v : ev) {
    if (v < floor)
      throw std::invalid_argument("s_numbers: matrix is not positive semidefinite within tolerance");
    if (v < 0.0) v = 0.0;
  }
  return SValues{std::move(ev), 0.0};
}

SValues s_numbers_general(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a);
  std::vector<double> sv(svd.singularValues().data(),
                         svd.singularValues().data() + svd.singularValues().size());
  return SValues{std::move(sv), 0.0};
}

HermitianPSD frac_power(const HermitianPSD& h, double s) {
  if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("frac_power: s must be in (0, 1]");
  if (s == 1.0) return h;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix());
  Eigen::VectorXd lam = es.eigenvalues();
  const double top = std::max(lam.maxCoeff(), 0.0);
  const double floor = -kPsdTol * std::max(top, 1.0);
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam(i) < floor)
      throw std::invalid_argument("frac_power: matrix is not positive semidefinite within tolerance");
    lam(i) = std::pow(std::max(lam(i), 0.0), s);
  }
  Matrix powered = es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
  return HermitianPSD::from_matrix(hermitian_from_lower(powered));
}

double phi_norm(const NormingFunction& phi, const SValues& sv) { return phi.eval(sv.values); }

double phi_norm(const NormingFunction& phi, const HermitianPSD& h) {
  return phi.eval(s_numbers(h).values);
}

double phi_norm(const NormingFunction& phi, const Matrix& a) {
  return phi.eval(s_numbers_general(a).values);
}

namespace {

Matrix random_matrix(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index i = 0; i < dim; ++i) m(i, j) = std::complex<double>(g(rng), g(rng));
  return m;
}

Matrix random_psd(std::mt19937_64& rng, int dim) {
  Matrix b = random_matrix(rng, dim);
  return hermitian_from_lower((b * b.adjoint() / static_cast<double>(dim)).eval());
}

Matrix abs_of(const Matrix& a) {
  // |A| = (A* A)^(1/2) through the SVD: V S V*.
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  return hermitian_from_lower(
      (svd.matrixV() * svd.singularValues().asDiagonal() * svd.matrixV().adjoint()).eval());
}

double rel_excess(double lhs, double rhs) {
  // How far lhs sticks out above rhs, relative.
  return (lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1.0});
}

}  // namespace

CalculusReport calculus_suite(std::uint64_t seed, int trials, int max_dim) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim_dist(2, max_dim);
  std::uniform_real_distribution<double> s_dist(0.1, 1.0);
  const std::vector<NormingFunction> phis = {
      NormingFunction::power_sum(1.0), NormingFunction::power_sum(2.0),
      NormingFunction::sup_norm(), NormingFunction::ky_fan(3), NormingFunction::lorentz()};

  CalculusReport rep;
  rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const int dim = dim_dist(rng);

    // (a) top singular value equals the operator norm computed through the
    // Gram route sqrt(lambda_max(A* A)).
    {
      const Matrix a = random_matrix(rng, dim);
      const double s1 = s_numbers_general(a).values.front();
      Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_from_lower((a.adjoint() * a).eval()),
                                               Eigen::EigenvaluesOnly);
      const double norm2 = std::sqrt(std::max(es.eigenvalues().maxCoeff(), 0.0));
      rep.norm_route_delta =
          std::max(rep.norm_route_delta, std::abs(s1 - norm2) / std::max(norm2, 1.0));
    }

    // (b) s_j(C |D| C*) <= |C|^2 s_j(|D|).
    {
      const Matrix c = random_matrix(rng, dim);
      const Matrix d = abs_of(random_matrix(rng, dim));
      const double cnorm = s_numbers_general(c).values.front();
      const auto lhs = s_numbers(HermitianPSD::from_matrix(
          hermitian_from_lower((c * d * c.adjoint()).eval())));
      const auto rhs = s_numbers(HermitianPSD::from_matrix(d));
      for (std::size_t j = 0; j < lhs.values.size(); ++j)
        rep.conjugation_violation = std::max(
            rep.conjugation_violation, rel_excess(lhs.values[j], cnorm * cnorm * rhs.values[j]));
    }

    // (c) 0 <= C <= D implies s_j(C) <= s_j(D).
    {
      const Matrix c = random_psd(rng, dim);
      const Matrix gap = random_psd(rng, dim);
      const Matrix d = hermitian_from_lower((c + gap).eval());
      const auto sc = s_numbers(HermitianPSD::from_matrix(c));
      const auto sd = s_numbers(HermitianPSD::from_matrix(d));
      for (std::size_t j = 0; j < sc.values.size(); ++j)
        rep.order_violation = std::max(rep.order_violation, rel_excess(sc.values[j], sd.values[j]));
    }

    // (d) | |F_1 + ... + F_M|^s |_Phi <= 2^(1-s) sum | |F_j|^s |_Phi.
    {
      std::uniform_int_distribution<int> m_dist(2, 4);
      const int m = m_dist(rng);
      const double s = s_dist(rng);
      const NormingFunction& phi = phis[static_cast<std::size_t>(t) % phis.size()];
      Matrix sum = Matrix::Zero(dim, dim);
      double rhs = 0.0;
      for (int j = 0; j < m; ++j) {
        const Matrix f = random_matrix(rng, dim);
        sum += f;
        auto sv = s_numbers_general(f);
        for (double& v : sv.values) v = std::pow(v, s);
        rhs += phi.eval(sv.values);
      }
      auto sv = s_numbers_general(sum);
      for (double& v : sv.values) v = std::pow(v, s);
      const double lhs = phi.eval(sv.values);
      rep.quasi_triangle_violation = std::max(
          rep.quasi_triangle_violation, rel_excess(lhs, std::pow(2.0, 1.0 - s) * rhs));
    }

    // (e) the powers commute with the spectrum for PSD matrices.
    {
      const double s = s_dist(rng);
      const auto h = HermitianPSD::from_matrix(random_psd(rng, dim));
      const auto powered = s_numbers(frac_power(h, s));
      const auto base = s_numbers(h);
      for (std::size_t j = 0; j < base.values.size(); ++j) {
        const double want = std::pow(base.values[j], s);
        rep.power_commutation_delta =
            std::max(rep.power_commutation_delta,
                     std::abs(powered.values[j] - want) / std::max(want, 1.0));
      }
    }

    // (f) diagonal matrices: the Phi-norm is Phi of the entry moduli,
    // (g) and an injective subsequence of the entries is dominated.
    {
      const NormingFunction& phi = phis[static_cast<std::size_t>(t + 1) % phis.size()];
      std::uniform_real_distribution<double> entry(-2.0, 2.0);
      Matrix d = Matrix::Zero(dim, dim);
      std::vector<double> moduli(static_cast<std::size_t>(dim));
      for (int j = 0; j < dim; ++j) {
        const std::complex<double> v(entry(rng), entry(rng));
        d(j, j) = v;
        moduli[static_cast<std::size_t>(j)] = std::abs(v);
      }
      const double via_matrix = phi_norm(phi, d);
      const double via_entries = phi.eval(moduli);
      rep.diagonal_phi_delta =
          std::max(rep.diagonal_phi_delta,
                   std::abs(via_matrix - via_entries) / std::max(via_entries, 1.0));

      std::vector<double> sub;
      for (std::size_t j = 0; j < moduli.size(); j += 2) sub.push_back(moduli[j]);
      rep.subsequence_violation =
          std::max(rep.subsequence_violation, rel_excess(phi.eval(sub), via_entries));
    }
  }
  rep.max_rel_violation =
      std::max({rep.conjugation_violation, rep.order_violation, rep.quasi_triangle_violation,
                rep.norm_route_delta, rep.power_commutation_delta, rep.diagonal_phi_delta,
                rep.subsequence_violation});
  return rep;
}

}  // namespace fockideal
