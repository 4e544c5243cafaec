#include "fockideal/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace fockideal {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the symmetric tridiagonal Jacobi
// matrix of the orthogonal-polynomial recurrence; weights are mu_0 times the
// squared first components of the normalized eigenvectors.
QuadRule golub_welsch(const std::vector<double>& offdiag, double mu0) {
  const int g = static_cast<int>(offdiag.size()) + 1;
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(g, g);
  for (int i = 0; i + 1 < g; ++i) {
    jacobi(i, i + 1) = offdiag[static_cast<std::size_t>(i)];
    jacobi(i + 1, i) = offdiag[static_cast<std::size_t>(i)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  QuadRule rule;
  rule.nodes.resize(static_cast<std::size_t>(g));
  rule.weights.resize(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) {
    rule.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
  }
  return rule;
}

const QuadRule& cached(std::map<int, QuadRule>& cache, std::mutex& mu, int order,
                       QuadRule (*make)(int)) {
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, make(order)).first;
  return it->second;
}

QuadRule make_legendre(int g) {
  std::vector<double> b(static_cast<std::size_t>(g - 1));
  for (int k = 1; k < g; ++k)
    b[static_cast<std::size_t>(k - 1)] = k / std::sqrt(4.0 * k * k - 1.0);
  return golub_welsch(b, 2.0);
}

// Orthonormal Hermite values at x in scaled form: returns p_N / p_{N-1} and
// log |p_{N-1}|.  The raw values reach e^{x^2/2} so the recurrence is
// renormalized as it runs.
struct HermiteAt {
  double ratio;
  double log_abs_prev;
};

HermiteAt hermite_orthonormal(int n, double x) {
  double prev = 0.0;
  double cur = std::pow(std::numbers::pi, -0.25);
  double logscale = 0.0;
  for (int k = 0; k < n; ++k) {
    const double next = x * std::sqrt(2.0 / (k + 1)) * cur - std::sqrt(k / (k + 1.0)) * prev;
    prev = cur;
    cur = next;
    const double m = std::max(std::abs(cur), std::abs(prev));
    if (m > 1e150) {
      cur /= 1e150;
      prev /= 1e150;
      logscale += std::log(1e150);
    }
  }
  return {cur / (std::sqrt(2.0 * n) * prev), std::log(std::abs(prev)) + logscale};
}

QuadRule make_hermite(int g) {
  // Eigenvalues of the Jacobi matrix seed the nodes; a few Newton steps with
  // the scaled recurrence restore full relative accuracy, and the weights
  // 1 / (g * p_{g-1}(x)^2) stay correct down to the underflow threshold,
  // where Golub-Welsch eigenvector components drown in solver noise.
  std::vector<double> b(static_cast<std::size_t>(g - 1));
  for (int k = 1; k < g; ++k) b[static_cast<std::size_t>(k - 1)] = std::sqrt(k / 2.0);
  QuadRule rule = golub_welsch(b, std::sqrt(std::numbers::pi));
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double x = rule.nodes[i];
    for (int it = 0; it < 3; ++it) x -= hermite_orthonormal(g, x).ratio;  // ratio = p_g / p_g'
    const HermiteAt h = hermite_orthonormal(g, x);
    rule.nodes[i] = x;
    const double logw = -std::log(static_cast<double>(g)) - 2.0 * h.log_abs_prev;
    rule.weights[i] = std::exp(logw);
  }
  return rule;
}

}  // namespace

const QuadRule& gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  static std::map<int, QuadRule> cache;
  static std::mutex mu;
  return cached(cache, mu, order, &make_legendre);
}

const QuadRule& gauss_hermite(int order) {
  if (order < 1) throw std::invalid_argument("gauss_hermite: order must be >= 1");
  static std::map<int, QuadRule> cache;
  static std::mutex mu;
  return cached(cache, mu, order, &make_hermite);
}

double gaussian_moment(int j, double c, double a, double b) {
  if (j < 0) throw std::invalid_argument("gaussian_moment: j must be >= 0");
  if (c < 0.0) throw std::invalid_argument("gaussian_moment: c must be >= 0");
  if (c == 0.0) {
    // Plain monomial moment.
    return (std::pow(b, j + 1) - std::pow(a, j + 1)) / (j + 1);
  }
  const double sc = std::sqrt(c);
  const double ea = std::exp(-c * a * a), eb = std::exp(-c * b * b);
  // M_0 and M_1 seed the two-term recursion
  //   M_j = (a^{j-1} e^{-c a^2} - b^{j-1} e^{-c b^2}) / (2c) + (j-1)/(2c) M_{j-2}.
  double m_even = 0.5 * std::sqrt(std::numbers::pi / c) * (std::erf(sc * b) - std::erf(sc * a));
  double m_odd = (ea - eb) / (2.0 * c);
  if (j == 0) return m_even;
  if (j == 1) return m_odd;
  double pa = a, pb = b;  // a^{k-1}, b^{k-1} for k = 2
  for (int k = 2; k <= j; ++k) {
    const double m = (pa * ea - pb * eb) / (2.0 * c) +
                     (k - 1) / (2.0 * c) * (k % 2 == 0 ? m_even : m_odd);
    if (k % 2 == 0)
      m_even = m;
    else
      m_odd = m;
    pa *= a;
    pb *= b;
  }
  return j % 2 == 0 ? m_even : m_odd;
}

double gaussian_moment_line(int j, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("gaussian_moment_line: c must be > 0");
  if (j % 2 == 1) return 0.0;
  // (j-1)!! sqrt(pi/c) / (2c)^{j/2}
  double v = std::sqrt(std::numbers::pi / c);
  for (int k = 1; k < j; k += 2) v *= k / (2.0 * c);
  return v;
}

}  // namespace fockideal
