#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace fockideal {

/// Thrown when an order-doubling ladder runs out of orders before two
/// successive evaluations agree to the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1] (exact for polynomials of degree 2g-1).
/// Tables are cached per order; safe for concurrent use.
const QuadRule& gauss_legendre(int order);

/// Gauss-Hermite rule for the weight e^{-x^2} on R.
const QuadRule& gauss_hermite(int order);

/// Integrate f over [a, b] with a Gauss-Legendre rule of the given order.
template <typename F>
double integrate_legendre(F&& f, double a, double b, int order) {
  const QuadRule& q = gauss_legendre(order);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < q.nodes.size(); ++i)
    s += q.weights[i] * f(mid + half * q.nodes[i]);
  return half * s;
}

/// Integrate f(x) e^{-x^2} over R with a Gauss-Hermite rule.
template <typename F>
double integrate_hermite(F&& f, int order) {
  const QuadRule& q = gauss_hermite(order);
  double s = 0.0;
  for (std::size_t i = 0; i < q.nodes.size(); ++i) s += q.weights[i] * f(q.nodes[i]);
  return s;
}

/// Result of an order-doubling ladder: the last value and the certified
/// error, taken as the delta between the last two rungs.
struct Certified {
  double value = 0.0;
  double error = 0.0;
};

/// Runs eval(order) on a doubling ladder starting at start_order until two
/// successive values agree to rel_tol (relative, with a small absolute
/// floor), or throws QuadratureError at max_order.
template <typename Eval>
Certified doubling_ladder(Eval&& eval, int start_order, int max_order, double rel_tol) {
  double prev = eval(start_order);
  for (int g = 2 * start_order; g <= max_order; g *= 2) {
    const double cur = eval(g);
    const double delta = std::abs(cur - prev);
    if (delta <= rel_tol * std::max(std::abs(cur), 1e-30) + 1e-300)
      return {cur, delta};
    prev = cur;
  }
  throw QuadratureError("doubling ladder did not converge by order " + std::to_string(max_order));
}

/// Closed-form Gaussian interval moments  M_j = int_a^b t^j e^{-c t^2} dt
/// for c >= 0 (c = 0 falls back to plain monomial moments).
double gaussian_moment(int j, double c, double a, double b);

/// Full-line moments  int_R t^j e^{-c t^2} dt, c > 0 (zero for odd j).
double gaussian_moment_line(int j, double c);

}  // namespace fockideal
