#include "fockideal/measure.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fockideal {

namespace {

constexpr double kPi = std::numbers::pi;

double factorial(int k) {
  double v = 1.0;
  for (int i = 2; i <= k; ++i) v *= i;
  return v;
}

double binomial(int n, int k) {
  double v = 1.0;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

// Visits every tuple m of `dims` nonnegative integers with sum k, passing the
// multinomial coefficient k!/(m_1! ... m_dims!).
template <typename F>
void for_each_composition(int k, int dims, F&& f) {
  std::vector<int> m(static_cast<std::size_t>(dims), 0);
  const double kfact = factorial(k);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == dims - 1) {
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

int poly_degree(const std::vector<double>& poly) {
  int d = 0;
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (poly[i] != 0.0) d = static_cast<int>(i);
  return d;
}

// Assembles  sum_k c_k sum_{|m|=k} multinom(m) prod_i dim_factor(i, m_i)
// where dim_factor is any per-real-coordinate 1-D integral.
template <typename DimFactor>
double assemble_separable(const std::vector<double>& poly, int two_n, DimFactor&& dim_factor) {
  // Cache the per-dimension factors for every power that can occur.
  const int deg = poly_degree(poly);
  std::vector<std::vector<double>> table(static_cast<std::size_t>(two_n));
  for (int i = 0; i < two_n; ++i) {
    table[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(deg + 1));
    for (int mm = 0; mm <= deg; ++mm)
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(mm)] = dim_factor(i, mm);
  }
  double total = 0.0;
  for (int k = 0; k <= deg; ++k) {
    const double ck = poly[static_cast<std::size_t>(k)];
    if (ck == 0.0) continue;
    double inner = 0.0;
    for_each_composition(k, two_n, [&](const std::vector<int>& m, double coeff) {
      double prod = coeff;
      for (int i = 0; i < two_n; ++i)
        prod *= table[static_cast<std::size_t>(i)][static_cast<std::size_t>(m[static_cast<std::size_t>(i)])];
      inner += prod;
    });
    total += ck * inner;
  }
  return total;
}

// int u^{2m} e^{-c (u - mu)^2} du over R, closed form.
double shifted_even_moment_line(int m, double c, double mu) {
  double s = 0.0;
  for (int j = 0; j <= 2 * m; j += 2)
    s += binomial(2 * m, j) * std::pow(mu, 2 * m - j) * gaussian_moment_line(j, c);
  return s;
}

// int_{lo}^{hi} v^{2m} e^{-c (v - mu)^2} dv, closed form.
double shifted_even_moment_interval(int m, double c, double mu, double lo, double hi) {
  double s = 0.0;
  for (int j = 0; j <= 2 * m; ++j)
    s += binomial(2 * m, j) * std::pow(mu, 2 * m - j) * gaussian_moment(j, c, lo - mu, hi - mu);
  return s;
}

}  // namespace

// --- kernel ----------------------------------------------------------------

std::complex<double> kernel(const ComplexPoint& z, const ComplexPoint& w) {
  if (z.dim() != w.dim()) throw std::invalid_argument("kernel: dimension mismatch");
  std::complex<double> e = 0.0;
  for (int j = 0; j < z.dim(); ++j) e += z[j] * std::conj(w[j]);
  return std::exp(e);
}

std::complex<double> kernel_state_overlap(const ComplexPoint& z, const ComplexPoint& w) {
  if (z.dim() != w.dim()) throw std::invalid_argument("kernel_state_overlap: dimension mismatch");
  // exp(<w, z> - (|z|^2 + |w|^2) / 2); the real part of the exponent is
  // -|z - w|^2 / 2 <= 0, so the overlap never overflows.
  std::complex<double> e = 0.0;
  for (int j = 0; j < z.dim(); ++j) e += w[j] * std::conj(z[j]);
  return std::exp(e - 0.5 * (z.norm_sq() + w.norm_sq()));
}

Certified normalized_kernel_integral(const ComplexPoint& z, double p, int start_order) {
  if (!(p > 0.0)) throw std::invalid_argument("normalized_kernel_integral: p must be > 0");
  const int two_n = 2 * z.dim();
  auto eval = [&](int order) {
    double prod = 1.0;
    for (int k = 0; k < two_n; ++k) {
      const double c = z.real_coord(k);
      const double a = std::sqrt(2.0 * p) * c;
      const double factor =
          integrate_hermite([&](double s) { return std::exp(a * s); }, order);
      prod *= factor * std::exp(-0.5 * p * c * c) / std::sqrt(kPi);
    }
    return prod;
  };
  return doubling_ladder(eval, std::max(start_order, 8), 512, 1e-9);
}

// --- measures ---------------------------------------------------------------

AtomicMeasure::AtomicMeasure(int n, std::vector<Atom> as) : dim(n), atoms(std::move(as)) {
  if (n < 1) throw std::invalid_argument("AtomicMeasure: dimension must be >= 1");
  for (const auto& a : atoms) {
    if (a.location.dim() != n) throw std::invalid_argument("AtomicMeasure: atom dimension mismatch");
    if (!(a.weight > 0.0)) throw std::invalid_argument("AtomicMeasure: weights must be > 0");
  }
}

double AtomicMeasure::total_mass() const {
  double s = 0.0;
  for (const auto& a : atoms) s += a.weight;
  return s;
}

double AtomicMeasure::support_sup_radius() const {
  double s = 0.0;
  for (const auto& a : atoms) s = std::max(s, a.location.sup_norm());
  return s;
}

double AtomicMeasure::support_euclid_radius() const {
  double s = 0.0;
  for (const auto& a : atoms) s = std::max(s, a.location.euclid_norm());
  return s;
}

AtomicMeasure AtomicMeasure::scaled(double c) const {
  if (!(c > 0.0)) throw std::invalid_argument("scaled: factor must be > 0");
  AtomicMeasure out = *this;
  for (auto& a : out.atoms) a.weight *= c;
  return out;
}

DensityMeasure::DensityMeasure(int n, std::vector<double> coeffs, double b, int order)
    : dim(n), poly(std::move(coeffs)), beta(b), quad_order(order) {
  if (n < 1) throw std::invalid_argument("DensityMeasure: dimension must be >= 1");
  if (poly.empty()) throw std::invalid_argument("DensityMeasure: empty polynomial");
  for (double c : poly)
    if (!(c >= 0.0)) throw std::invalid_argument("DensityMeasure: coefficients must be >= 0");
  if (!(beta >= 0.0)) throw std::invalid_argument("DensityMeasure: beta must be >= 0");
  if (beta == 0.0 && poly_degree(poly) > 0)
    throw std::invalid_argument("DensityMeasure: beta = 0 requires a constant polynomial");
  if (quad_order < 4) quad_order = 4;
}

double DensityMeasure::poly_eval(double t) const {
  double v = 0.0;
  for (std::size_t i = poly.size(); i-- > 0;) v = v * t + poly[i];
  return v;
}

double DensityMeasure::gaussian_mass(double c) const {
  if (!(c > 0.0)) throw std::invalid_argument("gaussian_mass: c must be > 0");
  return assemble_separable(poly, 2 * dim, [&](int, int mm) {
    return gaussian_moment_line(2 * mm, c);
  });
}

DensityMeasure DensityMeasure::scaled(double c) const {
  if (!(c > 0.0)) throw std::invalid_argument("scaled: factor must be > 0");
  DensityMeasure out = *this;
  for (double& v : out.poly) v *= c;
  return out;
}

int measure_dim(const Measure& nu) {
  return std::visit([](const auto& m) { return m.dim; }, nu);
}

double total_mass(const Measure& nu) {
  if (const auto* a = std::get_if<AtomicMeasure>(&nu)) return a->total_mass();
  const auto& d = std::get<DensityMeasure>(nu);
  if (d.beta > 0.0) return d.total_mass();
  if (d.support_radius) {
    // Constant density on the ball |z| <= N: c_0 * pi^n N^{2n} / n!.
    const double n2 = std::pow(*d.support_radius, 2.0 * d.dim);
    return d.poly[0] * std::pow(kPi, d.dim) * n2 / factorial(d.dim);
  }
  return std::numeric_limits<double>::infinity();
}

Measure scaled(const Measure& nu, double c) {
  return std::visit([&](const auto& m) -> Measure { return m.scaled(c); }, nu);
}

Measure truncate(const Measure& nu, double n_radius) {
  if (!(n_radius > 0.0)) throw std::invalid_argument("truncate: radius must be > 0");
  if (const auto* a = std::get_if<AtomicMeasure>(&nu)) {
    std::vector<Atom> kept;
    for (const auto& at : a->atoms)
      if (at.location.euclid_norm() <= n_radius) kept.push_back(at);
    return AtomicMeasure(a->dim, std::move(kept));
  }
  const auto& d = std::get<DensityMeasure>(nu);
  if (d.dim > 1)
    throw std::invalid_argument("truncate: clipped densities are supported for dim 1 only");
  DensityMeasure out = d;
  out.support_radius = d.support_radius ? std::min(*d.support_radius, n_radius) : n_radius;
  return out;
}

// --- transforms -------------------------------------------------------------

namespace {

double atomic_box_mass(const AtomicMeasure& nu, double r, const ComplexPoint& z) {
  double s = 0.0;
  for (const auto& a : nu.atoms)
    if (sup_dist(a.location, z) < r) s += a.weight;  // open ball
  return s;
}

double atomic_heat(const AtomicMeasure& nu, double alpha, const ComplexPoint& z) {
  double s = 0.0;
  for (const auto& a : nu.atoms) s += a.weight * std::exp(-alpha * euclid_dist_sq(a.location, z));
  return s;
}

// Splits [lo, hi] at interior breakpoints and integrates each smooth piece
// with its own doubling ladder.
template <typename F>
double integrate_piecewise(F&& f, double lo, double hi, std::vector<double> breaks,
                           int start_order) {
  breaks.push_back(lo);
  breaks.push_back(hi);
  std::sort(breaks.begin(), breaks.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = std::clamp(breaks[i], lo, hi);
    const double b = std::clamp(breaks[i + 1], lo, hi);
    if (b - a < 1e-300) continue;
    total += doubling_ladder(
                 [&](int g) { return integrate_legendre(f, a, b, g); },
                 start_order, 1024, 1e-10)
                 .value;
  }
  return total;
}

// Clipped transforms for dim 1: the integration region is box(z, r) or the
// whole plane, intersected with the closed disk |w| <= N.  The inner (second
// real coordinate) integral is closed form; the outer one is quadrature after
// the substitution u = N sin(theta), which removes the sqrt kink at |u| = N.
double clipped_box_mass(const DensityMeasure& d, double r, const ComplexPoint& z) {
  const double n_rad = *d.support_radius;
  const double x = z.real_coord(0), y = z.real_coord(1);
  const double ulo = std::max(x - r, -n_rad), uhi = std::min(x + r, n_rad);
  if (!(ulo < uhi)) return 0.0;
  const int deg = poly_degree(d.poly);
  auto inner = [&](double u) {
    const double gsq = std::max(n_rad * n_rad - u * u, 0.0);
    const double g = std::sqrt(gsq);
    const double vlo = std::max(y - r, -g), vhi = std::min(y + r, g);
    if (!(vlo < vhi)) return 0.0;
    double s = 0.0;
    for (int k = 0; k <= deg; ++k) {
      if (d.poly[static_cast<std::size_t>(k)] == 0.0) continue;
      for (int j = 0; j <= k; ++j)
        s += d.poly[static_cast<std::size_t>(k)] * binomial(k, j) * std::pow(u * u, k - j) *
             gaussian_moment(2 * j, d.beta, vlo, vhi);
    }
    return s * std::exp(-d.beta * u * u);
  };
  // Transition points where the inner clip switches between box and disk.
  std::vector<double> breaks;
  for (double yedge : {y - r, y + r}) {
    const double disc = n_rad * n_rad - yedge * yedge;
    if (disc > 0.0) {
      breaks.push_back(std::sqrt(disc));
      breaks.push_back(-std::sqrt(disc));
    }
  }
  std::vector<double> tbreaks;
  for (double b : breaks)
    if (b > ulo && b < uhi) tbreaks.push_back(std::asin(std::clamp(b / n_rad, -1.0, 1.0)));
  const double tlo = std::asin(std::clamp(ulo / n_rad, -1.0, 1.0));
  const double thi = std::asin(std::clamp(uhi / n_rad, -1.0, 1.0));
  auto f = [&](double theta) {
    const double u = n_rad * std::sin(theta);
    return inner(u) * n_rad * std::cos(theta);
  };
  return integrate_piecewise(f, tlo, thi, std::move(tbreaks), d.quad_order);
}

double clipped_heat(const DensityMeasure& d, double alpha, const ComplexPoint& z) {
  const double n_rad = *d.support_radius;
  const double x = z.real_coord(0), y = z.real_coord(1);
  const double cc = alpha + d.beta;
  const double mu_v = alpha * y / cc;
  const double pre_v = std::exp(-alpha * d.beta * y * y / cc);
  const int deg = poly_degree(d.poly);
  auto f = [&](double theta) {
    const double u = n_rad * std::sin(theta);
    const double g = n_rad * std::cos(theta);
    double s = 0.0;
    for (int k = 0; k <= deg; ++k) {
      if (d.poly[static_cast<std::size_t>(k)] == 0.0) continue;
      for (int j = 0; j <= k; ++j)
        s += d.poly[static_cast<std::size_t>(k)] * binomial(k, j) * std::pow(u * u, k - j) *
             pre_v * shifted_even_moment_interval(j, cc, mu_v, -g, g);
    }
    const double du = x - u;
    return s * std::exp(-d.beta * u * u - alpha * du * du) * g;  // g = du/dtheta
  };
  return integrate_piecewise(f, -0.5 * kPi, 0.5 * kPi, {}, d.quad_order);
}

void require_clip_supported(const DensityMeasure& d) {
  if (d.support_radius && d.dim > 1)
    throw std::invalid_argument("clipped density transforms are supported for dim 1 only");
}

}  // namespace

double box_mass(const Measure& nu, double r, const ComplexPoint& z) {
  if (!(r > 0.0)) throw std::invalid_argument("box_mass: radius must be > 0");
  if (z.dim() != measure_dim(nu)) throw std::invalid_argument("box_mass: dimension mismatch");
  if (const auto* a = std::get_if<AtomicMeasure>(&nu)) return atomic_box_mass(*a, r, z);
  const auto& d = std::get<DensityMeasure>(nu);
  require_clip_supported(d);
  if (d.support_radius) return clipped_box_mass(d, r, z);
  auto eval = [&](int order) {
    return assemble_separable(d.poly, 2 * d.dim, [&](int i, int mm) {
      const double c = z.real_coord(i);
      return integrate_legendre(
          [&](double u) { return std::pow(u, 2 * mm) * std::exp(-d.beta * u * u); }, c - r,
          c + r, order);
    });
  };
  return doubling_ladder(eval, d.quad_order, 2048, 1e-9).value;
}

double box_mass_closed_form(const Measure& nu, double r, const ComplexPoint& z) {
  if (const auto* a = std::get_if<AtomicMeasure>(&nu)) return atomic_box_mass(*a, r, z);
  const auto& d = std::get<DensityMeasure>(nu);
  require_clip_supported(d);
  if (d.support_radius) return clipped_box_mass(d, r, z);
  return assemble_separable(d.poly, 2 * d.dim, [&](int i, int mm) {
    const double c = z.real_coord(i);
    return gaussian_moment(2 * mm, d.beta, c - r, c + r);
  });
}

double heat_transform(const Measure& nu, double alpha, const ComplexPoint& z) {
  if (!(alpha > 0.0)) throw std::invalid_argument("heat_transform: alpha must be > 0");
  if (z.dim() != measure_dim(nu)) throw std::invalid_argument("heat_transform: dimension mismatch");
  if (const auto* a = std::get_if<AtomicMeasure>(&nu)) return atomic_heat(*a, alpha, z);
  const auto& d = std::get<DensityMeasure>(nu);
  require_clip_supported(d);
  if (d.support_radius) return clipped_heat(d, alpha, z);
  const double cc = alpha + d.beta;
  const double rt = std::sqrt(cc);
  auto eval = [&](int order) {
    return assemble_separable(d.poly, 2 * d.dim, [&](int i, int mm) {
      const double x = z.real_coord(i);
      const double mu = alpha * x / cc;
      const double pre = std::exp(-alpha * d.beta * x * x / cc);
      // u = mu + t/rt maps the combined Gaussian onto the Hermite weight.
      return pre / rt *
             integrate_hermite(
                 [&](double t) { return std::pow(mu + t / rt, 2 * mm); }, order);
    });
  };
  return doubling_ladder(eval, d.quad_order, 2048, 1e-9).value;
}

double heat_transform_closed_form(const Measure& nu, double alpha, const ComplexPoint& z) {
  if (const auto* a = std::get_if<AtomicMeasure>(&nu)) return atomic_heat(*a, alpha, z);
  const auto& d = std::get<DensityMeasure>(nu);
  require_clip_supported(d);
  if (d.support_radius) return clipped_heat(d, alpha, z);
  const double cc = alpha + d.beta;
  return assemble_separable(d.poly, 2 * d.dim, [&](int i, int mm) {
    const double x = z.real_coord(i);
    const double mu = alpha * x / cc;
    return std::exp(-alpha * d.beta * x * x / cc) * shifted_even_moment_line(mm, cc, mu);
  });
}

// --- lattice sequences -------------------------------------------------------

namespace {

// Per-shell tail machinery: an upper bound on (transform value)^s over any
// lattice point in shell k, valid from shell `valid_from`; value is exactly
// zero from shell `zero_from` on (INT_MAX if never).
struct TailModel {
  int valid_from = 0;
  int zero_from = std::numeric_limits<int>::max();
  std::function<double(int)> bound;  // powered by s already
};

TailModel tail_model(const Measure& nu, Transform t, double spacing, int dim, double s) {
  const double r = spacing;
  if (const auto* a = std::get_if<AtomicMeasure>(&nu)) {
    const double mass = a->total_mass();
    if (t.kind == Transform::Kind::BoxMass) {
      const double reach = a->support_sup_radius() + t.param;
      int zero_from = static_cast<int>(std::ceil(reach / r));
      while (zero_from * r < reach) ++zero_from;  // guard the ceil at exact multiples
      TailModel m;
      m.valid_from = zero_from;
      m.zero_from = zero_from;
      m.bound = [](int) { return 0.0; };
      return m;
    }
    const double supp = a->support_euclid_radius();
    const double alpha = t.param;
    TailModel m;
    m.valid_from = static_cast<int>(std::floor(supp / r)) + 1;
    m.bound = [mass, alpha, s, r, supp](int k) {
      const double d = std::max(r * k - supp, 0.0);
      return std::pow(mass, s) * std::exp(-s * alpha * d * d);
    };
    return m;
  }
  const auto& d = std::get<DensityMeasure>(nu);
  if (d.support_radius) {
    const double n_rad = *d.support_radius;
    const double mass = total_mass(nu);
    if (t.kind == Transform::Kind::BoxMass) {
      const double reach = n_rad + t.param;
      int zero_from = static_cast<int>(std::ceil(reach / r));
      while (zero_from * r < reach) ++zero_from;
      TailModel m;
      m.valid_from = zero_from;
      m.zero_from = zero_from;
      m.bound = [](int) { return 0.0; };
      return m;
    }
    const double alpha = t.param;
    TailModel m;
    m.valid_from = static_cast<int>(std::floor(n_rad / r)) + 1;
    m.bound = [mass, alpha, s, r, n_rad](int k) {
      const double dd = std::max(r * k - n_rad, 0.0);
      return std::pow(mass, s) * std::exp(-s * alpha * dd * dd);
    };
    return m;
  }
  if (!(d.beta > 0.0))
    throw std::invalid_argument(
        "lattice_sequence: density with beta = 0 and no support radius has no tail certificate");
  const double sqrt2n = std::sqrt(2.0 * dim);
  if (t.kind == Transform::Kind::BoxMass) {
    const double rho = t.param;
    const double vol = std::pow(2.0 * rho, 2.0 * dim);
    TailModel m;
    m.valid_from = 0;
    m.bound = [&d, vol, rho, sqrt2n, s, r](int k) {
      const double lo = std::max(r * k - rho * sqrt2n, 0.0);
      const double hi = r * k * sqrt2n + rho * sqrt2n;
      const double v = vol * d.poly_eval(hi * hi) * std::exp(-d.beta * lo * lo);
      return std::pow(v, s);
    };
    return m;
  }
  const double alpha = t.param;
  const double mass = d.gaussian_mass(d.beta);
  const double chalf = d.gaussian_mass(0.5 * d.beta);
  TailModel m;
  m.valid_from = 0;
  m.bound = [mass, chalf, alpha, s, r, beta = d.beta](int k) {
    const double b = r * k;
    return std::pow(mass, s) * std::exp(-s * alpha * b * b / 4.0) +
           std::pow(chalf, s) * std::exp(-s * beta * b * b / 8.0);
  };
  return m;
}

double tail_sum(const TailModel& m, int dim, int first_shell) {
  if (first_shell >= m.zero_from) return 0.0;
  double total = 0.0;
  double last = 0.0;
  for (int k = std::max(std::max(first_shell, m.valid_from), 1);; ++k) {
    if (k >= m.zero_from) return total;
    last = static_cast<double>(shell_count(dim, k)) * m.bound(k);
    total += last;
    if (last < 1e-280 && k > first_shell + 4) break;
    if (k > first_shell + 200000)
      throw std::invalid_argument("lattice_sequence: tail certificate does not close");
  }
  return total + last;  // one extra term dominates the super-Gaussian remainder
}

// Supremum of the per-shell bound over all omitted shells (the bound need not
// be monotone near the support, e.g. a growing polynomial factor).
double tail_max(const TailModel& m, int first_shell) {
  if (first_shell >= m.zero_from) return 0.0;
  double best = 0.0;
  double last = 0.0;
  for (int k = std::max(std::max(first_shell, m.valid_from), 1);; ++k) {
    if (k >= m.zero_from) return best;
    last = m.bound(k);
    best = std::max(best, last);
    if (last < 1e-280 && k > first_shell + 4) break;
    if (k > first_shell + 200000) break;
  }
  return best;
}

}  // namespace

int minimal_adequate_shell(const Measure& nu, Transform t, double spacing, int dim,
                           double s_power, double tail_tol) {
  if (!(t.param > 0.0)) throw std::invalid_argument("minimal_adequate_shell: parameter must be > 0");
  const TailModel m = tail_model(nu, t, spacing, dim, s_power);
  if (m.zero_from < std::numeric_limits<int>::max()) return std::max(0, m.zero_from - 1);
  for (int shell = m.valid_from;; ++shell) {
    if (tail_sum(m, dim, shell + 1) <= tail_tol) return shell;
    if (shell > 1000000)
      throw std::invalid_argument("minimal_adequate_shell: no adequate shell below 10^6");
  }
}

CertifiedSequence lattice_sequence(const Measure& nu, Transform t, const LatticeSpec& spec,
                                   double s_power, double tail_tol) {
  if (!(s_power > 0.0 && s_power <= 1.0))
    throw std::invalid_argument("lattice_sequence: power must be in (0, 1]");
  if (spec.dim != measure_dim(nu))
    throw std::invalid_argument("lattice_sequence: dimension mismatch");
  const int need = minimal_adequate_shell(nu, t, spec.spacing, spec.dim, s_power, tail_tol);
  if (spec.max_shell < need)
    throw std::invalid_argument("lattice_sequence: max_shell " + std::to_string(spec.max_shell) +
                                " is insufficient; minimal adequate shell count is " +
                                std::to_string(need));
  const auto pts = enumerate(spec);
  CertifiedSequence seq;
  seq.prefix.reserve(pts.size());
  for (const auto& b : pts) {
    const double v = t.kind == Transform::Kind::BoxMass ? box_mass(nu, t.param, b)
                                                        : heat_transform(nu, t.param, b);
    seq.prefix.push_back(s_power == 1.0 ? v : std::pow(v, s_power));
  }
  const TailModel m = tail_model(nu, t, spec.spacing, spec.dim, s_power);
  const int first_omitted = spec.max_shell + 1;
  if (first_omitted >= m.zero_from) {
    seq.tail_bound = 0.0;
    seq.tail_sum_bound = 0.0;
  } else {
    seq.tail_bound = tail_max(m, first_omitted);
    seq.tail_sum_bound = tail_sum(m, spec.dim, first_omitted);
  }
  return seq;
}

}  // namespace fockideal
