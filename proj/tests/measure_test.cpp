#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fockideal/family.hpp"
#include "fockideal/measure.hpp"

using namespace fockideal;

namespace {
const ComplexPoint kOrigin1 = ComplexPoint::zero(1);

AtomicMeasure unit_atom_at_origin() { return AtomicMeasure(1, {Atom{kOrigin1, 1.0}}); }
}  // namespace

TEST_CASE("kernel state overlaps") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + t % 2;
    std::vector<std::complex<double>> a(static_cast<std::size_t>(n)), b(a);
    for (auto& v : a) v = {u(rng), u(rng)};
    for (auto& v : b) v = {u(rng), u(rng)};
    const ComplexPoint z(std::move(a)), w(std::move(b));
    // |<k_z, k_w>| = exp(-|z-w|^2/2)
    CHECK(std::abs(kernel_state_overlap(z, w)) ==
          doctest::Approx(std::exp(-0.5 * euclid_dist_sq(z, w))).epsilon(1e-12));
    // Hermitian symmetry of the overlap.
    const auto o1 = kernel_state_overlap(z, w);
    const auto o2 = kernel_state_overlap(w, z);
    CHECK(std::abs(o1 - std::conj(o2)) <= 1e-15 * std::abs(o1) + 1e-300);
  }
}

TEST_CASE("normalized kernel integral is one") {
  for (double p : {1.0, 2.0, 4.0}) {
    for (const ComplexPoint& z :
         {ComplexPoint::zero(1), ComplexPoint({{2.0, 1.0}}), ComplexPoint({{0.3, -0.7}, {1.1, 0.4}})}) {
      const auto v = normalized_kernel_integral(z, p);
      CHECK(v.value == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
  // Convergence is monotone along a doubling ladder of fixed orders.
  const ComplexPoint z({{1.5, -2.0}});
  double prev_err = 1e9;
  for (int g : {16, 32, 64}) {
    const auto v = normalized_kernel_integral(z, 2.0, g);
    CHECK(std::abs(v.value - 1.0) <= prev_err * 1.01 + 1e-12);
    prev_err = std::abs(v.value - 1.0);
  }
}

TEST_CASE("box mass of atomic measures uses the open ball") {
  const auto nu = Measure(unit_atom_at_origin());
  CHECK(box_mass(nu, 1.0, kOrigin1) == 1.0);
  CHECK(box_mass(nu, 1.0, ComplexPoint({{1.0, 0.0}})) == 0.0);   // boundary excluded
  CHECK(box_mass(nu, 1.0, ComplexPoint({{0.99, 0.99}})) == 1.0);  // sup-norm box corner inside
  CHECK(box_mass(nu, 1.0, ComplexPoint({{1.2, 0.0}})) == 0.0);
}

TEST_CASE("heat transform of atomic measures") {
  const auto nu = Measure(unit_atom_at_origin());
  for (double alpha : {0.25, 1.0, 3.0}) {
    const ComplexPoint z({{0.7, -0.4}});
    CHECK(heat_transform(nu, alpha, z) ==
          doctest::Approx(std::exp(-alpha * z.norm_sq())).epsilon(1e-14));
  }
}

TEST_CASE("flat density transforms") {
  const DensityMeasure flat(1, {1.0}, 0.0);
  const Measure nu = flat;
  // Mass of a side-2 box.
  CHECK(box_mass(nu, 1.0, ComplexPoint({{0.37, -1.2}})) == doctest::Approx(4.0).epsilon(1e-10));
  CHECK(box_mass_closed_form(nu, 1.0, kOrigin1) == doctest::Approx(4.0).epsilon(1e-13));
  // Gaussian integral pi / alpha at every center.
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (const auto& z : {kOrigin1, ComplexPoint({{1.3, 0.4}})}) {
      CHECK(heat_transform(nu, alpha, z) ==
            doctest::Approx(std::numbers::pi / alpha).epsilon(1e-9));
      CHECK(heat_transform_closed_form(nu, alpha, z) ==
            doctest::Approx(std::numbers::pi / alpha).epsilon(1e-13));
    }
  }
}

TEST_CASE("polynomial-Gaussian density: quadrature route vs closed form") {
  const DensityMeasure d(1, {0.5, 1.0, 0.25}, 0.8);
  const Measure nu = d;
  const DensityMeasure d2(2, {1.0, 0.7}, 1.1);
  const Measure nu2 = d2;
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 25; ++t) {
    const ComplexPoint z({{u(rng), u(rng)}});
    for (double r : {0.5, 1.5}) {
      CHECK(box_mass(nu, r, z) ==
            doctest::Approx(box_mass_closed_form(nu, r, z)).epsilon(1e-8));
    }
    for (double alpha : {0.4, 1.0}) {
      CHECK(heat_transform(nu, alpha, z) ==
            doctest::Approx(heat_transform_closed_form(nu, alpha, z)).epsilon(1e-8));
    }
    const ComplexPoint z2({{u(rng), u(rng)}, {u(rng), u(rng)}});
    CHECK(box_mass(nu2, 1.0, z2) ==
          doctest::Approx(box_mass_closed_form(nu2, 1.0, z2)).epsilon(1e-8));
    CHECK(heat_transform(nu2, 1.0, z2) ==
          doctest::Approx(heat_transform_closed_form(nu2, 1.0, z2)).epsilon(1e-8));
  }
}

TEST_CASE("transforms are positively homogeneous and additive") {
  const auto fam = seeded_atomic_family(99, 6, 2, 8, 2.0);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (const auto& m : fam) {
    const Measure nu = m;
    const Measure nu3 = scaled(nu, 3.0);
    for (int t = 0; t < 50; ++t) {
      std::vector<std::complex<double>> c(static_cast<std::size_t>(m.dim));
      for (auto& v : c) v = {u(rng), u(rng)};
      const ComplexPoint z(std::move(c));
      CHECK(box_mass(nu3, 1.0, z) == doctest::Approx(3.0 * box_mass(nu, 1.0, z)).epsilon(1e-14));
      CHECK(heat_transform(nu3, 1.0, z) ==
            doctest::Approx(3.0 * heat_transform(nu, 1.0, z)).epsilon(1e-14));
      CHECK(heat_transform(nu, 1.0, z) > 0.0);
    }
  }
}

TEST_CASE("truncation") {
  const AtomicMeasure nu(1, {Atom{ComplexPoint({{0.3, 0.4}}), 1.0},
                             Atom{ComplexPoint({{2.0, 0.0}}), 2.0}});
  SUBCASE("drops far atoms, keeps the ball") {
    const auto t = std::get<AtomicMeasure>(truncate(nu, 1.0));
    REQUIRE(t.atoms.size() == 1);
    CHECK(t.atoms[0].weight == 1.0);
  }
  SUBCASE("radius beyond the support is the identity") {
    const auto t = std::get<AtomicMeasure>(truncate(nu, 10.0));
    CHECK(t.atoms.size() == 2);
  }
  SUBCASE("transforms never grow under truncation") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    const Measure full = nu;
    const Measure cut = truncate(full, 1.5);
    for (int t = 0; t < 200; ++t) {
      const ComplexPoint z({{u(rng), u(rng)}});
      CHECK(box_mass(cut, 1.0, z) <= box_mass(full, 1.0, z) + 1e-15);
      CHECK(heat_transform(cut, 1.0, z) <= heat_transform(full, 1.0, z) * (1 + 1e-14) + 1e-300);
    }
  }
  SUBCASE("clipped density, dim 1") {
    const DensityMeasure d(1, {1.0, 0.5}, 0.6);
    const Measure full = d;
    const Measure cut = truncate(full, 1.2);
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int t = 0; t < 15; ++t) {
      const ComplexPoint z({{u(rng), u(rng)}});
      const double full_hat = box_mass(full, 0.8, z);
      const double cut_hat = box_mass(cut, 0.8, z);
      CHECK(cut_hat <= full_hat * (1 + 1e-9) + 1e-12);
      const double full_heat = heat_transform(full, 1.0, z);
      const double cut_heat = heat_transform(cut, 1.0, z);
      CHECK(cut_heat <= full_heat * (1 + 1e-9) + 1e-12);
      CHECK(cut_heat > 0.0);
    }
    // Clip far outside the support radius: box mass vanishes.
    CHECK(box_mass(cut, 0.5, ComplexPoint({{3.0, 3.0}})) == 0.0);
    // A clip radius so large nothing changes.
    const Measure wide = truncate(full, 50.0);
    CHECK(box_mass(wide, 0.8, kOrigin1) == doctest::Approx(box_mass(full, 0.8, kOrigin1)).epsilon(1e-9));
  }
  SUBCASE("clipped transforms against independent quadrature routes") {
    const DensityMeasure d(1, {0.8, 0.4}, 0.5);
    const double n_rad = 1.3;
    const Measure cut = truncate(Measure(d), n_rad);
    const auto density_at = [&](double u, double v) {
      const double t = u * u + v * v;
      return (0.8 + 0.4 * t) * std::exp(-0.5 * t);
    };
    for (const auto& z : {ComplexPoint({{0.4, -0.2}}), ComplexPoint({{1.1, 0.9}})}) {
      const double x = z.real_coord(0), y = z.real_coord(1);
      const double r = 0.7;

      // Box mass: strips in u with numeric inner integrals, no closed forms.
      double hat_oracle = 0.0;
      const double ulo = std::max(x - r, -n_rad), uhi = std::min(x + r, n_rad);
      const int panels = 2000;
      for (int p = 0; p < panels && ulo < uhi; ++p) {
        const double a = ulo + (uhi - ulo) * p / panels;
        const double b = ulo + (uhi - ulo) * (p + 1) / panels;
        hat_oracle += integrate_legendre(
            [&](double u) {
              const double g = std::sqrt(std::max(n_rad * n_rad - u * u, 0.0));
              const double vlo = std::max(y - r, -g), vhi = std::min(y + r, g);
              if (vlo >= vhi) return 0.0;
              return integrate_legendre([&](double v) { return density_at(u, v); }, vlo, vhi,
                                        24);
            },
            a, b, 8);
      }
      CHECK(box_mass(cut, r, z) == doctest::Approx(hat_oracle).epsilon(1e-8));

      // Heat transform: polar coordinates make the clipped integrand smooth.
      const int g = 200;
      const auto& q = gauss_legendre(g);
      double heat_oracle = 0.0;
      for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
          const double rho = 0.5 * n_rad * (q.nodes[static_cast<std::size_t>(i)] + 1.0);
          const double th = std::numbers::pi * (q.nodes[static_cast<std::size_t>(j)] + 1.0);
          const double u = rho * std::cos(th), v = rho * std::sin(th);
          const double du = u - x, dv = v - y;
          heat_oracle += q.weights[static_cast<std::size_t>(i)] *
                         q.weights[static_cast<std::size_t>(j)] * rho * density_at(u, v) *
                         std::exp(-(du * du + dv * dv));
        }
      heat_oracle *= 0.5 * n_rad * std::numbers::pi;
      CHECK(heat_transform(cut, 1.0, z) == doctest::Approx(heat_oracle).epsilon(1e-9));
    }
  }
  SUBCASE("clipped densities rejected for dim >= 2") {
    const DensityMeasure d2(2, {1.0}, 1.0);
    CHECK_THROWS_AS(truncate(Measure(d2), 1.0), std::invalid_argument);
  }
}

TEST_CASE("lattice sequences and certificates") {
  SUBCASE("single atom, box transform: a one-hot sequence with zero tail") {
    const Measure nu = unit_atom_at_origin();
    const auto need = minimal_adequate_shell(nu, Transform::box_mass(1.0), 1.0, 1);
    const LatticeSpec spec(1.0, 1, std::max(need, 2));
    const auto seq = lattice_sequence(nu, Transform::box_mass(1.0), spec);
    CHECK(seq.tail_bound == 0.0);
    CHECK(seq.tail_sum_bound == 0.0);
    CHECK(seq.prefix[0] == 1.0);
    for (std::size_t i = 1; i < seq.prefix.size(); ++i) CHECK(seq.prefix[i] == 0.0);
  }

  SUBCASE("insufficient shells are rejected with the minimal count") {
    const AtomicMeasure far(1, {Atom{ComplexPoint({{3.2, 0.0}}), 1.0}});
    const Measure nu = far;
    const int need = minimal_adequate_shell(nu, Transform::box_mass(1.0), 1.0, 1);
    CHECK(need >= 4);
    CHECK_THROWS_WITH_AS(lattice_sequence(nu, Transform::box_mass(1.0), LatticeSpec(1.0, 1, 1)),
                         doctest::Contains(std::to_string(need).c_str()), std::invalid_argument);
  }

  SUBCASE("heat sequence sums to the square of the 1-D lattice Gaussian sum") {
    const Measure nu = unit_atom_at_origin();
    const int need = minimal_adequate_shell(nu, Transform::heat(1.0), 1.0, 1, 1.0, 1e-12);
    const auto seq = lattice_sequence(nu, Transform::heat(1.0), LatticeSpec(1.0, 1, need));
    double total = 0.0;
    for (double v : seq.prefix) total += v;
    double theta = 1.0;
    for (int k = 1; k < 40; ++k) theta += 2.0 * std::exp(-static_cast<double>(k) * k);
    CHECK(total == doctest::Approx(theta * theta).epsilon(1e-10));
    CHECK(seq.tail_sum_bound <= 1e-12);
  }

  SUBCASE("scaling the measure scales every entry") {
    const auto fam = seeded_atomic_family(7, 2, 1, 5, 1.5);
    const Measure nu = fam.front();
    const Measure nu2 = scaled(nu, 2.0);
    const int need = minimal_adequate_shell(nu, Transform::heat(1.0), 1.0, 1);
    const int need2 = minimal_adequate_shell(nu2, Transform::heat(1.0), 1.0, 1);
    const LatticeSpec spec(1.0, 1, std::max(need, need2));
    const auto a = lattice_sequence(nu, Transform::heat(1.0), spec);
    const auto b = lattice_sequence(nu2, Transform::heat(1.0), spec);
    for (std::size_t i = 0; i < a.prefix.size(); ++i)
      CHECK(b.prefix[i] == doctest::Approx(2.0 * a.prefix[i]).epsilon(1e-14));
  }

  SUBCASE("powered sequences carry powered tail certificates") {
    const auto fam = seeded_atomic_family(13, 1, 1, 4, 1.0);
    const Measure nu = fam.front();
    const int need = minimal_adequate_shell(nu, Transform::heat(0.5), 1.0, 1, 0.5, 1e-10);
    const auto seq = lattice_sequence(nu, Transform::heat(0.5), LatticeSpec(1.0, 1, need), 0.5,
                                      1e-10);
    CHECK(seq.tail_sum_bound <= 1e-10);
    for (std::size_t i = 0; i < seq.prefix.size(); ++i) CHECK(seq.prefix[i] >= 0.0);
  }

  SUBCASE("Gaussian density sequences carry certificates") {
    const DensityMeasure d(1, {1.0, 0.5}, 1.0);
    const Measure nu = d;
    for (const Transform t : {Transform::box_mass(1.0), Transform::heat(1.0)}) {
      const int need = minimal_adequate_shell(nu, t, 1.0, 1, 1.0, 1e-10);
      const auto seq = lattice_sequence(nu, t, LatticeSpec(1.0, 1, need), 1.0, 1e-10);
      CHECK(seq.tail_sum_bound <= 1e-10);
      CHECK(seq.prefix[0] > 0.0);
    }
    // A flat density has no certificate.
    const DensityMeasure flat(1, {1.0}, 0.0);
    CHECK_THROWS_AS(minimal_adequate_shell(Measure(flat), Transform::heat(1.0), 1.0, 1),
                    std::invalid_argument);
  }
}
