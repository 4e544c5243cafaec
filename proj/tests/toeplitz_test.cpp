#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fockideal/family.hpp"
#include "fockideal/toeplitz.hpp"

using namespace fockideal;

TEST_CASE("multi-index basis enumeration") {
  const auto b1 = multi_indices(1, 3);
  CHECK(b1.size() == 4);
  const auto b2 = multi_indices(2, 2);
  CHECK(b2.size() == 6);  // (0,0) (0,1) (1,0) (0,2) (1,1) (2,0)
  for (std::size_t i = 1; i < b2.size(); ++i) {
    const int gi = b2[i][0] + b2[i][1];
    const int gp = b2[i - 1][0] + b2[i - 1][1];
    CHECK(gi >= gp);
  }
}

TEST_CASE("atomic Gram compression") {
  SUBCASE("one atom is rank one with its weight as spectrum") {
    const AtomicMeasure nu(1, {Atom{ComplexPoint({{1.3, -0.2}}), 2.5}});
    const auto sv = s_numbers(build_atomic(nu).matrix);
    CHECK(sv.values == std::vector<double>{2.5});
  }
  SUBCASE("two unit atoms give 1 +- overlap") {
    const double dist = std::sqrt(2.0 * std::log(2.0));
    const AtomicMeasure nu(1, {Atom{ComplexPoint::zero(1), 1.0},
                               Atom{ComplexPoint({{dist, 0.0}}), 1.0}});
    const auto sv = s_numbers(build_atomic(nu).matrix);
    CHECK(sv.values[0] == doctest::Approx(1.5).epsilon(1e-13));
    CHECK(sv.values[1] == doctest::Approx(0.5).epsilon(1e-13));
  }
  SUBCASE("far atoms decouple") {
    const AtomicMeasure nu(1, {Atom{ComplexPoint({{-8.0, 0.0}}), 1.0},
                               Atom{ComplexPoint({{8.0, 0.0}}), 2.0}});
    const auto sv = s_numbers(build_atomic(nu).matrix);
    CHECK(sv.values[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(sv.values[1] == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("trace equals total mass and the matrix is PSD") {
    for (const auto& nu : seeded_atomic_family(3, 6, 2, 9, 2.0)) {
      const auto comp = build_atomic(nu);
      CHECK(comp.exact_nonzero_spectrum);
      double trace = 0.0;
      for (int j = 0; j < comp.matrix.dim(); ++j) trace += comp.matrix.matrix()(j, j).real();
      CHECK(trace == doctest::Approx(nu.total_mass()).epsilon(1e-13));
      const auto sv = s_numbers(comp.matrix);  // would throw if not PSD
      double sum = 0.0;
      for (double v : sv.values) sum += v;
      CHECK(sum == doctest::Approx(nu.total_mass()).epsilon(1e-11));
    }
  }
}

TEST_CASE("truncated-basis compression") {
  SUBCASE("flat density is pi^n I") {
    for (int n : {1, 2}) {
      const DensityMeasure flat(n, {1.0}, 0.0);
      const auto comp = build_truncated(flat, 2);
      const auto& m = comp.matrix.matrix();
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
          CHECK(std::abs(m(i, j) - (i == j ? std::pow(std::numbers::pi, n) : 0.0)) <= 1e-10);
    }
  }
  SUBCASE("scaled flat density tracks the scale") {
    const DensityMeasure flat(1, {2.5}, 0.0);
    const auto comp = build_truncated(flat, 1);
    CHECK(comp.matrix.matrix()(0, 0).real() == doctest::Approx(2.5 * std::numbers::pi).epsilon(1e-13));
  }
  SUBCASE("radial diagonal against 1-D quadrature") {
    // Entry for basis power b: pi / b! * int_0^inf t^b q(t) e^{-(1+beta) t} dt.
    const DensityMeasure d(1, {1.0, 0.5, 0.2}, 0.7);
    const auto comp = build_truncated(d, 4);
    const double c = 1.7;
    for (int b = 0; b <= 4; ++b) {
      double oracle = 0.0;
      // Truncated Laguerre-style integral by wide Legendre panels.
      const auto f = [&](double t) {
        return std::pow(t, b) * (1.0 + 0.5 * t + 0.2 * t * t) * std::exp(-c * t);
      };
      for (int seg = 0; seg < 40; ++seg)
        oracle += integrate_legendre(f, seg * 2.0, (seg + 1) * 2.0, 48);
      double bfact = 1.0;
      for (int i = 2; i <= b; ++i) bfact *= i;
      oracle *= std::numbers::pi / bfact;
      CHECK(comp.matrix.matrix()(b, b).real() == doctest::Approx(oracle).epsilon(1e-9));
    }
  }
  SUBCASE("clipped radial diagonal against quadrature, approaching the full entry") {
    const DensityMeasure flat(1, {1.0}, 0.0);
    const Measure cut = truncate(Measure(flat), 2.0);
    const auto comp = build_truncated(cut, 3);
    for (int b = 0; b <= 3; ++b) {
      // pi / b! * int_0^{N^2} t^b e^{-t} dt
      const double oracle = std::numbers::pi / std::tgamma(b + 1.0) *
                            integrate_legendre(
                                [&](double t) { return std::pow(t, b) * std::exp(-t); }, 0.0,
                                4.0, 64);
      CHECK(comp.matrix.matrix()(b, b).real() == doctest::Approx(oracle).epsilon(1e-12));
    }
    const auto wide = build_truncated(truncate(Measure(flat), 40.0), 3);
    CHECK(wide.matrix.matrix()(0, 0).real() ==
          doctest::Approx(std::numbers::pi).epsilon(1e-12));
  }
  SUBCASE("compression singular values approach the Gram spectrum from below") {
    const auto fam = seeded_atomic_family(8, 1, 1, 5, 1.2);
    const auto exact = s_numbers(build_atomic(fam.front()).matrix);
    const Measure nu = fam.front();
    std::vector<double> prev;
    for (int d : {4, 8, 16}) {
      const auto sv = s_numbers(build_truncated(nu, d).matrix);
      for (std::size_t j = 0; j < prev.size(); ++j)
        CHECK(sv.values[j] >= prev[j] * (1.0 - 1e-10) - 1e-12);
      for (std::size_t j = 0; j < exact.values.size(); ++j)
        CHECK(sv.values[j] <= exact.values[j] * (1.0 + 1e-10) + 1e-12);
      prev = sv.values;
    }
    // Top of the spectrum is essentially converged by degree 16.
    const auto sv16 = s_numbers(build_truncated(nu, 16).matrix);
    CHECK(sv16.values[0] == doctest::Approx(exact.values[0]).epsilon(1e-6));
  }
}

TEST_CASE("Berezin transform") {
  SUBCASE("single atom closed form") {
    const AtomicMeasure nu(1, {Atom{ComplexPoint({{0.4, 1.1}}), 1.7}});
    const Measure m = nu;
    const ComplexPoint z({{-0.3, 0.8}});
    const double want = 1.7 * std::exp(-euclid_dist_sq(z, nu.atoms[0].location));
    CHECK(berezin(m, z) == doctest::Approx(want).epsilon(1e-12));
    CHECK(berezin_closed_form(m, z) == doctest::Approx(want).epsilon(1e-14));
  }
  SUBCASE("matches the heat transform at rate one") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (const auto& nu : seeded_atomic_family(21, 8, 2, 10, 2.0)) {
      const Measure m = nu;
      for (int t = 0; t < 200; ++t) {
        std::vector<std::complex<double>> c(static_cast<std::size_t>(nu.dim));
        for (auto& v : c) v = {u(rng), u(rng)};
        const ComplexPoint z(std::move(c));
        const double b = berezin(m, z);
        const double h = heat_transform(m, 1.0, z);
        CHECK(b == doctest::Approx(h).epsilon(1e-10));
      }
    }
  }
  SUBCASE("flat density gives pi") {
    const DensityMeasure flat(1, {1.0}, 0.0);
    CHECK(berezin(Measure(flat), ComplexPoint({{0.9, -2.0}})) ==
          doctest::Approx(std::numbers::pi).epsilon(1e-9));
  }
  SUBCASE("additivity over atomic concatenation") {
    const AtomicMeasure a(1, {Atom{ComplexPoint({{0.5, 0.0}}), 1.0}});
    const AtomicMeasure b(1, {Atom{ComplexPoint({{-0.3, 0.2}}), 2.0}});
    AtomicMeasure both = a;
    both.atoms.push_back(b.atoms[0]);
    const ComplexPoint z({{0.1, 0.1}});
    CHECK(berezin(Measure(both), z) ==
          doctest::Approx(berezin(Measure(a), z) + berezin(Measure(b), z)).epsilon(1e-14));
  }
}

TEST_CASE("norm bounds") {
  SUBCASE("single atom") {
    const AtomicMeasure nu(1, {Atom{ComplexPoint({{0.2, 0.3}}), 1.9}});
    const auto nb = norm_bounds(nu, 1.0);
    CHECK(nb.lower == doctest::Approx(1.9).epsilon(1e-12));
    CHECK(nb.box_mass_sup == doctest::Approx(1.9).epsilon(1e-12));
  }
  SUBCASE("a cluster in one ball: box sup counts, top eigenvalue is smaller") {
    std::vector<Atom> atoms;
    for (int k = 0; k < 6; ++k)
      atoms.push_back(Atom{ComplexPoint({{0.05 * k, -0.03 * k}}), 1.0});
    const AtomicMeasure nu(1, atoms);
    const auto nb = norm_bounds(nu, 1.0);
    CHECK(nb.box_mass_sup == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(nb.lower <= 6.0 * (1 + 1e-12));
    CHECK(nb.lower > 5.5);  // nearly coincident states
  }
  SUBCASE("scaling") {
    const AtomicMeasure nu(1, {Atom{ComplexPoint({{0.4, 0.0}}), 1.0},
                               Atom{ComplexPoint({{-0.2, 0.6}}), 0.7}});
    const auto nb1 = norm_bounds(nu, 0.7);
    const auto nb3 = norm_bounds(nu.scaled(3.0), 0.7);
    CHECK(nb3.lower == doctest::Approx(3.0 * nb1.lower).epsilon(1e-12));
    CHECK(nb3.box_mass_sup == doctest::Approx(3.0 * nb1.box_mass_sup).epsilon(1e-12));
  }
}

TEST_CASE("frame estimates") {
  SUBCASE("constant functions reproduce the lattice Gaussian sum") {
    const double rho = 0.5;
    const int shell = frame_required_shell(rho, 0, 1);
    const auto est = frame_estimate(rho, 0, LatticeSpec(rho, 1, shell), 3, 42);
    // g = e_0 (any unit scalar multiple): sum_j e^{-|b_j|^2} exactly.
    double theta = 1.0;
    for (int k = 1; k < 200; ++k) {
      const double t = std::exp(-rho * rho * k * k);
      if (t < 1e-300) break;
      theta += 2.0 * t;
    }
    CHECK(est.c1 == doctest::Approx(theta * theta).epsilon(1e-8));
    CHECK(est.c2 == doctest::Approx(theta * theta).epsilon(1e-8));
  }
  SUBCASE("degree ten frame is healthy at rho 0.3") {
    const int shell = frame_required_shell(0.3, 10, 1);
    const auto est = frame_estimate(0.3, 10, LatticeSpec(0.3, 1, shell), 25, 71);
    CHECK(est.c1 > 0.0);
    CHECK(est.c2 >= est.c1);
    CHECK(est.c2 / est.c1 < 1e3);
    CHECK(est.tail_bound < 1e-8);
  }
  SUBCASE("insufficient shells are rejected with the required count") {
    const int shell = frame_required_shell(0.3, 10, 1);
    CHECK_THROWS_WITH_AS(frame_estimate(0.3, 10, LatticeSpec(0.3, 1, 2), 5, 1),
                         doctest::Contains(std::to_string(shell).c_str()), std::invalid_argument);
  }
}
