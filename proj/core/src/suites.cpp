#include "fockideal/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "fockideal/family.hpp"
#include "fockideal/lattice.hpp"
#include "fockideal/measure.hpp"
#include "fockideal/snf.hpp"
#include "fockideal/spectra.hpp"
#include "fockideal/suites.hpp"
#include "fockideal/toeplitz.hpp"
#include "fockideal/verify.hpp"

namespace fockideal {

namespace {

std::vector<NormingFunction> all_variants() {
  return {NormingFunction::power_sum(1.0),  NormingFunction::power_sum(1.5),
          NormingFunction::power_sum(2.0),  NormingFunction::power_sum(3.0),
          NormingFunction::sup_norm(),      NormingFunction::ky_fan(1),
          NormingFunction::ky_fan(3),       NormingFunction::lorentz(),
          NormingFunction::lorentz({1.0, 0.5, 0.25})};
}

std::vector<NormingFunction> report_variants() {
  return {NormingFunction::power_sum(1.0), NormingFunction::power_sum(2.0),
          NormingFunction::sup_norm(), NormingFunction::ky_fan(5)};
}

ComplexPoint random_point(std::mt19937_64& rng, int dim, double box) {
  std::uniform_real_distribution<double> u(-box, box);
  std::vector<std::complex<double>> c(static_cast<std::size_t>(dim));
  for (auto& v : c) v = std::complex<double>(u(rng), u(rng));
  return ComplexPoint(std::move(c));
}

std::string fmt(double v) { return format_value(v); }

// --- kernel normalization ------------------------------------------------------

SuiteResult run_kernel_identity(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "kernel-identity";
  std::mt19937_64 rng(opt.seed ^ 0x6b65726eULL);
  double worst = 0.0;
  for (double p : {1.0, 2.0, 4.0}) {
    for (int n : {1, 2}) {
      for (int i = 0; i < 20; ++i) {
        ComplexPoint z = random_point(rng, n, 3.0);
        if (z.euclid_norm() > 3.0) {
          std::vector<std::complex<double>> c = z.coords();
          for (auto& v : c) v *= 2.9 / z.euclid_norm();
          z = ComplexPoint(std::move(c));
        }
        const Certified v = normalized_kernel_integral(z, p);
        worst = std::max(worst, std::abs(v.value - 1.0));
      }
    }
  }
  res.metric = worst;
  res.pass = worst <= 1e-8;
  res.detail = "max |value - 1| = " + fmt(worst) + " over p in {1,2,4}, n in {1,2}, 20 z each";
  return res;
}

// --- Berezin transform equals the heat transform at rate 1 ---------------------

SuiteResult run_berezin_identity(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "berezin-identity";
  std::mt19937_64 rng(opt.seed ^ 0x62657265ULL);
  const auto measures = seeded_atomic_family(opt.seed ^ 0x1157ULL, 20, 2, 10, 2.0);
  double worst = 0.0;
  for (const auto& nu : measures) {
    const Measure m = nu;
    const double reach = nu.support_sup_radius() + 2.0;
    for (int i = 0; i < 1000; ++i) {
      const ComplexPoint z = random_point(rng, nu.dim, reach);
      const double via_overlaps = berezin(m, z);
      const double via_heat = heat_transform(m, 1.0, z);
      worst = std::max(worst, std::abs(via_overlaps - via_heat) / std::max(via_heat, 1e-300));
    }
  }
  res.metric = worst;
  res.pass = worst <= 1e-10;
  res.detail = "max relative |overlap route - heat route| = " + fmt(worst) +
               " over 20 measures x 1000 samples";
  return res;
}

// --- box mass dominated by the heat transform ----------------------------------

SuiteResult run_domination(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "domination";
  const auto measures = seeded_atomic_family(opt.seed ^ 0xd011ULL, 20, 2, 10, 2.0);
  long stated = 0, safe = 0, samples = 0;
  double worst_margin = 0.0;  // max_ratio / stated constant
  std::uint64_t cell = 0;
  for (const auto& nu : measures) {
    for (double r : {0.5, 1.0, 2.0}) {
      for (double alpha : {0.5, 1.0, 2.0}) {
        const auto rep =
            check_heat_domination(nu, r, alpha, 1000, opt.seed ^ (0xabcdULL + cell++));
        stated += rep.violations_stated;
        safe += rep.violations_safe;
        samples += rep.samples;
        worst_margin = std::max(worst_margin, rep.max_ratio / rep.constant_stated);
      }
    }
  }
  res.metric = worst_margin;
  res.pass = stated == 0;
  std::ostringstream d;
  d << "constant exp(a*sqrt(2n)*r^2): " << stated << " violations over " << samples
    << " samples (worst ratio/constant " << fmt(worst_margin) << "); derivable constant exp(2n*a*r^2): "
    << safe << " violations";
  res.detail = d.str();
  return res;
}

// --- two-sided lattice sandwich -------------------------------------------------

SuiteResult run_sandwich(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "sandwich";
  const auto measures = seeded_atomic_family(opt.seed ^ 0x5a17ULL, 10, 1, 6, 1.5);
  long cells = 0, failures = 0;
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& nu : measures) {
    const Measure m = nu;
    for (double s : {0.5, 1.0}) {
      for (double rho : {0.5, 1.0}) {
        for (double gamma : {0.5, 1.0}) {
          for (double alpha : {0.25, 1.0}) {
            for (const auto& phi : report_variants()) {
              const auto rep = berezin_sandwich(m, rho, gamma, alpha, s, phi);
              ++cells;
              if (!rep.pass()) ++failures;
              const double scale = std::max(rep.middle.value, 1.0);
              worst = std::max(worst, (rep.lower.value - rep.middle.value) / scale);
              worst = std::max(worst, (rep.middle.value - rep.upper.value) / scale);
              if (rep.series_tail > 1e-12 * rep.series_constant) ++failures;
            }
          }
        }
      }
    }
  }
  // Independent oracle: one unit atom at the origin, rate-1 averages on the
  // unit lattice sum to the square of the one-dimensional Gaussian lattice sum.
  double theta = 1.0;
  for (int k = 1;; ++k) {
    const double t = std::exp(-static_cast<double>(k) * k);
    if (t < 1e-300) break;
    theta += 2.0 * t;
  }
  const AtomicMeasure unit_atom(1, {Atom{ComplexPoint::zero(1), 1.0}});
  const auto rep = berezin_sandwich(unit_atom, 1.0, 1.0, 1.0, 1.0, NormingFunction::power_sum(1.0));
  const double theta_err = std::abs(rep.middle.value - theta * theta);
  if (theta_err > 1e-6) ++failures;

  res.metric = std::max(worst, 0.0);
  res.pass = failures == 0;
  res.detail = std::to_string(cells) + " cells, " + std::to_string(failures) +
               " failures; lattice sum vs direct summation delta " + fmt(theta_err);
  return res;
}

// --- membership chain ----------------------------------------------------------

SuiteResult run_chain(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "chain";
  double worst = 0.0;
  std::ostringstream detail;

  // (a) one atom at the origin: operator and box-sequence sides agree exactly.
  for (double weight : {1.0, 3.7}) {
    const AtomicMeasure atom(1, {Atom{ComplexPoint::zero(1), weight}});
    for (double s : {0.5, 1.0}) {
      for (const auto& phi : all_variants()) {
        const auto rep = main_chain(atom, 1.0, s, 1.0, phi);
        worst = std::max(worst, std::abs(rep.ratio_op_box - 1.0));
      }
    }
  }
  const double single_atom_worst = worst;

  // (b) scaling the symbol by c scales all three functionals by c^s.
  const AtomicMeasure base(1, {Atom{ComplexPoint({{0.3, 0.2}}), 0.7},
                               Atom{ComplexPoint({{-1.1, 0.4}}), 1.3},
                               Atom{ComplexPoint({{2.0, -1.5}}), 0.5}});
  double homog_worst = 0.0;
  for (double s : {0.5, 1.0}) {
    for (const auto& phi : all_variants()) {
      const auto ref = main_chain(base, 1.0, s, 1.0, phi);
      for (double c : {0.1, 1.0, 7.0}) {
        const auto rep = main_chain(base.scaled(c), 1.0, s, 1.0, phi);
        const double cs = std::pow(c, s);
        homog_worst = std::max(homog_worst,
                               std::abs(rep.op_phi.value - cs * ref.op_phi.value) /
                                   std::max(cs * ref.op_phi.value, 1e-300));
        homog_worst = std::max(homog_worst,
                               std::abs(rep.box_seq_phi.value - cs * ref.box_seq_phi.value) /
                                   std::max(cs * ref.box_seq_phi.value, 1e-300));
        homog_worst = std::max(homog_worst,
                               std::abs(rep.heat_seq_phi.value - cs * ref.heat_seq_phi.value) /
                                   std::max(cs * ref.heat_seq_phi.value, 1e-300));
      }
    }
  }
  worst = std::max(worst, homog_worst);

  // (c) ratio intervals over the clustered family are finite and stable
  // across two seeds.
  double drift_worst = 0.0;
  bool all_finite = true;
  const auto fam1 = clustered_family(opt.seed);
  const auto fam2 = clustered_family(opt.seed + 1);
  for (double r : {0.5, 1.0}) {
    for (double s : {0.5, 1.0}) {
      for (const auto& phi : report_variants()) {
        auto band = [&](const std::vector<AtomicMeasure>& fam) {
          double b = 1.0;
          for (const auto& nu : fam) {
            const auto rep = main_chain(nu, r, s, 1.0, phi);
            if (!rep.all_finite || !std::isfinite(rep.ratio_op_box) || rep.ratio_op_box <= 0.0)
              all_finite = false;
            else
              b = std::max(b, std::max(rep.ratio_op_box, 1.0 / rep.ratio_op_box));
          }
          return b;
        };
        const double b1 = band(fam1), b2 = band(fam2);
        drift_worst = std::max(drift_worst, std::abs(b1 - b2) / std::max(b1, b2));
      }
    }
  }

  res.pass = single_atom_worst <= 1e-10 && homog_worst <= 1e-10 && all_finite &&
             drift_worst < 0.05;
  res.metric = std::max({single_atom_worst, homog_worst, drift_worst});
  detail << "single-atom |ratio-1| " << fmt(single_atom_worst) << "; homogeneity "
         << fmt(homog_worst) << "; band drift across seeds " << fmt(drift_worst)
         << (all_finite ? "" : "; NON-FINITE RATIO");
  res.detail = detail.str();
  return res;
}

// --- singular value calculus ---------------------------------------------------

SuiteResult run_calculus(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "calculus";
  const auto rep = calculus_suite(opt.seed ^ 0xca1cULL, 200, 50);
  res.metric = rep.max_rel_violation;
  res.pass = rep.max_rel_violation <= 1e-10;
  std::ostringstream d;
  d << "200 trials, dims <= 50; worst relative violation " << fmt(rep.max_rel_violation)
    << " (norm route " << fmt(rep.norm_route_delta) << ", conjugation "
    << fmt(rep.conjugation_violation) << ", order " << fmt(rep.order_violation)
    << ", quasi-triangle " << fmt(rep.quasi_triangle_violation) << ", power "
    << fmt(rep.power_commutation_delta) << ", diagonal " << fmt(rep.diagonal_phi_delta)
    << ", subsequence " << fmt(rep.subsequence_violation) << ")";
  res.detail = d.str();
  return res;
}

// --- norming function axioms ---------------------------------------------------

SuiteResult run_snf_axioms(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "snf-axioms";
  std::mt19937_64 rng(opt.seed ^ 0x50fULL);
  long failures = 0;
  double worst = 0.0;
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<int> len_dist(1, 30);

  for (const auto& phi : all_variants()) {
    // Normalization on the first unit sequence.
    if (phi.eval(std::vector<double>{1.0, 0.0, 0.0}) != 1.0) ++failures;
    for (int trial = 0; trial < 10000; ++trial) {
      const int len = len_dist(rng);
      const double scale = std::pow(10.0, (trial % 7) - 3);
      std::vector<double> xs(static_cast<std::size_t>(len)), ys(xs.size());
      for (auto& v : xs) v = scale * gauss(rng);
      for (auto& v : ys) v = scale * gauss(rng);

      const double fx = phi.eval(xs), fy = phi.eval(ys);

      // Triangle inequality on aligned sums.
      std::vector<double> sum(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) sum[i] = xs[i] + ys[i];
      const double fs = phi.eval(sum);
      const double tri = (fs - (fx + fy)) / std::max(fx + fy, 1e-300);
      worst = std::max(worst, tri);
      if (tri > 1e-12) ++failures;

      // Absolute homogeneity.
      const double t = -2.5 * scale;
      std::vector<double> tx(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) tx[i] = t * xs[i];
      const double hom = std::abs(phi.eval(tx) - std::abs(t) * fx) /
                         std::max(std::abs(t) * fx, 1e-300);
      worst = std::max(worst, hom);
      if (hom > 1e-12) ++failures;

      // Zero only at zero (exact).
      if ((fx == 0.0) != std::all_of(xs.begin(), xs.end(), [](double v) { return v == 0.0; }))
        ++failures;

      // Rearrangement and sign invariance, bit exact.
      std::vector<double> shuffled = xs;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (auto& v : shuffled)
        if (rng() & 1u) v = -v;
      if (phi.eval(shuffled) != fx) ++failures;

      // Dominance oracle on a scaled-up majorant.
      std::vector<double> dom(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) dom[i] = xs[i] * (1.0 + std::abs(gauss(rng)));
      if (!dominance_holds(phi, xs, dom)) ++failures;

      // Sup / sum sandwich.
      if (!sandwich_holds(phi, xs)) ++failures;
    }
  }

  // Indicator scan: the summing norm separates from the sup norm while the
  // k-term norm stays capped at k.
  std::vector<std::vector<double>> chis;
  for (int n = 1; n <= 200; ++n) chis.push_back(indicator_sequence(n));
  const auto sep = equiv_ratio_scan(NormingFunction::power_sum(1.0), NormingFunction::sup_norm(), chis);
  const auto cap = equiv_ratio_scan(NormingFunction::ky_fan(3), NormingFunction::sup_norm(), chis);
  if (sep.first != 200.0 || sep.second != 1.0) ++failures;
  if (cap.first > 3.0 || cap.second != 1.0) ++failures;

  res.metric = worst;
  res.pass = failures == 0;
  res.detail = "10^4 trials/variant, " + std::to_string(failures) +
               " failures; sum/sup ratio on indicators " + fmt(sep.first) +
               " (unbounded in n), 3-term/sup capped at " + fmt(cap.first);
  return res;
}

// --- exact spectra -------------------------------------------------------------

SuiteResult run_exact_spectra(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "exact-spectra";
  double worst = 0.0;
  long failures = 0;

  // Two unit atoms at distance |a|^2 = 2 ln 2: spectrum {1.5, 0.5}.
  {
    const double a = std::sqrt(2.0 * std::log(2.0));
    const AtomicMeasure nu(1, {Atom{ComplexPoint::zero(1), 1.0},
                               Atom{ComplexPoint({{a, 0.0}}), 1.0}});
    const auto sv = s_numbers(build_atomic(nu).matrix);
    const double err = std::max(std::abs(sv.values[0] - 1.5), std::abs(sv.values[1] - 0.5));
    worst = std::max(worst, err);
    if (err > 1e-12) ++failures;
  }

  // Flat density: the compression is pi^n times the identity.
  for (int n : {1, 2}) {
    const DensityMeasure flat(n, {1.0}, 0.0);
    const auto comp = build_truncated(flat, n == 1 ? 3 : 2);
    const double pin = std::pow(std::numbers::pi, n);
    double err = 0.0;
    const auto& m = comp.matrix.matrix();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        err = std::max(err, std::abs(m(i, j) - (i == j ? pin : 0.0)));
    worst = std::max(worst, err);
    if (err > 1e-8) ++failures;
  }

  // Nested compressions: singular values nondecreasing in the degree and
  // dominated by the exact atomic spectrum.
  {
    const auto fam = seeded_atomic_family(opt.seed ^ 0x3a8dULL, 1, 1, 5, 1.5);
    const Measure nu = fam.front();
    const auto exact = s_numbers(build_atomic(fam.front()).matrix);
    std::vector<double> prev;
    for (int d : {4, 8, 16}) {
      const auto sv = s_numbers(build_truncated(nu, d).matrix);
      for (std::size_t j = 0; j < prev.size() && j < sv.values.size(); ++j)
        if (sv.values[j] < prev[j] * (1.0 - 1e-10) - 1e-12) ++failures;
      for (std::size_t j = 0; j < exact.values.size() && j < sv.values.size(); ++j)
        if (sv.values[j] > exact.values[j] * (1.0 + 1e-10) + 1e-12) ++failures;
      prev = sv.values;
    }
  }

  res.metric = worst;
  res.pass = failures == 0;
  res.detail = "two-atom and flat-density spectra to " + fmt(worst) +
               "; degree ladder monotone: " + (failures == 0 ? "yes" : "no");
  return res;
}

// --- frame bounds --------------------------------------------------------------

SuiteResult run_frame(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "frame";
  const double rho = 0.3;
  const int degree = 10;
  const int shell = frame_required_shell(rho, degree, 1);
  const auto est = frame_estimate(rho, degree, LatticeSpec(rho, 1, shell), 100,
                                  opt.seed ^ 0xf4a3eULL);
  res.metric = est.c2 / est.c1;
  res.pass = est.c1 > 0.0 && est.c2 / est.c1 < 1e3;
  res.detail = "C1 " + fmt(est.c1) + ", C2 " + fmt(est.c2) + ", spread " + fmt(res.metric) +
               ", overlap tail " + fmt(est.tail_bound) + ", shells " + std::to_string(shell);
  return res;
}

// --- partition subadditivity --------------------------------------------------

SuiteResult run_partition(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "partition";
  long failures = 0;
  double worst = 0.0;

  // Atom at a lattice point: only one class sees it; equality throughout.
  {
    const AtomicMeasure nu(1, {Atom{ComplexPoint::zero(1), 2.0}});
    const auto rep = partition_subadditivity(nu, 1.0, 2, 1.0, NormingFunction::power_sum(2.0));
    if (!rep.pass()) ++failures;
    const double eq = std::abs(rep.full_phi - rep.class_phi_sum) / std::max(rep.full_phi, 1e-300);
    worst = std::max(worst, eq);
    if (eq > 1e-12) ++failures;
  }

  const auto fam = seeded_atomic_family(opt.seed ^ 0x9a27ULL, 4, 1, 10, 2.0);
  for (const auto& nu : fam) {
    for (double s : {0.5, 1.0}) {
      for (int m : {2, 3}) {
        const auto rep = partition_subadditivity(nu, 1.0, m, s, NormingFunction::power_sum(2.0));
        if (!rep.pass()) ++failures;
      }
    }
    // The summing norm is additive over the disjoint classes.
    const auto rep = partition_subadditivity(nu, 1.0, 2, 1.0, NormingFunction::power_sum(1.0));
    const double eq = std::abs(rep.full_phi - rep.class_phi_sum) / std::max(rep.full_phi, 1e-300);
    worst = std::max(worst, eq);
    if (eq > 1e-10) ++failures;
  }

  res.metric = worst;
  res.pass = failures == 0;
  res.detail = "equality and subadditivity checks, " + std::to_string(failures) + " failures";
  return res;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "kernel-identity", "berezin-identity", "domination", "sandwich", "chain",
      "calculus",        "snf-axioms",       "exact-spectra", "frame",  "partition"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult res;
  if (name == "kernel-identity")
    res = run_kernel_identity(opt);
  else if (name == "berezin-identity")
    res = run_berezin_identity(opt);
  else if (name == "domination")
    res = run_domination(opt);
  else if (name == "sandwich")
    res = run_sandwich(opt);
  else if (name == "chain")
    res = run_chain(opt);
  else if (name == "calculus")
    res = run_calculus(opt);
  else if (name == "snf-axioms")
    res = run_snf_axioms(opt);
  else if (name == "exact-spectra")
    res = run_exact_spectra(opt);
  else if (name == "frame")
    res = run_frame(opt);
  else if (name == "partition")
    res = run_partition(opt);
  else
    throw std::invalid_argument("unknown suite: " + name);
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt) {
  std::vector<SuiteResult> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, opt));
  return out;
}

std::string format_suite_line(const SuiteResult& r) {
  std::ostringstream out;
  out << (r.pass ? "pass" : "FAIL") << "  " << r.name;
  for (std::size_t i = r.name.size(); i < 18; ++i) out << ' ';
  out << " max-violation " << format_value(r.metric) << "  (" << r.detail << ")";
  return out.str();
}

}  // namespace fockideal
