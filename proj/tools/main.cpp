// Command-line front end: measure files in, spectra / chain reports /
// Berezin samples / verification suites out.
//
// Exit codes: 0 success, 1 usage, 2 malformed input file, 3 numeric failure.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "fockideal/family.hpp"
#include "fockideal/measure.hpp"
#include "fockideal/measure_io.hpp"
#include "fockideal/snf.hpp"
#include "fockideal/spectra.hpp"
#include "fockideal/suites.hpp"
#include "fockideal/toeplitz.hpp"
#include "fockideal/verify.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 20240614ull;

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

int run_spectrum(const std::string& measure_path, int degree, double s_power, double scale,
                 const std::string& out_path) {
  fockideal::Measure nu = fockideal::load_measure_file(measure_path);
  if (scale != 1.0) nu = fockideal::scaled(nu, scale);
  fockideal::ToeplitzCompression comp =
      (std::holds_alternative<fockideal::AtomicMeasure>(nu) && degree < 0)
          ? fockideal::build_atomic(std::get<fockideal::AtomicMeasure>(nu))
          : fockideal::build_truncated(nu, degree < 0 ? 8 : degree);
  const auto sv = fockideal::s_numbers(comp.matrix);
  std::ostringstream text;
  for (double v : sv.values) {
    text << fockideal::format_value(v);
    if (s_power > 0.0) text << ',' << fockideal::format_value(std::pow(v, s_power));
    text << '\n';
  }
  write_output(out_path, text.str());
  return 0;
}

int run_chain(const std::string& measure_path, double r, double s, double alpha,
              const std::string& phi_spec, double scale, const std::string& out_path,
              const std::string& format) {
  const fockideal::Measure loaded = fockideal::load_measure_file(measure_path);
  const auto* atomic = std::get_if<fockideal::AtomicMeasure>(&loaded);
  if (atomic == nullptr)
    throw std::invalid_argument("chain: an atomic measure is required (exact spectrum path)");
  const fockideal::NormingFunction phi = fockideal::NormingFunction::parse(phi_spec);
  const auto rep = fockideal::main_chain(scale != 1.0 ? atomic->scaled(scale) : *atomic, r, s,
                                         alpha, phi, measure_path);
  const auto row = fockideal::to_row(rep, measure_path);
  const std::string text = format == "structured" ? fockideal::to_structured_text({row})
                                                  : fockideal::to_csv({row});
  write_output(out_path, text);
  return 0;
}

int run_berezin(const std::string& measure_path, int samples, std::uint64_t seed,
                const std::string& out_path) {
  const fockideal::Measure nu = fockideal::load_measure_file(measure_path);
  const int n = fockideal::measure_dim(nu);
  double reach = 3.0;
  if (const auto* a = std::get_if<fockideal::AtomicMeasure>(&nu))
    reach = a->support_sup_radius() + 2.0;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-reach, reach);
  std::ostringstream text;
  for (int d = 0; d < n; ++d) text << "re" << d + 1 << ",im" << d + 1 << ',';
  text << "berezin,heat,rel_err\n";
  for (int i = 0; i < samples; ++i) {
    std::vector<std::complex<double>> c(static_cast<std::size_t>(n));
    for (auto& v : c) v = std::complex<double>(u(rng), u(rng));
    const fockideal::ComplexPoint z(std::move(c));
    const double b = fockideal::berezin(nu, z);
    const double h = fockideal::heat_transform(nu, 1.0, z);
    const double rel = std::abs(b - h) / std::max(h, 1e-300);
    for (int d = 0; d < n; ++d)
      text << fockideal::format_value(z[d].real()) << ',' << fockideal::format_value(z[d].imag())
           << ',';
    text << fockideal::format_value(b) << ',' << fockideal::format_value(h) << ','
         << fockideal::format_value(rel) << '\n';
  }
  write_output(out_path, text.str());
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, const std::string& out_path) {
  fockideal::SuiteOptions opt;
  opt.seed = seed;
  std::vector<fockideal::SuiteResult> results;
  if (suite.empty()) {
    results = fockideal::run_all_suites(opt);
  } else {
    results.push_back(fockideal::run_suite(suite, opt));
  }
  std::ostringstream text;
  bool all_pass = true;
  for (const auto& r : results) {
    text << fockideal::format_suite_line(r) << '\n';
    all_pass = all_pass && r.pass;
  }
  std::cout << text.str();
  if (!out_path.empty()) write_output(out_path, text.str());
  if (!all_pass) {
    for (const auto& r : results)
      if (!r.pass) {
        std::cout << "first failing suite: " << r.name << '\n';
        break;
      }
  }
  return all_pass ? 0 : 3;
}

// Targeted checks on one user-supplied measure: domination, the lattice
// sandwich, the membership chain (atomic symbols) and the residue-class
// subadditivity, with every parameter taken from the command line.
int run_verify_measure(const std::string& measure_path, double r, double s, double alpha,
                       double rho, double gamma, int factor, const std::string& phi_spec,
                       int max_shell, std::uint64_t seed, const std::string& out_path,
                       const std::string& format) {
  const fockideal::Measure nu = fockideal::load_measure_file(measure_path);
  const auto phi = fockideal::NormingFunction::parse(phi_spec);

  std::vector<fockideal::ReportRow> rows;
  bool all_pass = true;

  const auto dom = fockideal::check_heat_domination(nu, r, alpha, 1000, seed);
  rows.push_back(fockideal::to_row(dom, "domination"));
  all_pass = all_pass && dom.pass_stated();

  const auto sand =
      fockideal::berezin_sandwich(nu, rho, gamma, alpha, s, phi, 1e-12, max_shell);
  rows.push_back(fockideal::to_row(sand, "sandwich"));
  all_pass = all_pass && sand.pass();

  if (const auto* atomic = std::get_if<fockideal::AtomicMeasure>(&nu)) {
    const auto chain = fockideal::main_chain(*atomic, r, s, alpha, phi, measure_path, max_shell);
    rows.push_back(fockideal::to_row(chain, "chain"));
    all_pass = all_pass && chain.all_finite;

    const auto part = fockideal::partition_subadditivity(nu, r, factor, s, phi, max_shell);
    rows.push_back(fockideal::to_row(part, "partition"));
    all_pass = all_pass && part.pass();
  }

  const std::string text = format == "structured" ? fockideal::to_structured_text(rows)
                                                  : fockideal::to_csv(rows);
  write_output(out_path, text);
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toeplitz operators with positive measure symbols: spectra, lattice averages, "
               "symmetric-norm membership reports"};
  app.require_subcommand(1);

  std::string measure_path, out_path, phi_spec = "p=1", format = "csv", suite;
  double r = 1.0, s = -1.0, alpha = 1.0, scale = 1.0;
  int degree = -1, samples = 100;
  std::uint64_t seed = kDefaultSeed;

  auto* spectrum = app.add_subcommand("spectrum", "singular values of the symbol's compression");
  spectrum->add_option("--measure", measure_path, "measure spec file")->required();
  spectrum->add_option("--degree", degree, "basis degree for the truncated compression");
  spectrum->add_option("--s", s, "also emit the s-th powers")->check(CLI::Range(1e-9, 1.0));
  spectrum->add_option("--scale", scale, "scale the measure")->check(CLI::PositiveNumber);
  spectrum->add_option("--out", out_path, "output path (default stdout)");

  auto* chain = app.add_subcommand("chain", "operator norm vs lattice-average functionals");
  chain->add_option("--measure", measure_path, "measure spec file")->required();
  chain->add_option("--r", r, "lattice spacing and ball radius")->required()->check(CLI::PositiveNumber);
  double chain_s = 1.0;
  chain->add_option("--s", chain_s, "power in (0, 1]")->check(CLI::Range(1e-9, 1.0));
  chain->add_option("--alpha", alpha, "heat transform rate")->check(CLI::PositiveNumber);
  chain->add_option("--phi", phi_spec, "norming function (p=1, p=2, inf, kyfan:k, lorentz[:w1,w2,...])");
  chain->add_option("--scale", scale, "scale the measure")->check(CLI::PositiveNumber);
  chain->add_option("--out", out_path, "output path (default stdout)");
  chain->add_option("--format", format, "csv or structured")
      ->check(CLI::IsMember({"csv", "structured"}));

  auto* berezin = app.add_subcommand("berezin", "Berezin transform vs heat transform samples");
  berezin->add_option("--measure", measure_path, "measure spec file")->required();
  berezin->add_option("--samples", samples, "number of sample points")->check(CLI::PositiveNumber);
  berezin->add_option("--seed", seed, "sampling seed");
  berezin->add_option("--out", out_path, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run the verification suites, or targeted checks "
                                              "on one measure when --measure is given");
  double rho = 1.0, gamma = 1.0;
  int factor = 2, max_shell = -1;
  double verify_s = 1.0;
  verify->add_option("--suite", suite, "run a single suite by name");
  verify->add_option("--seed", seed, "suite seed (default documented constant)");
  verify->add_option("--out", out_path, "also write the summary to this path");
  verify->add_option("--measure", measure_path, "measure spec file for targeted checks");
  verify->add_option("--r", r, "lattice spacing and ball radius")->check(CLI::PositiveNumber);
  verify->add_option("--s", verify_s, "power in (0, 1]")->check(CLI::Range(1e-9, 1.0));
  verify->add_option("--alpha", alpha, "heat transform rate")->check(CLI::PositiveNumber);
  verify->add_option("--rho", rho, "sandwich lattice spacing")->check(CLI::PositiveNumber);
  verify->add_option("--gamma", gamma, "sandwich comparison ball radius")->check(CLI::PositiveNumber);
  verify->add_option("--m", factor, "residue partition factor (>= 2)")->check(CLI::Range(2, 1 << 20));
  verify->add_option("--phi", phi_spec, "norming function for targeted checks");
  verify->add_option("--max-shell", max_shell, "lattice truncation override");
  verify->add_option("--format", format, "csv or structured")
      ->check(CLI::IsMember({"csv", "structured"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (spectrum->parsed()) return run_spectrum(measure_path, degree, s, scale, out_path);
    if (chain->parsed()) return run_chain(measure_path, r, chain_s, alpha, phi_spec, scale,
                                          out_path, format);
    if (berezin->parsed()) return run_berezin(measure_path, samples, seed, out_path);
    if (verify->parsed()) {
      if (!measure_path.empty())
        return run_verify_measure(measure_path, r, verify_s, alpha, rho, gamma, factor,
                                  phi_spec, max_shell, seed, out_path, format);
      return run_verify(suite, seed, out_path);
    }
  } catch (const fockideal::MeasureParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const fockideal::QuadratureError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 1;
}
