#include "fockideal/verify.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace fockideal {

bool slack_leq(double lhs, double rhs, double err_lhs, double err_rhs) {
  return lhs - err_lhs <= rhs * (1.0 + 1e-10) + 1e-12 + err_rhs;
}

double domination_constant_stated(int dim, double r, double alpha) {
  return std::exp(alpha * std::sqrt(2.0 * dim) * r * r);
}

double domination_constant_safe(int dim, double r, double alpha) {
  return std::exp(2.0 * dim * alpha * r * r);
}

DominationReport check_heat_domination(const Measure& nu, double r, double alpha,
                                       int random_samples, std::uint64_t seed) {
  if (!(r > 0.0) || !(alpha > 0.0))
    throw std::invalid_argument("check_heat_domination: r and alpha must be > 0");
  const int n = measure_dim(nu);
  DominationReport rep;
  rep.dim = n;
  rep.r = r;
  rep.alpha = alpha;
  rep.constant_stated = domination_constant_stated(n, r, alpha);
  rep.constant_safe = domination_constant_safe(n, r, alpha);

  std::vector<ComplexPoint> samples;
  double support = 0.0;
  if (const auto* a = std::get_if<AtomicMeasure>(&nu)) {
    for (const auto& at : a->atoms) samples.push_back(at.location);
    support = a->support_sup_radius();
  } else {
    const auto& d = std::get<DensityMeasure>(nu);
    support = d.support_radius ? *d.support_radius : 3.0 / std::sqrt(std::max(d.beta, 0.25));
  }
  const double reach = support + 2.0 * r;
  const int shells = static_cast<int>(std::ceil(reach / r));
  for (const auto& p : enumerate(LatticeSpec(r, n, shells))) samples.push_back(p);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-reach, reach);
  for (int i = 0; i < random_samples; ++i) {
    std::vector<std::complex<double>> c(static_cast<std::size_t>(n));
    for (auto& v : c) v = std::complex<double>(u(rng), u(rng));
    samples.emplace_back(std::move(c));
  }

  for (const auto& z : samples) {
    const double hat = box_mass(nu, r, z);
    const double heat = heat_transform(nu, alpha, z);
    ++rep.samples;
    if (hat <= 0.0) continue;
    rep.max_ratio = std::max(rep.max_ratio, hat / heat);
    if (!slack_leq(hat, rep.constant_stated * heat)) ++rep.violations_stated;
    if (!slack_leq(hat, rep.constant_safe * heat)) ++rep.violations_safe;
  }
  return rep;
}

Certified sandwich_series_constant(int dim, double rho, double alpha, double s) {
  const double front = std::exp(s * alpha * 4.0 * dim * dim * rho * rho);
  const double rate = s * alpha * rho * rho;
  double sum = 0.0;
  double tail = 0.0;
  for (int m = 0;; ++m) {
    const double term =
        std::pow(2.0 * m + 1.0, 2.0 * dim) * std::exp(-rate * (m - 2.0 * dim) * (m - 2.0 * dim));
    sum += term;
    if (m > 2 * dim + 1) {
      // Once the term ratio drops below 1/2 the remainder is under 2x the
      // next term; stop when that is negligible against the partial sum.
      const double ratio =
          std::pow((2.0 * m + 3.0) / (2.0 * m + 1.0), 2.0 * dim) *
          std::exp(-rate * (2.0 * (m - 2.0 * dim) + 1.0));
      if (ratio < 0.5) {
        const double next = term * ratio;
        tail = next / (1.0 - ratio);
        if (tail < 1e-13 * sum) break;
      }
    }
    if (m > 100000) throw std::invalid_argument("sandwich_series_constant: series closes too slowly");
  }
  return Certified{front * sum, front * tail};
}

SandwichReport berezin_sandwich(const Measure& nu, double rho, double gamma, double alpha,
                                double s, const NormingFunction& phi, double tail_tol,
                                int max_shell_override) {
  if (!(rho > 0.0) || !(gamma > 0.0) || !(alpha > 0.0))
    throw std::invalid_argument("berezin_sandwich: rho, gamma, alpha must be > 0");
  if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("berezin_sandwich: s must be in (0, 1]");
  const int n = measure_dim(nu);

  const Transform t_box_gamma = Transform::box_mass(gamma);
  const Transform t_heat = Transform::heat(alpha);
  const Transform t_box_rho = Transform::box_mass(rho);
  int shell = std::max({minimal_adequate_shell(nu, t_box_gamma, rho, n, s, tail_tol),
                        minimal_adequate_shell(nu, t_heat, rho, n, s, tail_tol),
                        minimal_adequate_shell(nu, t_box_rho, rho, n, s, tail_tol)});
  if (max_shell_override >= 0) shell = max_shell_override;  // validated downstream
  const LatticeSpec spec(rho, n, shell);

  SandwichReport rep;
  rep.dim = n;
  rep.rho = rho;
  rep.gamma = gamma;
  rep.alpha = alpha;
  rep.s = s;
  rep.phi = phi.print();

  const auto box_gamma = lattice_sequence(nu, t_box_gamma, spec, s, tail_tol);
  const auto heat = lattice_sequence(nu, t_heat, spec, s, tail_tol);
  const auto box_rho = lattice_sequence(nu, t_box_rho, spec, s, tail_tol);

  const double scale_lo = std::exp(-s * gamma * gamma * alpha * 2.0 * n);
  PhiValue lo = eval_limit(phi, box_gamma);
  lo.value *= scale_lo;
  lo.error *= scale_lo;
  rep.lower = lo;
  rep.middle = eval_limit(phi, heat);

  const Certified c = sandwich_series_constant(n, rho, alpha, s);
  rep.series_constant = c.value;
  rep.series_tail = c.error;
  PhiValue up = eval_limit(phi, box_rho);
  const double chi = c.value + c.error;
  up.error = chi * up.error + c.error * up.value;
  up.value *= c.value;
  rep.upper = up;

  // A side fails only when its certified intervals separate: the lower end
  // of the left side exceeds the upper end of the right side beyond slack.
  rep.lower_ok = slack_leq(rep.lower.lower(), rep.middle.upper());
  rep.upper_ok = slack_leq(rep.middle.lower(), rep.upper.upper());
  return rep;
}

ChainReport main_chain(const AtomicMeasure& nu, double r, double s, double alpha,
                       const NormingFunction& phi, const std::string& measure_id,
                       int max_shell_override) {
  if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("main_chain: s must be in (0, 1]");
  if (!(r > 0.0) || !(alpha > 0.0))
    throw std::invalid_argument("main_chain: r and alpha must be > 0");
  ChainReport rep;
  rep.measure_id = measure_id;
  rep.dim = nu.dim;
  rep.r = r;
  rep.s = s;
  rep.alpha = alpha;
  rep.phi = phi.print();

  if (nu.atoms.empty()) {
    rep.op_phi = PhiValue{0.0, 0.0, false};
  } else {
    auto sv = s_numbers(build_atomic(nu).matrix);
    for (double& v : sv.values) v = std::pow(v, s);
    rep.op_phi = PhiValue{phi.eval(sv.values), 0.0, false};
  }

  const Measure m = nu;
  const Transform t_box = Transform::box_mass(r);
  const Transform t_heat = Transform::heat(alpha);
  int shell = std::max(minimal_adequate_shell(m, t_box, r, nu.dim, s),
                       minimal_adequate_shell(m, t_heat, r, nu.dim, s));
  if (max_shell_override >= 0) shell = max_shell_override;  // validated downstream
  const LatticeSpec spec(r, nu.dim, shell);
  rep.box_seq_phi = eval_limit(phi, lattice_sequence(m, t_box, spec, s));
  rep.heat_seq_phi = eval_limit(phi, lattice_sequence(m, t_heat, spec, s));

  auto ratio = [](const PhiValue& a, const PhiValue& b) {
    if (b.value == 0.0) return a.value == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    return a.value / b.value;
  };
  rep.ratio_op_box = ratio(rep.op_phi, rep.box_seq_phi);
  rep.ratio_op_heat = ratio(rep.op_phi, rep.heat_seq_phi);
  rep.ratio_box_heat = ratio(rep.box_seq_phi, rep.heat_seq_phi);
  rep.all_finite = !rep.op_phi.divergent && !rep.box_seq_phi.divergent &&
                   !rep.heat_seq_phi.divergent && std::isfinite(rep.op_phi.upper()) &&
                   std::isfinite(rep.box_seq_phi.upper()) && std::isfinite(rep.heat_seq_phi.upper());
  return rep;
}

PartitionReport partition_subadditivity(const Measure& nu, double r, int factor, double s,
                                        const NormingFunction& phi, int max_shell_override) {
  if (factor < 2) throw std::invalid_argument("partition_subadditivity: factor must be >= 2");
  if (!(s > 0.0 && s <= 1.0))
    throw std::invalid_argument("partition_subadditivity: s must be in (0, 1]");
  const int n = measure_dim(nu);
  const Transform t_box = Transform::box_mass(r);
  int shell = minimal_adequate_shell(nu, t_box, r, n, s, 0.0);
  if (max_shell_override >= 0) shell = max_shell_override;  // validated downstream
  const LatticeSpec spec(r, n, shell);

  PartitionReport rep;
  rep.dim = n;
  rep.factor = factor;
  rep.s = s;
  rep.phi = phi.print();

  const auto seq = lattice_sequence(nu, t_box, spec, s);
  rep.full_phi = phi.eval(seq.prefix);

  const auto part = partition(spec, factor);
  double sum = 0.0, maxc = 0.0;
  for (const auto& cls : part.classes) {
    std::vector<double> vals;
    vals.reserve(cls.size());
    for (const auto& p : cls) {
      const double v = box_mass(nu, r, p);
      vals.push_back(s == 1.0 ? v : std::pow(v, s));
    }
    const double c = phi.eval(vals);
    sum += c;
    maxc = std::max(maxc, c);
  }
  rep.class_phi_sum = sum;
  rep.max_class_phi = maxc;
  rep.subadditive_ok = slack_leq(rep.full_phi, sum);
  rep.classes_dominated_ok = slack_leq(maxc, rep.full_phi);
  return rep;
}

// --- report emission ---------------------------------------------------------

std::string format_value(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ReportRow to_row(const DominationReport& rep, const std::string& scenario_id) {
  ReportRow row;
  row.scenario_id = scenario_id;
  row.theorem = "domination";
  row.n = rep.dim;
  row.r = rep.r;
  row.alpha = rep.alpha;
  row.lhs = rep.max_ratio;
  row.rhs = rep.constant_stated;
  row.constant = rep.constant_stated;
  row.ratio = rep.max_ratio / rep.constant_stated;
  row.verdict = rep.pass_stated() ? "pass" : "fail";
  row.err_cert = 0.0;
  return row;
}

ReportRow to_row(const SandwichReport& rep, const std::string& scenario_id) {
  ReportRow row;
  row.scenario_id = scenario_id;
  row.theorem = "sandwich";
  row.n = rep.dim;
  row.rho = rep.rho;
  row.gamma = rep.gamma;
  row.alpha = rep.alpha;
  row.s = rep.s;
  row.phi = rep.phi;
  row.lhs = rep.lower.value;
  row.mid = rep.middle.value;
  row.rhs = rep.upper.value;
  row.constant = rep.series_constant;
  row.ratio = rep.upper.value > 0.0 ? rep.lower.value / rep.upper.value : 0.0;
  row.verdict = rep.pass() ? "pass" : "fail";
  row.err_cert = rep.lower.error + rep.middle.error + rep.upper.error;
  return row;
}

ReportRow to_row(const ChainReport& rep, const std::string& scenario_id) {
  ReportRow row;
  row.scenario_id = scenario_id.empty() ? rep.measure_id : scenario_id;
  row.theorem = "chain";
  row.n = rep.dim;
  row.r = rep.r;
  row.alpha = rep.alpha;
  row.s = rep.s;
  row.phi = rep.phi;
  row.lhs = rep.op_phi.value;
  row.mid = rep.box_seq_phi.value;
  row.rhs = rep.heat_seq_phi.value;
  row.ratio = rep.ratio_op_box;
  row.verdict = rep.all_finite ? "finite" : "divergent";
  row.err_cert = rep.box_seq_phi.error + rep.heat_seq_phi.error;
  return row;
}

ReportRow to_row(const PartitionReport& rep, const std::string& scenario_id) {
  ReportRow row;
  row.scenario_id = scenario_id;
  row.theorem = "partition";
  row.n = rep.dim;
  row.s = rep.s;
  row.phi = rep.phi;
  row.lhs = rep.full_phi;
  row.mid = rep.max_class_phi;
  row.rhs = rep.class_phi_sum;
  row.constant = static_cast<double>(rep.factor);
  row.ratio = rep.class_phi_sum > 0.0 ? rep.full_phi / rep.class_phi_sum : 1.0;
  row.verdict = rep.pass() ? "pass" : "fail";
  row.err_cert = 0.0;
  return row;
}

std::string to_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "scenario_id,theorem,n,r,rho,gamma,alpha,s,phi,lhs,mid,rhs,constant,ratio,verdict,err_cert\n";
  for (const auto& row : rows) {
    out << row.scenario_id << ',' << row.theorem << ',' << row.n << ',' << format_value(row.r)
        << ',' << format_value(row.rho) << ',' << format_value(row.gamma) << ','
        << format_value(row.alpha) << ',' << format_value(row.s) << ',' << row.phi << ','
        << format_value(row.lhs) << ',' << format_value(row.mid) << ',' << format_value(row.rhs)
        << ',' << format_value(row.constant) << ',' << format_value(row.ratio) << ','
        << row.verdict << ',' << format_value(row.err_cert) << '\n';
  }
  return out.str();
}

std::string to_structured_text(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    out << "scenario: " << row.scenario_id << '\n';
    out << "  theorem: " << row.theorem << '\n';
    out << "  n: " << row.n << '\n';
    auto field = [&](const char* name, double v) {
      if (!std::isnan(v)) out << "  " << name << ": " << format_value(v) << '\n';
    };
    field("r", row.r);
    field("rho", row.rho);
    field("gamma", row.gamma);
    field("alpha", row.alpha);
    field("s", row.s);
    if (!row.phi.empty()) out << "  phi: " << row.phi << '\n';
    field("lhs", row.lhs);
    field("mid", row.mid);
    field("rhs", row.rhs);
    field("constant", row.constant);
    field("ratio", row.ratio);
    out << "  verdict: " << row.verdict << '\n';
    field("err_cert", row.err_cert);
  }
  return out.str();
}

}  // namespace fockideal
