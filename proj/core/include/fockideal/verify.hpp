#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fockideal/measure.hpp"
#include "fockideal/snf.hpp"
#include "fockideal/toeplitz.hpp"

namespace fockideal {

/// Inequality slack used by every verdict: multiplicative 1 + 1e-10 plus
/// absolute 1e-12, composed with each side's error certificate.
bool slack_leq(double lhs, double rhs, double err_lhs = 0.0, double err_rhs = 0.0);

/// Domination constants for the box-mass vs heat-transform comparison.
/// `stated` is exp(alpha sqrt(2n) r^2); `safe` is exp(2n alpha r^2), which is
/// what the sup-to-Euclidean norm comparison actually yields (the sup of
/// |u|^2 over the open sup-ball of radius r is 2n r^2).  The stated constant
/// is smaller and can be beaten by mass near a box corner.
double domination_constant_stated(int dim, double r, double alpha);
double domination_constant_safe(int dim, double r, double alpha);

struct DominationReport {
  int dim = 1;
  double r = 0.0, alpha = 0.0;
  double constant_stated = 0.0, constant_safe = 0.0;
  double max_ratio = 0.0;  // sup over samples of box_mass / heat_transform
  long samples = 0;
  long violations_stated = 0, violations_safe = 0;
  bool pass_stated() const { return violations_stated == 0; }
  bool pass_safe() const { return violations_safe == 0; }
};

/// Evaluates both sides at the atoms, the surrounding lattice points and
/// seeded uniform samples; counts violations against both constants with
/// 1e-12 slack.
DominationReport check_heat_domination(const Measure& nu, double r, double alpha,
                                       int random_samples, std::uint64_t seed);

/// The two-sided comparison of Phi over the rho-lattice:
///   e^{-s gamma^2 alpha 2n} Phi({box_gamma^s}) <= Phi({heat_alpha^s})
///                                              <= C Phi({box_rho^s})
/// with C = e^{s alpha 4 n^2 rho^2} sum_m (2m+1)^{2n} e^{-s alpha rho^2 (m-2n)^2},
/// summed with a certified tail below 1e-12 of the partial sum.
struct SandwichReport {
  int dim = 1;
  double rho = 0.0, gamma = 0.0, alpha = 0.0, s = 1.0;
  std::string phi;
  PhiValue lower;   // scaled box_gamma side
  PhiValue middle;  // heat side
  PhiValue upper;   // C * box_rho side
  double series_constant = 0.0;
  double series_tail = 0.0;
  bool lower_ok = false, upper_ok = false;
  bool pass() const { return lower_ok && upper_ok; }
};

SandwichReport berezin_sandwich(const Measure& nu, double rho, double gamma, double alpha,
                                double s, const NormingFunction& phi, double tail_tol = 1e-12,
                                int max_shell_override = -1);

/// The certified series constant alone (value and tail bound).
Certified sandwich_series_constant(int dim, double rho, double alpha, double s);

/// The three ideal-membership functionals of one symbol on one lattice:
/// the Phi-norm of the exact powered spectrum, and Phi of the powered
/// box-mass and heat sequences over the r-lattice.
struct ChainReport {
  std::string measure_id;
  int dim = 1;
  double r = 0.0, s = 1.0, alpha = 1.0;
  std::string phi;
  PhiValue op_phi;        // exact, zero error
  PhiValue box_seq_phi;
  PhiValue heat_seq_phi;
  double ratio_op_box = 0.0;   // op_phi / box_seq_phi
  double ratio_op_heat = 0.0;
  double ratio_box_heat = 0.0;
  bool all_finite = false;
};

ChainReport main_chain(const AtomicMeasure& nu, double r, double s, double alpha,
                       const NormingFunction& phi, const std::string& measure_id = "",
                       int max_shell_override = -1);

/// Phi over the full box-mass sequence vs the residue classes:
/// full <= sum over classes, and every class <= full.
struct PartitionReport {
  int dim = 1;
  int factor = 2;
  double s = 1.0;
  std::string phi;
  double full_phi = 0.0;
  double class_phi_sum = 0.0;
  double max_class_phi = 0.0;
  bool subadditive_ok = false;
  bool classes_dominated_ok = false;
  bool pass() const { return subadditive_ok && classes_dominated_ok; }
};

PartitionReport partition_subadditivity(const Measure& nu, double r, int factor, double s,
                                        const NormingFunction& phi,
                                        int max_shell_override = -1);

// ---------------------------------------------------------------------------
// Report emission: one row per scenario, identical bytes for identical inputs.
// ---------------------------------------------------------------------------

struct ReportRow {
  std::string scenario_id;
  std::string theorem;  // inequality family: identity / domination / sandwich / chain / partition
  int n = 0;
  double r = std::numeric_limits<double>::quiet_NaN();
  double rho = std::numeric_limits<double>::quiet_NaN();
  double gamma = std::numeric_limits<double>::quiet_NaN();
  double alpha = std::numeric_limits<double>::quiet_NaN();
  double s = std::numeric_limits<double>::quiet_NaN();
  std::string phi;
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double mid = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  double constant = std::numeric_limits<double>::quiet_NaN();
  double ratio = std::numeric_limits<double>::quiet_NaN();
  std::string verdict;
  double err_cert = std::numeric_limits<double>::quiet_NaN();
};

ReportRow to_row(const DominationReport& rep, const std::string& scenario_id);
ReportRow to_row(const SandwichReport& rep, const std::string& scenario_id);
ReportRow to_row(const ChainReport& rep, const std::string& scenario_id);
ReportRow to_row(const PartitionReport& rep, const std::string& scenario_id);

std::string to_csv(const std::vector<ReportRow>& rows);
std::string to_structured_text(const std::vector<ReportRow>& rows);

/// 17-significant-digit formatting used everywhere a value reaches a report.
std::string format_value(double v);

}  // namespace fockideal
