#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fockideal {

/// A symmetric norming function Phi on real sequences: a norm that is
/// invariant under permutations and signs and normalized so that
/// Phi(1,0,0,...) = 1.  The closed family implemented here:
///
///   PowerSum(p)   (sum |x_j|^p)^(1/p), p >= 1
///   SupNorm       max |x_j|
///   KyFan(k)      sum of the k largest |x_j|
///   Lorentz(w)    sup_N (sum of N largest |x_j|) / (w_1 + ... + w_N),
///                 w positive nonincreasing with w_1 = 1; the default weight
///                 rule is w_j = 1/j, an explicit finite list is extended
///                 past its end by its last entry.
///
/// Every evaluation first sorts |x| nonincreasing, which makes the
/// rearrangement invariance bit-exact.
class NormingFunction {
 public:
  enum class Kind { PowerSum, SupNorm, KyFan, Lorentz };

  static NormingFunction power_sum(double p);
  static NormingFunction sup_norm();
  static NormingFunction ky_fan(int k);
  static NormingFunction lorentz();  // w_j = 1/j
  static NormingFunction lorentz(std::vector<double> weights);

  Kind kind() const { return kind_; }
  double p() const { return p_; }
  int k() const { return k_; }
  /// Weight w_j (1-based) for the Lorentz variant.
  double lorentz_weight(std::size_t j) const;
  /// True when the Lorentz variant uses the 1/j rule (weights decay to 0).
  bool harmonic_weights() const { return weights_.empty(); }

  double eval(std::span<const double> xs) const;
  double eval(const std::vector<double>& xs) const { return eval(std::span<const double>(xs)); }

  /// Mini-syntax used by the CLI and the report files:
  ///   p=1 | p=2 | inf | kyfan:k | lorentz | lorentz:1,0.5,0.25
  /// print(parse(s)) == s bit-exactly for canonical strings.
  static NormingFunction parse(const std::string& text);
  std::string print() const;

 private:
  NormingFunction() = default;
  Kind kind_ = Kind::SupNorm;
  double p_ = 0.0;
  int k_ = 0;
  std::vector<double> weights_;  // empty means the 1/j rule
};

/// A nonincreasing view of an infinite nonnegative sequence: an explicit
/// finite prefix plus bounds that certify everything omitted.
///
///   tail_bound        every omitted term is <= tail_bound
///   tail_sum_bound    the omitted terms sum to <= tail_sum_bound (may be +inf)
///   persistent_lower  optional: infinitely many omitted terms are >= this
///                     value (> 0), which certifies divergence for the
///                     summing variants
struct CertifiedSequence {
  std::vector<double> prefix;
  double tail_bound = 0.0;
  double tail_sum_bound = 0.0;
  std::optional<double> persistent_lower;

  static CertifiedSequence exact(std::vector<double> values) {
    return CertifiedSequence{std::move(values), 0.0, 0.0, std::nullopt};
  }
};

/// Result of evaluating Phi on a certified sequence: the value of Phi on the
/// prefix, a certified additive error bound for the omitted tail, and a
/// divergence flag.  When divergent is set the other fields are meaningless.
struct PhiValue {
  double value = 0.0;
  double error = 0.0;
  bool divergent = false;

  double upper() const { return value + error; }
  double lower() const { return value; }
};

/// Monotone-limit extension of Phi.  Throws if the certificate cannot bound
/// the tail for this variant (e.g. PowerSum with tail_sum_bound = +inf and no
/// divergence certificate).
PhiValue eval_limit(const NormingFunction& phi, const CertifiedSequence& xs);

/// Test oracle for the dominance property: requires |xs_j| <= |ys_j| for all j
/// (throws otherwise) and returns Phi(xs) <= Phi(ys) with 1e-12 slack.
bool dominance_holds(const NormingFunction& phi, std::span<const double> xs,
                     std::span<const double> ys);

/// Test oracle: SupNorm(xs) <= Phi(xs) <= PowerSum(1)(xs), slack 1e-12.
bool sandwich_holds(const NormingFunction& phi, std::span<const double> xs);

/// Empirical equivalence witness search: max of Phi/Psi and of Psi/Phi over a
/// family of finite sequences.  Rejects all-zero members.
std::pair<double, double> equiv_ratio_scan(const NormingFunction& phi,
                                           const NormingFunction& psi,
                                           const std::vector<std::vector<double>>& family);

/// The indicator sequence chi^(n): n ones.
std::vector<double> indicator_sequence(int n);

}  // namespace fockideal
