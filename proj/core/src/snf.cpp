#include "fockideal/snf.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fockideal {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> sorted_abs(std::span<const double> xs) {
  std::vector<double> a(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) a[i] = std::abs(xs[i]);
  std::sort(a.begin(), a.end(), std::greater<double>());
  return a;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

NormingFunction NormingFunction::power_sum(double p) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("NormingFunction: PowerSum requires p >= 1");
  NormingFunction f;
  f.kind_ = Kind::PowerSum;
  f.p_ = p;
  return f;
}

NormingFunction NormingFunction::sup_norm() {
  NormingFunction f;
  f.kind_ = Kind::SupNorm;
  return f;
}

NormingFunction NormingFunction::ky_fan(int k) {
  if (k < 1) throw std::invalid_argument("NormingFunction: KyFan requires k >= 1");
  NormingFunction f;
  f.kind_ = Kind::KyFan;
  f.k_ = k;
  return f;
}

NormingFunction NormingFunction::lorentz() {
  NormingFunction f;
  f.kind_ = Kind::Lorentz;
  return f;
}

NormingFunction NormingFunction::lorentz(std::vector<double> weights) {
  if (weights.empty()) return lorentz();
  if (weights.front() != 1.0)
    throw std::invalid_argument("NormingFunction: Lorentz weights need w_1 = 1");
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (!(weights[j] > 0.0)) throw std::invalid_argument("NormingFunction: Lorentz weights must be > 0");
    if (j > 0 && weights[j] > weights[j - 1] + 0.0)
      throw std::invalid_argument("NormingFunction: Lorentz weights must be nonincreasing");
  }
  NormingFunction f;
  f.kind_ = Kind::Lorentz;
  f.weights_ = std::move(weights);
  return f;
}

double NormingFunction::lorentz_weight(std::size_t j) const {
  if (weights_.empty()) return 1.0 / static_cast<double>(j);
  return j <= weights_.size() ? weights_[j - 1] : weights_.back();
}

double NormingFunction::eval(std::span<const double> xs) const {
  const std::vector<double> a = sorted_abs(xs);
  if (a.empty() || a.front() == 0.0) return 0.0;
  switch (kind_) {
    case Kind::SupNorm:
      return a.front();
    case Kind::KyFan: {
      double s = 0.0;
      const std::size_t stop = std::min<std::size_t>(static_cast<std::size_t>(k_), a.size());
      for (std::size_t i = 0; i < stop; ++i) s += a[i];
      return s;
    }
    case Kind::PowerSum: {
      if (p_ == 1.0) {
        double s = 0.0;
        for (double v : a) s += v;
        return s;
      }
      // Scale by the top entry to avoid overflow/underflow of the powers.
      const double m = a.front();
      double s = 0.0;
      for (double v : a) s += std::pow(v / m, p_);
      return m * std::pow(s, 1.0 / p_);
    }
    case Kind::Lorentz: {
      double partial = 0.0, wsum = 0.0, best = 0.0;
      for (std::size_t j = 1; j <= a.size(); ++j) {
        partial += a[j - 1];
        wsum += lorentz_weight(j);
        best = std::max(best, partial / wsum);
      }
      return best;
    }
  }
  return 0.0;
}

NormingFunction NormingFunction::parse(const std::string& text) {
  if (text == "inf") return sup_norm();
  if (text == "lorentz") return lorentz();
  if (text.rfind("p=", 0) == 0) {
    std::size_t used = 0;
    const double p = std::stod(text.substr(2), &used);
    if (used != text.size() - 2) throw std::invalid_argument("bad norming function: " + text);
    return power_sum(p);
  }
  if (text.rfind("kyfan:", 0) == 0) {
    std::size_t used = 0;
    const int k = std::stoi(text.substr(6), &used);
    if (used != text.size() - 6) throw std::invalid_argument("bad norming function: " + text);
    return ky_fan(k);
  }
  if (text.rfind("lorentz:", 0) == 0) {
    std::vector<double> w;
    std::size_t pos = 8;
    while (pos < text.size()) {
      std::size_t used = 0;
      w.push_back(std::stod(text.substr(pos), &used));
      pos += used;
      if (pos < text.size()) {
        if (text[pos] != ',') throw std::invalid_argument("bad norming function: " + text);
        ++pos;
      }
    }
    if (w.empty()) throw std::invalid_argument("bad norming function: " + text);
    return lorentz(std::move(w));
  }
  throw std::invalid_argument("bad norming function: " + text);
}

std::string NormingFunction::print() const {
  switch (kind_) {
    case Kind::SupNorm:
      return "inf";
    case Kind::PowerSum:
      return "p=" + fmt17(p_);
    case Kind::KyFan:
      return "kyfan:" + std::to_string(k_);
    case Kind::Lorentz: {
      if (weights_.empty()) return "lorentz";
      std::string s = "lorentz:";
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) s += ',';
        s += fmt17(weights_[i]);
      }
      return s;
    }
  }
  return "";
}

PhiValue eval_limit(const NormingFunction& phi, const CertifiedSequence& xs) {
  if (xs.tail_bound < 0.0 || xs.tail_sum_bound < 0.0)
    throw std::invalid_argument("eval_limit: negative tail certificate");
  for (double v : xs.prefix)
    if (v < 0.0) throw std::invalid_argument("eval_limit: prefix must be nonnegative");

  const bool diverging_tail = xs.persistent_lower && *xs.persistent_lower > 0.0;
  PhiValue out;
  out.value = phi.eval(xs.prefix);

  switch (phi.kind()) {
    case NormingFunction::Kind::PowerSum: {
      if (diverging_tail) {
        // Infinitely many omitted terms >= L makes the p-th power sum diverge.
        out.divergent = true;
        return out;
      }
      if (!std::isfinite(xs.tail_sum_bound))
        throw std::invalid_argument("eval_limit: PowerSum needs a finite tail sum certificate");
      // Phi_p(tail) <= (tail_bound^(p-1) * tail_sum_bound)^(1/p).
      const double p = phi.p();
      out.error = (xs.tail_sum_bound == 0.0)
                      ? 0.0
                      : std::pow(std::pow(xs.tail_bound, p - 1.0) * xs.tail_sum_bound, 1.0 / p);
      return out;
    }
    case NormingFunction::Kind::SupNorm:
      if (!std::isfinite(xs.tail_bound))
        throw std::invalid_argument("eval_limit: SupNorm needs a finite tail bound");
      out.value = std::max(out.value, diverging_tail ? *xs.persistent_lower : 0.0);
      out.error = std::max(0.0, xs.tail_bound - out.value);
      return out;
    case NormingFunction::Kind::KyFan: {
      if (!std::isfinite(xs.tail_bound))
        throw std::invalid_argument("eval_limit: KyFan needs a finite tail bound");
      const double cap = static_cast<double>(phi.k()) * xs.tail_bound;
      out.error = std::isfinite(xs.tail_sum_bound) ? std::min(cap, xs.tail_sum_bound) : cap;
      return out;
    }
    case NormingFunction::Kind::Lorentz: {
      if (diverging_tail && phi.harmonic_weights()) {
        // w_j = 1/j has W_N ~ log N, so N*L / W_N is unbounded.
        out.divergent = true;
        return out;
      }
      if (!std::isfinite(xs.tail_sum_bound))
        throw std::invalid_argument("eval_limit: Lorentz needs a finite tail sum certificate");
      // W_N >= w_1 = 1, so the tail adds at most its plain sum to any ratio.
      out.error = xs.tail_sum_bound;
      return out;
    }
  }
  return out;
}

bool dominance_holds(const NormingFunction& phi, std::span<const double> xs,
                     std::span<const double> ys) {
  if (xs.size() > ys.size())
    throw std::invalid_argument("dominance_holds: xs longer than ys");
  for (std::size_t j = 0; j < xs.size(); ++j)
    if (std::abs(xs[j]) > std::abs(ys[j]))
      throw std::invalid_argument("dominance_holds: |xs_j| <= |ys_j| violated");
  return phi.eval(xs) <= phi.eval(ys) + 1e-12;
}

bool sandwich_holds(const NormingFunction& phi, std::span<const double> xs) {
  const double lo = NormingFunction::sup_norm().eval(xs);
  const double mid = phi.eval(xs);
  const double hi = NormingFunction::power_sum(1.0).eval(xs);
  return lo <= mid + 1e-12 && mid <= hi + 1e-12;
}

std::pair<double, double> equiv_ratio_scan(const NormingFunction& phi,
                                           const NormingFunction& psi,
                                           const std::vector<std::vector<double>>& family) {
  if (family.empty()) throw std::invalid_argument("equiv_ratio_scan: empty family");
  double a = 0.0, b = 0.0;
  for (const auto& xs : family) {
    const double fv = phi.eval(xs);
    const double gv = psi.eval(xs);
    if (fv == 0.0 || gv == 0.0)
      throw std::invalid_argument("equiv_ratio_scan: all-zero sequence in family");
    a = std::max(a, fv / gv);
    b = std::max(b, gv / fv);
  }
  return {a, b};
}

std::vector<double> indicator_sequence(int n) {
  return std::vector<double>(static_cast<std::size_t>(n), 1.0);
}

}  // namespace fockideal
