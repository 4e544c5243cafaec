#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace fockideal {

/// A point of C^n, n >= 1, with the two norms used throughout the library:
/// the Euclidean norm |z| and the coordinate sup norm
/// |z|_inf = max_j max(|Re z_j|, |Im z_j|).
class ComplexPoint {
 public:
  explicit ComplexPoint(std::vector<std::complex<double>> coords)
      : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("ComplexPoint: n >= 1 required");
    for (const auto& c : coords_) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw std::invalid_argument("ComplexPoint: coordinates must be finite");
    }
  }

  ComplexPoint(std::initializer_list<std::complex<double>> coords)
      : ComplexPoint(std::vector<std::complex<double>>(coords)) {}

  static ComplexPoint zero(int n) {
    return ComplexPoint(std::vector<std::complex<double>>(static_cast<std::size_t>(n)));
  }

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<std::complex<double>>& coords() const { return coords_; }
  std::complex<double> operator[](int j) const { return coords_[static_cast<std::size_t>(j)]; }

  /// Real coordinate k of the flattening (Re z_1, Im z_1, Re z_2, Im z_2, ...).
  double real_coord(int k) const {
    const auto& c = coords_[static_cast<std::size_t>(k / 2)];
    return (k % 2 == 0) ? c.real() : c.imag();
  }

  double sup_norm() const {
    double m = 0.0;
    for (const auto& c : coords_) {
      m = std::max(m, std::abs(c.real()));
      m = std::max(m, std::abs(c.imag()));
    }
    return m;
  }

  double norm_sq() const {
    double s = 0.0;
    for (const auto& c : coords_) s += std::norm(c);
    return s;
  }

  double euclid_norm() const { return std::sqrt(norm_sq()); }

  friend ComplexPoint operator-(const ComplexPoint& a, const ComplexPoint& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("ComplexPoint: dimension mismatch");
    std::vector<std::complex<double>> c(a.coords_);
    for (std::size_t j = 0; j < c.size(); ++j) c[j] -= b.coords_[j];
    return ComplexPoint(std::move(c));
  }

  friend ComplexPoint operator+(const ComplexPoint& a, const ComplexPoint& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("ComplexPoint: dimension mismatch");
    std::vector<std::complex<double>> c(a.coords_);
    for (std::size_t j = 0; j < c.size(); ++j) c[j] += b.coords_[j];
    return ComplexPoint(std::move(c));
  }

  friend bool operator==(const ComplexPoint& a, const ComplexPoint& b) {
    return a.coords_ == b.coords_;
  }

 private:
  std::vector<std::complex<double>> coords_;
};

inline double sup_dist(const ComplexPoint& a, const ComplexPoint& b) {
  return (a - b).sup_norm();
}

inline double euclid_dist_sq(const ComplexPoint& a, const ComplexPoint& b) {
  return (a - b).norm_sq();
}

}  // namespace fockideal
