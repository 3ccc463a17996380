#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>

#include "repgas/errors.hpp"

namespace repgas {

// Points are small fixed-capacity coordinate vectors.  Euclidean spaces of
// dimension 1..kMaxDim and the interval-union carrier (dimension 1) share
// this representation.
inline constexpr int kMaxDim = 4;

class Point {
 public:
  Point() = default;
  Point(std::initializer_list<double> coords) {
    if (coords.size() == 0 || coords.size() > kMaxDim)
      throw DomainError("point dimension must be in [1, 4]");
    for (double c : coords) v_[n_++] = c;
  }
  static Point scalar(double x) { return Point{x}; }

  int dim() const { return n_; }
  double operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return v_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.n_ != b.n_) return false;
    for (int i = 0; i < a.n_; ++i)
      if (a.v_[static_cast<std::size_t>(i)] != b.v_[static_cast<std::size_t>(i)]) return false;
    return true;
  }

 private:
  std::array<double, kMaxDim> v_{};
  int n_ = 0;
};

// Closed axis-aligned box [lo, hi].
struct Box {
  Point lo;
  Point hi;

  int dim() const { return lo.dim(); }

  double volume() const {
    double v = 1.0;
    for (int i = 0; i < dim(); ++i) v *= hi[i] - lo[i];
    return v;
  }

  bool contains(const Point& p) const {
    if (p.dim() != dim()) return false;
    for (int i = 0; i < dim(); ++i)
      if (p[i] < lo[i] || p[i] > hi[i]) return false;
    return true;
  }

  void validate() const {
    if (lo.dim() != hi.dim()) throw DomainError("box corner dimensions differ");
    for (int i = 0; i < dim(); ++i)
      if (!(lo[i] <= hi[i])) throw DomainError("box has negative extent");
  }
};

}  // namespace repgas
