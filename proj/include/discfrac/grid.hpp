#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace discfrac {

/// A finite sequence on a unit-spaced grid: value j lives at origin + j.
class GridFunction {
 public:
  GridFunction(double origin, std::vector<double> values);

  double origin() const noexcept { return origin_; }
  /// Last grid point, origin + size() - 1.
  double end() const noexcept { return origin_ + static_cast<double>(values_.size() - 1); }
  std::size_t size() const noexcept { return values_.size(); }
  double point(std::size_t j) const noexcept { return origin_ + static_cast<double>(j); }

  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t j) const noexcept { return values_[j]; }
  double& operator[](std::size_t j) noexcept { return values_[j]; }

  /// Index of grid point t, if t is (within tolerance) one of the stored points.
  std::optional<std::size_t> index_of(double t) const noexcept;
  bool contains(double t) const noexcept { return index_of(t).has_value(); }
  /// Value at grid point t; throws grid_misalignment / insufficient_samples.
  double at(double t) const;

  /// Same values, origin moved by `offset`.
  GridFunction shifted(double offset) const;

 private:
  double origin_;
  std::vector<double> values_;
};

/// True when the two grids differ by an integer offset.
bool alignable(const GridFunction& f, const GridFunction& g) noexcept;
bool same_point(double s, double t) noexcept;

/// Anchors of the reflection (Qf)(s) = f(a+b-s); b - a must be a nonnegative integer.
struct AnchorPair {
  double a;
  double b;

  static AnchorPair make(double a, double b);
};

enum class DiffOp { delta, nabla };

GridFunction delta(const GridFunction& f);
GridFunction nabla(const GridFunction& f);

/// n-fold composition of delta or nabla, times (-1)^n when `signed_variant`.
GridFunction iterate_diff(const GridFunction& f, DiffOp op, int n, bool signed_variant = false);

/// n-th difference as a single weighted sum with the integer binomial row.
GridFunction binomial_diff(const GridFunction& f, DiffOp op, int n);

/// Zero-initialised running sum u with u(origin) = 0 and delta(u) = f.
GridFunction cumulative_sum(const GridFunction& f);

/// Discrete Q-operator: value at s is f(a+b-s). The result grid is the
/// reflection of f's grid about (a+b)/2.
GridFunction q_reflect(const GridFunction& f, const AnchorPair& anchors);

}  // namespace discfrac
