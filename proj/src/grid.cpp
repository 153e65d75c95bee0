#include "discfrac/grid.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "discfrac/error.hpp"
#include "discfrac/specfun.hpp"

namespace discfrac {

namespace {

void require_samples(const GridFunction& f, std::size_t needed, const char* what) {
  if (f.size() < needed) {
    std::ostringstream msg;
    msg << "insufficient samples: " << what << " needs " << needed << " samples, got "
        << f.size();
    throw Error(ErrorKind::insufficient_samples, msg.str());
  }
}

void require_positive(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_order, "difference order must be >= 1");
}

// Row of C(n, k) with alternating signs.
std::vector<double> signed_binomial_row(int n) {
  std::vector<double> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    row[k] = -row[k - 1] * static_cast<double>(n - k + 1) / static_cast<double>(k);
  }
  return row;
}

}  // namespace

GridFunction::GridFunction(double origin, std::vector<double> values)
    : origin_(origin), values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorKind::insufficient_samples, "insufficient samples: empty grid function");
  }
  if (!std::isfinite(origin_)) {
    throw Error(ErrorKind::grid_misalignment, "grid misalignment: non-finite origin");
  }
}

std::optional<std::size_t> GridFunction::index_of(double t) const noexcept {
  const double d = t - origin_;
  if (!is_integer(d)) return std::nullopt;
  const double j = std::round(d);
  if (j < 0.0 || j >= static_cast<double>(values_.size())) return std::nullopt;
  return static_cast<std::size_t>(j);
}

double GridFunction::at(double t) const {
  if (!is_integer(t - origin_)) {
    std::ostringstream msg;
    msg << "grid misalignment: point " << t << " is not on the grid with origin " << origin_;
    throw Error(ErrorKind::grid_misalignment, msg.str());
  }
  const auto j = index_of(t);
  if (!j) {
    std::ostringstream msg;
    msg << "insufficient samples: point " << t << " outside [" << origin_ << ", " << end()
        << "]";
    throw Error(ErrorKind::insufficient_samples, msg.str());
  }
  return values_[*j];
}

GridFunction GridFunction::shifted(double offset) const {
  return GridFunction(origin_ + offset, values_);
}

bool same_point(double s, double t) noexcept { return std::abs(s - t) <= kIntegerTolerance; }

bool alignable(const GridFunction& f, const GridFunction& g) noexcept {
  return is_integer(f.origin() - g.origin());
}

AnchorPair AnchorPair::make(double a, double b) {
  if (!(b >= a - kIntegerTolerance) || !is_integer(b - a)) {
    std::ostringstream msg;
    msg << "grid misalignment: anchors a=" << a << ", b=" << b
        << " must satisfy b >= a with b - a an integer";
    throw Error(ErrorKind::grid_misalignment, msg.str());
  }
  return AnchorPair{a, b};
}

GridFunction delta(const GridFunction& f) {
  require_samples(f, 2, "delta");
  std::vector<double> out(f.size() - 1);
  for (std::size_t j = 0; j + 1 < f.size(); ++j) out[j] = f[j + 1] - f[j];
  return GridFunction(f.origin(), std::move(out));
}

GridFunction nabla(const GridFunction& f) {
  require_samples(f, 2, "nabla");
  std::vector<double> out(f.size() - 1);
  for (std::size_t j = 1; j < f.size(); ++j) out[j - 1] = f[j] - f[j - 1];
  return GridFunction(f.origin() + 1.0, std::move(out));
}

GridFunction iterate_diff(const GridFunction& f, DiffOp op, int n, bool signed_variant) {
  require_positive(n);
  require_samples(f, static_cast<std::size_t>(n) + 1, "iterated difference");
  GridFunction g = f;
  for (int i = 0; i < n; ++i) g = (op == DiffOp::delta) ? delta(g) : nabla(g);
  if (signed_variant && n % 2 == 1) {
    for (std::size_t j = 0; j < g.size(); ++j) g[j] = -g[j];
  }
  return g;
}

GridFunction binomial_diff(const GridFunction& f, DiffOp op, int n) {
  require_positive(n);
  require_samples(f, static_cast<std::size_t>(n) + 1, "binomial difference");
  const auto row = signed_binomial_row(n);
  const std::size_t len = f.size() - static_cast<std::size_t>(n);
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<double> out(len, 0.0);
  for (std::size_t j = 0; j < len; ++j) {
    double acc = 0.0;
    for (std::size_t k = 0; k <= nn; ++k) {
      // delta: f(t+n-k) at t = origin + j; nabla: f(t-k) at t = origin + n + j
      acc += row[k] * f[j + nn - k];
    }
    out[j] = acc;
  }
  const double origin = (op == DiffOp::delta) ? f.origin() : f.origin() + static_cast<double>(n);
  return GridFunction(origin, std::move(out));
}

GridFunction cumulative_sum(const GridFunction& f) {
  std::vector<double> out(f.size() + 1, 0.0);
  for (std::size_t j = 0; j < f.size(); ++j) out[j + 1] = out[j] + f[j];
  return GridFunction(f.origin(), std::move(out));
}

GridFunction q_reflect(const GridFunction& f, const AnchorPair& anchors) {
  const auto checked = AnchorPair::make(anchors.a, anchors.b);
  std::vector<double> out(f.values().rbegin(), f.values().rend());
  return GridFunction(checked.a + checked.b - f.end(), std::move(out));
}

}  // namespace discfrac
