#include "discfrac/specfun.hpp"

#include <math.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "discfrac/error.hpp"

namespace discfrac {

namespace {

// Gamma ratios whose arguments differ by a small integer are evaluated as a
// plain product; everything else goes through log-gamma.
constexpr double kProductSpan = 64.0;
constexpr double kProductMagnitude = 1e4;

double signed_exp(int sign, double log_abs) {
  return static_cast<double>(sign) * std::exp(log_abs);
}

// k!/m! for nonnegative integers.
double factorial_ratio(long k, long m) {
  if (std::labs(k - m) <= 170) {
    double r = 1.0;
    if (k >= m) {
      for (long j = m + 1; j <= k; ++j) r *= static_cast<double>(j);
    } else {
      for (long j = k + 1; j <= m; ++j) r /= static_cast<double>(j);
    }
    return r;
  }
  return std::exp(std::lgamma(static_cast<double>(k) + 1.0) -
                  std::lgamma(static_cast<double>(m) + 1.0));
}

}  // namespace

bool is_integer(double x) noexcept {
  return std::isfinite(x) && std::abs(x - std::round(x)) <= kIntegerTolerance;
}

bool is_nonpositive_integer(double x) noexcept { return x < 0.5 && is_integer(x); }

Order::Order(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    std::ostringstream msg;
    msg << "invalid order: alpha must be > 0 (got " << alpha << ")";
    throw Error(ErrorKind::invalid_order, msg.str());
  }
  alpha_ = discfrac::is_integer(alpha) ? std::round(alpha) : alpha;
  n_ = static_cast<int>(std::ceil(alpha_));
}

SignedLogGamma signed_lgamma(double x) {
  int sign = 1;
  const double value = ::lgamma_r(x, &sign);
  return {value, sign};
}

double gamma_ratio(double x, double y) {
  const bool numerator_pole = is_nonpositive_integer(x);
  const bool denominator_pole = is_nonpositive_integer(y);

  if (numerator_pole && denominator_pole) {
    // Gamma(-m)/Gamma(-k) -> (-1)^(m-k) k!/m!
    const long m = -std::lround(x);
    const long k = -std::lround(y);
    const double sign = ((m - k) % 2 == 0) ? 1.0 : -1.0;
    return sign * factorial_ratio(k, m);
  }
  if (denominator_pole) return 0.0;
  if (numerator_pole) {
    std::ostringstream msg;
    msg << "kernel singularity: Gamma(" << x << ")/Gamma(" << y
        << ") has a pole in the numerator only";
    throw Error(ErrorKind::kernel_singularity, msg.str());
  }

  const double span = x - y;
  if (std::abs(span) <= kProductSpan && is_integer(span) &&
      std::abs(x) <= kProductMagnitude && std::abs(y) <= kProductMagnitude) {
    const long d = std::lround(span);
    double r = 1.0;
    if (d >= 0) {
      for (long j = 0; j < d; ++j) r *= y + static_cast<double>(j);
    } else {
      for (long j = 0; j < -d; ++j) r *= x + static_cast<double>(j);
      r = 1.0 / r;
    }
    if (std::isfinite(r)) return r;
  }

  const auto gx = signed_lgamma(x);
  const auto gy = signed_lgamma(y);
  return signed_exp(gx.sign * gy.sign, gx.log_abs - gy.log_abs);
}

double falling_factorial(double t, double alpha) {
  return gamma_ratio(t + 1.0, t + 1.0 - alpha);
}

double rising_factorial(double t, double alpha) {
  if (std::abs(t) <= kIntegerTolerance) return 0.0;
  return gamma_ratio(t + alpha, t);
}

GLWeights gl_weights(double alpha, WeightMode mode, std::size_t K) {
  GLWeights out{alpha, mode, std::vector<double>(K + 1)};
  auto& w = out.w;
  w[0] = 1.0;
  const double shift = (mode == WeightMode::difference) ? -alpha : alpha;
  for (std::size_t k = 1; k <= K; ++k) {
    const double kk = static_cast<double>(k);
    w[k] = w[k - 1] * ((kk - 1.0 + shift) / kk);
  }
  return out;
}

}  // namespace discfrac
