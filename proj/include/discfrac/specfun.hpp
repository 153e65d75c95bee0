#pragma once

#include <cstddef>
#include <vector>

namespace discfrac {

/// Absolute tolerance used to decide whether a real is "an integer".
inline constexpr double kIntegerTolerance = 1e-9;

bool is_integer(double x) noexcept;
bool is_nonpositive_integer(double x) noexcept;

/// Operator order alpha > 0 together with n, the smallest integer >= alpha.
/// Orders within kIntegerTolerance of an integer snap to that integer.
class Order {
 public:
  explicit Order(double alpha);

  double alpha() const noexcept { return alpha_; }
  int n() const noexcept { return n_; }
  bool is_integer() const noexcept { return static_cast<double>(n_) == alpha_; }
  /// n - alpha, the order of the inner sum of a fractional difference.
  double complement() const noexcept { return static_cast<double>(n_) - alpha_; }

 private:
  double alpha_;
  int n_;
};

/// Log of |Gamma(x)| and the sign of Gamma(x), for x not a nonpositive integer.
struct SignedLogGamma {
  double log_abs;
  int sign;
};
SignedLogGamma signed_lgamma(double x);

/// Gamma(x)/Gamma(y).
///
/// A pole in the denominator alone yields 0. When both arguments are poles
/// (x = -m, y = -k) the residue-ratio limit (-1)^(m-k) k!/m! is returned. A pole
/// in the numerator alone throws Error{kernel_singularity}.
double gamma_ratio(double x, double y);

/// t^(alpha) = Gamma(t+1)/Gamma(t+1-alpha).
double falling_factorial(double t, double alpha);

/// Rising function Gamma(t+alpha)/Gamma(t), with 0^(alpha) = 0.
double rising_factorial(double t, double alpha);

enum class WeightMode {
  difference,  ///< (-1)^k C(alpha, k)
  sum,         ///< (-1)^k C(-alpha, k) = C(alpha+k-1, k)
};

struct GLWeights {
  double alpha = 0.0;
  WeightMode mode = WeightMode::difference;
  std::vector<double> w;
};

/// Weights w[0..K] of (1-z)^(+-alpha) by the multiplicative recurrence.
GLWeights gl_weights(double alpha, WeightMode mode, std::size_t K);

}  // namespace discfrac
