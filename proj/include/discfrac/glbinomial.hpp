#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "discfrac/grid.hpp"
#include "discfrac/operator.hpp"
#include "discfrac/specfun.hpp"

namespace discfrac {

/// Below this input length gl_apply_fast falls back to direct summation.
inline constexpr std::size_t kFastPathThreshold = 256;

/// Every binomial operator, after index normalisation, is a causal convolution
/// y[i] = sum_{k<=i} w[k] x[i-k] of the weights with the (possibly reversed,
/// possibly anchor-zeroed) samples; the output is y[first..] re-ordered.
struct ConvolutionPlan {
  GLWeights weights;
  bool reversed = false;      ///< right-sided operators read the samples backwards
  bool skip_anchor = false;   ///< nabla operators never read f(a) / f(b)
  std::size_t first = 0;      ///< n for differences, 0 for sums
  GridShape output;
};

ConvolutionPlan make_plan(const OperatorSpec& spec, const GridFunction& f);

/// Truncated binomial sums evaluated directly, O(L^2).
GridFunction gl_apply(const OperatorSpec& spec, const GridFunction& f);

/// Same values as gl_apply through FFT convolution, O(L log L).
GridFunction gl_apply_fast(const OperatorSpec& spec, const GridFunction& f);

/// Causal linear convolution truncated to x.size() outputs.
std::vector<double> causal_convolve_direct(std::span<const double> w, std::span<const double> x);
std::vector<double> causal_convolve_fft(std::span<const double> w, std::span<const double> x);

}  // namespace discfrac
