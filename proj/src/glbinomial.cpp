#include "discfrac/glbinomial.hpp"

#include <algorithm>

#include "discfrac/riemann.hpp"

namespace discfrac {

namespace {

std::vector<double> normalised_samples(const ConvolutionPlan& plan, const GridFunction& f) {
  std::vector<double> x(f.values().begin(), f.values().end());
  if (plan.reversed) std::reverse(x.begin(), x.end());
  if (plan.skip_anchor) x.front() = 0.0;
  return x;
}

GridFunction assemble(const ConvolutionPlan& plan, const std::vector<double>& y) {
  std::vector<double> out(plan.output.length);
  for (std::size_t m = 0; m < out.size(); ++m) {
    const std::size_t j = plan.reversed ? out.size() - 1 - m : m;
    out[j] = y[plan.first + m];
  }
  return GridFunction(plan.output.origin, std::move(out));
}

template <class Convolve>
GridFunction apply_with(const OperatorSpec& spec, const GridFunction& f, Convolve&& convolve) {
  const ConvolutionPlan plan = make_plan(spec, f);
  const auto x = normalised_samples(plan, f);
  return assemble(plan, convolve(plan.weights.w, x));
}

}  // namespace

ConvolutionPlan make_plan(const OperatorSpec& spec, const GridFunction& f) {
  check_input_domain(spec, f);
  ConvolutionPlan plan;
  plan.output = output_shape(spec, f.size());
  const WeightMode mode = spec.kind == Kind::sum ? WeightMode::sum : WeightMode::difference;
  plan.weights = gl_weights(spec.order.alpha(), mode, f.size() - 1);
  plan.reversed = spec.side == Side::right;
  plan.skip_anchor = spec.family == Family::nabla;
  plan.first = spec.kind == Kind::difference ? static_cast<std::size_t>(spec.order.n()) : 0;
  return plan;
}

GridFunction gl_apply(const OperatorSpec& spec, const GridFunction& f) {
  return apply_with(spec, f, [](const std::vector<double>& w, const std::vector<double>& x) {
    return causal_convolve_direct(w, x);
  });
}

GridFunction gl_apply_fast(const OperatorSpec& spec, const GridFunction& f) {
  return apply_with(spec, f, [](const std::vector<double>& w, const std::vector<double>& x) {
    return x.size() < kFastPathThreshold ? causal_convolve_direct(w, x)
                                         : causal_convolve_fft(w, x);
  });
}

}  // namespace discfrac
