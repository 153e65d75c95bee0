#include "discfrac/riemann.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "discfrac/error.hpp"
#include "discfrac/specfun.hpp"

namespace discfrac {

namespace {

// Number of unit steps from `from` to `to`; throws when the two are not on a
// common unit grid.
long steps_between(double from, double to) {
  const double d = to - from;
  if (!is_integer(d)) {
    std::ostringstream msg;
    msg << "grid misalignment: " << to << " - " << from << " is not an integer";
    throw Error(ErrorKind::grid_misalignment, msg.str());
  }
  return std::lround(d);
}

void require_index(const GridFunction& f, long j) {
  if (j < 0 || j >= static_cast<long>(f.size())) {
    std::ostringstream msg;
    msg << "insufficient samples: evaluation reads past the stored grid [" << f.origin() << ", "
        << f.end() << "]";
    throw Error(ErrorKind::insufficient_samples, msg.str());
  }
}

// Generic kernel sum over the input samples read by one output point. `lo` and
// `hi` are input indices (inclusive); an empty range (hi < lo) gives 0.
template <class Kernel>
double kernel_sum(const GridFunction& f, long lo, long hi, Kernel&& kernel) {
  if (hi < lo) return 0.0;
  require_index(f, lo);
  require_index(f, hi);
  double acc = 0.0;
  for (long j = lo; j <= hi; ++j) {
    acc += kernel(f.point(static_cast<std::size_t>(j))) * f[static_cast<std::size_t>(j)];
  }
  return acc;
}

// Sum of order alpha at t, without the 1/Gamma(alpha) factor.
double sum_kernel_part(Family family, Side side, double alpha, double anchor,
                       const GridFunction& f, double t) {
  const double beta = alpha - 1.0;
  const long last = static_cast<long>(f.size()) - 1;
  if (side == Side::left) {
    if (family == Family::delta) {
      // s = a .. t - alpha, kernel (t - sigma(s))^(alpha-1)
      const long hi = steps_between(anchor, t - alpha);
      return kernel_sum(f, 0, hi, [&](double s) { return falling_factorial(t - (s + 1.0), beta); });
    }
    // s = a+1 .. t, kernel (t - rho(s))^{rising alpha-1}
    const long hi = steps_between(anchor, t);
    return kernel_sum(f, 1, hi, [&](double s) { return rising_factorial(t - (s - 1.0), beta); });
  }
  if (family == Family::delta) {
    // s = t + alpha .. b, kernel (rho(s) - t)^(alpha-1)
    const long lo = last - steps_between(t + alpha, anchor);
    return kernel_sum(f, lo, last, [&](double s) { return falling_factorial((s - 1.0) - t, beta); });
  }
  // s = t .. b-1, kernel (s - rho(t))^{rising alpha-1}
  const long lo = last - steps_between(t, anchor);
  return kernel_sum(f, lo, last - 1,
                    [&](double s) { return rising_factorial(s - (t - 1.0), beta); });
}

OperatorSpec with_order(const OperatorSpec& spec, double alpha, Kind kind) {
  OperatorSpec out = spec;
  out.order = Order(alpha);
  out.kind = kind;
  return out;
}

GridFunction evaluate_on_shape(const GridShape& shape, auto&& at_point) {
  std::vector<double> values(shape.length);
  for (std::size_t j = 0; j < shape.length; ++j) {
    values[j] = at_point(shape.origin + static_cast<double>(j));
  }
  return GridFunction(shape.origin, std::move(values));
}

}  // namespace

void check_input_domain(const OperatorSpec& spec, const GridFunction& f) {
  if (spec.side == Side::left && !same_point(f.origin(), spec.anchor)) {
    std::ostringstream msg;
    msg << "grid misalignment: left operator anchored at a=" << spec.anchor
        << " needs input starting at a, got origin " << f.origin();
    throw Error(ErrorKind::grid_misalignment, msg.str());
  }
  if (spec.side == Side::right && !same_point(f.end(), spec.anchor)) {
    std::ostringstream msg;
    msg << "grid misalignment: right operator anchored at b=" << spec.anchor
        << " needs input ending at b, got last point " << f.end();
    throw Error(ErrorKind::grid_misalignment, msg.str());
  }
}

double riemann_sum_at(const OperatorSpec& spec, const GridFunction& f, double t) {
  check_input_domain(spec, f);
  const double alpha = spec.order.alpha();
  return sum_kernel_part(spec.family, spec.side, alpha, spec.anchor, f, t) / std::tgamma(alpha);
}

GridFunction riemann_sum(const OperatorSpec& spec, const GridFunction& f) {
  check_input_domain(spec, f);
  const OperatorSpec sum_spec = with_order(spec, spec.order.alpha(), Kind::sum);
  const double scale = 1.0 / std::tgamma(spec.order.alpha());
  return evaluate_on_shape(output_shape(sum_spec, f.size()), [&](double t) {
    return scale * sum_kernel_part(spec.family, spec.side, spec.order.alpha(), spec.anchor, f, t);
  });
}

GridFunction riemann_diff(const OperatorSpec& spec, const GridFunction& f) {
  check_input_domain(spec, f);
  const int n = spec.order.n();
  // Validates the sample count before any work.
  output_shape(with_order(spec, spec.order.alpha(), Kind::difference), f.size());

  GridFunction inner = f;
  if (spec.order.is_integer()) {
    // Order-zero sum: the identity, except that nabla sums are empty at the anchor.
    if (spec.family == Family::nabla) {
      inner[spec.side == Side::left ? 0 : inner.size() - 1] = 0.0;
    }
  } else {
    inner = riemann_sum(with_order(spec, spec.order.complement(), Kind::sum), f);
  }

  if (spec.family == Family::delta) {
    return spec.side == Side::left ? iterate_diff(inner, DiffOp::delta, n)
                                   : iterate_diff(inner, DiffOp::nabla, n, true);
  }
  return spec.side == Side::left ? iterate_diff(inner, DiffOp::nabla, n)
                                 : iterate_diff(inner, DiffOp::delta, n, true);
}

GridFunction riemann_diff_alt(const OperatorSpec& spec, const GridFunction& f) {
  if (spec.order.is_integer()) {
    throw Error(ErrorKind::alt_form_undefined, "alternative form undefined at integer order");
  }
  check_input_domain(spec, f);
  const double alpha = spec.order.alpha();
  const double beta = -alpha - 1.0;
  const double scale = 1.0 / std::tgamma(-alpha);
  const double anchor = spec.anchor;
  const long last = static_cast<long>(f.size()) - 1;
  const GridShape shape = output_shape(with_order(spec, alpha, Kind::difference), f.size());

  return evaluate_on_shape(shape, [&](double t) {
    double acc = 0.0;
    if (spec.side == Side::left) {
      if (spec.family == Family::delta) {
        // s = a .. t + alpha, kernel (t - sigma(s))^(-alpha-1)
        const long hi = steps_between(anchor, t + alpha);
        acc = kernel_sum(f, 0, hi, [&](double s) { return falling_factorial(t - (s + 1.0), beta); });
      } else {
        // s = a+1 .. t, kernel (t - rho(s))^{rising -alpha-1}
        const long hi = steps_between(anchor, t);
        acc = kernel_sum(f, 1, hi, [&](double s) { return rising_factorial(t - (s - 1.0), beta); });
      }
    } else if (spec.family == Family::delta) {
      // s = t - alpha .. b, kernel (s - sigma(t))^(-alpha-1)
      const long lo = last - steps_between(t - alpha, anchor);
      acc = kernel_sum(f, lo, last, [&](double s) { return falling_factorial(s - (t + 1.0), beta); });
    } else {
      // s = t .. b-1, kernel (s - rho(t))^{rising -alpha-1}
      const long lo = last - steps_between(t, anchor);
      acc = kernel_sum(f, lo, last - 1,
                       [&](double s) { return rising_factorial(s - (t - 1.0), beta); });
    }
    return scale * acc;
  });
}

GridFunction riemann_apply(const OperatorSpec& spec, const GridFunction& f) {
  return spec.kind == Kind::sum ? riemann_sum(spec, f) : riemann_diff(spec, f);
}

}  // namespace discfrac
