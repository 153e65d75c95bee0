#pragma once

#include "discfrac/grid.hpp"
#include "discfrac/operator.hpp"

namespace discfrac {

/// Kernel-sum fractional sum of order spec.order, evaluated at every point of
/// the operator's output grid. Left operators need f.origin() == a, right
/// operators need f.end() == b.
GridFunction riemann_sum(const OperatorSpec& spec, const GridFunction& f);

/// Kernel-sum fractional sum at a single point t. Points where the defining
/// sum is empty (e.g. t < a + alpha for delta-left) evaluate to 0, so this
/// also covers the zero initial values outside the stored output grid.
double riemann_sum_at(const OperatorSpec& spec, const GridFunction& f, double t);

/// Fractional difference as the n-fold outer difference of the order (n-alpha)
/// sum. Integer orders skip the inner sum.
GridFunction riemann_diff(const OperatorSpec& spec, const GridFunction& f);

/// Single-sum Gamma(-alpha) kernel form of the fractional difference. Throws
/// alt_form_undefined for integer orders.
GridFunction riemann_diff_alt(const OperatorSpec& spec, const GridFunction& f);

/// Dispatches on spec.kind.
GridFunction riemann_apply(const OperatorSpec& spec, const GridFunction& f);

/// Throws unless f lies on the input domain of `spec` (starts at a / ends at b).
void check_input_domain(const OperatorSpec& spec, const GridFunction& f);

}  // namespace discfrac
