#pragma once

#include <string>
#include <string_view>

#include "discfrac/specfun.hpp"

namespace discfrac {

enum class Family { delta, nabla };
enum class Side { left, right };
enum class Kind { sum, difference };
enum class Formulation { riemann, binomial };

/// Selects one of the sixteen operators. `anchor` is a for left-sided
/// operators and b for right-sided ones.
struct OperatorSpec {
  Family family = Family::delta;
  Side side = Side::left;
  Kind kind = Kind::sum;
  Formulation formulation = Formulation::riemann;
  Order order{1.0};
  double anchor = 0.0;
};

std::string_view to_string(Family f);
std::string_view to_string(Side s);
std::string_view to_string(Kind k);
std::string_view to_string(Formulation f);

Family parse_family(std::string_view s);
Side parse_side(std::string_view s);
Kind parse_kind(std::string_view s);
Formulation parse_formulation(std::string_view s);

/// e.g. "delta-left-difference/riemann alpha=0.5 anchor=0"
std::string describe(const OperatorSpec& spec);

/// Output grid of an operator applied to a sequence of `input_length` samples
/// on the operator's input domain. Identical for both formulations.
struct GridShape {
  double origin;
  std::size_t length;
};
GridShape output_shape(const OperatorSpec& spec, std::size_t input_length);

}  // namespace discfrac
