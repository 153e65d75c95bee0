#include "discfrac/operator.hpp"

#include <sstream>

#include "discfrac/error.hpp"

namespace discfrac {

std::string_view to_string(Family f) { return f == Family::delta ? "delta" : "nabla"; }
std::string_view to_string(Side s) { return s == Side::left ? "left" : "right"; }
std::string_view to_string(Kind k) { return k == Kind::sum ? "sum" : "difference"; }
std::string_view to_string(Formulation f) {
  return f == Formulation::riemann ? "riemann" : "binomial";
}

namespace {

[[noreturn]] void bad_value(std::string_view field, std::string_view value) {
  std::ostringstream msg;
  msg << "unrecognised " << field << " '" << value << "'";
  throw Error(ErrorKind::parse_error, msg.str());
}

}  // namespace

Family parse_family(std::string_view s) {
  if (s == "delta") return Family::delta;
  if (s == "nabla") return Family::nabla;
  bad_value("family", s);
}

Side parse_side(std::string_view s) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  bad_value("side", s);
}

Kind parse_kind(std::string_view s) {
  if (s == "sum") return Kind::sum;
  if (s == "difference" || s == "diff") return Kind::difference;
  bad_value("kind", s);
}

Formulation parse_formulation(std::string_view s) {
  if (s == "riemann") return Formulation::riemann;
  if (s == "binomial") return Formulation::binomial;
  bad_value("formulation", s);
}

std::string describe(const OperatorSpec& spec) {
  std::ostringstream os;
  os << to_string(spec.family) << '-' << to_string(spec.side) << '-' << to_string(spec.kind)
     << '/' << to_string(spec.formulation) << " alpha=" << spec.order.alpha()
     << (spec.side == Side::left ? " a=" : " b=") << spec.anchor;
  return os.str();
}

GridShape output_shape(const OperatorSpec& spec, std::size_t input_length) {
  const double L = static_cast<double>(input_length);
  const double alpha = spec.order.alpha();
  const double anchor = spec.anchor;

  if (spec.kind == Kind::sum) {
    if (input_length < 1) {
      throw Error(ErrorKind::insufficient_samples, "insufficient samples: empty input");
    }
    switch (spec.family) {
      case Family::delta:
        return spec.side == Side::left ? GridShape{anchor + alpha, input_length}
                                       : GridShape{anchor - alpha - (L - 1.0), input_length};
      case Family::nabla:
        return spec.side == Side::left ? GridShape{anchor, input_length}
                                       : GridShape{anchor - (L - 1.0), input_length};
    }
  }

  const std::size_t n = static_cast<std::size_t>(spec.order.n());
  if (input_length <= n) {
    std::ostringstream msg;
    msg << "insufficient samples: a difference of order " << alpha << " needs at least "
        << n + 1 << " samples, got " << input_length;
    throw Error(ErrorKind::insufficient_samples, msg.str());
  }
  const double nu = spec.order.complement();
  const double nd = static_cast<double>(n);
  const std::size_t len = input_length - n;
  switch (spec.family) {
    case Family::delta:
      return spec.side == Side::left ? GridShape{anchor + nu, len}
                                     : GridShape{anchor - nu - (L - 1.0) + nd, len};
    case Family::nabla:
      return spec.side == Side::left ? GridShape{anchor + nd, len}
                                     : GridShape{anchor - (L - 1.0), len};
  }
  return {anchor, len};
}

}  // namespace discfrac
