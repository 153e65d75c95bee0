#pragma once

#include <stdexcept>
#include <string>

namespace discfrac {

enum class ErrorKind {
  kernel_singularity,
  insufficient_samples,
  grid_misalignment,
  invalid_order,
  alt_form_undefined,
  unknown_id,
  parse_error,
};

/// Base exception for every failure raised by the library. The `kind()` tag
/// lets callers (the CLI in particular) map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace discfrac
