#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "discfrac/grid.hpp"

namespace discfrac {

/// Printing precision for every serialised real.
inline constexpr int kOutputDigits = 12;

std::string format_real(double x);
/// x rounded to kOutputDigits significant digits.
double round_output(double x);

enum class GridFormat { csv, json };

/// A sequence read from disk. `origin` is set only when the file carries one
/// (a t column, or an "origin" key).
struct ParsedGrid {
  std::optional<double> origin;
  std::vector<double> values;

  /// The file's origin when present, `fallback` otherwise.
  GridFunction resolve(double fallback) const;
  /// Throws parse_error when the file carried no origin.
  GridFunction resolve() const;
};

/// CSV with header `t,value`, one row per grid point.
void write_csv(std::ostream& os, const GridFunction& f);
/// Accepts a `t,value` header or a single `value` column.
ParsedGrid read_csv(std::istream& is);

/// `{origin, values[]}`.
nlohmann::json to_json(const GridFunction& f);
/// `origin` may be omitted.
ParsedGrid grid_from_json(const nlohmann::json& j);

void write_grid(std::ostream& os, const GridFunction& f, GridFormat format);
ParsedGrid read_grid(std::istream& is, GridFormat format);
/// Format chosen from the file extension (.json) or, failing that, from the
/// first non-blank character.
ParsedGrid read_grid_file(const std::string& path);

}  // namespace discfrac
