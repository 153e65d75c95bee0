#include "discfrac/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "discfrac/error.hpp"

namespace discfrac {

namespace {

constexpr double kSpacingTolerance = 1e-6;

[[noreturn]] void parse_failure(const std::string& what) {
  throw Error(ErrorKind::parse_error, "parse error: " + what);
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

double parse_real(const std::string& field, std::size_t line) {
  const std::string text = trim(field);
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << "line " << line << ": '" << text << "' is not a finite number";
    parse_failure(msg.str());
  }
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kOutputDigits, x);
  return buf;
}

double round_output(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_real(x).c_str(), nullptr);
}

GridFunction ParsedGrid::resolve(double fallback) const {
  return GridFunction(origin.value_or(fallback), values);
}

GridFunction ParsedGrid::resolve() const {
  if (!origin) parse_failure("the input carries no origin (add a t column or an origin key)");
  return GridFunction(*origin, values);
}

void write_csv(std::ostream& os, const GridFunction& f) {
  os << "t,value\n";
  for (std::size_t j = 0; j < f.size(); ++j) {
    os << format_real(f.point(j)) << ',' << format_real(f[j]) << '\n';
  }
}

ParsedGrid read_csv(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  int columns = 0;
  ParsedGrid out;
  while (std::getline(is, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (columns == 0) {
      const std::string header = lower(text);
      if (header == "t,value") {
        columns = 2;
      } else if (header == "value") {
        columns = 1;
      } else {
        parse_failure("expected a 't,value' or 'value' header, got '" + text + "'");
      }
      continue;
    }
    const auto cells = split(text);
    if (static_cast<int>(cells.size()) != columns) {
      std::ostringstream msg;
      msg << "line " << line_no << ": expected " << columns << " column(s)";
      parse_failure(msg.str());
    }
    if (columns == 2) {
      const double t = parse_real(cells[0], line_no);
      if (!out.origin) {
        out.origin = t;
      } else {
        const double expected = *out.origin + static_cast<double>(out.values.size());
        if (std::abs(t - expected) > kSpacingTolerance * std::max(1.0, std::abs(expected))) {
          std::ostringstream msg;
          msg << "line " << line_no << ": grid points must be unit spaced (expected t="
              << format_real(expected) << ")";
          parse_failure(msg.str());
        }
      }
    }
    out.values.push_back(parse_real(cells.back(), line_no));
  }
  if (columns == 0) parse_failure("empty input");
  if (out.values.empty()) parse_failure("no data rows");
  return out;
}

nlohmann::json to_json(const GridFunction& f) {
  nlohmann::json values = nlohmann::json::array();
  for (double v : f.values()) values.push_back(round_output(v));
  return {{"origin", round_output(f.origin())}, {"values", std::move(values)}};
}

ParsedGrid grid_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("values") || !j["values"].is_array()) {
    parse_failure("expected an object with a 'values' array");
  }
  ParsedGrid out;
  if (j.contains("origin")) {
    if (!j["origin"].is_number()) parse_failure("'origin' must be a number");
    out.origin = j["origin"].get<double>();
  }
  for (const auto& v : j["values"]) {
    if (!v.is_number()) parse_failure("'values' must hold numbers");
    out.values.push_back(v.get<double>());
  }
  if (out.values.empty()) parse_failure("'values' is empty");
  return out;
}

void write_grid(std::ostream& os, const GridFunction& f, GridFormat format) {
  if (format == GridFormat::csv) {
    write_csv(os, f);
  } else {
    os << to_json(f).dump() << '\n';
  }
}

ParsedGrid read_grid(std::istream& is, GridFormat format) {
  if (format == GridFormat::csv) return read_csv(is);
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    parse_failure(e.what());
  }
  return grid_from_json(j);
}

ParsedGrid read_grid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_failure("cannot open '" + path + "'");
  GridFormat format = GridFormat::csv;
  if (path.size() >= 5 && lower(path.substr(path.size() - 5)) == ".json") {
    format = GridFormat::json;
  } else {
    in >> std::ws;
    if (in.peek() == '{') format = GridFormat::json;
  }
  return read_grid(in, format);
}

}  // namespace discfrac
