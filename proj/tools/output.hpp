#ifndef ALTRAT_TOOLS_OUTPUT_HPP_
#define ALTRAT_TOOLS_OUTPUT_HPP_

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace altrat::cli {

enum class Format { Csv, Json };

using Json = nlohmann::ordered_json;

/// 17 significant digits, "inf" for the abscissa at infinity, "nan" otherwise non-finite.
inline std::string csv_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// A rectangular CSV table: header row plus string cells.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& os) const {
    auto line = [&os](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << ',';
        os << cells[i];
      }
      os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
  }
};

/// JSON value for a double; the abscissa at infinity is the string "inf".
inline Json json_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;  // NaN serializes as null
}

inline void write_json(std::ostream& os, const Json& doc) { os << doc.dump(2) << '\n'; }

}  // namespace altrat::cli

#endif  // ALTRAT_TOOLS_OUTPUT_HPP_
