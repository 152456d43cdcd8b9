#include "reserve/io.hpp"

#include <cstdio>
#include <sstream>

namespace reserve {

std::string format_g12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string curves_to_csv(const std::vector<CurveRecord>& records) {
  std::string out = "series,d,value\n";
  for (const auto& rec : records) {
    out += rec.series;
    out += ',';
    out += format_g12(rec.d);
    out += ',';
    out += format_g12(rec.value);
    out += '\n';
  }
  return out;
}

std::vector<CurveRecord> parse_curve_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != "series,d,value")
    throw InvalidParameter("CSV must start with header 'series,d,value'");
  std::vector<CurveRecord> records;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        line.find(',', c2 + 1) != std::string::npos)
      throw InvalidParameter("CSV line " + std::to_string(lineno) +
                             ": expected 3 comma-separated fields");
    CurveRecord rec;
    rec.series = line.substr(0, c1);
    std::size_t used = 0;
    try {
      rec.d = std::stod(line.substr(c1 + 1, c2 - c1 - 1), &used);
      rec.value = std::stod(line.substr(c2 + 1), &used);
    } catch (const std::exception&) {
      throw InvalidParameter("CSV line " + std::to_string(lineno) +
                             ": non-numeric field");
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::string matrix_to_text(const std::string& name, const TransitionMatrix& m) {
  std::string out = "matrix " + name + " (row: occupied now, column: occupied next)\n";
  for (int i = 0; i < 3; ++i) {
    out += "  " + std::to_string(i) + ":";
    for (int j = 0; j < 3; ++j) {
      out += ' ';
      out += format_g12(m(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace reserve
