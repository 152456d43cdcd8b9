#ifndef RESERVE_IO_HPP
#define RESERVE_IO_HPP

#include <string>
#include <vector>

#include "reserve/model.hpp"

namespace reserve {

/// One sampled point of a labelled curve family.
struct CurveRecord {
  std::string series;
  double d;
  double value;

  bool operator==(const CurveRecord&) const = default;
};

/// 12 significant digits, '.' decimal separator. All emitted numbers go
/// through this so fixtures stay byte-stable.
std::string format_g12(double x);

/// CSV with header `series,d,value`, LF line endings, records in series order
/// then ascending d.
std::string curves_to_csv(const std::vector<CurveRecord>& records);

/// Inverse of curves_to_csv; throws InvalidParameter on malformed input.
/// Re-emitting a parsed document reproduces it byte for byte.
std::vector<CurveRecord> parse_curve_csv(const std::string& csv);

std::string matrix_to_text(const std::string& name, const TransitionMatrix& m);

}  // namespace reserve

#endif  // RESERVE_IO_HPP
