#pragma once

#include <stdexcept>
#include <string>

#include "klf/halfplane.hpp"

namespace klf {

/// Malformed point file: bad JSON, missing fields, bad keys or lengths.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses {"n": 3, "y": [y1, y2], "x": {"1,2": v, "1,3": v, "2,3": v}}.
/// x keys are 1-based "i,j" with i < j; omitted entries are 0 and "x" may be
/// absent. Throws ParseError on malformed input; a non-positive y surfaces as
/// DomainError from make_point.
HalfPlanePoint parse_point_json(const std::string& text);

HalfPlanePoint load_point_file(const std::string& path);

}  // namespace klf
