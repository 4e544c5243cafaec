#pragma once

#include <stdexcept>
#include <string>

#include "fockideal/measure.hpp"

namespace fockideal {

/// Raised for any malformed measure file: unknown fields, wrong types,
/// nonpositive weights, dimension mismatches, unsupported version.
class MeasureParseError : public std::runtime_error {
 public:
  explicit MeasureParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Schema (version 1, strict -- unknown fields are rejected):
///   {"version":1, "dimension":n, "kind":"atomic",
///    "atoms":[{"point":[[re,im],...], "weight":w}, ...]}
///   {"version":1, "dimension":n, "kind":"radial",
///    "poly":[c0,c1,...], "beta":b, "quad_order":q}
Measure parse_measure(const std::string& json_text);
Measure load_measure_file(const std::string& path);

std::string serialize_measure(const Measure& nu);

}  // namespace fockideal
