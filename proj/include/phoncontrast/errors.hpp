// Error taxonomy. ConfigError maps to exit code 1, DataError to exit code 2.
#pragma once

#include <stdexcept>
#include <string>

namespace phoncontrast {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad flags, unknown feature names, invalid thresholds, missing files.
struct ConfigError : Error {
  using Error::Error;
};

// Malformed file contents, unresolvable segments, degenerate inputs.
struct DataError : Error {
  using Error::Error;
};

struct UnknownSegmentError : DataError {
  explicit UnknownSegmentError(const std::string& seg)
      : DataError("unknown segment: '" + seg + "'"), segment(seg) {}
  std::string segment;
};

}  // namespace phoncontrast
