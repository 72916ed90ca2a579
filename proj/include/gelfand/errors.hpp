#ifndef GELFAND_ERRORS_HPP
#define GELFAND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gelfand {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mismatched variable counts, vector lengths or matrix shapes.
struct DimensionError : Error {
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

/// Structural validation failure (groups, pairs, spec files, quadratures).
struct ValidationError : Error {
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// A polynomial is not expressible in the generator algebra.
struct ExpressibilityError : Error {
  explicit ExpressibilityError(const std::string& msg, std::string offender = {})
      : Error(msg), offending_index(std::move(offender)) {}
  std::string offending_index;
};

/// A function fails its declared invariance audit.
struct InvarianceError : Error {
  explicit InvarianceError(const std::string& msg) : Error(msg) {}
};

/// Compact support promised but not covered by the quadrature box.
struct SupportError : Error {
  explicit SupportError(const std::string& msg) : Error(msg) {}
};

/// A coefficient table is too shallow for the requested operation.
struct DepthError : Error {
  explicit DepthError(const std::string& msg) : Error(msg) {}
};

}  // namespace gelfand

#endif
