#ifndef FNCALC_ERRORS_HPP
#define FNCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fncalc {

/// Dimension or bundle mismatch between values being combined.
struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A stated hypothesis of an operation does not hold (e.g. a torsionful
/// connection passed where a torsion-free one is required).
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file or record.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace fncalc

#endif
