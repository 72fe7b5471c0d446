#pragma once

#include <stdexcept>
#include <string>

namespace qcp {

// Bad caller input: malformed graphs, inconsistent sizes, unparsable documents.
// The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric failure: singular faces, non-convergence, closing-condition violations.
// The CLI maps this to exit code 3.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Geometric degeneracy in the grid-projection construction (plane grazing a
// facet boundary, unsupported face degree, offset sitting on a cell wall).
struct DegeneracyError : NumericError {
  explicit DegeneracyError(const std::string& msg) : NumericError(msg) {}
};

}  // namespace qcp
