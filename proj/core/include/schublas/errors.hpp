#pragma once

#include <stdexcept>
#include <string>

namespace schublas {

// Shared error taxonomy. Every failure carries its kind plus the offending
// datum, so callers (and the CLI) can report it verbatim.
enum class ErrorKind {
  NotSnowy,        // composition repeats a positive entry
  OutOfRange,      // box bounds (m, n) violated
  InvalidCode,     // value list is not a valid inversion code / permutation
  NotInImage,      // no snowy preimage under the rajcode statistic
  NotInSpan,       // polynomial is not in the span of the requested basis
  ZeroPolynomial,  // operation undefined on the zero polynomial
  ResourceLimit,   // a configured ceiling was hit; message names the limit
  InvalidSubgrid,  // extracted subgrid is not a valid left-to-top pipedream
  InvalidInput,    // malformed or inconsistent argument
  Internal,        // a cross-checked identity failed; indicates a bug
};

const char* error_kind_name(ErrorKind kind);

class SchubError : public std::runtime_error {
 public:
  SchubError(ErrorKind kind, const std::string& detail);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& detail);

}  // namespace schublas
