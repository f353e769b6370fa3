#include "schublas/errors.hpp"

namespace schublas {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSnowy: return "NotSnowy";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidCode: return "InvalidCode";
    case ErrorKind::NotInImage: return "NotInImage";
    case ErrorKind::NotInSpan: return "NotInSpan";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::InvalidSubgrid: return "InvalidSubgrid";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

SchubError::SchubError(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail),
      kind_(kind) {}

void fail(ErrorKind kind, const std::string& detail) {
  throw SchubError(kind, detail);
}

}  // namespace schublas
