#include "basym/error.hpp"

namespace basym {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DescriptorMismatch: return "descriptor mismatch";
    case ErrorKind::AmbientMismatch: return "ambient mismatch";
    case ErrorKind::UndefinedDegree: return "undefined degree";
    case ErrorKind::Inhomogeneous: return "inhomogeneous";
    case ErrorKind::Positivity: return "positivity";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::ResolutionLength: return "resolution length";
    case ErrorKind::NotEquigenerated: return "not equigenerated";
    case ErrorKind::FitFailure: return "fit failure";
    case ErrorKind::Internal: return "internal error";
  }
  return "error";
}

}  // namespace basym
