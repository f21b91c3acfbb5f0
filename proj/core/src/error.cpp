#include "mde/error.hpp"

namespace mde {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Shape:
      return "shape error";
    case ErrorKind::Rank:
      return "rank error";
    case ErrorKind::Order:
      return "order error";
    case ErrorKind::InvalidVariant:
      return "invalid measure variant";
    case ErrorKind::DegenerateSeries:
      return "degenerate series";
    case ErrorKind::InvalidArgument:
      return "invalid argument";
    case ErrorKind::Campaign:
      return "campaign error";
  }
  return "error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace mde
