#include "css/error.hpp"

namespace css {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedJson: return "MalformedJson";
    case ErrorKind::MalformedDocument: return "MalformedDocument";
    case ErrorKind::MalformedNumber: return "MalformedNumber";
    case ErrorKind::OutOfUnitRange: return "OutOfUnitRange";
    case ErrorKind::InvertedInterval: return "InvertedInterval";
    case ErrorKind::MissingGrade: return "MissingGrade";
    case ErrorKind::DuplicateParameter: return "DuplicateParameter";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::UnknownParameter: return "UnknownParameter";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::ParameterSetMismatch: return "ParameterSetMismatch";
    case ErrorKind::NotBothInternalExternal: return "NotBothInternalExternal";
    case ErrorKind::CampaignTooLarge: return "CampaignTooLarge";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

Error::Error(ErrorKind kind, const std::string& message, std::string parameter, std::string element)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message + " at (" + parameter + ", " +
                         element + ")"),
      kind_(kind),
      parameter_(std::move(parameter)),
      element_(std::move(element)) {}

}  // namespace css
