#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace css {

enum class ErrorKind {
  MalformedJson,
  MalformedDocument,
  MalformedNumber,
  OutOfUnitRange,
  InvertedInterval,
  MissingGrade,
  DuplicateParameter,
  DuplicateElement,
  UnknownParameter,
  UnknownElement,
  UniverseMismatch,
  ParameterSetMismatch,
  NotBothInternalExternal,
  CampaignTooLarge,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library. The optional location names the
// (parameter key, element) cell the failure was detected at.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  Error(ErrorKind kind, const std::string& message, std::string parameter, std::string element);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<std::string>& parameter() const noexcept { return parameter_; }
  const std::optional<std::string>& element() const noexcept { return element_; }

 private:
  ErrorKind kind_;
  std::optional<std::string> parameter_;
  std::optional<std::string> element_;
};

}  // namespace css
