#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace stacklin {

enum class ErrorKind { validation, computation };

// Every failure carries a stable code (e.g. "NonSimplicial") so callers and the
// CLI can dispatch without parsing messages. Validation errors also name the
// offending input field.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, std::string field, const std::string& message)
      : std::runtime_error(code + (field.empty() ? "" : " [" + field + "]") + ": " + message),
        kind_(kind),
        code_(std::move(code)),
        field_(std::move(field)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }

 private:
  ErrorKind kind_;
  std::string code_;
  std::string field_;
};

[[noreturn]] inline void fail_validation(std::string code, std::string field, const std::string& message) {
  throw Error(ErrorKind::validation, std::move(code), std::move(field), message);
}

[[noreturn]] inline void fail_computation(std::string code, const std::string& message) {
  throw Error(ErrorKind::computation, std::move(code), "", message);
}

}  // namespace stacklin
