#pragma once

#include <stdexcept>
#include <string>

namespace wcb {

enum class ErrorKind {
  invalid_index,
  parse,
  unsupported_charge,
  malformed_tableau,
  malformed_result,
  undefined_displacement,
  prerequisite_failed,
  range,
  domain,
  theorem_contradiction,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wcb
