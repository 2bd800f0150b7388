#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqadapt {

enum class ErrorKind {
  invalid_argument,
  invalid_adaptation_function,
  numeric_error,
  ill_posed_problem,
  singular_system,
  out_of_domain,
  unsupported,
  io_error,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the sweep driver in particular) can report it as data.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace eqadapt
