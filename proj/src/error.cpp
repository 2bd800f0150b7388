#include "eqadapt/error.hpp"

namespace eqadapt {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::invalid_adaptation_function: return "invalid-adaptation-function";
    case ErrorKind::numeric_error: return "numeric-error";
    case ErrorKind::ill_posed_problem: return "ill-posed-problem";
    case ErrorKind::singular_system: return "singular-system";
    case ErrorKind::out_of_domain: return "out-of-domain";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::io_error: return "io-error";
  }
  return "unknown";
}

}  // namespace eqadapt
