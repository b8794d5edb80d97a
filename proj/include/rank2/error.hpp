#pragma once

#include <stdexcept>
#include <string>

namespace rank2 {

// Failure conditions named by the public contracts. INEXACT doubles as a
// built-in oracle: it must never fire on elements of the algebra.
enum class Errc {
  inexact,
  zero_poly,
  ring_mismatch,
  not_affine,
  window_exceeded,
  not_pointed,
  invalid_label,
  not_forbidden,
  unsupported,
  unsupported_index,
  not_in_algebra,
  parse_error,
  invalid_argument,
};

inline const char* errc_name(Errc e) {
  switch (e) {
    case Errc::inexact: return "INEXACT";
    case Errc::zero_poly: return "ZERO_POLY";
    case Errc::ring_mismatch: return "RING_MISMATCH";
    case Errc::not_affine: return "NOT_AFFINE";
    case Errc::window_exceeded: return "WINDOW_EXCEEDED";
    case Errc::not_pointed: return "NOT_POINTED";
    case Errc::invalid_label: return "INVALID_LABEL";
    case Errc::not_forbidden: return "NOT_FORBIDDEN";
    case Errc::unsupported: return "UNSUPPORTED";
    case Errc::unsupported_index: return "UNSUPPORTED_INDEX";
    case Errc::not_in_algebra: return "NOT_IN_ALGEBRA";
    case Errc::parse_error: return "PARSE_ERROR";
    case Errc::invalid_argument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw AlgebraError(code, msg);
}

}  // namespace rank2
