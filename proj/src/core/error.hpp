#pragma once

#include <stdexcept>
#include <string>

namespace moykit {

enum class ErrorCode {
  invalid_argument,
  parse,
  validation,
  domain,      // input is well formed but outside what the operation accepts
  arithmetic,  // non-exact division and similar
  io,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace moykit
