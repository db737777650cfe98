#pragma once

#include <stdexcept>
#include <string>

namespace wreathcert {

// Every failure carries a stable machine-readable code plus a human message.
// The CLI prints both verbatim; tests match on the code.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace wreathcert
