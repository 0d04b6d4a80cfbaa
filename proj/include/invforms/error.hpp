#pragma once

#include <stdexcept>
#include <string>

namespace invforms {

// All failures carry a short machine-readable code ("NotPrime", "CapExceeded",
// ...) plus a human message.  Divisibility and proportionality misses are not
// errors; operations that can legitimately miss return std::optional instead.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace invforms
