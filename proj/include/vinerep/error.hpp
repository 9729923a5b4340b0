#pragma once

#include <stdexcept>
#include <string>

namespace vinerep {

// Single exception type; `code` is a stable machine-readable tag
// (e.g. "ShapeMismatch", "ParseError", "TooLarge").
class error : public std::runtime_error {
 public:
  error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
  throw error(code, message);
}

}  // namespace vinerep
