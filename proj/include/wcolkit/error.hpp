#pragma once

#include <stdexcept>
#include <string>

namespace wcolkit {

/// Exception carrying a short machine-readable code ("empty-set",
/// "malformed", "format", ...) next to the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace wcolkit
