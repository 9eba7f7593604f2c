#pragma once

#include <stdexcept>
#include <string>

namespace sumsetlab {

enum class Errc {
  invalid_parameter = 1,
  overflow = 2,
  parse = 3,
  io = 4,
};

/// Exception carried through the C++ core; the C API maps `code()` onto
/// `ssl_status`.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, const std::string& message) {
  if (!condition) fail(Errc::invalid_parameter, message);
}

}  // namespace sumsetlab
