#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lawforge {

enum class Errc {
  parse,        // malformed input text
  invalid,      // precondition violated
  cap,          // configured cap exceeded
  budget,       // search/sample budget exceeded
  unsupported,  // valid input outside implemented range
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace lawforge
