// Error type shared by every module. Each failure class maps to a distinct
// process exit code in the CLI.

#ifndef MILNOR_ERROR_HPP_
#define MILNOR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace milnor {

enum class ErrorCode : int {
  Usage = 2,          // bad command line
  Io = 3,             // unreadable / unwritable file
  Parse = 4,          // malformed text input
  Word = 5,           // generator out of range, mismatched generator counts
  Diagram = 6,        // invalid Gauss diagram
  Move = 7,           // move pattern not present
  Index = 8,          // bad Milnor index or realization target
  Spun = 9,           // bad spun-surface data
  Internal = 10,      // fixpoint / inversion failed to converge (a bug)
  SelfTest = 11,      // a property of the self-test suite failed
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
    : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const noexcept { return code_; }
  int exit_code() const noexcept { return static_cast<int>(code_); }
private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

} // namespace milnor

#endif
