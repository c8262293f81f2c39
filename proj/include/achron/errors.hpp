#pragma once

#include <stdexcept>
#include <string>

namespace achron {

enum class ErrorCode {
  Parse,
  UnknownModality,
  UnknownWorld,
  Budget,
  Param,
  NotPointGenerated,
  Io,
};

// Single exception type for all workbench errors.  code_name() maps onto the
// stable one-line identifiers the CLI prints on stderr.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  const char* code_name() const noexcept {
    switch (code_) {
      case ErrorCode::Parse: return "E_PARSE";
      case ErrorCode::Budget: return "E_BUDGET";
      case ErrorCode::Io: return "E_IO";
      default: return "E_PARAM";
    }
  }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace achron
