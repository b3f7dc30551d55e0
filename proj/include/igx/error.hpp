#ifndef IGX_ERROR_HPP
#define IGX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace igx {

enum class ErrorCode {
  InvalidParameters,
  OrderBudgetExceeded,
  MalformedExpression,
  AmbientMismatch,
  NotADivisor,
  InvalidScheme,
  SearchBudgetExceeded,
  UnsupportedFormat,
  OutOfRange,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

}  // namespace igx

#endif
