#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cremona {

enum class ErrorCode {
  UnknownPoint,
  InvalidConfiguration,
  NotOnHyperboloid,
  InvalidPair,
  DegenerateSegment,
  InvalidCharacteristic,
  MissingResolutionData,
  UnsupportedClassSupport,
  BasePointCollision,
  NotInKPerp,
  IdentityTwist,
  TooManyBasePoints,
  NoDecrease,
  InvalidMetric,
  MalformedFamily,
  IndexOutOfRange,
  WrongArity,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cremona
