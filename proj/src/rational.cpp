#include "cremona/rational.hpp"

#include <cctype>
#include <cstdio>

#include "cremona/error.hpp"

namespace cremona {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorCode::NotOnHyperboloid: return "NotOnHyperboloid";
    case ErrorCode::InvalidPair: return "InvalidPair";
    case ErrorCode::DegenerateSegment: return "DegenerateSegment";
    case ErrorCode::InvalidCharacteristic: return "InvalidCharacteristic";
    case ErrorCode::MissingResolutionData: return "MissingResolutionData";
    case ErrorCode::UnsupportedClassSupport: return "UnsupportedClassSupport";
    case ErrorCode::BasePointCollision: return "BasePointCollision";
    case ErrorCode::NotInKPerp: return "NotInKPerp";
    case ErrorCode::IdentityTwist: return "IdentityTwist";
    case ErrorCode::TooManyBasePoints: return "TooManyBasePoints";
    case ErrorCode::NoDecrease: return "NoDecrease";
    case ErrorCode::InvalidMetric: return "InvalidMetric";
    case ErrorCode::MalformedFamily: return "MalformedFamily";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) {
    throw Error(ErrorCode::ParseError,
                "not a rational: '" + std::string(whole) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(s, text));
  }
  const mpz_class num = parse_integer(s.substr(0, slash), text);
  const mpz_class den = parse_integer(s.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorCode::ParseError,
                "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

}  // namespace cremona
