#include "arrprod/rational.hpp"

#include <cctype>
#include <ostream>

#include "arrprod/error.hpp"

namespace arrprod {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroTriple: return "ZeroTriple";
    case ErrorCode::DegenerateLine: return "DegenerateLine";
    case ErrorCode::EqualLines: return "EqualLines";
    case ErrorCode::LineAtInfinity: return "LineAtInfinity";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidArrangement: return "InvalidArrangement";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::SharedLine: return "SharedLine";
    case ErrorCode::BadOrdering: return "BadOrdering";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooFewComponents: return "TooFewComponents";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateLine: return "DuplicateLine";
    case ErrorCode::MixedKinds: return "MixedKinds";
    case ErrorCode::LabelNotFound: return "LabelNotFound";
    case ErrorCode::DegenerateWindow: return "DegenerateWindow";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (sgn(denominator) == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto fail = [&] {
    return Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  };
  std::string_view num = text;
  std::string_view den;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den)) throw fail();
  }
  std::string_view digits = num;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits)) throw fail();

  Integer n(std::string(num), 10);
  Integer d = den.empty() ? Integer(1) : Integer(std::string(den), 10);
  if (sgn(d) == 0) throw fail();
  return Rational(n, d);
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace arrprod
