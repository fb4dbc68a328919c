#include "ultra/rational.hpp"

#include "ultra/error.hpp"

#include <charconv>
#include <numeric>

namespace ultra {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::DuplicatePair: return "DuplicatePair";
    case ErrorKind::MissingPair: return "MissingPair";
    case ErrorKind::SelfPair: return "SelfPair";
    case ErrorKind::NonPositiveDistance: return "NonPositiveDistance";
    case ErrorKind::TriangleViolation: return "TriangleViolation";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::EmptyBall: return "EmptyBall";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::TrivialBall: return "TrivialBall";
    case ErrorKind::NotAnIsometry: return "NotAnIsometry";
    case ErrorKind::ConditionAViolated: return "ConditionAViolated";
    case ErrorKind::MismatchedDegreeFunction: return "MismatchedDegreeFunction";
    case ErrorKind::PermutationOutOfRange: return "PermutationOutOfRange";
    case ErrorKind::ProductTooLarge: return "ProductTooLarge";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotDecomposable: return "NotDecomposable";
    case ErrorKind::DepthOutOfRange: return "DepthOutOfRange";
    case ErrorKind::PoolTooShallow: return "PoolTooShallow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  if (num == INT64_MIN || den == INT64_MIN)
    throw Error(ErrorKind::InvalidArgument, "rational component out of range");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw Error(ErrorKind::Parse, "malformed rational \"" + std::string(whole) + "\"");
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  // from_chars accepts a leading '-' but not '+'; digits only otherwise.
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range)
    throw Error(ErrorKind::Parse, "rational component out of range in \"" + std::string(whole) + "\"");
  if (ec != std::errc() || ptr != last)
    throw Error(ErrorKind::Parse, "malformed rational \"" + std::string(whole) + "\"");
  return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text), 1);
  const auto num = parse_integer(text.substr(0, slash), text);
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-')
    throw Error(ErrorKind::Parse, "denominator must be positive in \"" + std::string(text) + "\"");
  const auto den = parse_integer(den_text, text);
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in \"" + std::string(text) + "\"");
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ultra
