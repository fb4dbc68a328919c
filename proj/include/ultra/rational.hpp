#ifndef ULTRA_RATIONAL_HPP
#define ULTRA_RATIONAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace ultra {

__extension__ using int128 = __int128;

// Exact rational with 64-bit numerator and denominator. Always normalized:
// gcd(num, den) == 1 and den > 0. Comparisons cross-multiply in 128 bits, so
// they never overflow; no arithmetic beyond what the library needs is offered.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_positive() const noexcept { return num_ > 0; }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  /// Accepts "p" or "p/q" with optional leading '-'. Rejects decimals,
  /// exponents, whitespace and zero denominators.
  static Rational parse(std::string_view text);

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const int128 lhs = static_cast<int128>(a.num_) * b.den_;
    const int128 rhs = static_cast<int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ultra

template <>
struct std::hash<ultra::Rational> {
  std::size_t operator()(const ultra::Rational& r) const noexcept {
    const auto h1 = std::hash<std::int64_t>{}(r.num());
    const auto h2 = std::hash<std::int64_t>{}(r.den());
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};

#endif  // ULTRA_RATIONAL_HPP
