#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace herd {

using Integer = mpz_class;

/// Arbitrary-precision rational, always in canonical form:
/// denominator > 0 and gcd(|numerator|, denominator) = 1.
///
/// All arithmetic is exact; there is deliberately no conversion to or from
/// floating point. Sign tests and equality are therefore decidable.
class Rational {
public:
  Rational() : value_(0) {}
  Rational(int n) : value_(n) {}  // NOLINT: implicit by design for literals
  Rational(long n) : value_(n) {}
  explicit Rational(const Integer& n) : value_(n) {}
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);

  /// Parses "p" or "p/q" with q > 0 after an optional leading sign on p.
  /// Decimal or exponent notation is rejected.
  static std::optional<Rational> parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  Rational reciprocal() const;

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return mpq_equal(lhs.value_.get_mpq_t(), rhs.value_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}
  mpq_class value_;
};

using RationalVector = std::vector<Rational>;

const Rational& max(const Rational& a, const Rational& b);
const Rational& min(const Rational& a, const Rational& b);

}  // namespace herd
