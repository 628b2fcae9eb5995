#include "herd/rational.hpp"

#include <cctype>
#include <ostream>

#include "herd/errors.hpp"

namespace herd {

namespace {

mpq_class canonical(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw InvalidInputError("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Rational::Rational(long num, long den) : value_(canonical(Integer(num), Integer(den))) {}

Rational::Rational(const Integer& num, const Integer& den) : value_(canonical(num, den)) {}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const auto is_integer_token = [](std::string_view tok, bool allow_sign) {
    if (tok.empty()) return false;
    size_t i = 0;
    if (allow_sign && (tok[0] == '-' || tok[0] == '+')) i = 1;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    }
    return true;
  };

  const size_t slash = text.find('/');
  std::string_view num_tok = text.substr(0, slash == std::string_view::npos ? text.size() : slash);
  if (!is_integer_token(num_tok, /*allow_sign=*/true)) return std::nullopt;

  Integer num(std::string(num_tok), 10);
  if (slash == std::string_view::npos) return Rational(num, Integer(1));

  std::string_view den_tok = text.substr(slash + 1);
  if (!is_integer_token(den_tok, /*allow_sign=*/false)) return std::nullopt;
  Integer den(std::string(den_tok), 10);
  if (sgn(den) <= 0) return std::nullopt;
  return Rational(num, den);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
  if (is_zero()) throw InvalidInputError("reciprocal of zero");
  return Rational(denominator(), numerator());
}

std::string Rational::str() const {
  return is_integer() ? value_.get_num().get_str() : value_.get_str();
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.value_ = -r.value_;
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
  if (rhs.is_zero()) throw InvalidInputError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace herd
