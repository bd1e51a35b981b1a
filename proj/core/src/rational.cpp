#include "ocad/rational.hpp"

#include <ostream>

#include "ocad/errors.hpp"

namespace ocad {

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw InvalidArgument("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::fromString(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  mpz_class num, den(1);
  auto parseInt = [](const std::string& part, mpz_class& out) {
    if (part.empty() || out.set_str(part, 10) != 0) {
      throw InvalidArgument("malformed rational '" + part + "'");
    }
  };
  if (slash == std::string::npos) {
    parseInt(s, num);
  } else {
    parseInt(s.substr(0, slash), num);
    parseInt(s.substr(slash + 1), den);
  }
  return Rational(num, den);
}

Rational Rational::inverse() const {
  if (isZero()) throw InvalidArgument("division by zero");
  return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw InvalidArgument("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::toFraction() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::toString() const {
  return isInteger() ? value_.get_num().get_str() : toFraction();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.toString(); }

}  // namespace ocad
