#include "chromalg/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace chromalg {

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (sgn(value_.get_den()) == 0) throw std::invalid_argument("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    std::string str(s);
    if (!str.empty() && str.front() == '+') str.erase(0, 1);
    if (str.empty() || str == "-") throw std::invalid_argument("malformed integer literal");
    for (std::size_t i = (str.front() == '-' ? 1 : 0); i < str.size(); ++i) {
      if (str[i] < '0' || str[i] > '9') throw std::invalid_argument("malformed integer literal '" + str + "'");
    }
    return mpz_class(str, 10);
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const mpz_class num = parse_int(text.substr(0, slash));
  const mpz_class den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw std::domain_error("zero raised to a negative power");
    return Rational(1) / pow(-exponent);
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace chromalg
