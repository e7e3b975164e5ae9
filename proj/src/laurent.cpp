#include "chromalg/laurent.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chromalg/errors.hpp"

namespace chromalg {

char var_symbol(Var v) {
  switch (v) {
    case Var::A: return 'A';
    case Var::q: return 'q';
    case Var::d: return 'd';
    case Var::Q: return 'Q';
    case Var::x: return 'x';
  }
  return '?';
}

Var var_from_symbol(char c) {
  switch (c) {
    case 'A': return Var::A;
    case 'q': return Var::q;
    case 'd': return Var::d;
    case 'Q': return Var::Q;
    case 'x': return Var::x;
    default: throw std::invalid_argument(std::string("unknown variable '") + c + "'");
  }
}

VariableMismatch::VariableMismatch(Var a, Var b)
    : std::invalid_argument(std::string("variable mismatch: ") + var_symbol(a) + " vs " + var_symbol(b)) {}

LaurentPolynomial::LaurentPolynomial(Var var, Terms terms) : var_(var) {
  for (auto& [e, c] : terms) add_term(e, c);
}

LaurentPolynomial LaurentPolynomial::constant(Var var, const Rational& c) { return monomial(var, 0, c); }

LaurentPolynomial LaurentPolynomial::monomial(Var var, int exponent, const Rational& c) {
  LaurentPolynomial p(var);
  p.add_term(exponent, c);
  return p;
}

bool LaurentPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("exponent of the zero polynomial");
  return terms_.begin()->first;
}

void LaurentPolynomial::add_term(int exponent, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void LaurentPolynomial::require_same_var(const LaurentPolynomial& o) const {
  if (var_ != o.var_) throw VariableMismatch(var_, o.var_);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  require_same_var(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  require_same_var(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.require_same_var(b);
  LaurentPolynomial out(a.var_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  *this = *this * o;
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out(var_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial out(var_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(int exponent) const {
  if (exponent < 0) {
    if (!is_monomial()) throw std::domain_error("negative power of a non-monomial Laurent polynomial");
    const auto& [e, c] = *terms_.begin();
    return monomial(var_, e * exponent, c.pow(exponent));
  }
  LaurentPolynomial result = constant(var_, 1);
  LaurentPolynomial base = *this;
  unsigned k = static_cast<unsigned>(exponent);
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
  require_same_var(divisor);
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (is_zero()) return LaurentPolynomial(var_);
  // Long division from the top; the quotient's exponents are bounded below by
  // min(this) - min(divisor) in any exact Laurent division.
  const int lead_exp = divisor.max_exponent();
  const Rational lead = divisor.terms_.rbegin()->second;
  const int floor = min_exponent() - divisor.min_exponent();
  LaurentPolynomial remainder = *this;
  LaurentPolynomial quotient(var_);
  while (!remainder.is_zero()) {
    const int e = remainder.max_exponent() - lead_exp;
    if (e < floor) throw std::domain_error("polynomial division is not exact");
    const Rational c = remainder.terms_.rbegin()->second / lead;
    quotient.add_term(e, c);
    remainder -= divisor.shifted(e) * c;
  }
  return quotient;
}

bool can_substitute(Var from, Var to) {
  if (from == to) return true;
  switch (from) {
    case Var::Q: return to == Var::d || to == Var::q || to == Var::A;
    case Var::d: return to == Var::A;
    case Var::q: return to == Var::A;
    default: return false;
  }
}

LaurentPolynomial variable_image(Var from, Var to) {
  if (!can_substitute(from, to)) {
    throw std::invalid_argument(std::string("no conversion path from ") + var_symbol(from) + " to " +
                                var_symbol(to));
  }
  if (from == to) return LaurentPolynomial::variable(to);
  using P = LaurentPolynomial;
  if (from == Var::Q && to == Var::d) return P::monomial(Var::d, 2);
  if (from == Var::Q && to == Var::q) return P(Var::q, {{1, 1}, {0, 2}, {-1, 1}});
  if (from == Var::Q && to == Var::A) return P(Var::A, {{4, 1}, {0, 2}, {-4, 1}});
  if (from == Var::d && to == Var::A) return P(Var::A, {{2, -1}, {-2, -1}});
  return P::monomial(Var::A, 4);  // q -> A
}

LaurentPolynomial LaurentPolynomial::substitute(Var target) const {
  if (target == var_) return *this;
  const LaurentPolynomial image = variable_image(var_, target);
  LaurentPolynomial out(target);
  if (terms_.empty()) return out;
  if (min_exponent() < 0 && !image.is_monomial()) {
    throw std::domain_error(std::string("negative powers of ") + var_symbol(var_) + " have no Laurent image in " +
                            var_symbol(target));
  }
  if (image.is_monomial()) {
    const auto& [ie, ic] = *image.terms_.begin();
    for (const auto& [e, c] : terms_) out.add_term(ie * e, c * ic.pow(e));
    return out;
  }
  // Horner in the image polynomial, highest exponent first.
  int current = max_exponent();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    while (current > it->first) {
      out *= image;
      --current;
    }
    out += constant(target, it->second);
  }
  while (current > 0) {
    out *= image;
    --current;
  }
  return out;
}

Rational LaurentPolynomial::evaluate(const Rational& value) const {
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    if (e < 0 && value.is_zero()) throw std::domain_error("evaluation at zero with negative exponents");
    total += c * value.pow(e);
  }
  return total;
}

double LaurentPolynomial::eval_real(double value) const {
  if (value == 0.0 && !terms_.empty() && min_exponent() < 0) {
    throw std::domain_error("evaluation at zero with negative exponents");
  }
  double total = 0.0;
  for (const auto& [e, c] : terms_) total += c.to_double() * std::pow(value, e);
  return total;
}

std::string LaurentPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    const Rational& c = it->second;
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != Rational(1)) out += magnitude.str() + "*";
    out += var_symbol(var_);
    out += "^" + std::to_string(e);
  }
  return out;
}

std::string LaurentPolynomial::to_json() const {
  std::string out = "[";
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out += ",";
    first = false;
    out += "[" + std::to_string(it->first) + "," + it->second.numerator().get_str() + "," +
           it->second.denominator().get_str() + "]";
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.str(); }

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::optional<Var> expected) : text_(text), var_(expected) {}

  LaurentPolynomial run() {
    std::vector<std::pair<int, Rational>> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [e, c] = term();
      terms.emplace_back(e, sign < 0 ? -c : c);
      skip_ws();
    }
    LaurentPolynomial out(var_.value_or(Var::Q));
    for (const auto& [e, c] : terms) out += LaurentPolynomial::monomial(out.var(), e, c);
    return out;
  }

 private:
  std::pair<int, Rational> term() {
    Rational coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      have_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
      } else {
        return {0, coeff};
      }
    }
    if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) {
      fail(have_coeff ? "expected variable after '*'" : "expected coefficient or variable");
    }
    Var v;
    try {
      v = var_from_symbol(peek());
    } catch (const std::invalid_argument& ex) {
      fail(ex.what());
    }
    if (var_ && *var_ != v) fail(std::string("unexpected variable '") + peek() + "'");
    var_ = v;
    ++pos_;
    int exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      exponent = integer();
    }
    return {exponent, coeff};
  }

  Rational rational() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
    try {
      return Rational::parse(text_.substr(start, pos_ - start));
    } catch (const std::exception& ex) {
      pos_ = start;
      fail(ex.what());
    }
  }

  int integer() {
    const std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (digits == pos_) fail("expected integer exponent");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

  std::string_view text_;
  std::optional<Var> var_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial parse_polynomial(std::string_view text, std::optional<Var> expected) {
  return PolyParser(text, expected).run();
}

LaurentPolynomial parse_polynomial_json(std::string_view text, Var var) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(ex.what(), 1, ex.byte);
  }
  if (!j.is_array()) throw ParseError("expected a JSON array of [exponent, numerator, denominator]", 1, 1);
  LaurentPolynomial out(var);
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw ParseError("each term must be [exponent, numerator, denominator]", 1, 1);
    const int e = t[0].get<int>();
    auto as_string = [](const nlohmann::json& v) {
      return v.is_string() ? v.get<std::string>() : v.dump();
    };
    const mpz_class num(as_string(t[1]), 10);
    const mpz_class den(as_string(t[2]), 10);
    if (den <= 0) throw ParseError("denominator must be positive", 1, 1);
    out += LaurentPolynomial::monomial(var, e, Rational(mpq_class(num, den)));
  }
  return out;
}

}  // namespace chromalg
