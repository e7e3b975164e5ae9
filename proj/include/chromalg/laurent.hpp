#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chromalg/rational.hpp"

namespace chromalg {

/// Variable tags. A is the finest variable: q = A^4, d = -A^2 - A^-2,
/// Q = q + 2 + q^-1 = d^2. x (the Potts Boltzmann factor) converts to nothing.
enum class Var { A, q, d, Q, x };

char var_symbol(Var v);
Var var_from_symbol(char c);  // throws std::invalid_argument

/// Raised when two polynomials in different variables meet in one operation.
class VariableMismatch : public std::invalid_argument {
 public:
  VariableMismatch(Var a, Var b);
};

/// Exact univariate Laurent polynomial with rational coefficients.
/// Zero coefficients are never stored, so equality is term-map equality.
class LaurentPolynomial {
 public:
  using Terms = std::map<int, Rational>;

  explicit LaurentPolynomial(Var var = Var::Q) : var_(var) {}
  LaurentPolynomial(Var var, Terms terms);

  static LaurentPolynomial constant(Var var, const Rational& c);
  static LaurentPolynomial monomial(Var var, int exponent, const Rational& c = Rational(1));
  /// The variable itself.
  static LaurentPolynomial variable(Var var) { return monomial(var, 1); }

  Var var() const { return var_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Rational coefficient(int exponent) const;
  /// Highest / lowest exponent present. Throws on the zero polynomial.
  int max_exponent() const;
  int min_exponent() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Rational& c);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
  friend LaurentPolynomial operator*(const Rational& c, LaurentPolynomial a) { return a *= c; }
  LaurentPolynomial operator-() const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

  /// Multiplies by var^k.
  LaurentPolynomial shifted(int k) const;
  /// Non-negative powers always; negative powers only for monomials.
  LaurentPolynomial pow(int exponent) const;

  /// Exact division. Throws std::domain_error when the divisor does not
  /// divide this polynomial in the Laurent ring.
  LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const;

  /// Image under the fixed parameter substitutions (see Var). Negative powers
  /// are only allowed when the image of the variable is a monomial.
  LaurentPolynomial substitute(Var target) const;

  Rational evaluate(const Rational& value) const;
  double eval_real(double value) const;

  /// Text form, e.g. "q^1 + 1 + q^-1"; terms in descending exponent order.
  std::string str() const;
  /// Machine form: [[exponent, numerator, denominator], ...], descending.
  std::string to_json() const;

 private:
  void add_term(int exponent, const Rational& c);
  void require_same_var(const LaurentPolynomial& o) const;

  Var var_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

/// True when a conversion path from `from` to `to` exists.
bool can_substitute(Var from, Var to);

/// Image of the variable `from` expressed in `to`.
LaurentPolynomial variable_image(Var from, Var to);

/// Parses the text form. When `expected` is set, a different variable
/// symbol is a parse error; otherwise the symbol found (or Q, if the input is
/// a constant) is used. Columns in errors are 1-based offsets into `text`.
LaurentPolynomial parse_polynomial(std::string_view text, std::optional<Var> expected = std::nullopt);

/// Parses the machine form for a known variable.
LaurentPolynomial parse_polynomial_json(std::string_view text, Var var);

}  // namespace chromalg
