#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"

#include "chromalg/errors.hpp"
#include "chromalg/laurent.hpp"
#include "chromalg/rational.hpp"

using namespace chromalg;
using namespace testutil;

namespace {

LaurentPolynomial random_poly(Var v, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(-4, 4);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> count(0, 4);
  LaurentPolynomial p(v);
  const int k = count(rng);
  for (int i = 0; i < k; ++i) p += LaurentPolynomial::monomial(v, exp(rng), Rational(coef(rng), den(rng)));
  return p;
}

}  // namespace

TEST_CASE("rational normal form and parsing") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7").is_integer());
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rationals stay exact beyond machine integers") {
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1000003);
  Rational back = big;
  for (int i = 0; i < 40; ++i) back /= Rational(1000003);
  CHECK(back == Rational(1));
}

TEST_CASE("polynomial arithmetic examples") {
  CHECK((Qp("Q") + Qp("-Q")).is_zero());
  const auto d3 = qp("q + 1 + q^-1");
  CHECK(d3 * d3 == qp("q^2 + 2*q + 3 + 2*q^-1 + q^-2"));
  CHECK(LaurentPolynomial::constant(Var::q, Rational(1)) * d3 == d3);
  CHECK(d3.str() == "q^1 + 1 + q^-1");
}

TEST_CASE("text rendering and machine form") {
  const auto p = Qp("Q^3 - 3*Q^2 + 2*Q");
  CHECK(p.str() == "Q^3 - 3*Q^2 + 2*Q^1");
  CHECK(p.to_json() == "[[3,1,1],[2,-3,1],[1,2,1]]");
  CHECK(parse_polynomial_json(p.to_json(), Var::Q) == p);
  CHECK(parse_polynomial(p.str()) == p);
  CHECK(LaurentPolynomial(Var::d).str() == "0");
  CHECK(dp("1/2*d^-1").str() == "1/2*d^-1");
}

TEST_CASE("parse errors carry a column") {
  try {
    parse_polynomial("q + + 1", Var::q);
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() > 1);
  }
  CHECK_THROWS_AS(parse_polynomial("A^2", Var::q), ParseError);
}

TEST_CASE("substitutions between parameters") {
  CHECK(Qp("Q").substitute(Var::A) == Ap("A^4 + 2 + A^-4"));
  CHECK(dp("d").substitute(Var::A) == Ap("-A^2 - A^-2"));
  CHECK(qp("q + 1 + q^-1").substitute(Var::A) == Ap("A^4 + 1 + A^-4"));
  CHECK(Qp("Q").substitute(Var::d) == dp("d^2"));
  CHECK(Qp("Q").substitute(Var::q) == qp("q + 2 + q^-1"));
  CHECK_THROWS_AS(poly("x", Var::x).substitute(Var::A), std::invalid_argument);
  CHECK_FALSE(can_substitute(Var::A, Var::Q));
}

TEST_CASE("evaluation") {
  const auto p = Qp("Q^3 - 3*Q^2 + 2*Q");
  CHECK(p.evaluate(Rational(3)) == Rational(6));
  const double b5 = 2 + 2 * std::cos(2 * M_PI / 5);
  CHECK(Qp("Q").eval_real(b5) == doctest::Approx(2.6180339887).epsilon(1e-10));
  CHECK(Qp("1").eval_real(17.5) == 1.0);
  CHECK_THROWS_AS(Qp("Q^-1").eval_real(0.0), std::domain_error);
}

TEST_CASE("exact division") {
  const auto p = Qp("Q^3 - 3*Q^2 + 2*Q");
  CHECK(p.divide_exact(Qp("Q")) == Qp("Q^2 - 3*Q + 2"));
  CHECK(p.divide_exact(Qp("Q - 1")) == Qp("Q^2 - 2*Q"));
  CHECK_THROWS_AS(p.divide_exact(Qp("Q + 5")), std::domain_error);
  CHECK(Ap("A^8 - A^-8").divide_exact(Ap("A^4 - A^-4")) == Ap("A^4 + A^-4"));
}

TEST_CASE("variable mismatch is rejected") {
  CHECK_THROWS_AS(Qp("Q") + dp("d"), VariableMismatch);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(Var::Q, rng);
    const auto b = random_poly(Var::Q, rng);
    const auto c = random_poly(Var::Q, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_poly(Var::q, rng);
    const auto b = random_poly(Var::q, rng);
    CHECK((a * b).substitute(Var::A) == a.substitute(Var::A) * b.substitute(Var::A));
    CHECK((a + b).substitute(Var::A) == a.substitute(Var::A) + b.substitute(Var::A));
  }
  for (int i = 0; i < 100; ++i) {
    auto p = random_poly(Var::Q, rng);
    // Negative powers of Q have no Laurent image; keep a polynomial.
    LaurentPolynomial pos(Var::Q);
    for (const auto& [e, c] : p.terms()) pos += LaurentPolynomial::monomial(Var::Q, e < 0 ? -e : e, c);
    CHECK(pos.substitute(Var::d).substitute(Var::A) == pos.substitute(Var::A));
    CHECK(pos.substitute(Var::q).substitute(Var::A) == pos.substitute(Var::A));
  }
}
