#include <doctest.h>

#include <algorithm>

#include "gwis/error.hpp"
#include "gwis/format.hpp"
#include "gwis/strata.hpp"
#include "support/generators.hpp"

using namespace gwis;

TEST_CASE("plain printing round-trips the top stratum") {
  Expression e = parse_expression("<x^3>_3");
  CHECK(print(e, Format::plain) == "<x^3>_3");
  CHECK(parse_expression(print(e, Format::plain)) == e);
}

TEST_CASE("latex rendering of stratum 5") {
  CHECK(print_term(basis(5), Format::latex) ==
        "\\< \\partial^x \\partial^{d1} \\partial^{d2} \\> \\< \\partial^{d1}_1 \\partial^{d2} \\>_2");
}

TEST_CASE("coefficients, signs and linear forms parse") {
  Expression e = parse_expression("-<x^3>_3 + (c1 - 2/3*c4)*<x mu mu> - 1/2*<x a b><a b>_1");
  CHECK(e.size() == 3);
  CHECK(coefficient_of(e, parse_term("<x^3>_3")) == Scalar(-1));
  CHECK(coefficient_of(e, parse_term("<x nu nu>")) ==
        Scalar::unknown(1) + Scalar::unknown(4, Rational(-2, 3)));
  CHECK(coefficient_of(e, parse_term("<x p q><q p>_1")) == Scalar(Rational(-1, 2)));
  CHECK(parse_expression("c7*<x mu mu>") == Expression::of(parse_term("<x a a>"), Scalar::unknown(7)));
}

TEST_CASE("zero, comments and separators") {
  CHECK(parse_expression("0").empty());
  CHECK(parse_expression("<x^3>_3 - <x^3>_3").empty());
  CHECK(parse_expression("0*<x a a>").empty());
  CHECK(print(Expression{}, Format::plain) == "0");
  CHECK(parse_expression("# leading comment\n<x, a, a>  # trailing\n") == parse_expression("<x a a>"));
}

TEST_CASE("parse_summands keeps source order and zero coefficients") {
  auto s = parse_summands("0*<x a a> + <x^3>_3 - 2*<x a a>");
  REQUIRE(s.size() == 3);
  CHECK(s[0].coefficient.is_zero());
  CHECK(s[1].term.correlators.at(0).genus == 3);
  CHECK(s[2].coefficient == Scalar(-2));
  CHECK(s[2].offset > s[1].offset);
}

TEST_CASE("syntax errors carry position and expected tokens") {
  try {
    parse_expression("<x^3>_3 + <x a");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 14);
    CHECK(e.line() == 1);
    CHECK(e.column() == 15);
    CHECK(std::find(e.expected().begin(), e.expected().end(), "\">\"") != e.expected().end());
  }
  try {
    parse_expression("<x a a>\n  + ?");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse_expression(""), ParseError);
  CHECK_THROWS_AS(parse_expression("c31*<x a a>"), ParseError);
  CHECK_THROWS_AS(parse_expression("1/0*<x a a>"), ParseError);
  CHECK_THROWS_AS(parse_expression("<x a a> <"), ParseError);
}

TEST_CASE("contraction violations are reported as validation errors") {
  CHECK_THROWS_AS(parse_expression("<x a>"), ValidationError);
  CHECK_THROWS_AS(parse_expression("<x a a a>"), ValidationError);
  CHECK_THROWS_AS(parse_expression("<x a a> + <x b>_1"), ValidationError);
}

TEST_CASE("json output has the documented schema") {
  std::string j = print(parse_expression("(1/2*c3)*<x mu mu>"), Format::json);
  CHECK(j ==
        R"({"terms":[{"scalar":{"const":"0","unknowns":{"3":"1/2"}},"correlators":)"
        R"([{"genus":0,"insertions":[{"label":"x","psi":0},{"label":"d1","psi":0},{"label":"d1","psi":0}]}]}]})");
  CHECK(parse_expression_json(j) == parse_expression("(1/2*c3)*<x mu mu>"));
}

TEST_CASE("malformed json is rejected") {
  CHECK_THROWS_AS(parse_expression_json("{"), ParseError);
  CHECK_THROWS_AS(parse_expression_json("[]"), ParseError);
  CHECK_THROWS_AS(parse_expression_json(R"({"terms":[{"scalar":{"const":"1/0"},"correlators":[]}]})"), ParseError);
  CHECK_THROWS_AS(
      parse_expression_json(
          R"({"terms":[{"scalar":{"const":"1"},"correlators":[{"genus":0,"insertions":[{"label":"x","psi":0},{"label":"a","psi":0}]}]}]})"),
      ValidationError);
}

TEST_CASE("random expressions survive every printer") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 2000; ++n) {
    Expression e = testing::random_expression(rng);
    REQUIRE(parse_expression(print(e, Format::plain)) == e);
    REQUIRE(parse_expression_json(print(e, Format::json)) == e);
  }
}

TEST_CASE("arbitrary bytes never crash the parser") {
  std::mt19937_64 rng(5);
  const std::string alphabet = "<>^_*+-/()c0123456789xijamu ,#\n";
  for (int n = 0; n < 20000; ++n) {
    std::string s(rng() % 24, ' ');
    for (auto& ch : s)
      ch = n % 2 ? alphabet[rng() % alphabet.size()] : static_cast<char>(rng() % 256);
    try {
      (void)parse_expression(s);
    } catch (const Error&) {
    }
    try {
      (void)parse_expression_json(s);
    } catch (const Error&) {
    }
  }
}
