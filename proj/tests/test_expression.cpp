#include <doctest.h>

#include "gwis/error.hpp"
#include "gwis/expression.hpp"
#include "gwis/format.hpp"
#include "gwis/strata.hpp"
#include "support/generators.hpp"

using namespace gwis;

namespace {

Rational Q(const char* s) { return *parse_rational(s); }

}  // namespace

TEST_CASE("rationals print in lowest terms with a positive denominator") {
  CHECK(to_string(Rational(6, -8)) == "-3/4");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(*parse_rational("2/4") == Rational(1, 2));
  CHECK_FALSE(parse_rational("1/0"));
  CHECK_FALSE(parse_rational("1/"));
  CHECK_FALSE(parse_rational("x"));
}

TEST_CASE("scalar arithmetic is exact linear-form arithmetic") {
  Scalar a = Scalar::unknown(2) + Scalar::unknown(4, Q("1/3"));
  Scalar b = Scalar::unknown(4, Q("-1/3")) + Scalar(Q("5/7"));
  Scalar sum = a + b;
  CHECK(sum == Scalar::unknown(2) + Scalar(Q("5/7")));
  CHECK(sum.unknowns().size() == 1);
  CHECK((a - a).is_zero());
  CHECK(a * Scalar(Q("3")) == Scalar::unknown(2, 3) + Scalar::unknown(4, 1));
  CHECK_THROWS_AS(a * b, DomainError);
}

TEST_CASE("evaluate substitutes the tabulated coefficients") {
  const auto table = testing::published_table();
  CHECK(evaluate(Scalar::unknown(2) + Scalar::unknown(4), table) == 0);
  Scalar eq2 = Scalar::unknown(3, 3) - Scalar::unknown(4) + Scalar::unknown(6, Q("1/24"));
  CHECK(evaluate(eq2, table) == 0);
  // -6/504 - 35/504 + 41/504
  CHECK(3 * table.at(3) == Q("-6/504"));
  CHECK(-table.at(4) == Q("-35/504"));
  CHECK(table.at(6) / 24 == Q("41/504"));
  CHECK(evaluate(Scalar(Q("7/3")), {}) == Q("7/3"));
}

TEST_CASE("evaluate names the missing unknown") {
  try {
    evaluate(Scalar::unknown(1) + Scalar::unknown(17), {{1, Rational(1)}});
    FAIL("expected MissingUnknownError");
  } catch (const MissingUnknownError& e) {
    CHECK(e.index() == 17);
    CHECK(std::string(e.what()).find("c17") != std::string::npos);
  }
}

TEST_CASE("combine cancels and keeps linear-form coefficients") {
  Expression e = parse_expression("<x^3>_3 + 1/2*<x mu mu>");
  CHECK(combine(Scalar(1), e, Scalar(-1), e).empty());

  Expression two = Expression::of(basis(2)), four = Expression::of(basis(4));
  Expression c = combine(Scalar::unknown(2), two, Scalar::unknown(4), four);
  CHECK(c.size() == 2);
  CHECK(coefficient_of(c, basis(2)) == Scalar::unknown(2));
  CHECK(coefficient_of(c, basis(4)) == Scalar::unknown(4));
}

TEST_CASE("coefficient_of is zero on absent terms and on the empty expression") {
  CHECK(coefficient_of(Expression{}, basis(5)).is_zero());
  CHECK(coefficient_of(generic_E(), basis(1)) == Scalar::unknown(1));
}

TEST_CASE("symmetrize_ij averages a term with its mirror image") {
  Term t = parse_term("<x i mu><j b b><mu^1>_2");
  Expression s = symmetrize_ij(Expression::of(t));
  CHECK(s.size() == 2);
  CHECK(coefficient_of(s, t) == Scalar(Rational(1, 2)));
  CHECK(coefficient_of(s, swap_ij(t)) == Scalar(Rational(1, 2)));

  Expression sym = parse_expression("<x i a><j a>_1 + <x j a><i a>_1");
  CHECK(symmetrize_ij(sym) == sym);
}

TEST_CASE("expression arithmetic is bilinear and coefficient_of is linear") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 500; ++n) {
    Expression e1 = testing::random_expression(rng), e2 = testing::random_expression(rng);
    Scalar a = Scalar(testing::random_rational(rng)), b = Scalar(testing::random_rational(rng));
    Expression c = combine(a, e1, b, e2);
    for (const auto* src : {&e1, &e2})
      for (const auto& [t, s] : src->terms())
        REQUIRE(coefficient_of(c, t) == a * coefficient_of(e1, t) + b * coefficient_of(e2, t));
    for (const auto& [t, s] : c.terms()) {
      REQUIRE(is_canonical(t));
      REQUIRE_FALSE(s.is_zero());
    }
    Expression sym = symmetrize_ij(e1);
    REQUIRE(symmetrize_ij(sym) == sym);
    REQUIRE(swap_ij(sym) == sym);
  }
}
