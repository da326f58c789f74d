#include <doctest.h>

#include "biforms/forms.hpp"
#include "biforms/parse.hpp"
#include "biforms/sampling.hpp"

using namespace biforms;

namespace {

MPoly bi(std::string_view text) { return parse_form(text, Ring::Bi); }
MPoly binary(std::string_view text) { return parse_form(text, Ring::Binary); }

}  // namespace

TEST_CASE("rational literals are canonical") {
  CHECK(parse_rat("6/4") == Rat(3, 2));
  CHECK(parse_rat("-0/5") == 0);
  CHECK(parse_rat("0").get_den() == 1);
  CHECK_THROWS_AS(parse_rat("1/0"), std::domain_error);
  CHECK_THROWS_AS(parse_rat("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(5) == 120);
}

TEST_CASE("parse_form") {
  SUBCASE("the transitive (1,6) curve") {
    const MPoly c = bi("X1*Y2^2 + Y1*X2^2");
    CHECK(c.size() == 2);
    CHECK(c.coefficient({1, 0, 0, 2}) == 1);
    CHECK(c.coefficient({0, 1, 2, 0}) == 1);
  }
  SUBCASE("zero literal") { CHECK(binary("0").is_zero()); }
  SUBCASE("rational coefficients") {
    const MPoly p = binary("3/7*X^2*Y - X*Y^2");
    CHECK(p.size() == 2);
    CHECK(p.coefficient({2, 1, 0, 0}) == Rat(3, 7));
    CHECK(p.coefficient({1, 2, 0, 0}) == -1);
  }
  SUBCASE("precedence and unary minus") {
    CHECK(binary("-X^2") == -binary("X*X"));
    CHECK(binary("2*X^2") == binary("X^2 + X^2"));
    CHECK(binary("(X + Y)^2") == binary("X^2 + 2*X*Y + Y^2"));
    CHECK(binary("X - -Y") == binary("X + Y"));
    CHECK(binary("  X * ( Y - 1/2 ) ") == binary("X*Y - 1/2*X"));
  }
  SUBCASE("errors carry a position") {
    try {
      (void)binary("X + Q");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(binary("X1"), ParseError);
    CHECK_THROWS_AS(binary("2X"), ParseError);
    CHECK_THROWS_AS(binary("X Y"), ParseError);
    CHECK_THROWS_AS(binary("X*(Y"), ParseError);
    CHECK_THROWS_AS(binary("X^"), ParseError);
    CHECK_THROWS_AS(binary("X^-1"), ParseError);
    CHECK_THROWS_AS(binary("1/0*X"), ParseError);
    CHECK_THROWS_AS(binary(""), ParseError);
    CHECK_THROWS_AS(binary("X +"), ParseError);
  }
}

TEST_CASE("printing is canonical and round-trips") {
  CHECK(to_string(binary("Y^2 - X*Y*3/7 + X^2")) == "X^2 - 3/7*X*Y + Y^2");
  CHECK(to_string(bi("Y1*X2^2 + X1*Y2^2")) == "X1*Y2^2 + Y1*X2^2");
  CHECK(to_string(binary("-1")) == "-1");
  CHECK(to_string(binary("0")) == "0");
  CHECK(to_string(parse_form("Z - X", Ring::Ternary)) == "-X + Z");

  Sampler sampler(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int a = sampler.integer(0, 4);
    const int b = sampler.integer(0, 6);
    BiForm f = sampler.biform(a, b);
    f = Rat(1, sampler.integer(1, 9)) * f;
    const std::string text = to_string(f.poly());
    const MPoly reparsed = parse_form(text, Ring::Bi);
    CHECK(reparsed == f.poly());
    CHECK(to_string(reparsed) == text);
  }
}

TEST_CASE("multiply") {
  CHECK(binary("X + Y") * binary("X - Y") == binary("X^2 - Y^2"));
  CHECK((binary("X + Y") * binary("0")).is_zero());
  CHECK(bi("X1*Y2^2 + Y1*X2^2") * bi("X1*Y2^2 + Y1*X2^2") ==
        bi("X1^2*Y2^4 + 2*X1*Y1*X2^2*Y2^2 + Y1^2*X2^4"));
  CHECK_THROWS_AS(multiply(binary("X"), bi("X1")), std::invalid_argument);
}

TEST_CASE("ring laws on random polynomials") {
  Sampler sampler(5);
  for (int trial = 0; trial < 100; ++trial) {
    const MPoly p = sampler.biform(sampler.integer(0, 3), sampler.integer(0, 3)).poly();
    const MPoly q = sampler.biform(sampler.integer(0, 3), sampler.integer(0, 3)).poly();
    const MPoly r = sampler.biform(sampler.integer(0, 3), sampler.integer(0, 3)).poly();
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    const MPoly dxy = differentiate(differentiate(p, "X1"), "Y2");
    const MPoly dyx = differentiate(differentiate(p, "Y2"), "X1");
    CHECK(dxy == dyx);
  }
}

TEST_CASE("differentiate") {
  CHECK(differentiate(binary("X^2*Y^6"), "Y", 2) == binary("30*X^2*Y^4"));
  CHECK(differentiate(binary("X^4"), "Y").is_zero());
  CHECK(differentiate(binary("X^6*Y^2"), "X", 2) == binary("30*X^4*Y^2"));
  CHECK(differentiate(binary("7"), "X").is_zero());
  CHECK(differentiate(bi("X1^2*X2^3"), Exponent{1, 0, 2, 0}) == bi("12*X1*X2"));
}

TEST_CASE("evaluate") {
  const std::vector<Rat> ones{1, 1};
  CHECK(evaluate(binary("X^2 - Y^2"), ones) == 0);
  const std::vector<Rat> pick{1, 0, 0, 1};
  CHECK(evaluate(bi("X1*Y2^2 + Y1*X2^2"), pick) == 1);
  const std::vector<Rat> point{7, 1};
  CHECK(evaluate(binary("3/7*X^2*Y"), point) == 21);
  CHECK_THROWS_AS(evaluate(binary("X"), pick), std::invalid_argument);
}

TEST_CASE("forms guard homogeneity") {
  CHECK_THROWS_AS(BinaryForm(2, binary("X^2 + Y")), std::invalid_argument);
  CHECK_THROWS_AS(BiForm(1, 2, bi("X1*X2^2 + Y2^2")), std::invalid_argument);
  CHECK_THROWS_AS(TernaryForm(2, parse_form("X*Y + Z", Ring::Ternary)), std::invalid_argument);
  CHECK_THROWS_AS(BinaryForm(1, bi("X1")), std::invalid_argument);

  const BinaryForm zero = BinaryForm::zero(5);
  CHECK(zero.degree() == 5);
  CHECK(zero.is_zero());
  CHECK(BiForm::parse("X1*Y2^2 + Y1*X2^2").a() == 1);
  CHECK(BiForm::parse("X1*Y2^2 + Y1*X2^2").b() == 2);
  CHECK(BinaryForm::parse("X^3 - Y^3").degree() == 3);
}

TEST_CASE("canonical bases") {
  CHECK(binary_basis(2) == std::vector<Exponent>{{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 2, 0, 0}});
  CHECK(biform_basis(1, 2).size() == 6);
  CHECK(biform_basis(1, 2).front() == Exponent{1, 0, 2, 0});
  CHECK(biform_basis(1, 2).back() == Exponent{0, 1, 0, 2});
  CHECK(ternary_basis(3).size() == 10);
  CHECK(ternary_basis(2) ==
        std::vector<Exponent>{{2, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {0, 2, 0, 0}, {0, 1, 1, 0}, {0, 0, 2, 0}});
}

TEST_CASE("binomial coordinates") {
  const auto middle = binomial_coeffs(BinaryForm::parse("10*X^3*Y^3"));
  CHECK(middle == std::vector<Rat>{0, 0, 0, Rat(1, 2), 0, 0, 0});
  for (int d = 0; d <= 8; ++d) {
    const auto alphas = binomial_coeffs(BinaryForm::monomial(d, 0));
    CHECK(alphas.back() == 1);
    for (int i = 0; i < d; ++i) CHECK(alphas[i] == 0);
  }
  CHECK(binomial_coeffs(BinaryForm::parse("3*X^5*Y")) == std::vector<Rat>{0, 0, 0, 0, 0, Rat(1, 2), 0});

  Sampler sampler(3);
  for (int d = 0; d <= 12; ++d) {
    for (int trial = 0; trial < 5; ++trial) {
      const BinaryForm f = sampler.binary_form(d);
      CHECK(from_binomial_coeffs(d, binomial_coeffs(f)) == f);
      const auto alphas = sampler.vector(d + 1);
      CHECK(binomial_coeffs(from_binomial_coeffs(d, alphas)) == alphas);
    }
  }
}

TEST_CASE("factor embeddings") {
  const BinaryForm p = BinaryForm::parse("X^2 - 3*Y^2");
  const BinaryForm q = BinaryForm::parse("X*Y");
  const BiForm t = BiForm::tensor(p, q);
  CHECK(t.poly() == bi("X1^2*X2*Y2 - 3*Y1^2*X2*Y2"));
  CHECK(second_factor(from_second_factor(q)) == q);
  CHECK(first_factor(from_first_factor(p)) == p);
  const auto [pp, qq] = split_linear(BiForm::parse("X1*X2^2*Y2^6 + Y1*X2^6*Y2^2"));
  CHECK(pp == BinaryForm::parse("X^2*Y^6"));
  CHECK(qq == BinaryForm::parse("X^6*Y^2"));
}
