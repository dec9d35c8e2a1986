#include "dumas/poly.hpp"

#include <gtest/gtest.h>

#include <random>

namespace {

using dumas::Polynomial;

std::vector<std::int64_t> coeffs_of(const Polynomial& f) {
  return {f.coefficients().begin(), f.coefficients().end()};
}

TEST(Polynomial, Construction) {
  const Polynomial f({2, 2, 1});
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f[0], 2);
  EXPECT_EQ(f.leading_coefficient(), 1);

  const Polynomial g({0, 0, 5});
  EXPECT_EQ(g.degree(), 2);
  EXPECT_EQ(g.constant_term(), 0);

  EXPECT_THROW(Polynomial({1, 0}), dumas::InvalidDegreeError);
  EXPECT_THROW(Polynomial({}), std::invalid_argument);
}

TEST(Polynomial, Height) {
  EXPECT_EQ(Polynomial({2, 2, 1}).height(), 2);
  EXPECT_EQ(Polynomial({2, 4, 4}).height(), 4);
  EXPECT_EQ(Polynomial({-7}).height(), 7);
}

TEST(Polynomial, Evaluate) {
  const Polynomial f({2, -1, 1});  // x^2 - x + 2
  EXPECT_EQ(f.evaluate(0), 2);
  EXPECT_EQ(f.evaluate(3), 8);
  EXPECT_EQ(f.evaluate(-2), 8);
}

TEST(Reverse, KnownValues) {
  EXPECT_EQ(coeffs_of(dumas::reverse(Polynomial({2, 2, 1}))),
            (std::vector<std::int64_t>{1, 2, 2}));
  EXPECT_EQ(coeffs_of(dumas::reverse(Polynomial({1, 3, 1}))),
            (std::vector<std::int64_t>{1, 3, 1}));
  EXPECT_EQ(coeffs_of(dumas::reverse(Polynomial({2, 1}))),
            (std::vector<std::int64_t>{1, 2}));
  EXPECT_THROW(dumas::reverse(Polynomial({0, 1})), std::invalid_argument);
}

TEST(Multiply, KnownProduct) {
  const Polynomial product =
      dumas::multiply(Polynomial({1, 1}), Polynomial({-1, 1}));
  EXPECT_EQ(coeffs_of(product), (std::vector<std::int64_t>{-1, 0, 1}));
}

TEST(Parse, CoefficientLists) {
  EXPECT_EQ(coeffs_of(dumas::parse_polynomial("2,2,1")),
            (std::vector<std::int64_t>{2, 2, 1}));
  EXPECT_EQ(coeffs_of(dumas::parse_polynomial(" -7, 0 , 1")),
            (std::vector<std::int64_t>{-7, 0, 1}));
  EXPECT_EQ(coeffs_of(dumas::parse_polynomial("5")),
            (std::vector<std::int64_t>{5}));
  EXPECT_THROW(dumas::parse_polynomial("1,0"), dumas::InvalidDegreeError);
  EXPECT_THROW(dumas::parse_polynomial("1,,2"), dumas::ParseError);
  EXPECT_THROW(dumas::parse_polynomial(""), dumas::ParseError);
}

TEST(Parse, Expressions) {
  EXPECT_EQ(coeffs_of(dumas::parse_polynomial("4x^2+4x+2")),
            (std::vector<std::int64_t>{2, 4, 4}));
  EXPECT_EQ(coeffs_of(dumas::parse_polynomial("x^2 + x + x")),
            (std::vector<std::int64_t>{0, 2, 1}));
  EXPECT_EQ(coeffs_of(dumas::parse_polynomial("x^3-2")),
            (std::vector<std::int64_t>{-2, 0, 0, 1}));
  EXPECT_EQ(coeffs_of(dumas::parse_polynomial("-x^2 + 3")),
            (std::vector<std::int64_t>{3, 0, -1}));
  EXPECT_EQ(coeffs_of(dumas::parse_polynomial("2*x^2 - 1")),
            (std::vector<std::int64_t>{-1, 0, 2}));
  EXPECT_EQ(coeffs_of(dumas::parse_polynomial("x")),
            (std::vector<std::int64_t>{0, 1}));
}

TEST(Parse, ExpressionErrors) {
  EXPECT_THROW(dumas::parse_polynomial("x - x"), dumas::InvalidDegreeError);
  EXPECT_THROW(dumas::parse_polynomial("x +"), dumas::ParseError);
  EXPECT_THROW(dumas::parse_polynomial("2 ** x"), dumas::ParseError);
  EXPECT_THROW(dumas::parse_polynomial("x^"), dumas::ParseError);
  EXPECT_THROW(dumas::parse_polynomial("3 y"), dumas::ParseError);
  try {
    dumas::parse_polynomial("x^2 @ 1");
    FAIL() << "expected ParseError";
  } catch (const dumas::ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Format, KnownValues) {
  EXPECT_EQ(dumas::format_polynomial(Polynomial({2, 2, 1})), "x^2 + 2x + 2");
  EXPECT_EQ(dumas::format_polynomial(Polynomial({0, -1, 1})), "x^2 - x");
  EXPECT_EQ(dumas::format_polynomial(Polynomial({5})), "5");
  EXPECT_EQ(dumas::format_polynomial(Polynomial({-7})), "-7");
  EXPECT_EQ(dumas::format_polynomial(Polynomial({0, 0, -1})), "-x^2");
  EXPECT_EQ(dumas::format_polynomial(Polynomial({1, 0, 0, 3})), "3x^3 + 1");
}

TEST(Format, ParseRoundTrip) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> coeff(-50, 50);
  for (int round = 0; round < 2000; ++round) {
    std::vector<std::int64_t> coeffs(1 + rng() % 7);
    for (auto& c : coeffs) c = coeff(rng);
    if (coeffs.back() == 0) coeffs.back() = 1;
    const Polynomial f(coeffs);
    EXPECT_EQ(dumas::parse_polynomial(dumas::format_polynomial(f)), f)
        << dumas::format_polynomial(f);
  }
}

TEST(Reverse, InvolutionAndHeight) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<std::int64_t> coeff(-100, 100);
  for (int round = 0; round < 2000; ++round) {
    std::vector<std::int64_t> coeffs(1 + rng() % 6);
    for (auto& c : coeffs) c = coeff(rng);
    if (coeffs.back() == 0) coeffs.back() = 3;
    if (coeffs.front() == 0) coeffs.front() = -2;
    const Polynomial f(coeffs);
    EXPECT_EQ(dumas::reverse(dumas::reverse(f)), f);
    EXPECT_EQ(dumas::reverse(f).height(), f.height());
  }
}

}  // namespace
