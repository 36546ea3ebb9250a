// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "discforge/poly.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "discforge/error.h"
#include "oracles.h"

namespace discforge {
namespace {

const std::vector<std::string> kXY = {"x", "y"};

Polynomial P(const std::string& text, const std::vector<std::string>& vars = kXY) {
  return oracle::ParsePolynomial(text, vars);
}

TEST(PolynomialTest, ArithmeticAndPrinting) {
  Polynomial f = P("x + y"), g = P("x - y");
  EXPECT_EQ(f * g, P("x^2 - y^2"));
  EXPECT_EQ((f * g).ToString(), "x^2 - y^2");
  EXPECT_EQ(Pow(f, 3), P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
  EXPECT_TRUE((f - f).IsZero());
  EXPECT_EQ(f.Evaluate({Rational(1, 2), Rational(3)}), Rational(7, 2));
}

TEST(PolynomialTest, GrevlexOrder) {
  // x2^2 outranks x1*x3 because it has the smaller x3 exponent.
  Polynomial f = P("x1*x3 + x2^2", {"x1", "x2", "x3"});
  EXPECT_EQ(f.LeadingExponent(), (Exponent{0, 2, 0}));
}

TEST(NormalizeTest, ContentMonomialAndSign) {
  Polynomial f = P("-6*x^3*y + 4*x^2*y^2");
  EXPECT_EQ(Normalize(f), P("3*x - 2*y"));
  Polynomial laurent = Polynomial::Monomial(kXY, 2, {-1, 0}) * P("x + y");
  EXPECT_EQ(Normalize(laurent), P("x + y"));
  EXPECT_THROW(Normalize(Polynomial(kXY)), Error);
}

TEST(NormalizeTest, Idempotent) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> c(-9, 9), e(-2, 4);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial f(kXY);
    for (int t = 0; t < 5; ++t) f.AddTerm({e(rng), e(rng)}, c(rng));
    if (f.IsZero()) continue;
    Polynomial n = Normalize(f);
    EXPECT_EQ(Normalize(n), n);
    EXPECT_FALSE(n.HasNegativeExponents());
    EXPECT_EQ(Normalize(Polynomial::Monomial(kXY, -15, {3, -1}) * f), n);
  }
}

TEST(SpecializeTest, DropsOrKeepsVariable) {
  Polynomial f = P("x^2*y + 3*y - x");
  EXPECT_EQ(Specialize(f, "y", 2), P("2*x^2 - x + 6", {"x"}));
  Polynomial kept = Specialize(f, 0, 0, false);
  EXPECT_EQ(kept, P("3*y"));
}

TEST(DivisionTest, ExactAndFailing) {
  Polynomial f = P("x + y"), g = P("x^3 + y^3");
  EXPECT_EQ(ExactDivide(g, f), P("x^2 - x*y + y^2"));
  EXPECT_FALSE(TryDivide(P("x^2 + y^2"), f).has_value());
  EXPECT_TRUE(Divides(P("2*x + 2*y"), P("x^4*y - x^2*y^3")));
  EXPECT_FALSE(Divides(P("x - 2*y"), P("x^2 - y^2")));
}

TEST(ResultantTest, LinearClosedForm) {
  // Res(a1 u + a0, b1 u + b0) = a1 b0 - a0 b1.
  std::vector<std::string> v = {"a0", "a1", "b0", "b1"};
  UniWrapped f{{Polynomial::Variable(v, 0), Polynomial::Variable(v, 1)}, 0};
  UniWrapped g{{Polynomial::Variable(v, 2), Polynomial::Variable(v, 3)}, 0};
  EXPECT_EQ(ResultantU(f, g), P("a1*b0 - a0*b1", v));
}

TEST(ResultantTest, DifferenceOfRoots) {
  std::vector<std::string> v = {"a", "b"};
  UniWrapped f{{-Polynomial::Variable(v, 0), Polynomial::Constant(v, 1)}, 0};
  UniWrapped g{{-Polynomial::Variable(v, 1), Polynomial::Constant(v, 1)}, 0};
  EXPECT_EQ(ResultantU(f, g), P("a - b", v));
}

TEST(ResultantTest, QuadraticAgainstRootProduct) {
  // f = (u - 1)(u - 2), g = u - t: Res = f(t) = t^2 - 3t + 2.
  std::vector<std::string> v = {"t"};
  UniWrapped f{{Polynomial::Constant(v, 2), Polynomial::Constant(v, -3),
                Polynomial::Constant(v, 1)},
               0};
  UniWrapped g{{-Polynomial::Variable(v, 0), Polynomial::Constant(v, 1)}, 0};
  EXPECT_EQ(ResultantU(f, g), P("t^2 - 3*t + 2", v));
}

TEST(ResultantTest, VanishesOnCommonRoot) {
  std::mt19937 rng(12);
  std::uniform_int_distribution<long> c(-4, 4);
  std::vector<std::string> v = {"s"};
  for (int trial = 0; trial < 10; ++trial) {
    long r = c(rng);
    // f = (u - r)(u - s) and g = (u - r)(u + 1) share the root r.
    UniWrapped f{{Polynomial::Variable(v, 0) * Integer(r),
                  Polynomial::Constant(v, -r) - Polynomial::Variable(v, 0),
                  Polynomial::Constant(v, 1)},
                 0};
    UniWrapped g{{Polynomial::Constant(v, -r), Polynomial::Constant(v, 1 - r),
                  Polynomial::Constant(v, 1)},
                 0};
    EXPECT_TRUE(ResultantU(f, g).IsZero());
  }
}

TEST(ScaledSubstituteTest, ShiftsToPolynomialInU) {
  // f(u x, u^-1 y) = u x + u^-1 y; multiplying by u gives y + x u^2.
  UniWrapped w = ScaledSubstitute(P("x + y"), ToIntVector({1, -1}));
  EXPECT_EQ(w.delta, 1);
  ASSERT_EQ(w.degree(), 2);
  EXPECT_EQ(w.coeffs[0], P("y"));
  EXPECT_TRUE(w.coeffs[1].IsZero());
  EXPECT_EQ(w.coeffs[2], P("x"));
}

TEST(NewtonTest, CubicDiscriminantHasFourVertices) {
  Polynomial d = P("x2^2*x3^2 - 4*x1*x3^3 - 4*x2^3*x4 + 18*x1*x2*x3*x4 - 27*x1^2*x4^2",
                   {"x1", "x2", "x3", "x4"});
  std::vector<Exponent> v = NewtonVertices(Support(d));
  EXPECT_EQ(v.size(), 4u);
  std::set<Exponent> vs(v.begin(), v.end());
  EXPECT_FALSE(vs.count(Exponent{1, 1, 1, 1}));
}

TEST(NewtonTest, SquareWithInteriorPoints) {
  std::vector<Exponent> pts = {{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}, {1, 0}, {0, 1}};
  std::vector<Exponent> v = NewtonVertices(pts);
  EXPECT_EQ(std::set<Exponent>(v.begin(), v.end()),
            (std::set<Exponent>{{0, 0}, {2, 0}, {0, 2}, {2, 2}}));
}

TEST(DeterminantTest, PolynomialMatrix) {
  Polynomial x = P("x"), y = P("y");
  std::vector<std::vector<Polynomial>> m = {{x, y}, {y, x}};
  EXPECT_EQ(Determinant(m, kXY), P("x^2 - y^2"));
}

}  // namespace
}  // namespace discforge
