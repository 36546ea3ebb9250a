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

// Sparse multivariate (Laurent) polynomials with arbitrary-precision integer
// coefficients, resultants in an auxiliary variable, normalization, exact
// divisibility, and exact vertex enumeration for Newton polytopes.

#ifndef DISCFORGE_POLY_H_
#define DISCFORGE_POLY_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "discforge/numeric.h"

namespace discforge {

using Exponent = std::vector<long>;

// Graded reverse lexicographic order with x1 > x2 > ... > xn: higher total
// degree first; on ties, the smaller exponent in the last differing variable
// wins.
struct GrevlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Exponent, Integer, GrevlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> vars);

  static Polynomial Constant(std::vector<std::string> vars, const Integer& c);
  static Polynomial Variable(std::vector<std::string> vars, std::size_t i);
  static Polynomial Monomial(std::vector<std::string> vars, const Integer& c,
                             Exponent e);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  // Terms in descending grevlex order; coefficients are never zero.
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool IsZero() const { return terms_.empty(); }
  bool IsConstant() const;

  // Adds c * x^e, removing the term if it cancels.
  void AddTerm(const Exponent& e, const Integer& c);
  Integer Coefficient(const Exponent& e) const;

  const Exponent& LeadingExponent() const { return terms_.begin()->first; }
  const Integer& LeadingCoefficient() const { return terms_.begin()->second; }

  long Degree(std::size_t var) const;     // max exponent of var
  long MinDegree(std::size_t var) const;  // min exponent of var
  long TotalDegree() const;
  bool HasNegativeExponents() const;
  bool Occurs(std::size_t var) const;
  std::optional<std::size_t> VarIndex(const std::string& name) const;

  // Same polynomial over a different variable list, matched by name.
  // Variables that occur must be present in `vars`.
  Polynomial Embed(const std::vector<std::string>& vars) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Integer& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // Multiplies by the monomial x^shift.
  Polynomial ShiftExponents(const Exponent& shift) const;

  // Exact evaluation. Zero values are rejected for variables that occur with
  // negative exponent.
  Rational Evaluate(const std::vector<Rational>& point) const;

  // Human-readable form, e.g. "x2^2*x3^2 - 4*x1*x3^3".
  std::string ToString() const;

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

Polynomial Pow(const Polynomial& f, unsigned long k);

// Divides by the integer content and by the largest monomial (allowing
// negative shifts) so that every occurring variable has minimal exponent 0,
// then fixes the sign so that the grevlex-leading coefficient is positive.
// Throws kZeroPolynomial on zero input.
Polynomial Normalize(const Polynomial& f);

// Substitutes x_i = v. With `drop` the variable is removed from the list.
// Throws kInvalidArgument when v = 0 and x_i occurs with negative exponent.
Polynomial Specialize(const Polynomial& f, std::size_t var, const Integer& v,
                      bool drop = true);
Polynomial Specialize(const Polynomial& f, const std::string& var,
                      const Integer& v, bool drop = true);

// Quotient g / f, exact. Throws kInternal if f does not divide g.
Polynomial ExactDivide(const Polynomial& g, const Polynomial& f);

// Exact division with remainder test, no normalization; variables must agree.
std::optional<Polynomial> TryDivide(const Polynomial& g, const Polynomial& f);

// Whether normalize(f) divides normalize(g), i.e. divisibility up to integer
// and monomial factors. Variables are matched by name.
bool Divides(const Polynomial& f, const Polynomial& g);

// A polynomial in an auxiliary variable u; coefficient k multiplies u^k.
struct UniWrapped {
  std::vector<Polynomial> coeffs;
  long delta = 0;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
};

// u^delta * f(u^gamma * x): each term c x^e becomes c u^(delta + <gamma,e>) x^e.
// Without `delta`, the smallest delta with a nonzero constant term is used.
// Throws kNegativeUExponent if a fixed delta leaves a negative u-exponent.
UniWrapped ScaledSubstitute(const Polynomial& f, const IntVector& gamma,
                            std::optional<long> delta = std::nullopt);

// Determinant of the Sylvester matrix in u, by fraction-free elimination.
// Res(u - a, u - b) = a - b. Throws kNoVariable when both inputs are
// constant in u.
Polynomial ResultantU(const UniWrapped& f, const UniWrapped& g);

// Determinant of a square matrix of polynomials (Bareiss).
Polynomial Determinant(std::vector<std::vector<Polynomial>> m,
                       const std::vector<std::string>& vars);

std::vector<Exponent> Support(const Polynomial& f);

// Vertices of the convex hull of distinct points, sorted. A point is a vertex
// iff it is not a convex combination of the others, tested by an exact
// rational simplex.
std::vector<Exponent> NewtonVertices(const std::vector<Exponent>& points);

}  // namespace discforge

#endif  // DISCFORGE_POLY_H_
