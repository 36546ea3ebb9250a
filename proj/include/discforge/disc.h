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

// Sparse discriminants: the closed formula in codimension one, Horn maps and
// their implicitization in rank two, the monomial pullback, resultant gluing
// along a line, and the reduction pipeline tying them together.

#ifndef DISCFORGE_DISC_H_
#define DISCFORGE_DISC_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "discforge/config.h"
#include "discforge/matroid.h"
#include "discforge/poly.h"

namespace discforge {

// One node of the record of how a discriminant was obtained.
struct Provenance {
  std::string step;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<Provenance> children;

  void Add(std::string key, std::string value) {
    facts.emplace_back(std::move(key), std::move(value));
  }
};

// prod_{b_j<0} |b_j|^|b_j| prod_{b_i>0} x_i^b_i
//   - (-1)^p prod_{b_i>0} b_i^b_i prod_{b_j<0} x_j^|b_j|,  p = sum_{b_i>0} b_i,
// normalized. Requires sum b = 0 (kNotHomogeneous), no zero entry
// (kPyramidInput) and gcd 1 (kNonPrimitive).
Polynomial DiscriminantCodim1(const IntVector& b,
                              std::vector<std::string> labels = {});

// Psi_k(zeta) = prod_i (c_i . zeta)^{c_ik}.
class HornMap {
 public:
  explicit HornMap(GaleConfiguration c);

  const GaleConfiguration& config() const { return c_; }
  // Throws kOnExceptionalLocus if some c_i . zeta vanishes.
  std::vector<Rational> Evaluate(const std::vector<Rational>& zeta) const;
  bool OnExceptionalLocus(const std::vector<Rational>& zeta) const;

 private:
  GaleConfiguration c_;
};

struct Implicitization {
  Polynomial f;           // in z1, z2
  long degree = 0;        // total degree bound at which the kernel appeared
  std::size_t samples = 0;
  std::size_t verified = 0;  // fresh samples checked after solving
};

// Equation of the closure of the image of the Horn map of a rank-2 index-1
// homogeneous configuration, by exact interpolation at zeta = (t, 1) for
// t = 2, 3, 5, 7, ... With `require_irreducible`, collinear rows are
// rejected with kNotIrreducible.
Implicitization HornImplicitizeRank2(const GaleConfiguration& c,
                                     bool require_irreducible = true);

// F(x^xi_1, ..., x^xi_m) for the columns xi_k of b, normalized. The result
// is over the labels of b.
Polynomial Pullback(const Polynomial& f, const GaleConfiguration& b);

// Integer data for gluing along a line: sum gamma_i b_i = q w = -sum mu_j b_j
// over the rows of the two parts.
struct GlueData {
  IntVector gamma;  // one entry per row of the first part
  IntVector mu;     // one entry per row of the second part
  IntVector w;
  Integer q;
  IntVector beta;   // rows of the second part as multiples of w
};

// w generates the lattice spanned by the (collinear) rows of `c2`, q is the
// smallest multiplier putting q w in the lattice of the rows of `c1`.
GlueData ComputeGlueData(const GaleConfiguration& b, const IndexSet& c1,
                         const IndexSet& c2);

// normalize(Res_u(u^d1 D1(u^gamma * x'), u^d2 D2(u^mu * x''))) with the
// smallest d1, d2 giving polynomials with nonzero constant terms. D1 is over
// the labels of c1, D2 over those of c2; the result is over the labels of b.
Polynomial GlueResultant(const Polynomial& d1, const Polynomial& d2,
                         const GaleConfiguration& b, const IndexSet& c1,
                         const IndexSet& c2, const GlueData& data);
Polynomial GlueResultant(const Polynomial& d1, const Polynomial& d2,
                         const GaleConfiguration& b, const IndexSet& c1,
                         const IndexSet& c2);

// Labels for the rows v and -v: "y+"/"y-", or "y2+"/"y2-", ... whichever is
// free in `labels`.
std::pair<std::string, std::string> FreshPlusMinusLabels(
    const std::vector<std::string>& labels);

// B ∪ {v, -v}. Throws kInvalidArgument for v = 0.
GaleConfiguration ExtendPlusMinus(const GaleConfiguration& b, const IntVector& v);

// Sets the two extra variables to 1 and -1 and normalizes.
Polynomial Contract(const Polynomial& d_sharp, const std::string& plus,
                    const std::string& minus);

struct DiscriminantResult {
  Polynomial polynomial;  // normalized; the constant 1 when dual defect
  Provenance provenance;

  bool IsOne() const {
    return polynomial.IsConstant() && !polynomial.IsZero() &&
           polynomial.LeadingCoefficient() == 1;
  }
};

// The discriminant over the labels of b. Throws kNotHomogeneous, and
// kUnsupported for an irreducible core of rank at least three.
DiscriminantResult Discriminant(const GaleConfiguration& b);
DiscriminantResult Discriminant(const PointConfiguration& a);

// Whether D(x) = 0, exactly. Throws kZeroCoordinate for points off the torus.
bool Membership(const GaleConfiguration& b, const std::vector<Rational>& x);

// Compares D|_{x_k = 0} and D|_{x_l = 0} after normalization. Requires b_k
// and b_l to be positive multiples of each other.
bool CheckRestrictionGrouping(const GaleConfiguration& b, std::size_t k,
                              std::size_t l);

struct SpecializationCheck {
  bool divides = false;
  IndexSet kept;            // rows off the line through b_j
  Polynomial sub_discriminant;  // discriminant of the points kept
  Polynomial restricted;        // D with x_j = 0
};

// For the line through b_j: whether the discriminant of the points of the
// dual indexed by the rows off the line divides D|_{x_j = 0}. The line must
// be non-splitting and b_j must point along the sum of the rows on it.
SpecializationCheck CheckSpecialization(const GaleConfiguration& b,
                                        std::size_t j);

}  // namespace discforge

#endif  // DISCFORGE_DISC_H_
