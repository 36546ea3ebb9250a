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

#include "discforge/disc.h"

#include <algorithm>
#include <set>

#include "discforge/defect.h"
#include "discforge/error.h"
#include "discforge/lattice.h"

namespace discforge {

namespace {

std::string VectorString(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

Integer IntPow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

bool IsPrime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

Polynomial DiscriminantCodim1(const IntVector& b, std::vector<std::string> labels) {
  if (labels.empty()) labels = DefaultLabels(b.size());
  if (labels.size() != b.size()) {
    throw Error(ErrorCode::kInvalidArgument, "label count does not match b");
  }
  Integer total = 0;
  for (const Integer& x : b) total += x;
  if (total != 0) throw Error(ErrorCode::kNotHomogeneous, "entries of b must sum to 0");
  for (const Integer& x : b) {
    if (x == 0) {
      throw Error(ErrorCode::kPyramidInput, "b has a zero entry (pyramid)");
    }
  }
  if (Content(b) != 1) throw Error(ErrorCode::kNonPrimitive, "b is not primitive");
  Integer c1 = 1, c2 = 1, p = 0;
  Exponent e1(b.size(), 0), e2(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    unsigned long a = static_cast<unsigned long>(ToLong(abs(b[i])));
    if (b[i] > 0) {
      e1[i] = static_cast<long>(a);
      c2 *= IntPow(b[i], a);
      p += b[i];
    } else {
      e2[i] = static_cast<long>(a);
      c1 *= IntPow(abs(b[i]), a);
    }
  }
  if (p % 2 == 0) c2 = -c2;
  Polynomial d(labels);
  d.AddTerm(e1, c1);
  d.AddTerm(e2, c2);
  return Normalize(d);
}

HornMap::HornMap(GaleConfiguration c) : c_(std::move(c)) {
  if (!c_.is_homogeneous()) {
    throw Error(ErrorCode::kNotHomogeneous, "Horn map needs rows summing to 0");
  }
}

bool HornMap::OnExceptionalLocus(const std::vector<Rational>& zeta) const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Rational l = 0;
    for (std::size_t k = 0; k < c_.ambient_dim(); ++k) l += c_.matrix()(i, k) * zeta[k];
    if (l == 0) return true;
  }
  return false;
}

std::vector<Rational> HornMap::Evaluate(const std::vector<Rational>& zeta) const {
  const std::size_t m = c_.ambient_dim();
  if (zeta.size() != m) {
    throw Error(ErrorCode::kInvalidArgument, "zeta has wrong dimension");
  }
  std::vector<Rational> psi(m, Rational(1));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Rational l = 0;
    for (std::size_t k = 0; k < m; ++k) l += c_.matrix()(i, k) * zeta[k];
    if (l == 0) {
      throw Error(ErrorCode::kOnExceptionalLocus,
                  "linear form of row " + std::to_string(i + 1) + " vanishes");
    }
    for (std::size_t k = 0; k < m; ++k) {
      const Integer& e = c_.matrix()(i, k);
      if (e != 0) psi[k] *= Power(l, ToLong(e));
    }
  }
  return psi;
}

Implicitization HornImplicitizeRank2(const GaleConfiguration& c,
                                     bool require_irreducible) {
  if (c.ambient_dim() != 2 || c.rank() != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "implicitization needs a rank-2 configuration in Z^2");
  }
  if (!c.is_homogeneous()) {
    throw Error(ErrorCode::kNotHomogeneous, "rows do not sum to zero");
  }
  if (c.has_zero_row()) throw Error(ErrorCode::kPyramidInput, "zero row");
  if (*c.index() != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "configuration has index " + c.index()->get_str() + ", not 1");
  }
  if (require_irreducible && !IsIrreducible(c)) {
    throw Error(ErrorCode::kNotIrreducible, "configuration has collinear rows");
  }
  HornMap horn(c);
  unsigned long t = 1;
  auto next_sample = [&]() {
    while (true) {
      do {
        ++t;
      } while (!IsPrime(t));
      std::vector<Rational> zeta = {Rational(static_cast<long>(t)), Rational(1)};
      if (!horn.OnExceptionalLocus(zeta)) return horn.Evaluate(zeta);
    }
  };
  const std::vector<std::string> zvars = {"z1", "z2"};
  std::vector<std::vector<Rational>> points;
  for (long degree = 1; degree <= 200; ++degree) {
    std::vector<Exponent> monos;
    for (long s = 0; s <= degree; ++s) {
      for (long a = s; a >= 0; --a) monos.push_back({a, s - a});
    }
    const std::size_t rows = monos.size() + 2;
    while (points.size() < rows) points.push_back(next_sample());
    IntMatrix m(rows, monos.size());
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<Rational> vals(monos.size());
      Integer den = 1;
      for (std::size_t j = 0; j < monos.size(); ++j) {
        vals[j] = Power(points[r][0], monos[j][0]) * Power(points[r][1], monos[j][1]);
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), vals[j].get_den_mpz_t());
      }
      for (std::size_t j = 0; j < monos.size(); ++j) {
        Rational scaled = vals[j] * den;
        m(r, j) = scaled.get_num();
      }
    }
    std::vector<IntVector> kernel = RationalKernel(m);
    if (kernel.empty()) continue;
    if (kernel.size() > 1) {
      throw Error(ErrorCode::kKernelDimensionNotOne,
                  "interpolation kernel has dimension " +
                      std::to_string(kernel.size()) + " at degree " +
                      std::to_string(degree));
    }
    Polynomial f(zvars);
    for (std::size_t j = 0; j < monos.size(); ++j) f.AddTerm(monos[j], kernel[0][j]);
    // Sign: the grevlex-last term (the constant term when present) positive.
    if (f.terms().rbegin()->second < 0) f = -f;
    Implicitization out{f, degree, rows, 0};
    for (int k = 0; k < 10; ++k) {
      if (f.Evaluate(next_sample()) != 0) {
        throw Error(ErrorCode::kInternal,
                    "implicit equation fails at a fresh Horn sample");
      }
      ++out.verified;
    }
    return out;
  }
  throw Error(ErrorCode::kInternal, "no implicit equation up to degree 200");
}

Polynomial Pullback(const Polynomial& f, const GaleConfiguration& b) {
  if (f.nvars() != b.ambient_dim()) {
    throw Error(ErrorCode::kInvalidArgument,
                "polynomial variables do not match the Gale columns");
  }
  std::vector<std::vector<long>> rows(b.size(), std::vector<long>(b.ambient_dim()));
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t k = 0; k < b.ambient_dim(); ++k) rows[i][k] = ToLong(b.matrix()(i, k));
  }
  Polynomial out(b.labels());
  Exponent e(b.size());
  for (const auto& [a, c] : f.terms()) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      long s = 0;
      for (std::size_t k = 0; k < a.size(); ++k) s += rows[i][k] * a[k];
      e[i] = s;
    }
    out.AddTerm(e, c);
  }
  return Normalize(out);
}

GlueData ComputeGlueData(const GaleConfiguration& b, const IndexSet& c1,
                         const IndexSet& c2) {
  std::set<std::size_t> seen(c1.begin(), c1.end());
  seen.insert(c2.begin(), c2.end());
  if (seen.size() != b.size() || c1.size() + c2.size() != b.size() || c2.empty()) {
    throw Error(ErrorCode::kInconsistentSplit, "parts do not partition the rows");
  }
  if (!IsZero(b.RowSum(c1)) || !IsZero(b.RowSum(c2))) {
    throw Error(ErrorCode::kInconsistentSplit, "parts are not homogeneous");
  }
  IntMatrix m1 = b.matrix().SelectRows(c1);
  if (Rank(m1) != b.rank()) {
    throw Error(ErrorCode::kInconsistentSplit,
                "first part does not have full rank");
  }
  IntVector first = b.Row(c2.front());
  if (IsZero(first)) throw Error(ErrorCode::kInconsistentSplit, "zero row in line");
  IntVector dir = LineDirection(first);
  std::size_t p = 0;
  while (dir[p] == 0) ++p;
  GlueData data;
  for (std::size_t j : c2) {
    IntVector row = b.Row(j);
    Integer beta = row[p] / dir[p];
    if (beta == 0 || beta * dir != row) {
      throw Error(ErrorCode::kInconsistentSplit, "second part is not collinear");
    }
    data.beta.push_back(beta);
  }
  Integer g = Content(data.beta);
  for (Integer& x : data.beta) x /= g;
  data.w = g * dir;
  data.q = SmallestMultiplier(m1, data.w);
  auto gamma = IntegerSolve(m1, data.q * data.w);
  if (!gamma) throw Error(ErrorCode::kInternal, "no integer solution for q w");
  data.gamma = *gamma;
  // Bezout coefficients for the beta_j.
  IntVector coeff(data.beta.size());
  Integer acc = data.beta[0];
  coeff[0] = 1;
  for (std::size_t j = 1; j < data.beta.size(); ++j) {
    Integer d, s, t;
    mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), acc.get_mpz_t(),
               data.beta[j].get_mpz_t());
    for (std::size_t k = 0; k < j; ++k) coeff[k] *= s;
    coeff[j] = t;
    acc = d;
  }
  if (acc < 0) coeff = -coeff;
  data.mu = (-data.q) * coeff;
  return data;
}

Polynomial GlueResultant(const Polynomial& d1, const Polynomial& d2,
                         const GaleConfiguration& b, const IndexSet& c1,
                         const IndexSet& c2, const GlueData& data) {
  if (data.gamma.size() != c1.size() || data.mu.size() != c2.size()) {
    throw Error(ErrorCode::kInvalidArgument, "gamma or mu has the wrong length");
  }
  IntVector weights(b.size());
  for (std::size_t i = 0; i < c1.size(); ++i) weights[c1[i]] = data.gamma[i];
  for (std::size_t j = 0; j < c2.size(); ++j) weights[c2[j]] = data.mu[j];
  const std::vector<std::string>& vars = b.labels();
  UniWrapped f1 = ScaledSubstitute(d1.Embed(vars), weights);
  UniWrapped f2 = ScaledSubstitute(d2.Embed(vars), weights);
  Polynomial res = ResultantU(f1, f2);
  if (res.IsZero()) throw Error(ErrorCode::kInternal, "resultant vanishes");
  return Normalize(res);
}

Polynomial GlueResultant(const Polynomial& d1, const Polynomial& d2,
                         const GaleConfiguration& b, const IndexSet& c1,
                         const IndexSet& c2) {
  return GlueResultant(d1, d2, b, c1, c2, ComputeGlueData(b, c1, c2));
}

std::pair<std::string, std::string> FreshPlusMinusLabels(
    const std::vector<std::string>& labels) {
  auto taken = [&](const std::string& s) {
    return std::find(labels.begin(), labels.end(), s) != labels.end();
  };
  for (int k = 1;; ++k) {
    std::string stem = k == 1 ? "y" : "y" + std::to_string(k);
    if (!taken(stem + "+") && !taken(stem + "-")) return {stem + "+", stem + "-"};
  }
}

GaleConfiguration ExtendPlusMinus(const GaleConfiguration& b, const IntVector& v) {
  if (IsZero(v)) throw Error(ErrorCode::kInvalidArgument, "v must be nonzero");
  if (v.size() != b.ambient_dim()) {
    throw Error(ErrorCode::kInvalidArgument, "v has the wrong dimension");
  }
  std::vector<IntVector> rows = b.matrix().RowList();
  rows.push_back(v);
  rows.push_back(-v);
  std::vector<std::string> labels = b.labels();
  auto [plus, minus] = FreshPlusMinusLabels(labels);
  labels.push_back(plus);
  labels.push_back(minus);
  return GaleConfiguration(IntMatrix::FromRows(rows, b.ambient_dim()),
                           std::move(labels));
}

Polynomial Contract(const Polynomial& d_sharp, const std::string& plus,
                    const std::string& minus) {
  Polynomial d = Specialize(d_sharp, plus, 1);
  d = Specialize(d, minus, -1);
  return Normalize(d);
}

namespace {

Polynomial One(const GaleConfiguration& b) {
  return Polynomial::Constant(b.labels(), 1);
}

std::string LabelList(const GaleConfiguration& b, const IndexSet& s) {
  std::string out;
  for (std::size_t i : s) {
    if (!out.empty()) out += ",";
    out += b.labels()[i];
  }
  return out;
}

Polynomial Pipeline(const GaleConfiguration& input, Provenance& node);

Polynomial GlueStep(const GaleConfiguration& b, const IndexSet& c1,
                    const IndexSet& c2, Provenance& node) {
  node.Add("first_part", LabelList(b, c1));
  node.Add("second_part", LabelList(b, c2));
  Provenance left, right;
  Polynomial d1 = Pipeline(b.Subconfiguration(c1), left);
  Polynomial d2 = Pipeline(b.Subconfiguration(c2), right);
  node.children.push_back(std::move(left));
  node.children.push_back(std::move(right));
  if (d1.IsConstant() || d2.IsConstant()) {
    throw Error(ErrorCode::kInternal, "a glued part has trivial discriminant");
  }
  GlueData data = ComputeGlueData(b, c1, c2);
  node.Add("w", VectorString(data.w));
  node.Add("q", data.q.get_str());
  node.Add("gamma", VectorString(data.gamma));
  node.Add("mu", VectorString(data.mu));
  Polynomial out = GlueResultant(d1, d2, b, c1, c2, data);
  node.Add("terms", std::to_string(out.size()));
  return out;
}

Polynomial Pipeline(const GaleConfiguration& input, Provenance& node) {
  node.Add("rows", std::to_string(input.size()));
  if (!input.is_homogeneous()) {
    throw Error(ErrorCode::kNotHomogeneous, "Gale rows do not sum to zero");
  }
  if (input.size() == 0 || input.rank() == 0 || input.has_zero_row()) {
    node.step = "pyramid";
    return One(input);
  }
  GaleConfiguration b = Saturate(input);
  if (!(input.index() && *input.index() == 1)) {
    node.Add("saturated", "true");
  }
  const std::size_t m = b.rank();
  node.Add("rank", std::to_string(m));
  DefectReport report = IsDualDefect(b);
  if (report.defect) {
    node.step = "dual-defect";
    node.Add("method", report.method);
    return One(input);
  }
  if (m == 1) {
    node.step = "codim-one";
    Polynomial d = DiscriminantCodim1(b.matrix().Column(0), b.labels());
    node.Add("terms", std::to_string(d.size()));
    return d;
  }
  CollinearClasses cc = CollinearClassesOf(b);
  const IndexSet* line = nullptr;
  for (const IndexSet& cls : cc.classes) {
    if (cls.size() >= 2 && (line == nullptr || cls.size() > line->size())) line = &cls;
  }
  if (line == nullptr) {
    if (m != 2) {
      node.step = "unsupported";
      throw Error(ErrorCode::kUnsupported,
                  "irreducible configuration of rank " + std::to_string(m) +
                      " has no supported discriminant method");
    }
    node.step = "horn-implicitization";
    Implicitization imp = HornImplicitizeRank2(b);
    node.Add("curve_degree", std::to_string(imp.degree));
    node.Add("samples", std::to_string(imp.samples));
    node.Add("verified", std::to_string(imp.verified));
    Polynomial d = Pullback(imp.f, b);
    node.Add("terms", std::to_string(d.size()));
    return d;
  }
  IntVector sigma = b.RowSum(*line);
  node.Add("line", LabelList(b, *line));
  node.Add("sigma", VectorString(sigma));
  IndexSet rest;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!std::binary_search(line->begin(), line->end(), i)) rest.push_back(i);
  }
  if (IsZero(sigma)) {
    node.step = "splitting-line";
    return GlueStep(b, rest, *line, node);
  }
  node.step = "non-splitting-line";
  GaleConfiguration sharp = ExtendPlusMinus(b, sigma);
  const std::string plus = sharp.labels()[b.size()];
  const std::string minus = sharp.labels()[b.size() + 1];
  IndexSet c1 = rest, c2 = *line;
  c1.push_back(b.size());
  c2.push_back(b.size() + 1);
  Provenance glue;
  glue.step = "glue";
  Polynomial d_sharp = GlueStep(sharp, c1, c2, glue);
  node.children.push_back(std::move(glue));
  node.Add("contract", plus + "=1," + minus + "=-1");
  Polynomial d = Contract(d_sharp, plus, minus);
  node.Add("terms", std::to_string(d.size()));
  return d;
}

}  // namespace

DiscriminantResult Discriminant(const GaleConfiguration& b) {
  DiscriminantResult out;
  out.polynomial = Pipeline(b, out.provenance);
  return out;
}

DiscriminantResult Discriminant(const PointConfiguration& a) {
  if (!IsHomogeneous(a)) {
    throw Error(ErrorCode::kNotHomogeneous, "configuration is not homogeneous");
  }
  return Discriminant(GaleDual(a));
}

bool Membership(const GaleConfiguration& b, const std::vector<Rational>& x) {
  if (x.size() != b.size()) {
    throw Error(ErrorCode::kInvalidArgument, "point has the wrong dimension");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) {
      throw Error(ErrorCode::kZeroCoordinate,
                  "coordinate " + std::to_string(i + 1) + " is zero");
    }
  }
  DiscriminantResult d = Discriminant(b);
  if (d.IsOne()) return false;
  return d.polynomial.Evaluate(x) == 0;
}

bool CheckRestrictionGrouping(const GaleConfiguration& b, std::size_t k,
                              std::size_t l) {
  if (k >= b.size() || l >= b.size()) {
    throw Error(ErrorCode::kInvalidArgument, "row index out of range");
  }
  if (k == l) return true;
  if (!ArePositiveMultiples(b.Row(k), b.Row(l))) {
    throw Error(ErrorCode::kInvalidArgument,
                "rows are not positive multiples of each other");
  }
  DiscriminantResult d = Discriminant(b);
  if (d.IsOne()) return true;
  Polynomial rk = Specialize(d.polynomial, k, 0, false);
  Polynomial rl = Specialize(d.polynomial, l, 0, false);
  if (rk.IsZero() || rl.IsZero()) return rk.IsZero() && rl.IsZero();
  return Normalize(rk) == Normalize(rl);
}

SpecializationCheck CheckSpecialization(const GaleConfiguration& b,
                                        std::size_t j) {
  if (j >= b.size()) throw Error(ErrorCode::kInvalidArgument, "row index out of range");
  IntVector bj = b.Row(j);
  if (IsZero(bj)) throw Error(ErrorCode::kInvalidArgument, "zero row");
  IntVector dir = LineDirection(bj);
  IndexSet line;
  SpecializationCheck out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    IntVector r = b.Row(i);
    if (!IsZero(r) && LineDirection(r) == dir) {
      line.push_back(i);
    } else {
      out.kept.push_back(i);
    }
  }
  IntVector sigma = b.RowSum(line);
  if (IsZero(sigma)) {
    throw Error(ErrorCode::kInvalidArgument, "the line through the row is splitting");
  }
  if (!ArePositiveMultiples(bj, sigma)) {
    throw Error(ErrorCode::kInvalidArgument,
                "the row points against the sum of its line");
  }
  PointConfiguration a = DualOf(b).config;
  PointConfiguration sub = a.SelectColumns(out.kept);
  out.sub_discriminant = Discriminant(sub).polynomial;
  out.restricted = Specialize(Discriminant(b).polynomial, j, 0);
  if (out.sub_discriminant.IsConstant() || out.restricted.IsZero()) {
    out.divides = true;
  } else {
    out.divides = Divides(out.sub_discriminant, out.restricted);
  }
  return out;
}

}  // namespace discforge
