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

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "discforge/error.h"

namespace discforge {

bool GrevlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  long da = 0, db = 0;
  for (long x : a) da += x;
  for (long x : b) db += x;
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Polynomial::Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

Polynomial Polynomial::Constant(std::vector<std::string> vars, const Integer& c) {
  Exponent zero(vars.size(), 0);
  Polynomial p(std::move(vars));
  p.AddTerm(zero, c);
  return p;
}

Polynomial Polynomial::Variable(std::vector<std::string> vars, std::size_t i) {
  Exponent e(vars.size(), 0);
  e.at(i) = 1;
  Polynomial p(std::move(vars));
  p.AddTerm(e, 1);
  return p;
}

Polynomial Polynomial::Monomial(std::vector<std::string> vars, const Integer& c,
                                Exponent e) {
  if (e.size() != vars.size()) {
    throw Error(ErrorCode::kInvalidArgument, "exponent length mismatch");
  }
  Polynomial p(std::move(vars));
  p.AddTerm(e, c);
  return p;
}

bool Polynomial::IsConstant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (long x : terms_.begin()->first) {
    if (x != 0) return false;
  }
  return true;
}

void Polynomial::AddTerm(const Exponent& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer Polynomial::Coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

long Polynomial::Degree(std::size_t var) const {
  long d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[var] > d) d = e[var];
    first = false;
  }
  return d;
}

long Polynomial::MinDegree(std::size_t var) const {
  long d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[var] < d) d = e[var];
    first = false;
  }
  return d;
}

long Polynomial::TotalDegree() const {
  long best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    long s = 0;
    for (long x : e) s += x;
    if (first || s > best) best = s;
    first = false;
  }
  return best;
}

bool Polynomial::HasNegativeExponents() const {
  for (const auto& [e, c] : terms_) {
    for (long x : e) {
      if (x < 0) return true;
    }
  }
  return false;
}

bool Polynomial::Occurs(std::size_t var) const {
  for (const auto& [e, c] : terms_) {
    if (e[var] != 0) return true;
  }
  return false;
}

std::optional<std::size_t> Polynomial::VarIndex(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

Polynomial Polynomial::Embed(const std::vector<std::string>& vars) const {
  std::vector<std::optional<std::size_t>> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (vars[j] == vars_[i]) where[i] = j;
    }
    if (!where[i] && Occurs(i)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "variable " + vars_[i] + " missing from target list");
    }
  }
  Polynomial out(vars);
  for (const auto& [e, c] : terms_) {
    Exponent f(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (where[i]) f[*where[i]] = e[i];
    }
    out.AddTerm(f, c);
  }
  return out;
}

namespace {

void RequireSameVars(const Polynomial& a, const Polynomial& b) {
  if (a.vars() != b.vars()) {
    throw Error(ErrorCode::kInvalidArgument,
                "polynomials over different variable lists");
  }
}

}  // namespace

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  RequireSameVars(*this, other);
  for (const auto& [e, c] : other.terms_) AddTerm(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  RequireSameVars(*this, other);
  for (const auto& [e, c] : other.terms_) AddTerm(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  RequireSameVars(a, b);
  Polynomial out(a.vars());
  Exponent e(a.nvars());
  Integer c;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      c = ca * cb;
      out.AddTerm(e, c);
    }
  }
  return out;
}

Polynomial Polynomial::ShiftExponents(const Exponent& shift) const {
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += shift[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Rational Polynomial::Evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "point has wrong dimension");
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && point[i] == 0) {
        throw Error(ErrorCode::kZeroCoordinate,
                    "zero value for a variable with negative exponent");
      }
      t *= Power(point[i], e[i]);
    }
    sum += t;
  }
  return sum;
}

std::string Polynomial::ToString() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer a = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << a.get_str();
    } else if (a == 1) {
      out << mono;
    } else {
      out << a.get_str() << "*" << mono;
    }
  }
  return out.str();
}

Polynomial Pow(const Polynomial& f, unsigned long k) {
  Polynomial result = Polynomial::Constant(f.vars(), 1);
  Polynomial base = f;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Normalize(const Polynomial& f) {
  if (f.IsZero()) {
    throw Error(ErrorCode::kZeroPolynomial, "cannot normalize the zero polynomial");
  }
  Exponent shift(f.nvars());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = -f.MinDegree(i);
  Polynomial out = f.ShiftExponents(shift);
  Integer g = 0;
  for (const auto& [e, c] : out.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (out.LeadingCoefficient() < 0) g = -g;
  if (g != 1) {
    Polynomial scaled(out.vars());
    for (const auto& [e, c] : out.terms()) {
      Integer q;
      mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      scaled.AddTerm(e, q);
    }
    out = std::move(scaled);
  }
  return out;
}

Polynomial Specialize(const Polynomial& f, std::size_t var, const Integer& v,
                      bool drop) {
  if (var >= f.nvars()) {
    throw Error(ErrorCode::kInvalidArgument, "variable index out of range");
  }
  std::vector<std::string> vars = f.vars();
  if (drop) vars.erase(vars.begin() + static_cast<long>(var));
  Polynomial out(vars);
  for (const auto& [e, c] : f.terms()) {
    Integer t = c;
    long k = e[var];
    if (k < 0) {
      if (v == 0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "cannot set " + f.vars()[var] +
                        " = 0: it occurs with a negative exponent");
      }
      if (abs(v) != 1) {
        throw Error(ErrorCode::kInvalidArgument,
                    "specialization would leave non-integral coefficients");
      }
      if ((-k) % 2 == 1 && v < 0) t = -t;
    } else if (k > 0) {
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(k));
      t *= p;
    }
    Exponent g = e;
    if (drop) {
      g.erase(g.begin() + static_cast<long>(var));
    } else {
      g[var] = 0;
    }
    out.AddTerm(g, t);
  }
  return out;
}

Polynomial Specialize(const Polynomial& f, const std::string& var,
                      const Integer& v, bool drop) {
  auto i = f.VarIndex(var);
  if (!i) throw Error(ErrorCode::kInvalidArgument, "unknown variable " + var);
  return Specialize(f, *i, v, drop);
}

std::optional<Polynomial> TryDivide(const Polynomial& g, const Polynomial& f) {
  RequireSameVars(g, f);
  if (f.IsZero()) throw Error(ErrorCode::kZeroPolynomial, "division by zero");
  if (g.HasNegativeExponents() || f.HasNegativeExponents()) {
    throw Error(ErrorCode::kInvalidArgument,
                "exact division needs nonnegative exponents");
  }
  const Exponent& lf = f.LeadingExponent();
  const Integer& cf = f.LeadingCoefficient();
  if (f.IsConstant()) {
    Polynomial q(g.vars());
    for (const auto& [e, c] : g.terms()) {
      if (!mpz_divisible_p(c.get_mpz_t(), cf.get_mpz_t())) return std::nullopt;
      Integer t;
      mpz_divexact(t.get_mpz_t(), c.get_mpz_t(), cf.get_mpz_t());
      q.AddTerm(e, t);
    }
    return q;
  }
  Polynomial r = g;
  Polynomial q(g.vars());
  Exponent shift(g.nvars());
  while (!r.IsZero()) {
    const Exponent& lr = r.LeadingExponent();
    for (std::size_t i = 0; i < shift.size(); ++i) {
      shift[i] = lr[i] - lf[i];
      if (shift[i] < 0) return std::nullopt;
    }
    const Integer& cr = r.LeadingCoefficient();
    if (!mpz_divisible_p(cr.get_mpz_t(), cf.get_mpz_t())) return std::nullopt;
    Integer t;
    mpz_divexact(t.get_mpz_t(), cr.get_mpz_t(), cf.get_mpz_t());
    q.AddTerm(shift, t);
    for (const auto& [e, c] : f.terms()) {
      Exponent m = e;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += shift[i];
      r.AddTerm(m, -(t * c));
    }
  }
  return q;
}

Polynomial ExactDivide(const Polynomial& g, const Polynomial& f) {
  auto q = TryDivide(g, f);
  if (!q) throw Error(ErrorCode::kInternal, "inexact polynomial division");
  return *q;
}

bool Divides(const Polynomial& f, const Polynomial& g) {
  std::vector<std::string> vars = g.vars();
  for (const std::string& v : f.vars()) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  }
  Polynomial nf = Normalize(f.Embed(vars));
  if (g.IsZero()) return true;
  Polynomial ng = Normalize(g.Embed(vars));
  return TryDivide(ng, nf).has_value();
}

UniWrapped ScaledSubstitute(const Polynomial& f, const IntVector& gamma,
                            std::optional<long> delta) {
  if (gamma.size() != f.nvars()) {
    throw Error(ErrorCode::kInvalidArgument, "gamma has wrong length");
  }
  if (f.IsZero()) throw Error(ErrorCode::kZeroPolynomial, "zero polynomial");
  std::vector<long> g(gamma.size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = ToLong(gamma[i]);
  std::vector<std::pair<long, const Polynomial::TermMap::value_type*>> graded;
  long lo = 0, hi = 0;
  bool first = true;
  for (const auto& term : f.terms()) {
    long d = 0;
    for (std::size_t i = 0; i < g.size(); ++i) d += g[i] * term.first[i];
    graded.emplace_back(d, &term);
    if (first || d < lo) lo = d;
    if (first || d > hi) hi = d;
    first = false;
  }
  UniWrapped out;
  out.delta = delta ? *delta : -lo;
  if (out.delta + lo < 0) {
    throw Error(ErrorCode::kNegativeUExponent,
                "delta too small: negative power of u");
  }
  out.coeffs.assign(static_cast<std::size_t>(out.delta + hi + 1),
                    Polynomial(f.vars()));
  for (const auto& [d, term] : graded) {
    out.coeffs[static_cast<std::size_t>(out.delta + d)].AddTerm(term->first,
                                                                term->second);
  }
  return out;
}

Polynomial Determinant(std::vector<std::vector<Polynomial>> m,
                       const std::vector<std::string>& vars) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::Constant(vars, 1);
  Polynomial prev = Polynomial::Constant(vars, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].IsZero()) ++p;
    if (p == n) return Polynomial(vars);
    if (p != k) {
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = prev.IsConstant() && prev.LeadingCoefficient() == 1
                      ? std::move(t)
                      : ExactDivide(t, prev);
      }
      m[i][k] = Polynomial(vars);
    }
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return negate ? -det : det;
}

Polynomial ResultantU(const UniWrapped& f, const UniWrapped& g) {
  auto trimmed = [](const UniWrapped& w) {
    std::vector<Polynomial> c = w.coeffs;
    while (!c.empty() && c.back().IsZero()) c.pop_back();
    if (c.empty()) throw Error(ErrorCode::kZeroPolynomial, "zero resultant input");
    return c;
  };
  std::vector<Polynomial> a = trimmed(f), b = trimmed(g);
  const std::size_t p = a.size() - 1, q = b.size() - 1;
  if (p == 0 && q == 0) {
    throw Error(ErrorCode::kNoVariable, "both polynomials are constant in u");
  }
  const std::vector<std::string>& vars = a.front().vars();
  const std::size_t n = p + q;
  std::vector<std::vector<Polynomial>> s(n, std::vector<Polynomial>(n, Polynomial(vars)));
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t k = 0; k <= p; ++k) s[i][i + k] = a[p - k];
  }
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t k = 0; k <= q; ++k) s[q + i][i + k] = b[q - k];
  }
  return Determinant(std::move(s), vars);
}

std::vector<Exponent> Support(const Polynomial& f) {
  std::vector<Exponent> out;
  for (const auto& [e, c] : f.terms()) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Whether p is a convex combination of `others`: phase one of the simplex
// method on  sum_i l_i q_i = p,  sum_i l_i = 1,  l >= 0, with Bland's rule.
bool InConvexHull(const Exponent& p, const std::vector<const Exponent*>& others) {
  const std::size_t dim = p.size();
  const std::size_t rows = dim + 1;
  const std::size_t cols = others.size();
  const std::size_t width = cols + rows + 1;  // originals, artificials, rhs
  std::vector<std::vector<Rational>> t(rows + 1, std::vector<Rational>(width));
  for (std::size_t i = 0; i < rows; ++i) {
    Rational rhs = i < dim ? Rational(p[i]) : Rational(1);
    for (std::size_t j = 0; j < cols; ++j) {
      t[i][j] = i < dim ? Rational((*others[j])[i]) : Rational(1);
    }
    if (rhs < 0) {
      rhs = -rhs;
      for (std::size_t j = 0; j < cols; ++j) t[i][j] = -t[i][j];
    }
    t[i][cols + i] = 1;
    t[i][width - 1] = rhs;
  }
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) t[rows][j] -= t[i][j];
  }
  for (std::size_t i = 0; i < rows; ++i) t[rows][width - 1] -= t[i][width - 1];
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = cols + i;
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (t[rows][j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded cannot happen in phase one
    Rational piv = t[leave][enter];
    for (Rational& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational factor = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }
  return t[rows][width - 1] == 0;
}

}  // namespace

std::vector<Exponent> NewtonVertices(const std::vector<Exponent>& points) {
  std::vector<Exponent> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Exponent> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    std::vector<const Exponent*> others;
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      if (j != i) others.push_back(&sorted[j]);
    }
    if (others.empty() || !InConvexHull(sorted[i], others)) {
      out.push_back(sorted[i]);
    }
  }
  return out;
}

}  // namespace discforge
