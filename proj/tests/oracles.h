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

// Test-side reference computations. These deliberately avoid the library's
// lattice and elimination code so that agreement means something.

#ifndef DISCFORGE_TESTS_ORACLES_H_
#define DISCFORGE_TESTS_ORACLES_H_

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "discforge/config.h"
#include "discforge/numeric.h"
#include "discforge/poly.h"

namespace discforge::oracle {

using RatMatrix = std::vector<std::vector<Rational>>;

// Parses "256*x2^5*x3^6 - 27*x1^2*x4^2"; the '*' between factors is optional.
inline Polynomial ParsePolynomial(const std::string& text,
                                  const std::vector<std::string>& vars) {
  Polynomial out(vars);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip();
    }
    Integer coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      coeff = Integer(text.substr(i, j - i));
      i = j;
    }
    Exponent e(vars.size(), 0);
    while (true) {
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
      if (i >= text.size() || text[i] == '+' || text[i] == '-') break;
      std::size_t best = vars.size();
      for (std::size_t v = 0; v < vars.size(); ++v) {
        if (text.compare(i, vars[v].size(), vars[v]) == 0 &&
            (best == vars.size() || vars[v].size() > vars[best].size())) {
          best = v;
        }
      }
      if (best == vars.size()) throw std::runtime_error("unknown symbol in " + text);
      i += vars[best].size();
      long power = 1;
      if (i < text.size() && text[i] == '^') {
        std::size_t j = ++i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        power = std::stol(text.substr(i, j - i));
        i = j;
      }
      e[best] += power;
    }
    out.AddTerm(e, sign * coeff);
  }
  return out;
}

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Row echelon form over Q; returns the pivot columns.
inline std::vector<std::size_t> Echelon(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

inline std::size_t RationalRank(RatMatrix m) { return Echelon(m).size(); }

inline std::vector<std::vector<Rational>> Nullspace(RatMatrix m, std::size_t cols) {
  std::vector<std::size_t> pivots = Echelon(m);
  std::vector<std::vector<Rational>> basis;
  std::set<std::size_t> pivot_set(pivots.begin(), pivots.end());
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_set.count(free)) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(v);
  }
  return basis;
}

inline RatMatrix ToRat(const IntMatrix& a) {
  RatMatrix m(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  return m;
}

inline Rational RatDeterminant(RatMatrix m) {
  Rational det = 1;
  std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// gcd of all maximal minors of an n x m matrix with n >= m.
inline Integer MinorsGcd(const IntMatrix& c) {
  std::size_t n = c.rows(), m = c.cols();
  Integer g = 0;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(m), true);
  std::sort(pick.begin(), pick.end());
  do {
    RatMatrix sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (!pick[i]) continue;
      std::vector<Rational> row;
      for (std::size_t j = 0; j < m; ++j) row.push_back(c(i, j));
      sub.push_back(row);
    }
    Integer d = RatDeterminant(sub).get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  } while (std::next_permutation(pick.begin(), pick.end()));
  return g;
}

// Codimension-one discriminant by sampling critical points. For a
// homogeneous primitive b the rows b_i e_k - b_k e_i span its orthogonal
// complement, giving an explicit dual A. A coefficient vector x makes
// f = sum x_i t^{a_i} singular at t exactly when (x_i t^{a_i}) lies in ker A,
// so x_i = lambda b_i t^{-a_i} sweeps the singular locus. The discriminant
// is the unique (up to scale) polynomial of degree sum_{b_i>0} b_i that is
// multihomogeneous for the rows of A and vanishes on these samples.
inline Polynomial Codim1Oracle(const std::vector<long>& b, std::mt19937& rng) {
  std::size_t n = b.size();
  std::size_t k = 0;
  while (b[k] == 0) ++k;
  std::vector<std::vector<long>> a;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) continue;
    std::vector<long> row(n, 0);
    row[k] = b[i];
    row[i] = -b[k];
    a.push_back(row);
  }
  long deg = 0;
  std::vector<long> plus(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (b[i] > 0) {
      deg += b[i];
      plus[i] = b[i];
    }
  auto weight = [&](const std::vector<long>& u) {
    std::vector<long> w;
    for (const auto& row : a) {
      long s = 0;
      for (std::size_t i = 0; i < n; ++i) s += row[i] * u[i];
      w.push_back(s);
    }
    return w;
  };
  std::vector<long> target = weight(plus);
  std::vector<std::vector<long>> monomials;
  std::vector<long> u(n, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i + 1 == n) {
      u[i] = left;
      if (weight(u) == target) monomials.push_back(u);
      return;
    }
    for (long e = 0; e <= left; ++e) {
      u[i] = e;
      rec(i + 1, left - e);
    }
  };
  rec(0, deg);
  std::uniform_int_distribution<int> pick(1, 9);
  auto nonzero = [&] {
    Rational r(pick(rng), pick(rng));
    if (pick(rng) % 2) r = -r;
    return r;
  };
  RatMatrix rows;
  for (std::size_t s = 0; s < monomials.size() + 3; ++s) {
    std::vector<Rational> t(a.size());
    for (auto& x : t) x = nonzero();
    Rational lambda = nonzero();
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = lambda * b[i];
      for (std::size_t r = 0; r < a.size(); ++r) x[i] *= Power(t[r], -a[r][i]);
    }
    std::vector<Rational> row;
    for (const auto& mono : monomials) {
      Rational v = 1;
      for (std::size_t i = 0; i < n; ++i) v *= Power(x[i], mono[i]);
      row.push_back(v);
    }
    rows.push_back(row);
  }
  auto kernel = Nullspace(rows, monomials.size());
  if (kernel.size() != 1) throw std::runtime_error("oracle kernel is not a line");
  Integer lcm = 1;
  for (const auto& c : kernel[0]) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Polynomial p(DefaultLabels(n));
  for (std::size_t j = 0; j < monomials.size(); ++j) {
    Rational c = kernel[0][j] * lcm;
    if (c != 0) p.AddTerm(Exponent(monomials[j].begin(), monomials[j].end()), c.get_num());
  }
  return Normalize(p);
}

// Dimension of the dual variety from the Jacobian of its Horn-Kapranov
// parametrization lambda, t -> (B lambda)_i t^{-a_i}: the affine cone has
// dimension rank [B | diag(B lambda) A^T] at a random point.
inline long JacobianDualDim(const IntMatrix& a, const IntMatrix& b, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(-500, 500);
  std::size_t n = b.rows(), m = b.cols(), d = a.rows();
  std::vector<Integer> lambda(m);
  for (auto& x : lambda) x = pick(rng);
  RatMatrix j(n, std::vector<Rational>(m + d));
  for (std::size_t i = 0; i < n; ++i) {
    Integer v = 0;
    for (std::size_t k = 0; k < m; ++k) {
      j[i][k] = b(i, k);
      v += b(i, k) * lambda[k];
    }
    for (std::size_t k = 0; k < d; ++k) j[i][m + k] = v * a(k, i);
  }
  return static_cast<long>(RationalRank(j)) - 1;
}

// Random homogeneous primitive integer vector with nonzero entries.
inline std::vector<long> RandomCodim1(std::mt19937& rng, std::size_t n, long bound) {
  std::uniform_int_distribution<long> pick(-bound, bound);
  while (true) {
    std::vector<long> b(n);
    long sum = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      do b[i] = pick(rng);
      while (b[i] == 0);
      sum += b[i];
    }
    b[n - 1] = -sum;
    if (b[n - 1] == 0 || b[n - 1] < -bound || b[n - 1] > bound) continue;
    long g = 0;
    for (long x : b) g = std::gcd(g, std::abs(x));
    if (g == 1) return b;
  }
}

}  // namespace discforge::oracle

#endif  // DISCFORGE_TESTS_ORACLES_H_
