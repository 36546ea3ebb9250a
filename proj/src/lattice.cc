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

#include "discforge/lattice.h"

#include <algorithm>
#include <utility>

#include "discforge/error.h"

namespace discforge {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::FromRows(const std::vector<IntVector>& rows,
                              std::size_t cols_if_empty) {
  std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorCode::kInvalidArgument, "ragged matrix rows");
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::FromRows(const std::vector<std::vector<long>>& rows,
                              std::size_t cols_if_empty) {
  std::vector<IntVector> converted;
  converted.reserve(rows.size());
  for (const auto& r : rows) converted.push_back(ToIntVector(r));
  return FromRows(converted, cols_if_empty);
}

IntMatrix IntMatrix::FromColumns(const std::vector<IntVector>& cols,
                                 std::size_t rows_if_empty) {
  return FromRows(cols, rows_if_empty).Transpose();
}

IntMatrix IntMatrix::Identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::Row(std::size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::Column(std::size_t j) const {
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<IntVector> IntMatrix::RowList() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(Row(i));
  return out;
}

IntMatrix IntMatrix::Transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix IntMatrix::SelectRows(const std::vector<std::size_t>& rows) const {
  IntMatrix out(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(rows[i], j);
  }
  return out;
}

IntMatrix IntMatrix::SelectColumns(const std::vector<std::size_t>& cols) const {
  IntMatrix out(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(i, cols[j]);
  }
  return out;
}

IntMatrix IntMatrix::StackBelow(const IntMatrix& other) const {
  if (rows_ > 0 && other.rows_ > 0 && cols_ != other.cols_) {
    throw Error(ErrorCode::kInvalidArgument, "column count mismatch");
  }
  IntMatrix out(rows_ + other.rows_, rows_ > 0 ? cols_ : other.cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

bool IntMatrix::IsZero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Integer& x) { return x == 0; });
}

void IntMatrix::SwapRows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    std::swap((*this)(a, j), (*this)(b, j));
  }
}

void IntMatrix::SubtractRowMultiple(std::size_t target, std::size_t source,
                                    const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    (*this)(target, j) -= factor * (*this)(source, j);
  }
}

void IntMatrix::NegateRow(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::kInvalidArgument, "matrix product shape mismatch");
  }
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix LatticeBasis::AsColumns() const {
  return IntMatrix::FromColumns(vectors, ambient_dim);
}

namespace {

// Bareiss forward elimination in place; returns the rank and the sign of the
// row permutation used.
std::size_t BareissEliminate(IntMatrix& a, int* sign) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Integer prev = 1;
  std::size_t r = 0;
  *sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      a.SwapRows(p, r);
      *sign = -*sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

}  // namespace

std::size_t Rank(const IntMatrix& m) {
  IntMatrix a = m;
  int sign = 1;
  return BareissEliminate(a, &sign);
}

Integer Determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "determinant of non-square matrix");
  }
  if (m.rows() == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  if (BareissEliminate(a, &sign) < m.rows()) return 0;
  Integer d = a(m.rows() - 1, m.cols() - 1);
  return sign > 0 ? d : Integer(-d);
}

HermiteDecomposition HermiteForm(const IntMatrix& m) {
  HermiteDecomposition out;
  IntMatrix& h = out.form;
  IntMatrix& u = out.transform;
  h = m;
  u = IntMatrix::Identity(m.rows());
  std::size_t pr = 0;
  for (std::size_t col = 0; col < h.cols() && pr < h.rows(); ++col) {
    // Euclid down the column until a single nonzero entry remains at row pr.
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t r = pr; r < h.rows(); ++r) {
        if (h(r, col) == 0) continue;
        if (best == h.rows() || abs(h(r, col)) < abs(h(best, col))) best = r;
      }
      if (best == h.rows()) break;
      h.SwapRows(best, pr);
      u.SwapRows(best, pr);
      bool clean = true;
      for (std::size_t r = pr + 1; r < h.rows(); ++r) {
        if (h(r, col) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h(r, col).get_mpz_t(), h(pr, col).get_mpz_t());
        h.SubtractRowMultiple(r, pr, q);
        u.SubtractRowMultiple(r, pr, q);
        if (h(r, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(pr, col) == 0) continue;
    if (h(pr, col) < 0) {
      h.NegateRow(pr);
      u.NegateRow(pr);
    }
    for (std::size_t r = 0; r < pr; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(r, col).get_mpz_t(), h(pr, col).get_mpz_t());
      h.SubtractRowMultiple(r, pr, q);
      u.SubtractRowMultiple(r, pr, q);
    }
    out.pivot_columns.push_back(col);
    ++pr;
  }
  out.rank = pr;
  return out;
}

std::vector<IntVector> HermiteBasis(const IntMatrix& m) {
  HermiteDecomposition hd = HermiteForm(m);
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < hd.rank; ++i) rows.push_back(hd.form.Row(i));
  return rows;
}

LatticeBasis CanonicalBasis(std::size_t ambient_dim,
                            const std::vector<IntVector>& vectors) {
  LatticeBasis basis;
  basis.ambient_dim = ambient_dim;
  if (!vectors.empty()) {
    basis.vectors = HermiteBasis(IntMatrix::FromRows(vectors, ambient_dim));
  }
  return basis;
}

LatticeBasis KernelLatticeBasis(const IntMatrix& m) {
  // U * m^T = H with U unimodular: the rows of U against zero rows of H are a
  // Z-basis of the integer kernel, already saturated.
  const std::size_t n = m.cols();
  HermiteDecomposition hd = HermiteForm(m.Transpose());
  std::vector<IntVector> kernel;
  for (std::size_t i = hd.rank; i < n; ++i) kernel.push_back(hd.transform.Row(i));
  return CanonicalBasis(n, kernel);
}

std::vector<IntVector> RationalKernel(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<IntVector> kernel;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    Integer den = 1;
    for (const Rational& x : v) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    }
    IntVector iv(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      Rational scaled = v[j] * den;
      iv[j] = scaled.get_num();
    }
    kernel.push_back(PrimitivePart(iv));
  }
  return kernel;
}

Integer LatticeIndex(const IntMatrix& c) {
  HermiteDecomposition hd = HermiteForm(c);
  if (hd.rank < c.cols()) {
    throw Error(ErrorCode::kDegenerateDual,
                "matrix does not have full column rank");
  }
  Integer index = 1;
  for (std::size_t i = 0; i < hd.rank; ++i) {
    index *= hd.form(i, hd.pivot_columns[i]);
  }
  return index;
}

std::optional<IntVector> IntegerSolve(const IntMatrix& m,
                                      const IntVector& target) {
  if (target.size() != m.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "target length mismatch");
  }
  HermiteDecomposition hd = HermiteForm(m);
  IntVector residual = target;
  IntVector y(hd.rank);
  for (std::size_t i = 0; i < hd.rank; ++i) {
    const std::size_t pc = hd.pivot_columns[i];
    const Integer& pivot = hd.form(i, pc);
    if (!mpz_divisible_p(residual[pc].get_mpz_t(), pivot.get_mpz_t())) {
      return std::nullopt;
    }
    mpz_divexact(y[i].get_mpz_t(), residual[pc].get_mpz_t(), pivot.get_mpz_t());
    for (std::size_t j = pc; j < m.cols(); ++j) residual[j] -= y[i] * hd.form(i, j);
  }
  if (!IsZero(residual)) return std::nullopt;
  IntVector x(m.rows());
  for (std::size_t i = 0; i < hd.rank; ++i) {
    for (std::size_t k = 0; k < m.rows(); ++k) x[k] += y[i] * hd.transform(i, k);
  }
  return x;
}

Integer SmallestMultiplier(const IntMatrix& rows, const IntVector& w) {
  if (w.size() != rows.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "vector length mismatch");
  }
  HermiteDecomposition hd = HermiteForm(rows);
  std::vector<Rational> residual(w.begin(), w.end());
  Integer q = 1;
  for (std::size_t i = 0; i < hd.rank; ++i) {
    const std::size_t pc = hd.pivot_columns[i];
    Rational y = residual[pc] / Rational(hd.form(i, pc));
    mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), y.get_den_mpz_t());
    for (std::size_t j = pc; j < rows.cols(); ++j) {
      residual[j] -= y * Rational(hd.form(i, j));
    }
  }
  for (const Rational& x : residual) {
    if (x != 0) throw Error(ErrorCode::kNotInSpan, "vector not in the Q-span");
  }
  return q;
}

Span::Span(std::size_t ambient_dim, const std::vector<IntVector>& generators)
    : ambient_dim_(ambient_dim) {
  for (const IntVector& g : generators) Insert(g);
}

IntVector Span::Reduce(IntVector v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t c = pivots_[k];
    if (v[c] == 0) continue;
    const IntVector& row = rows_[k];
    Integer a = row[c];
    Integer b = v[c];
    for (std::size_t j = 0; j < ambient_dim_; ++j) v[j] = a * v[j] - b * row[j];
    v = PrimitivePart(v);
  }
  return v;
}

bool Span::Insert(const IntVector& v) {
  if (v.size() != ambient_dim_) {
    throw Error(ErrorCode::kInvalidArgument, "vector length mismatch in span");
  }
  IntVector r = Reduce(v);
  std::size_t lead = 0;
  while (lead < ambient_dim_ && r[lead] == 0) ++lead;
  if (lead == ambient_dim_) return false;
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
  auto offset = pos - pivots_.begin();
  pivots_.insert(pos, lead);
  rows_.insert(rows_.begin() + offset, std::move(r));
  return true;
}

bool Span::Contains(const IntVector& v) const {
  if (v.size() != ambient_dim_) {
    throw Error(ErrorCode::kInvalidArgument, "vector length mismatch in span");
  }
  return IsZero(Reduce(v));
}

}  // namespace discforge
