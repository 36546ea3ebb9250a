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

// Exact integer and rational linear algebra: ranks, Hermite forms, saturated
// kernel lattices, lattice indices and integer linear solving. Everything is
// arbitrary precision; nothing here touches floating point.

#ifndef DISCFORGE_LATTICE_H_
#define DISCFORGE_LATTICE_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "discforge/numeric.h"

namespace discforge {

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix FromRows(const std::vector<IntVector>& rows,
                            std::size_t cols_if_empty = 0);
  static IntMatrix FromRows(const std::vector<std::vector<long>>& rows,
                            std::size_t cols_if_empty = 0);
  static IntMatrix FromColumns(const std::vector<IntVector>& cols,
                               std::size_t rows_if_empty = 0);
  static IntMatrix Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector Row(std::size_t i) const;
  IntVector Column(std::size_t j) const;
  std::vector<IntVector> RowList() const;

  IntMatrix Transpose() const;
  IntMatrix SelectRows(const std::vector<std::size_t>& rows) const;
  IntMatrix SelectColumns(const std::vector<std::size_t>& cols) const;
  // Appends `other` below this matrix; column counts must agree.
  IntMatrix StackBelow(const IntMatrix& other) const;

  bool IsZero() const;

  void SwapRows(std::size_t a, std::size_t b);
  // row[target] -= factor * row[source]
  void SubtractRowMultiple(std::size_t target, std::size_t source,
                           const Integer& factor);
  void NegateRow(std::size_t i);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// A Z-basis of a sublattice of Z^n, kept in row Hermite normal form so that
// equal lattices compare equal.
struct LatticeBasis {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> vectors;

  // n x k matrix with the basis vectors as columns.
  IntMatrix AsColumns() const;
  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;
};

// Rank over Q via Bareiss elimination.
std::size_t Rank(const IntMatrix& m);

// Determinant of a square matrix via Bareiss elimination.
Integer Determinant(const IntMatrix& m);

struct HermiteDecomposition {
  IntMatrix form;       // row Hermite normal form, zero rows last
  IntMatrix transform;  // unimodular, transform * input == form
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

// Row-style Hermite normal form: echelon, positive pivots, entries above each
// pivot reduced into [0, pivot).
HermiteDecomposition HermiteForm(const IntMatrix& m);

// Nonzero rows of the Hermite form: the canonical basis of the row lattice.
std::vector<IntVector> HermiteBasis(const IntMatrix& m);

// Canonical basis of the lattice generated by `vectors` in Z^ambient_dim.
LatticeBasis CanonicalBasis(std::size_t ambient_dim,
                            const std::vector<IntVector>& vectors);

// Z-basis of {v in Z^n : m v = 0} (saturated), in canonical form.
LatticeBasis KernelLatticeBasis(const IntMatrix& m);

// A Q-basis of the kernel, each vector scaled to a primitive integer vector.
// Uses reduced row echelon form over Q; suited to large-entry matrices where
// the unimodular transform of KernelLatticeBasis would blow up.
std::vector<IntVector> RationalKernel(const IntMatrix& m);

// gcd of the maximal minors of a full-column-rank matrix, i.e. the index of
// the row lattice in Z^cols. Throws kDegenerateDual when rank < cols.
Integer LatticeIndex(const IntMatrix& c);

// Some integer x with sum_i x_i * row_i(m) == target, or nullopt.
std::optional<IntVector> IntegerSolve(const IntMatrix& m,
                                      const IntVector& target);

// Smallest q >= 1 with q*w in the Z-span of the rows. Throws kNotInSpan when
// w is not in the Q-span.
Integer SmallestMultiplier(const IntMatrix& rows, const IntVector& w);

// Incremental Q-span of integer vectors, kept in echelon form with primitive
// rows. Cheap to copy for backtracking searches.
class Span {
 public:
  explicit Span(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}
  Span(std::size_t ambient_dim, const std::vector<IntVector>& generators);

  // Returns true if v was independent of the current span (rank grew).
  bool Insert(const IntVector& v);
  bool Contains(const IntVector& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_dim_; }

 private:
  IntVector Reduce(IntVector v) const;

  std::size_t ambient_dim_;
  std::vector<IntVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace discforge

#endif  // DISCFORGE_LATTICE_H_
