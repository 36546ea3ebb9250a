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

// Point configurations A (columns are points) and Gale configurations B (rows
// are vectors), with the duality between them.

#ifndef DISCFORGE_CONFIG_H_
#define DISCFORGE_CONFIG_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "discforge/lattice.h"
#include "discforge/numeric.h"

namespace discforge {

// Default labels x1..xn.
std::vector<std::string> DefaultLabels(std::size_t n);

// A d x n integer matrix of rank d with pairwise distinct columns.
class PointConfiguration {
 public:
  explicit PointConfiguration(IntMatrix a, std::vector<std::string> labels = {});

  // Builds a configuration from a matrix of possibly deficient rank by
  // replacing its rows with the Hermite basis of the row lattice.
  static PointConfiguration FromRowspan(const IntMatrix& m,
                                        std::vector<std::string> labels = {});

  const IntMatrix& matrix() const { return a_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t dim() const { return a_.rows(); }
  std::size_t size() const { return a_.cols(); }
  std::size_t codim() const { return a_.cols() - a_.rows(); }

  PointConfiguration SelectColumns(const std::vector<std::size_t>& cols) const;

 private:
  IntMatrix a_;
  std::vector<std::string> labels_;
};

// n vectors b_1..b_n in Z^m, stored as the rows of an n x m matrix. The rank
// may be below m for subconfigurations; the index is only defined at full
// column rank.
class GaleConfiguration {
 public:
  explicit GaleConfiguration(IntMatrix b, std::vector<std::string> labels = {});
  static GaleConfiguration FromRows(const std::vector<std::vector<long>>& rows,
                                    std::vector<std::string> labels = {});

  const IntMatrix& matrix() const { return b_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return b_.rows(); }
  std::size_t ambient_dim() const { return b_.cols(); }
  std::size_t rank() const { return rank_; }
  const std::optional<Integer>& index() const { return index_; }
  bool is_homogeneous() const { return homogeneous_; }
  bool has_zero_row() const;

  IntVector Row(std::size_t i) const { return b_.Row(i); }
  IntVector RowSum(const std::vector<std::size_t>& rows) const;
  GaleConfiguration Subconfiguration(const std::vector<std::size_t>& rows) const;

 private:
  IntMatrix b_;
  std::vector<std::string> labels_;
  std::size_t rank_ = 0;
  std::optional<Integer> index_;
  bool homogeneous_ = false;
};

bool IsHomogeneous(const PointConfiguration& cfg);

// Same Q-rowspan, first row all ones, remaining rows the Hermite basis of the
// saturated rowspan vectors with vanishing first coordinate.
PointConfiguration StandardForm(const PointConfiguration& cfg);

// Gale dual: columns are the canonical Z-basis of ker(A).
GaleConfiguration GaleDual(const PointConfiguration& cfg);

struct DualResult {
  PointConfiguration config;
  bool pyramid = false;  // some b_j = 0
};

// A dual configuration: rows span the saturated lattice orthogonal to the
// columns of B.
DualResult DualOf(const GaleConfiguration& g);

// Same Q-column-span, index 1. Returns `g` unchanged when its index is 1.
GaleConfiguration Saturate(const GaleConfiguration& g);

// True iff some Gale-dual row vanishes; n == d counts as a pyramid.
bool IsPyramid(const PointConfiguration& cfg);

// Cay(A_0, ..., A_k) in Z^{k+1} x Z^r, columns ordered part by part.
PointConfiguration Cayley(const std::vector<PointConfiguration>& parts);

// The segment [p] = {0, 1, ..., p} in Z.
PointConfiguration Segment(long p);

// Cay([p_0], ..., [p_k]).
PointConfiguration CayleyOfSegments(const std::vector<long>& lengths);

bool SameRowspan(const IntMatrix& a, const IntMatrix& b);

}  // namespace discforge

#endif  // DISCFORGE_CONFIG_H_
