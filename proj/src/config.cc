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

#include "discforge/config.h"

#include <set>
#include <utility>

#include "discforge/error.h"

namespace discforge {

std::vector<std::string> DefaultLabels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
  return labels;
}

namespace {

std::vector<std::string> CheckLabels(std::vector<std::string> labels,
                                     std::size_t n) {
  if (labels.empty()) return DefaultLabels(n);
  if (labels.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "label count does not match size");
  }
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) {
    throw Error(ErrorCode::kInvalidArgument, "labels must be distinct");
  }
  return labels;
}

}  // namespace

PointConfiguration::PointConfiguration(IntMatrix a,
                                       std::vector<std::string> labels)
    : a_(std::move(a)), labels_(CheckLabels(std::move(labels), a_.cols())) {
  if (Rank(a_) != a_.rows()) {
    throw Error(ErrorCode::kRankDeficient,
                "point configuration must have rank equal to its row count");
  }
  std::set<IntVector> columns;
  for (std::size_t j = 0; j < a_.cols(); ++j) {
    if (!columns.insert(a_.Column(j)).second) {
      throw Error(ErrorCode::kDuplicateColumns,
                  "column " + std::to_string(j + 1) + " repeats an earlier point");
    }
  }
}

PointConfiguration PointConfiguration::FromRowspan(
    const IntMatrix& m, std::vector<std::string> labels) {
  std::vector<IntVector> rows = HermiteBasis(m);
  return PointConfiguration(IntMatrix::FromRows(rows, m.cols()),
                            std::move(labels));
}

PointConfiguration PointConfiguration::SelectColumns(
    const std::vector<std::size_t>& cols) const {
  std::vector<std::string> labels;
  for (std::size_t j : cols) labels.push_back(labels_[j]);
  return FromRowspan(a_.SelectColumns(cols), std::move(labels));
}

GaleConfiguration::GaleConfiguration(IntMatrix b,
                                     std::vector<std::string> labels)
    : b_(std::move(b)), labels_(CheckLabels(std::move(labels), b_.rows())) {
  rank_ = Rank(b_);
  if (rank_ == b_.cols() && rank_ > 0) index_ = LatticeIndex(b_);
  homogeneous_ = true;
  for (std::size_t j = 0; j < b_.cols() && homogeneous_; ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < b_.rows(); ++i) s += b_(i, j);
    homogeneous_ = (s == 0);
  }
}

GaleConfiguration GaleConfiguration::FromRows(
    const std::vector<std::vector<long>>& rows, std::vector<std::string> labels) {
  return GaleConfiguration(IntMatrix::FromRows(rows), std::move(labels));
}

bool GaleConfiguration::has_zero_row() const {
  for (std::size_t i = 0; i < b_.rows(); ++i) {
    if (IsZero(b_.Row(i))) return true;
  }
  return false;
}

IntVector GaleConfiguration::RowSum(const std::vector<std::size_t>& rows) const {
  IntVector s(b_.cols());
  for (std::size_t i : rows) {
    for (std::size_t j = 0; j < b_.cols(); ++j) s[j] += b_(i, j);
  }
  return s;
}

GaleConfiguration GaleConfiguration::Subconfiguration(
    const std::vector<std::size_t>& rows) const {
  std::vector<std::string> labels;
  for (std::size_t i : rows) labels.push_back(labels_[i]);
  IntMatrix sub = b_.SelectRows(rows);
  if (rows.empty()) sub = IntMatrix(0, b_.cols());
  return GaleConfiguration(std::move(sub), std::move(labels));
}

bool IsHomogeneous(const PointConfiguration& cfg) {
  IntMatrix ones(1, cfg.size());
  for (std::size_t j = 0; j < cfg.size(); ++j) ones(0, j) = 1;
  return Rank(cfg.matrix().StackBelow(ones)) == cfg.dim();
}

PointConfiguration StandardForm(const PointConfiguration& cfg) {
  if (!IsHomogeneous(cfg)) {
    throw Error(ErrorCode::kNotHomogeneous,
                "(1,...,1) is not in the rowspan of the configuration");
  }
  const std::size_t n = cfg.size();
  // Saturated rowspan lattice L = ker(B^T); L = Z*ones + {v in L : v_1 = 0}.
  LatticeBasis kernel = KernelLatticeBasis(cfg.matrix());
  IntMatrix constraints = kernel.AsColumns().Transpose();
  IntMatrix first(1, n);
  first(0, 0) = 1;
  LatticeBasis rest = KernelLatticeBasis(constraints.StackBelow(first));
  IntMatrix out(1, n);
  for (std::size_t j = 0; j < n; ++j) out(0, j) = 1;
  if (!rest.vectors.empty()) out = out.StackBelow(IntMatrix::FromRows(rest.vectors));
  return PointConfiguration(std::move(out), cfg.labels());
}

GaleConfiguration GaleDual(const PointConfiguration& cfg) {
  LatticeBasis kernel = KernelLatticeBasis(cfg.matrix());
  IntMatrix b = kernel.AsColumns();
  if (kernel.vectors.empty()) b = IntMatrix(cfg.size(), 0);
  return GaleConfiguration(std::move(b), cfg.labels());
}

DualResult DualOf(const GaleConfiguration& g) {
  LatticeBasis orth = KernelLatticeBasis(g.matrix().Transpose());
  IntMatrix a = IntMatrix::FromRows(orth.vectors, g.size());
  return DualResult{PointConfiguration(std::move(a), g.labels()),
                    g.has_zero_row()};
}

GaleConfiguration Saturate(const GaleConfiguration& g) {
  if (g.index() && *g.index() == 1) return g;
  LatticeBasis orth = KernelLatticeBasis(g.matrix().Transpose());
  IntMatrix a = IntMatrix::FromRows(orth.vectors, g.size());
  LatticeBasis sat = KernelLatticeBasis(a);
  IntMatrix b = sat.AsColumns();
  if (sat.vectors.empty()) b = IntMatrix(g.size(), 0);
  return GaleConfiguration(std::move(b), g.labels());
}

bool IsPyramid(const PointConfiguration& cfg) {
  if (cfg.size() == cfg.dim()) return true;
  return GaleDual(cfg).has_zero_row();
}

PointConfiguration Cayley(const std::vector<PointConfiguration>& parts) {
  if (parts.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "Cayley configuration of no parts");
  }
  const std::size_t r = parts.front().dim();
  std::size_t n = 0;
  for (const auto& p : parts) {
    if (p.dim() != r) {
      throw Error(ErrorCode::kInvalidArgument,
                  "Cayley parts must share the ambient dimension");
    }
    n += p.size();
  }
  const std::size_t k = parts.size();
  IntMatrix out(k + r, n);
  std::size_t col = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const IntMatrix& a = parts[i].matrix();
    for (std::size_t j = 0; j < a.cols(); ++j, ++col) {
      out(i, col) = 1;
      for (std::size_t t = 0; t < r; ++t) out(k + t, col) = a(t, j);
    }
  }
  return PointConfiguration(std::move(out));
}

PointConfiguration Segment(long p) {
  if (p < 1) throw Error(ErrorCode::kInvalidArgument, "segment length must be >= 1");
  IntMatrix a(1, static_cast<std::size_t>(p) + 1);
  for (long j = 0; j <= p; ++j) a(0, static_cast<std::size_t>(j)) = j;
  return PointConfiguration(std::move(a));
}

PointConfiguration CayleyOfSegments(const std::vector<long>& lengths) {
  std::vector<PointConfiguration> parts;
  for (long p : lengths) parts.push_back(Segment(p));
  return Cayley(parts);
}

bool SameRowspan(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return false;
  const std::size_t ra = Rank(a);
  return ra == Rank(b) && Rank(a.StackBelow(b)) == ra;
}

}  // namespace discforge
