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

// Deciding whether a toric variety is dual defect from its Gale
// configuration, and computing the dimension of its dual variety from the
// lattice of kernel supports.

#ifndef DISCFORGE_DEFECT_H_
#define DISCFORGE_DEFECT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "discforge/config.h"
#include "discforge/matroid.h"

namespace discforge {

constexpr std::size_t kDefaultSizeBound = 12;

// DISCFORGE_SIZE_BOUND if set to a positive integer, else kDefaultSizeBound.
std::size_t SizeBoundFromEnv();

enum class DefectMethod {
  kAuto,        // rank-based shortcuts first, flag search otherwise
  kExhaustive,  // always search for a non-splitting (m-1)-flag
};

struct DefectOptions {
  DefectMethod method = DefectMethod::kAuto;
  // Also run the exhaustive flag search and record whether it agrees.
  bool cross_check = false;
};

struct DefectReport {
  bool defect = false;
  // "rank-one", "degenerate", "low-rank", "complementary-planes",
  // "flag-search".
  std::string method;
  std::size_t rank = 0;
  // Non-defect: a verified non-splitting (m-1)-flag.
  std::optional<Flag> witness_flag;
  // Defect by complementary planes: the two parts, as rows of the input.
  std::vector<IndexSet> witness_parts;
  std::optional<long> dual_dim;
  bool checks_agreed = true;
};

// Throws kNotHomogeneous, or kPyramidInput for zero rows and empty input.
DefectReport IsDualDefect(const GaleConfiguration& b,
                          const DefectOptions& options = {});

// Elements of the lattice of supports of ker(A), each with its rank
// |S| - rank(A_S). Sorted by rank, then lexicographically.
struct SupportLattice {
  std::size_t n = 0;
  std::vector<IndexSet> elements;
  std::vector<std::size_t> ranks;
};

// S is a support iff no i in S is a coloop of the columns A_S.
// Throws kSizeBound when n exceeds `bound`.
SupportLattice BuildSupportLattice(const PointConfiguration& a,
                                   std::size_t bound = kDefaultSizeBound);

// One less than the largest rank of (A^T | 1_S1 | ... | 1_S(m-1)) over the
// proper maximal chains S1 ⊂ ... ⊂ S(m-1) of the support lattice.
long DualVarietyDim(const PointConfiguration& a,
                    std::size_t bound = kDefaultSizeBound);

struct RhoBound {
  long rho = 0;
  bool sufficient_defect = false;  // rho <= m - 2
  Decomposition decomposition;
};

// Decomposes a homogeneous irreducible configuration and evaluates rho.
RhoBound ComputeRhoBound(const GaleConfiguration& b);

struct NamedConfiguration {
  std::string name;
  PointConfiguration config;
};

// The smooth dual defect Cayley configurations of codimension at most four.
std::vector<NamedConfiguration> DiRoccoFixtures();

}  // namespace discforge

#endif  // DISCFORGE_DEFECT_H_
