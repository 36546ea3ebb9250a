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

// The matroid of a Gale configuration: lines through the origin, the
// irreducible reduction, flats, non-splitting flags and the decomposition
// into homogeneous non-defect flats.

#ifndef DISCFORGE_MATROID_H_
#define DISCFORGE_MATROID_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "discforge/config.h"
#include "discforge/numeric.h"

namespace discforge {

using IndexSet = std::vector<std::size_t>;  // sorted, 0-based row indices

// A flat F = B ∩ <F>, with its rank and sigma(F) = sum of its members.
struct Flat {
  IndexSet members;
  std::size_t rank = 0;
  IntVector sigma;

  friend bool operator==(const Flat&, const Flat&) = default;
};

// F_1 ⊂ ... ⊂ F_k with rank(F_j) = j.
using Flag = std::vector<Flat>;

struct CollinearClasses {
  std::vector<IndexSet> classes;  // ordered by smallest member
  IndexSet zero_rows;
};

CollinearClasses CollinearClassesOf(const GaleConfiguration& b);

// Classes whose vectors sum to zero.
std::vector<IndexSet> SplittingLines(const GaleConfiguration& b);

// Primitive generator of the line through v, oriented so that its first
// nonzero entry is positive.
IntVector LineDirection(const IntVector& v);

// True iff u = c v for some rational c > 0.
bool ArePositiveMultiples(const IntVector& u, const IntVector& v);

struct Reduction {
  GaleConfiguration reduced;
  // origin[i] lists the rows of the input summed into row i of `reduced`.
  std::vector<IndexSet> origin;
};

// Drops zero rows and splitting lines and replaces every other collinear
// class by its sum. The result is irreducible.
Reduction Reduce(const GaleConfiguration& b);

// No zero rows and no two collinear rows.
bool IsIrreducible(const GaleConfiguration& b);

// rank(Reduce(B)) < rank(B).
bool IsDegenerate(const GaleConfiguration& b);

// B ∩ <S>. Zero rows are never members.
Flat Closure(const GaleConfiguration& b, const IndexSet& s);

// The rows of F followed by -sigma(F) when sigma(F) != 0, so the result is
// homogeneous. The extra row is labelled "-sigma".
GaleConfiguration HomogenizeFlat(const GaleConfiguration& b, const Flat& f);

// All rank-k flats, sorted lexicographically by member set.
std::vector<Flat> FlatsOfRank(const GaleConfiguration& b, std::size_t k);

// sigma(F_j) not in <F_{j-1}> for every j, with F_0 = {}.
bool IsNonsplittingFlag(const GaleConfiguration& b, const Flag& flag);

// Depth-first search for a non-splitting k-flag, extending each flat by the
// closure with one more vector in index order. The first flag found in that
// order is returned. k = 0 yields the empty flag.
std::optional<Flag> FindNonsplittingFlag(const GaleConfiguration& b,
                                         std::size_t k);

struct Decomposition {
  std::vector<IndexSet> parts;
  std::vector<std::size_t> ranks;
  long rho = 0;  // sum of ranks minus number of parts
};

using DefectPredicate = std::function<bool(const GaleConfiguration&)>;

// Greedy decomposition of a homogeneous irreducible configuration into
// disjoint homogeneous non-defect parts, each a flat of the union of itself
// and the later parts. Candidate parts are taken by decreasing rank, ties
// broken by the lexicographically smallest member set.
Decomposition Decompose(const GaleConfiguration& b,
                        const DefectPredicate& is_defect);

}  // namespace discforge

#endif  // DISCFORGE_MATROID_H_
