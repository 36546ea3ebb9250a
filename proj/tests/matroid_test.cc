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

#include "discforge/matroid.h"

#include <gtest/gtest.h>

#include <set>

#include "discforge/config.h"
#include "discforge/defect.h"
#include "discforge/error.h"
#include "oracles.h"

namespace discforge {
namespace {

GaleConfiguration SevenVectors() {
  return GaleConfiguration::FromRows(
      {{0, 1}, {-3, 1}, {2, -3}, {-1, 1}, {1, 0}, {3, 0}, {-2, 0}});
}

std::size_t SubsetRank(const GaleConfiguration& b, const IndexSet& s) {
  oracle::RatMatrix m;
  for (std::size_t i : s) m.push_back(oracle::ToRat(b.matrix().SelectRows({i}))[0]);
  return m.empty() ? 0 : oracle::RationalRank(m);
}

// A subset is a flat when adding any outside row raises its rank.
std::set<IndexSet> BruteFlats(const GaleConfiguration& b, std::size_t k) {
  std::set<IndexSet> flats;
  std::size_t n = b.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    IndexSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    std::size_t r = SubsetRank(b, s);
    if (r != k) continue;
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i) {
      if (mask >> i & 1) continue;
      IndexSet t = s;
      t.push_back(i);
      std::sort(t.begin(), t.end());
      if (SubsetRank(b, t) == r) closed = false;
    }
    if (closed) flats.insert(s);
  }
  return flats;
}

TEST(CollinearTest, SevenVectors) {
  GaleConfiguration b = SevenVectors();
  CollinearClasses c = CollinearClassesOf(b);
  ASSERT_EQ(c.classes.size(), 5u);
  EXPECT_EQ(c.classes[4], (IndexSet{4, 5, 6}));
  EXPECT_TRUE(c.zero_rows.empty());
  EXPECT_TRUE(SplittingLines(b).empty());
}

TEST(CollinearTest, SplittingLineDetected) {
  GaleConfiguration b =
      GaleConfiguration::FromRows({{1, 0}, {-1, 0}, {0, 1}, {1, 1}, {-1, -2}});
  std::vector<IndexSet> lines = SplittingLines(b);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0], (IndexSet{0, 1}));
}

TEST(ReduceTest, MergesCollinearRows) {
  Reduction r = Reduce(SevenVectors());
  EXPECT_EQ(r.reduced.size(), 5u);
  EXPECT_EQ(r.reduced.Row(4), ToIntVector({2, 0}));
  EXPECT_EQ(r.reduced.labels()[4], "x5+x6+x7");
  EXPECT_EQ(r.origin[4], (IndexSet{4, 5, 6}));
  EXPECT_TRUE(IsIrreducible(r.reduced));
  EXPECT_FALSE(IsIrreducible(SevenVectors()));
}

TEST(ReduceTest, Degenerate) {
  GaleConfiguration b =
      GaleConfiguration::FromRows({{1, 0}, {-1, 0}, {0, 1}, {0, 2}, {0, -3}});
  EXPECT_TRUE(IsDegenerate(b));
  EXPECT_FALSE(IsDegenerate(SevenVectors()));
}

TEST(ReduceTest, Idempotent) {
  for (auto lengths : std::vector<std::vector<long>>{{1, 1, 1}, {1, 2, 2}, {2, 2, 2}}) {
    GaleConfiguration r = Reduce(GaleDual(CayleyOfSegments(lengths))).reduced;
    EXPECT_EQ(Reduce(r).reduced.matrix(), r.matrix());
  }
}

TEST(FlatsTest, MatchBruteForce) {
  std::vector<GaleConfiguration> cases = {
      GaleDual(CayleyOfSegments({2, 2, 2})), GaleDual(CayleyOfSegments({1, 1, 2})),
      SevenVectors()};
  for (const GaleConfiguration& b : cases) {
    for (std::size_t k = 1; k < b.rank(); ++k) {
      std::set<IndexSet> got;
      for (const Flat& f : FlatsOfRank(b, k)) {
        got.insert(f.members);
        EXPECT_EQ(f.rank, k);
        EXPECT_EQ(f.sigma, b.RowSum(f.members));
      }
      EXPECT_EQ(got, BruteFlats(b, k)) << "rank " << k;
    }
  }
}

TEST(FlatsTest, Closure) {
  Flat f = Closure(SevenVectors(), {4});
  EXPECT_EQ(f.members, (IndexSet{4, 5, 6}));
  EXPECT_EQ(f.sigma, ToIntVector({2, 0}));
}

TEST(FlagTest, SevenVectorsHasNonsplittingFlag) {
  GaleConfiguration b = SevenVectors();
  auto flag = FindNonsplittingFlag(b, 1);
  ASSERT_TRUE(flag.has_value());
  EXPECT_TRUE(IsNonsplittingFlag(b, *flag));
}

TEST(FlagTest, CayleyOfPointsHasNone) {
  GaleConfiguration b = GaleDual(CayleyOfSegments({1, 1, 1}));
  EXPECT_FALSE(FindNonsplittingFlag(b, b.rank() - 1).has_value());
}

TEST(DecomposeTest, Cay222SplitsIntoSegments) {
  GaleConfiguration b = GaleDual(CayleyOfSegments({2, 2, 2}));
  Decomposition d = Decompose(
      b, [](const GaleConfiguration& c) { return IsDualDefect(c).defect; });
  std::size_t covered = 0;
  for (const IndexSet& p : d.parts) covered += p.size();
  EXPECT_EQ(covered, b.size());
  EXPECT_EQ(d.rho, 3);
}

TEST(DecomposeTest, InvariantsOnCayleyConfigurations) {
  for (auto lengths : std::vector<std::vector<long>>{{2, 2, 2}, {1, 2, 2}, {1, 1, 3}}) {
    GaleConfiguration b = Reduce(GaleDual(CayleyOfSegments(lengths))).reduced;
    Decomposition d = Decompose(
        b, [](const GaleConfiguration& c) { return IsDualDefect(c).defect; });
    std::set<std::size_t> seen;
    for (std::size_t p = 0; p < d.parts.size(); ++p) {
      EXPECT_TRUE(IsZero(b.RowSum(d.parts[p])));
      for (std::size_t i : d.parts[p]) EXPECT_TRUE(seen.insert(i).second);
    }
    EXPECT_EQ(seen.size(), b.size());
    EXPECT_FALSE(FindNonsplittingFlag(b, static_cast<std::size_t>(d.rho) + 1).has_value());
  }
}

TEST(DecomposeTest, Cay122HasTwoRankTwoParts) {
  GaleConfiguration b = Reduce(GaleDual(CayleyOfSegments({1, 2, 2}))).reduced;
  Decomposition d = Decompose(
      b, [](const GaleConfiguration& c) { return IsDualDefect(c).defect; });
  ASSERT_EQ(d.parts.size(), 2u);
  EXPECT_EQ(d.ranks, (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(d.parts[0].size(), 3u);
  EXPECT_EQ(d.rho, 2);
}

TEST(HomogenizeTest, AppendsNegatedSum) {
  GaleConfiguration b = SevenVectors();
  GaleConfiguration h = HomogenizeFlat(b, Closure(b, {4}));
  EXPECT_EQ(h.size(), 4u);
  EXPECT_EQ(h.Row(3), ToIntVector({-2, 0}));
  EXPECT_TRUE(h.is_homogeneous());
}

}  // namespace
}  // namespace discforge
