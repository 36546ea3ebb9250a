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

#include "discforge/defect.h"

#include <gtest/gtest.h>

#include <cstdlib>

#include "discforge/config.h"
#include "discforge/error.h"
#include "oracles.h"

namespace discforge {
namespace {

IntMatrix Rows(const std::vector<std::vector<long>>& rows) {
  return IntMatrix::FromRows(rows);
}

TEST(DefectTest, DiRoccoListIsDefect) {
  for (const NamedConfiguration& nc : DiRoccoFixtures()) {
    DefectReport r = IsDualDefect(GaleDual(nc.config), {DefectMethod::kAuto, true});
    EXPECT_TRUE(r.defect) << nc.name;
    EXPECT_TRUE(r.checks_agreed) << nc.name;
  }
}

TEST(DefectTest, NonDefectWitnessIsFlag) {
  GaleConfiguration b = GaleConfiguration::FromRows(
      {{0, 1}, {-3, 1}, {2, -3}, {-1, 1}, {1, 0}, {3, 0}, {-2, 0}});
  DefectReport r = IsDualDefect(b, {DefectMethod::kExhaustive, false});
  EXPECT_FALSE(r.defect);
  EXPECT_EQ(r.dual_dim, 5);
  ASSERT_TRUE(r.witness_flag.has_value());
}

TEST(DefectTest, RankOneIsNeverDefect) {
  EXPECT_FALSE(IsDualDefect(GaleConfiguration(Rows({{1}, {-2}, {1}}))).defect);
}

TEST(DefectTest, DegenerateIsDefect) {
  GaleConfiguration b =
      GaleConfiguration::FromRows({{1, 0}, {-1, 0}, {0, 1}, {0, 2}, {0, -3}});
  DefectReport r = IsDualDefect(b);
  EXPECT_TRUE(r.defect);
  EXPECT_EQ(r.method, "degenerate");
}

TEST(DefectTest, PyramidRejected) {
  EXPECT_THROW(IsDualDefect(GaleConfiguration(Rows({{1}, {2}, {-3}, {0}}))), Error);
}

TEST(DualDimTest, MatchesJacobianOracle) {
  std::vector<PointConfiguration> cases;
  for (const NamedConfiguration& nc : DiRoccoFixtures()) cases.push_back(nc.config);
  cases.push_back(CayleyOfSegments({2, 2, 2}));
  cases.push_back(PointConfiguration(Rows({{1, 1, 1, 1}, {0, 1, 2, 3}})));
  cases.push_back(PointConfiguration(Rows({{1, 1, 1, 1, 1}, {0, 1, 0, 1, 2}, {0, 0, 1, 1, 0}})));
  for (const PointConfiguration& a : cases) {
    GaleConfiguration b = GaleDual(a);
    EXPECT_EQ(DualVarietyDim(a), oracle::JacobianDualDim(a.matrix(), b.matrix(), 17));
  }
}

TEST(DualDimTest, SizeBoundEnforced) {
  PointConfiguration a = CayleyOfSegments({2, 2, 2});
  EXPECT_THROW(DualVarietyDim(a, 8), Error);
}

TEST(DualDimTest, EnvironmentOverride) {
  setenv("DISCFORGE_SIZE_BOUND", "5", 1);
  EXPECT_EQ(SizeBoundFromEnv(), 5u);
  unsetenv("DISCFORGE_SIZE_BOUND");
  EXPECT_EQ(SizeBoundFromEnv(), kDefaultSizeBound);
}

TEST(SupportLatticeTest, CircuitsOfTwistedCubic) {
  SupportLattice l = BuildSupportLattice(PointConfiguration(Rows({{1, 1, 1, 1}, {0, 1, 2, 3}})));
  // Every 3-subset of 4 points on a line is a circuit; the full set has rank 2.
  std::size_t circuits = 0;
  for (std::size_t i = 0; i < l.elements.size(); ++i) {
    if (l.ranks[i] == 1) {
      EXPECT_EQ(l.elements[i].size(), 3u);
      ++circuits;
    }
  }
  EXPECT_EQ(circuits, 4u);
}

TEST(RhoTest, Cay222) {
  RhoBound r = ComputeRhoBound(GaleDual(CayleyOfSegments({2, 2, 2})));
  EXPECT_EQ(r.rho, 3);
  EXPECT_TRUE(r.sufficient_defect);
  ASSERT_EQ(r.decomposition.parts.size(), 3u);
}

TEST(RhoTest, NonDefectNotCertified) {
  RhoBound r = ComputeRhoBound(GaleConfiguration::FromRows({{1, 0}, {-2, 1}, {1, -2}, {0, 1}}));
  EXPECT_FALSE(r.sufficient_defect);
}

}  // namespace
}  // namespace discforge
