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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>

#include "discforge/error.h"
#include "discforge/lattice.h"

namespace discforge {

std::size_t SizeBoundFromEnv() {
  const char* text = std::getenv("DISCFORGE_SIZE_BOUND");
  if (text == nullptr) return kDefaultSizeBound;
  char* end = nullptr;
  unsigned long v = std::strtoul(text, &end, 10);
  if (end == text || *end != '\0' || v == 0) return kDefaultSizeBound;
  return static_cast<std::size_t>(v);
}

namespace {

void CheckDefectInput(const GaleConfiguration& b) {
  if (b.size() == 0 || b.rank() == 0) {
    throw Error(ErrorCode::kPyramidInput, "empty Gale configuration");
  }
  if (!b.is_homogeneous()) {
    throw Error(ErrorCode::kNotHomogeneous, "Gale rows do not sum to zero");
  }
  if (b.has_zero_row()) {
    throw Error(ErrorCode::kPyramidInput,
                "zero Gale row: the dual configuration is a pyramid");
  }
}

// Two homogeneous rank-2 flats of the reduced configuration spanning
// complementary planes, mapped back to rows of b.
std::optional<std::vector<IndexSet>> ComplementaryPlanes(const Reduction& red) {
  const GaleConfiguration& r = red.reduced;
  for (const Flat& f : FlatsOfRank(r, 2)) {
    if (!IsZero(f.sigma)) continue;
    IndexSet rest;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (!std::binary_search(f.members.begin(), f.members.end(), i)) {
        rest.push_back(i);
      }
    }
    GaleConfiguration g = r.Subconfiguration(rest);
    if (g.rank() != 2 || !g.is_homogeneous()) continue;
    Span all(r.ambient_dim());
    for (std::size_t i : f.members) all.Insert(r.Row(i));
    for (std::size_t i : rest) all.Insert(r.Row(i));
    if (all.rank() != 4) continue;
    std::vector<IndexSet> parts(2);
    for (std::size_t i : f.members) {
      parts[0].insert(parts[0].end(), red.origin[i].begin(), red.origin[i].end());
    }
    for (std::size_t i : rest) {
      parts[1].insert(parts[1].end(), red.origin[i].begin(), red.origin[i].end());
    }
    std::sort(parts[0].begin(), parts[0].end());
    std::sort(parts[1].begin(), parts[1].end());
    return parts;
  }
  return std::nullopt;
}

}  // namespace

DefectReport IsDualDefect(const GaleConfiguration& b,
                          const DefectOptions& options) {
  CheckDefectInput(b);
  DefectReport report;
  const std::size_t m = b.rank();
  report.rank = m;
  std::optional<Flag> searched;
  bool searched_done = false;
  auto search = [&]() -> const std::optional<Flag>& {
    if (!searched_done) {
      searched = FindNonsplittingFlag(b, m - 1);
      searched_done = true;
    }
    return searched;
  };

  if (options.method == DefectMethod::kExhaustive) {
    report.method = "flag-search";
    report.defect = !search().has_value();
  } else if (m == 1) {
    // The only 0-flag is the empty one, which is vacuously non-splitting.
    report.method = "rank-one";
    report.defect = false;
  } else {
    Reduction red = Reduce(b);
    if (red.reduced.rank() < m) {
      report.method = "degenerate";
      report.defect = true;
    } else if (m <= 3) {
      report.method = "low-rank";
      report.defect = false;
    } else if (m == 4) {
      report.method = "complementary-planes";
      auto parts = ComplementaryPlanes(red);
      report.defect = parts.has_value();
      if (parts) report.witness_parts = *parts;
    } else {
      report.method = "flag-search";
      report.defect = !search().has_value();
    }
  }

  if (!report.defect) {
    const auto& flag = search();
    if (flag && IsNonsplittingFlag(b, *flag)) {
      report.witness_flag = flag;
    } else {
      report.checks_agreed = false;
    }
    report.dual_dim = static_cast<long>(b.size()) - 2;
  } else if (options.cross_check) {
    report.checks_agreed = !search().has_value();
  }
  return report;
}

namespace {

using Mask = std::uint64_t;

IndexSet MaskToSet(Mask s, std::size_t n) {
  IndexSet out;
  for (std::size_t i = 0; i < n; ++i) {
    if (s >> i & 1) out.push_back(i);
  }
  return out;
}

std::vector<long> SubsetRanks(const PointConfiguration& a) {
  const std::size_t n = a.size();
  std::vector<long> rank(std::size_t{1} << n, 0);
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    rank[s] = static_cast<long>(Rank(a.matrix().SelectColumns(MaskToSet(s, n))));
  }
  return rank;
}

void CheckSize(const PointConfiguration& a, std::size_t bound) {
  if (a.size() > bound || a.size() > 30) {
    throw Error(ErrorCode::kSizeBound,
                "support lattice of " + std::to_string(a.size()) +
                    " points exceeds the size bound " + std::to_string(bound));
  }
}

}  // namespace

SupportLattice BuildSupportLattice(const PointConfiguration& a,
                                   std::size_t bound) {
  CheckSize(a, bound);
  const std::size_t n = a.size();
  std::vector<long> rank = SubsetRanks(a);
  std::vector<std::pair<std::size_t, IndexSet>> found;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (s >> i & 1) ok = rank[s & ~(Mask{1} << i)] == rank[s];
    }
    if (!ok) continue;
    std::size_t r = static_cast<std::size_t>(std::popcount(s)) -
                    static_cast<std::size_t>(rank[s]);
    found.emplace_back(r, MaskToSet(s, n));
  }
  std::sort(found.begin(), found.end());
  SupportLattice out;
  out.n = n;
  for (auto& [r, s] : found) {
    out.ranks.push_back(r);
    out.elements.push_back(std::move(s));
  }
  return out;
}

long DualVarietyDim(const PointConfiguration& a, std::size_t bound) {
  if (!IsHomogeneous(a)) {
    throw Error(ErrorCode::kNotHomogeneous, "configuration is not homogeneous");
  }
  if (IsPyramid(a)) {
    throw Error(ErrorCode::kPyramidInput, "configuration is a pyramid");
  }
  SupportLattice lattice = BuildSupportLattice(a, bound);
  const std::size_t n = a.size();
  const std::size_t m = a.codim();
  // Elements bucketed by rank, as bitmasks.
  std::vector<std::vector<Mask>> level(m + 1);
  for (std::size_t e = 0; e < lattice.elements.size(); ++e) {
    Mask s = 0;
    for (std::size_t i : lattice.elements[e]) s |= Mask{1} << i;
    if (lattice.ranks[e] <= m) level[lattice.ranks[e]].push_back(s);
  }
  Span base(n);
  for (std::size_t i = 0; i < a.dim(); ++i) base.Insert(a.matrix().Row(i));
  const long ceiling = static_cast<long>(a.dim() + m) - 1;
  long best = -1;
  std::function<void(Mask, std::size_t, const Span&)> dfs =
      [&](Mask s, std::size_t depth, const Span& span) {
        if (best == ceiling) return;
        if (depth + 1 == m) {
          best = std::max(best, static_cast<long>(span.rank()));
          return;
        }
        if (static_cast<long>(span.rank() + (m - 1 - depth)) <= best) return;
        for (Mask t : level[depth + 1]) {
          if ((t & s) != s || t == s) continue;
          Span next = span;
          IntVector indicator(n);
          for (std::size_t i = 0; i < n; ++i) indicator[i] = (t >> i) & 1;
          next.Insert(indicator);
          dfs(t, depth + 1, next);
        }
      };
  if (m == 0) throw Error(ErrorCode::kNoChain, "no kernel: the lattice is trivial");
  dfs(0, 0, base);
  if (best < 0) throw Error(ErrorCode::kNoChain, "no proper maximal chain found");
  return best - 1;
}

RhoBound ComputeRhoBound(const GaleConfiguration& b) {
  RhoBound out;
  out.decomposition = Decompose(b, [](const GaleConfiguration& c) {
    return IsDualDefect(c).defect;
  });
  out.rho = out.decomposition.rho;
  out.sufficient_defect = out.rho <= static_cast<long>(b.rank()) - 2;
  return out;
}

std::vector<NamedConfiguration> DiRoccoFixtures() {
  const std::vector<std::vector<long>> lengths = {
      {1, 1, 1}, {1, 1, 2}, {1, 1, 1, 1}, {1, 2, 2},
      {1, 1, 3}, {1, 1, 1, 2}, {1, 1, 1, 1, 1},
  };
  std::vector<NamedConfiguration> out;
  for (const auto& ls : lengths) {
    std::string name = "Cay(";
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (i > 0) name += ",";
      name += "[" + std::to_string(ls[i]) + "]";
    }
    name += ")";
    out.push_back({name, CayleyOfSegments(ls)});
  }
  return out;
}

}  // namespace discforge
