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

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "discforge/error.h"
#include "discforge/lattice.h"

namespace discforge {

IntVector LineDirection(const IntVector& v) {
  IntVector d = PrimitivePart(v);
  for (const Integer& x : d) {
    if (x != 0) {
      if (x < 0) d = -d;
      break;
    }
  }
  return d;
}

bool ArePositiveMultiples(const IntVector& u, const IntVector& v) {
  if (IsZero(u) || IsZero(v)) return false;
  return PrimitivePart(u) == PrimitivePart(v);
}

CollinearClasses CollinearClassesOf(const GaleConfiguration& b) {
  CollinearClasses out;
  std::map<IntVector, std::size_t> slot;
  for (std::size_t i = 0; i < b.size(); ++i) {
    IntVector row = b.Row(i);
    if (IsZero(row)) {
      out.zero_rows.push_back(i);
      continue;
    }
    auto [it, inserted] = slot.emplace(LineDirection(row), out.classes.size());
    if (inserted) out.classes.emplace_back();
    out.classes[it->second].push_back(i);
  }
  return out;
}

std::vector<IndexSet> SplittingLines(const GaleConfiguration& b) {
  std::vector<IndexSet> out;
  for (const IndexSet& cls : CollinearClassesOf(b).classes) {
    if (IsZero(b.RowSum(cls))) out.push_back(cls);
  }
  return out;
}

Reduction Reduce(const GaleConfiguration& b) {
  std::vector<IntVector> rows;
  std::vector<std::string> labels;
  std::vector<IndexSet> origin;
  for (const IndexSet& cls : CollinearClassesOf(b).classes) {
    IntVector s = b.RowSum(cls);
    if (IsZero(s)) continue;
    std::string label;
    for (std::size_t i : cls) {
      if (!label.empty()) label += "+";
      label += b.labels()[i];
    }
    rows.push_back(std::move(s));
    labels.push_back(std::move(label));
    origin.push_back(cls);
  }
  IntMatrix m = IntMatrix::FromRows(rows, b.ambient_dim());
  return Reduction{GaleConfiguration(std::move(m), std::move(labels)),
                   std::move(origin)};
}

bool IsIrreducible(const GaleConfiguration& b) {
  CollinearClasses cc = CollinearClassesOf(b);
  if (!cc.zero_rows.empty()) return false;
  for (const IndexSet& cls : cc.classes) {
    if (cls.size() > 1) return false;
  }
  return true;
}

bool IsDegenerate(const GaleConfiguration& b) {
  return Reduce(b).reduced.rank() < b.rank();
}

namespace {

std::vector<IntVector> RowsOf(const GaleConfiguration& b) {
  return b.matrix().RowList();
}

Flat FlatOfSpan(const std::vector<IntVector>& rows, const Span& span) {
  Flat f;
  f.rank = span.rank();
  f.sigma = IntVector(span.ambient_dim());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!IsZero(rows[i]) && span.Contains(rows[i])) {
      f.members.push_back(i);
      f.sigma = f.sigma + rows[i];
    }
  }
  return f;
}

Span SpanOf(const std::vector<IntVector>& rows, const IndexSet& s,
            std::size_t dim) {
  Span span(dim);
  for (std::size_t i : s) span.Insert(rows[i]);
  return span;
}

class FlagSearch {
 public:
  FlagSearch(const GaleConfiguration& b, std::size_t k)
      : rows_(RowsOf(b)), dim_(b.ambient_dim()), k_(k) {}

  std::optional<Flag> Run() {
    Flag flag;
    Flat empty{{}, 0, IntVector(dim_)};
    if (Extend(empty, Span(dim_), flag)) return flag;
    return std::nullopt;
  }

 private:
  bool Extend(const Flat& prev, const Span& prev_span, Flag& flag) {
    if (prev.rank == k_) return true;
    std::set<IndexSet> tried;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (IsZero(rows_[i]) ||
          std::binary_search(prev.members.begin(), prev.members.end(), i)) {
        continue;
      }
      Span span = prev_span;
      span.Insert(rows_[i]);
      Flat next = FlatOfSpan(rows_, span);
      if (!tried.insert(next.members).second) continue;
      if (dead_.count(next.members)) continue;
      if (prev_span.Contains(next.sigma)) continue;
      flag.push_back(next);
      if (Extend(next, span, flag)) return true;
      flag.pop_back();
      dead_.insert(next.members);
    }
    return false;
  }

  std::vector<IntVector> rows_;
  std::size_t dim_;
  std::size_t k_;
  std::set<IndexSet> dead_;
};

void ForEachSubset(std::size_t n, std::size_t k,
                   const std::function<void(const IndexSet&)>& visit) {
  IndexSet idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Flat Closure(const GaleConfiguration& b, const IndexSet& s) {
  std::vector<IntVector> rows = RowsOf(b);
  return FlatOfSpan(rows, SpanOf(rows, s, b.ambient_dim()));
}

GaleConfiguration HomogenizeFlat(const GaleConfiguration& b, const Flat& f) {
  std::vector<IntVector> rows;
  std::vector<std::string> labels;
  for (std::size_t i : f.members) {
    rows.push_back(b.Row(i));
    labels.push_back(b.labels()[i]);
  }
  if (!IsZero(f.sigma)) {
    rows.push_back(-f.sigma);
    labels.push_back("-sigma");
  }
  return GaleConfiguration(IntMatrix::FromRows(rows, b.ambient_dim()),
                           std::move(labels));
}

std::vector<Flat> FlatsOfRank(const GaleConfiguration& b, std::size_t k) {
  std::vector<IntVector> rows = RowsOf(b);
  if (k == 0) return {Flat{{}, 0, IntVector(b.ambient_dim())}};
  IndexSet nonzero;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!IsZero(rows[i])) nonzero.push_back(i);
  }
  std::map<IndexSet, Flat> found;
  ForEachSubset(nonzero.size(), k, [&](const IndexSet& pick) {
    Span span(b.ambient_dim());
    for (std::size_t p : pick) {
      if (!span.Insert(rows[nonzero[p]])) return;
    }
    Flat f = FlatOfSpan(rows, span);
    found.emplace(f.members, std::move(f));
  });
  std::vector<Flat> out;
  for (auto& [key, f] : found) out.push_back(std::move(f));
  return out;
}

bool IsNonsplittingFlag(const GaleConfiguration& b, const Flag& flag) {
  std::vector<IntVector> rows = RowsOf(b);
  Span prev(b.ambient_dim());
  for (std::size_t j = 0; j < flag.size(); ++j) {
    const Flat& f = flag[j];
    Span span = SpanOf(rows, f.members, b.ambient_dim());
    if (span.rank() != j + 1 || f.rank != j + 1) return false;
    if (FlatOfSpan(rows, span).members != f.members) return false;
    if (prev.Contains(f.sigma)) return false;
    for (std::size_t i : (j == 0 ? IndexSet{} : flag[j - 1].members)) {
      if (!std::binary_search(f.members.begin(), f.members.end(), i)) return false;
    }
    prev = span;
  }
  return true;
}

std::optional<Flag> FindNonsplittingFlag(const GaleConfiguration& b,
                                         std::size_t k) {
  if (k > b.rank()) return std::nullopt;
  return FlagSearch(b, k).Run();
}

Decomposition Decompose(const GaleConfiguration& b,
                        const DefectPredicate& is_defect) {
  if (!b.is_homogeneous()) {
    throw Error(ErrorCode::kNotHomogeneous, "decompose needs homogeneous input");
  }
  if (!IsIrreducible(b)) {
    throw Error(ErrorCode::kNotIrreducible,
                "decompose needs an irreducible configuration");
  }
  Decomposition out;
  IndexSet remaining(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) remaining[i] = i;
  while (!remaining.empty()) {
    GaleConfiguration rest = b.Subconfiguration(remaining);
    if (!is_defect(rest)) {
      out.parts.push_back(remaining);
      out.ranks.push_back(rest.rank());
      break;
    }
    std::optional<IndexSet> part;
    std::size_t part_rank = 0;
    for (std::size_t k = rest.rank(); k-- > 2 && !part;) {
      for (const Flat& f : FlatsOfRank(rest, k)) {
        if (!IsZero(f.sigma)) continue;
        if (is_defect(rest.Subconfiguration(f.members))) continue;
        part = f.members;
        part_rank = k;
        break;
      }
    }
    if (!part) {
      throw Error(ErrorCode::kInternal,
                  "no homogeneous non-defect flat in a defect configuration");
    }
    IndexSet chosen, left;
    for (std::size_t p = 0; p < remaining.size(); ++p) {
      if (std::binary_search(part->begin(), part->end(), p)) {
        chosen.push_back(remaining[p]);
      } else {
        left.push_back(remaining[p]);
      }
    }
    out.parts.push_back(std::move(chosen));
    out.ranks.push_back(part_rank);
    remaining = std::move(left);
  }
  for (std::size_t r : out.ranks) out.rho += static_cast<long>(r);
  out.rho -= static_cast<long>(out.parts.size());
  return out;
}

}  // namespace discforge
