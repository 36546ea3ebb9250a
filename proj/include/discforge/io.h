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

// JSON reading and writing for matrices, polynomials, reports and traces.
// Big integers are written as decimal strings and read from either strings
// or JSON numbers.

#ifndef DISCFORGE_IO_H_
#define DISCFORGE_IO_H_

#include <string>
#include <vector>

#include "discforge/config.h"
#include "discforge/defect.h"
#include "discforge/disc.h"
#include "discforge/lattice.h"
#include "discforge/matroid.h"
#include "discforge/poly.h"
#include "json.hpp"

namespace discforge {

using Json = nlohmann::ordered_json;

// Accepts [[...], ...] or {"matrix": [[...], ...]}. A 1-D array is read as a
// single column. Throws kParse.
IntMatrix MatrixFromJson(const Json& j);
// `text` is inline JSON, or else the path of a file holding it.
IntMatrix ReadMatrix(const std::string& text);
Json MatrixToJson(const IntMatrix& m);

std::vector<Rational> RationalsFromJson(const Json& j);

Json PolynomialToJson(const Polynomial& f);
Polynomial PolynomialFromJson(const Json& j);

Json ProvenanceToJson(const Provenance& p);

// Row indices are written 1-based.
Json IndexSetToJson(const IndexSet& s);
Json FlagToJson(const Flag& flag, const std::vector<std::string>& labels);
Json DefectReportToJson(const DefectReport& r,
                        const std::vector<std::string>& labels);
Json DecompositionToJson(const Decomposition& d,
                         const std::vector<std::string>& labels);

}  // namespace discforge

#endif  // DISCFORGE_IO_H_
