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

#include "discforge/io.h"

#include <fstream>
#include <sstream>

#include "discforge/error.h"

namespace discforge {

namespace {

Integer IntegerFromJson(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<unsigned long>())
                                  : Integer(j.get<long>());
  }
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) {
      throw Error(ErrorCode::kParse, "not an integer: " + j.get<std::string>());
    }
    return z;
  }
  throw Error(ErrorCode::kParse, "expected an integer, got " + j.dump());
}

Json IntegerToJson(const Integer& z) { return z.get_str(); }

}  // namespace

IntMatrix MatrixFromJson(const Json& j) {
  const Json& body = j.is_object() ? j.at("matrix") : j;
  if (!body.is_array()) throw Error(ErrorCode::kParse, "matrix must be an array");
  std::vector<IntVector> rows;
  bool column = !body.empty() && !body.front().is_array();
  for (const Json& r : body) {
    IntVector row;
    if (column) {
      row.push_back(IntegerFromJson(r));
    } else {
      if (!r.is_array()) throw Error(ErrorCode::kParse, "matrix rows must be arrays");
      for (const Json& x : r) row.push_back(IntegerFromJson(x));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorCode::kParse, "matrix rows have different lengths");
    }
    rows.push_back(std::move(row));
  }
  return IntMatrix::FromRows(rows);
}

IntMatrix ReadMatrix(const std::string& text) {
  std::string body = text;
  std::size_t first = body.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (body[first] != '[' && body[first] != '{')) {
    std::ifstream in(text);
    if (!in) throw Error(ErrorCode::kParse, "cannot read matrix file " + text);
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  Json j;
  try {
    j = Json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
  }
  try {
    return MatrixFromJson(j);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed matrix: ") + e.what());
  }
}

Json MatrixToJson(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(IntegerToJson(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"matrix", std::move(rows)}};
}

std::vector<Rational> RationalsFromJson(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "point must be an array");
  std::vector<Rational> out;
  for (const Json& x : j) {
    if (x.is_string()) {
      out.push_back(ParseRational(x.get<std::string>()));
    } else {
      out.push_back(Rational(IntegerFromJson(x)));
    }
  }
  return out;
}

Json PolynomialToJson(const Polynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    terms.push_back(Json{{"coeff", c.get_str()}, {"exps", e}});
  }
  return Json{{"vars", f.vars()}, {"terms", std::move(terms)}};
}

Polynomial PolynomialFromJson(const Json& j) {
  try {
    Polynomial f(j.at("vars").get<std::vector<std::string>>());
    for (const Json& t : j.at("terms")) {
      Exponent e = t.at("exps").get<Exponent>();
      if (e.size() != f.nvars()) {
        throw Error(ErrorCode::kParse, "exponent vector has the wrong length");
      }
      f.AddTerm(e, IntegerFromJson(t.at("coeff")));
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed polynomial: ") + e.what());
  }
}

Json ProvenanceToJson(const Provenance& p) {
  Json facts = Json::object();
  for (const auto& [k, v] : p.facts) facts[k] = v;
  Json children = Json::array();
  for (const Provenance& c : p.children) children.push_back(ProvenanceToJson(c));
  return Json{{"step", p.step}, {"facts", std::move(facts)},
              {"children", std::move(children)}};
}

Json IndexSetToJson(const IndexSet& s) {
  Json out = Json::array();
  for (std::size_t i : s) out.push_back(i + 1);
  return out;
}

Json FlagToJson(const Flag& flag, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (const Flat& f : flag) {
    Json names = Json::array();
    for (std::size_t i : f.members) names.push_back(labels[i]);
    Json sigma = Json::array();
    for (const Integer& x : f.sigma) sigma.push_back(IntegerToJson(x));
    out.push_back(Json{{"members", IndexSetToJson(f.members)},
                       {"labels", std::move(names)},
                       {"rank", f.rank},
                       {"sigma", std::move(sigma)}});
  }
  return out;
}

Json DefectReportToJson(const DefectReport& r,
                        const std::vector<std::string>& labels) {
  Json witness;
  if (r.witness_flag) {
    witness = Json{{"kind", "flag"}, {"flag", FlagToJson(*r.witness_flag, labels)}};
  } else if (!r.witness_parts.empty()) {
    Json parts = Json::array();
    for (const IndexSet& p : r.witness_parts) parts.push_back(IndexSetToJson(p));
    witness = Json{{"kind", "complementary-planes"}, {"parts", std::move(parts)}};
  } else if (r.defect) {
    witness = Json{{"kind", r.method == "degenerate" ? "degenerate" : "no-flag"}};
  }
  Json out{{"defect", r.defect}, {"witness", witness}};
  out["dual_dim"] = r.dual_dim ? Json(*r.dual_dim) : Json(nullptr);
  out["method"] = r.method;
  out["rank"] = r.rank;
  out["checks_agreed"] = r.checks_agreed;
  return out;
}

Json DecompositionToJson(const Decomposition& d,
                         const std::vector<std::string>& labels) {
  Json parts = Json::array();
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    Json names = Json::array();
    for (std::size_t k : d.parts[i]) names.push_back(labels[k]);
    parts.push_back(Json{{"members", IndexSetToJson(d.parts[i])},
                         {"labels", std::move(names)},
                         {"rank", d.ranks[i]}});
  }
  return Json{{"parts", std::move(parts)}, {"rho", d.rho}};
}

}  // namespace discforge
