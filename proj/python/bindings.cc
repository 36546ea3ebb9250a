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

// Python bindings. Matrices are lists of rows of Python ints, row indices are
// 0-based, and polynomials are exposed as immutable Polynomial objects.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "discforge/config.h"
#include "discforge/defect.h"
#include "discforge/disc.h"
#include "discforge/error.h"
#include "discforge/io.h"
#include "discforge/matroid.h"

namespace py = pybind11;

namespace discforge {
namespace {

Integer ToInteger(const py::handle& h) {
  if (!py::isinstance<py::int_>(h)) throw py::type_error("expected an int entry");
  return Integer(py::str(h).cast<std::string>());
}

py::int_ FromInteger(const Integer& z) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

IntMatrix ToMatrix(const py::sequence& rows) {
  std::vector<IntVector> out;
  std::size_t width = 0;
  for (const py::handle& row : rows) {
    IntVector v;
    for (const py::handle& x : py::reinterpret_borrow<py::sequence>(row)) {
      v.push_back(ToInteger(x));
    }
    if (!out.empty() && v.size() != width) {
      throw Error(ErrorCode::kParse, "matrix rows have different lengths");
    }
    width = v.size();
    out.push_back(std::move(v));
  }
  return IntMatrix::FromRows(out, width);
}

py::list FromMatrix(const IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(FromInteger(m(i, j)));
    rows.append(row);
  }
  return rows;
}

GaleConfiguration ToGale(const py::sequence& rows, const std::string& side) {
  if (side == "A") return GaleDual(PointConfiguration::FromRowspan(ToMatrix(rows)));
  if (side != "B") throw py::value_error("side must be 'A' or 'B'");
  return GaleConfiguration(ToMatrix(rows));
}

py::list FromIndexSets(const std::vector<IndexSet>& sets) {
  py::list out;
  for (const IndexSet& s : sets) out.append(py::cast(s));
  return out;
}

py::dict FromReport(const DefectReport& r) {
  py::dict d;
  d["defect"] = r.defect;
  d["method"] = r.method;
  d["rank"] = r.rank;
  d["dual_dim"] = r.dual_dim ? py::object(py::int_(*r.dual_dim)) : py::object(py::none());
  d["checks_agreed"] = r.checks_agreed;
  py::list flag;
  if (r.witness_flag) {
    for (const Flat& f : *r.witness_flag) flag.append(py::cast(f.members));
  }
  d["witness_flag"] = flag;
  d["witness_parts"] = FromIndexSets(r.witness_parts);
  return d;
}

py::list Terms(const Polynomial& f) {
  py::list out;
  for (const auto& [e, c] : f.terms()) out.append(py::make_tuple(FromInteger(c), py::cast(e)));
  return out;
}

}  // namespace
}  // namespace discforge

PYBIND11_MODULE(_core, m) {
  using namespace discforge;
  m.doc() = "Exact Gale duality, dual defect tests and sparse discriminants";

  static py::exception<Error> error(m, "DiscforgeError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Polynomial>(m, "Polynomial")
      .def_property_readonly("vars", &Polynomial::vars)
      .def_property_readonly("terms", &Terms, "list of (coefficient, exponents)")
      .def("__len__", &Polynomial::size)
      .def("__str__", &Polynomial::ToString)
      .def("__repr__", [](const Polynomial& f) { return "Polynomial(" + f.ToString() + ")"; })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("is_one", [](const Polynomial& f) {
        return f.IsConstant() && !f.IsZero() && f.LeadingCoefficient() == 1;
      })
      .def("to_json", [](const Polynomial& f) { return PolynomialToJson(f).dump(); })
      .def("evaluate", [](const Polynomial& f, const std::vector<std::string>& point) {
        std::vector<Rational> x;
        for (const std::string& s : point) x.push_back(ParseRational(s));
        return f.Evaluate(x).get_str();
      }, "Value at a point given as strings such as '3/4'; returned as a string.");

  m.def("gale_dual", [](const py::sequence& a) {
    return FromMatrix(GaleDual(PointConfiguration(ToMatrix(a))).matrix());
  }, py::arg("points"));
  m.def("dual_of", [](const py::sequence& b) {
    DualResult d = DualOf(GaleConfiguration(ToMatrix(b)));
    return py::make_tuple(FromMatrix(d.config.matrix()), d.pyramid);
  }, py::arg("gale"), "Point configuration dual to Gale vectors, and the pyramid flag.");
  m.def("lattice_index", [](const py::sequence& c) { return FromInteger(LatticeIndex(ToMatrix(c))); },
        py::arg("matrix"));
  m.def("cayley", [](const std::vector<long>& lengths) {
    return FromMatrix(CayleyOfSegments(lengths).matrix());
  }, py::arg("lengths"));
  m.def("reduce", [](const py::sequence& b, const std::string& side) {
    Reduction r = Reduce(ToGale(b, side));
    py::dict d;
    d["matrix"] = FromMatrix(r.reduced.matrix());
    d["labels"] = r.reduced.labels();
    d["origin"] = FromIndexSets(r.origin);
    return d;
  }, py::arg("matrix"), py::arg("side") = "B");
  m.def("is_dual_defect", [](const py::sequence& b, const std::string& side, bool exhaustive,
                             bool cross_check) {
    DefectOptions opts{exhaustive ? DefectMethod::kExhaustive : DefectMethod::kAuto, cross_check};
    return FromReport(IsDualDefect(ToGale(b, side), opts));
  }, py::arg("matrix"), py::arg("side") = "B", py::arg("exhaustive") = false,
        py::arg("cross_check") = false);
  m.def("dual_variety_dim", [](const py::sequence& a, std::optional<std::size_t> bound) {
    return DualVarietyDim(PointConfiguration::FromRowspan(ToMatrix(a)),
                          bound.value_or(SizeBoundFromEnv()));
  }, py::arg("points"), py::arg("bound") = py::none());
  m.def("rho_bound", [](const py::sequence& b, const std::string& side) {
    RhoBound r = ComputeRhoBound(ToGale(b, side));
    py::dict d;
    d["rho"] = r.rho;
    d["sufficient_defect"] = r.sufficient_defect;
    d["parts"] = FromIndexSets(r.decomposition.parts);
    d["ranks"] = r.decomposition.ranks;
    return d;
  }, py::arg("matrix"), py::arg("side") = "B");
  m.def("codim1_discriminant", [](const py::sequence& b) {
    IntVector v;
    for (const py::handle& x : b) v.push_back(ToInteger(x));
    return DiscriminantCodim1(v);
  }, py::arg("b"));
  m.def("horn_implicitize", [](const py::sequence& c, bool require_irreducible) {
    return HornImplicitizeRank2(GaleConfiguration(ToMatrix(c)), require_irreducible).f;
  }, py::arg("gale"), py::arg("require_irreducible") = true);
  m.def("discriminant", [](const py::sequence& b, const std::string& side, bool trace) {
    DiscriminantResult r = Discriminant(ToGale(b, side));
    if (!trace) return py::cast(r.polynomial);
    return py::object(py::make_tuple(r.polynomial, ProvenanceToJson(r.provenance).dump()));
  }, py::arg("matrix"), py::arg("side") = "B", py::arg("trace") = false,
        "Normalized discriminant; with trace=True also the provenance as JSON text.");
  m.def("member", [](const py::sequence& b, const std::vector<py::object>& point,
                     const std::string& side) {
    std::vector<Rational> x;
    for (const py::object& p : point) x.push_back(ParseRational(py::str(p).cast<std::string>()));
    return Membership(ToGale(b, side), x);
  }, py::arg("matrix"), py::arg("point"), py::arg("side") = "B");
  m.def("check_specialization", [](const py::sequence& b, std::size_t j, const std::string& side) {
    SpecializationCheck c = CheckSpecialization(ToGale(b, side), j);
    py::dict d;
    d["divides"] = c.divides;
    d["kept"] = c.kept;
    d["sub_discriminant"] = c.sub_discriminant;
    d["restricted"] = c.restricted;
    return d;
  }, py::arg("matrix"), py::arg("j"), py::arg("side") = "B");
  m.def("check_grouping", [](const py::sequence& b, std::size_t k, std::size_t l,
                             const std::string& side) {
    return CheckRestrictionGrouping(ToGale(b, side), k, l);
  }, py::arg("matrix"), py::arg("k"), py::arg("l"), py::arg("side") = "B");
}
