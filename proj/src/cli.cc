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

#include "discforge/cli.h"

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "discforge/config.h"
#include "discforge/defect.h"
#include "discforge/disc.h"
#include "discforge/error.h"
#include "discforge/io.h"
#include "discforge/matroid.h"

namespace discforge {

namespace {

struct Job {
  std::string matrix;
  std::string side;
  std::string format = "json";
};

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
      return 2;
    case ErrorCode::kUnsupported:
      return 4;
    case ErrorCode::kInternal:
      return 1;
    default:
      return 3;
  }
}

void AddInput(CLI::App* cmd, Job& job, const std::string& default_side,
              bool side_option = true) {
  job.side = default_side;
  cmd->add_option("--matrix,-m", job.matrix,
                  "inline JSON matrix, or a file holding {\"matrix\": [[...]]}")
      ->required();
  if (side_option) {
    cmd->add_option("--side", job.side, "A: columns are points; B: rows are Gale vectors")
        ->check(CLI::IsMember({"A", "B"}))
        ->capture_default_str();
  }
  cmd->add_option("--format", job.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
}

GaleConfiguration GaleInput(const Job& job) {
  IntMatrix m = ReadMatrix(job.matrix);
  if (job.side == "A") return GaleDual(PointConfiguration(std::move(m)));
  return GaleConfiguration(std::move(m));
}

PointConfiguration PointInput(const Job& job) {
  IntMatrix m = ReadMatrix(job.matrix);
  if (job.side == "B") return DualOf(GaleConfiguration(std::move(m))).config;
  return PointConfiguration::FromRowspan(m);
}

std::string MatrixText(const IntMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out << " ";
      out << m(i, j).get_str();
    }
    out << "\n";
  }
  return out.str();
}

void Emit(std::ostream& out, const Job& job, const Json& json,
          const std::string& text) {
  if (job.format == "text") {
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
  } else {
    out << json.dump(2) << "\n";
  }
}

std::string Bool(bool b) { return b ? "true" : "false"; }

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Gale duality, dual defect tests and sparse discriminants"};
  app.require_subcommand(1);
  std::function<void()> action;

  Job gale_job;
  auto* gale = app.add_subcommand("gale", "Gale dual of a point configuration");
  AddInput(gale, gale_job, "A", false);
  gale->callback([&] {
    action = [&] {
      GaleConfiguration g = GaleDual(PointConfiguration(ReadMatrix(gale_job.matrix)));
      Json j = MatrixToJson(g.matrix());
      j["index"] = "1";
      Emit(out, gale_job, j, MatrixText(g.matrix()));
    };
  });

  Job dual_job;
  auto* dual = app.add_subcommand("dual", "point configuration dual to Gale vectors");
  AddInput(dual, dual_job, "B", false);
  dual->callback([&] {
    action = [&] {
      DualResult d = DualOf(GaleConfiguration(ReadMatrix(dual_job.matrix)));
      if (d.pyramid) err << "warning: pyramid (some Gale row is zero)\n";
      Json j = MatrixToJson(d.config.matrix());
      j["pyramid"] = d.pyramid;
      Emit(out, dual_job, j, MatrixText(d.config.matrix()));
    };
  });

  Job index_job;
  auto* index = app.add_subcommand("index", "gcd of the maximal minors");
  AddInput(index, index_job, "B", false);
  index->callback([&] {
    action = [&] {
      Integer q = LatticeIndex(ReadMatrix(index_job.matrix));
      Emit(out, index_job, Json{{"index", q.get_str()}}, q.get_str());
    };
  });

  Job reduce_job;
  auto* reduce = app.add_subcommand("reduce", "irreducible reduction of Gale vectors");
  AddInput(reduce, reduce_job, "B");
  reduce->callback([&] {
    action = [&] {
      GaleConfiguration b = GaleInput(reduce_job);
      Reduction r = Reduce(b);
      Json j = MatrixToJson(r.reduced.matrix());
      j["labels"] = r.reduced.labels();
      Json origin = Json::array();
      for (const IndexSet& s : r.origin) origin.push_back(IndexSetToJson(s));
      j["origin"] = origin;
      j["degenerate"] = r.reduced.rank() < b.rank();
      Emit(out, reduce_job, j, MatrixText(r.reduced.matrix()));
    };
  });

  Job defect_job;
  bool exhaustive = false, cross_check = false;
  auto* defect = app.add_subcommand("defect", "decide whether the dual variety is defective");
  AddInput(defect, defect_job, "B");
  defect->add_flag("--exhaustive", exhaustive, "always run the full flag search");
  defect->add_flag("--cross-check", cross_check, "also run the flag search and compare");
  defect->callback([&] {
    action = [&] {
      GaleConfiguration b = GaleInput(defect_job);
      DefectOptions opts;
      opts.method = exhaustive ? DefectMethod::kExhaustive : DefectMethod::kAuto;
      opts.cross_check = cross_check;
      DefectReport r = IsDualDefect(b, opts);
      if (r.defect && b.size() <= SizeBoundFromEnv()) {
        r.dual_dim = DualVarietyDim(DualOf(b).config, SizeBoundFromEnv());
      }
      std::string text = "defect: " + Bool(r.defect) + "\nmethod: " + r.method +
                         "\ndual_dim: " +
                         (r.dual_dim ? std::to_string(*r.dual_dim) : "unknown");
      Emit(out, defect_job, DefectReportToJson(r, b.labels()), text);
    };
  });

  Job dualdim_job;
  auto* dualdim = app.add_subcommand("dualdim", "dimension of the dual variety");
  AddInput(dualdim, dualdim_job, "A");
  dualdim->callback([&] {
    action = [&] {
      long d = DualVarietyDim(PointInput(dualdim_job), SizeBoundFromEnv());
      Emit(out, dualdim_job, Json{{"dual_dim", d}}, std::to_string(d));
    };
  });

  Job decompose_job;
  auto* decompose = app.add_subcommand("decompose", "decomposition into non-defect flats");
  AddInput(decompose, decompose_job, "B");
  decompose->callback([&] {
    action = [&] {
      GaleConfiguration b = GaleInput(decompose_job);
      bool reduced = !IsIrreducible(b);
      GaleConfiguration r = reduced ? Reduce(b).reduced : b;
      RhoBound rho = ComputeRhoBound(r);
      Json j = DecompositionToJson(rho.decomposition, r.labels());
      j["reduced"] = reduced;
      j["rank"] = r.rank();
      j["sufficient_defect"] = rho.sufficient_defect;
      std::string text = "rho: " + std::to_string(rho.rho) +
                         "\nparts: " + std::to_string(rho.decomposition.parts.size()) +
                         "\nsufficient_defect: " + Bool(rho.sufficient_defect);
      Emit(out, decompose_job, j, text);
    };
  });

  Job disc_job;
  bool trace = false;
  auto* disc = app.add_subcommand("discriminant", "sparse discriminant polynomial");
  AddInput(disc, disc_job, "B");
  disc->add_flag("--trace", trace, "include how the polynomial was obtained");
  disc->callback([&] {
    action = [&] {
      DiscriminantResult d = Discriminant(GaleInput(disc_job));
      Json j = PolynomialToJson(d.polynomial);
      if (trace) {
        j = Json{{"polynomial", j}, {"provenance", ProvenanceToJson(d.provenance)}};
      }
      std::string text = d.polynomial.ToString();
      if (trace) text += "\n" + ProvenanceToJson(d.provenance).dump(2);
      Emit(out, disc_job, j, text);
    };
  });

  Job member_job;
  std::string point;
  auto* member = app.add_subcommand("member", "whether a point lies on the discriminant");
  AddInput(member, member_job, "B");
  member->add_option("--point,-p", point, "JSON array of nonzero rationals")->required();
  member->callback([&] {
    action = [&] {
      Json p;
      try {
        p = Json::parse(point);
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::kParse, std::string("malformed point: ") + e.what());
      }
      bool in = Membership(GaleInput(member_job), RationalsFromJson(p));
      Emit(out, member_job, Json{{"member", in}}, Bool(in));
    };
  });

  Job cayley_job;
  std::string lengths;
  auto* cayley = app.add_subcommand("cayley", "Cayley configuration of segments");
  cayley->add_option("lengths", lengths, "segment lengths, e.g. 1,1,2")->required();
  cayley->add_option("--format", cayley_job.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  cayley->callback([&] {
    action = [&] {
      std::vector<long> ls;
      std::stringstream ss(lengths);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          std::size_t used = 0;
          ls.push_back(std::stol(item, &used));
          if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
          throw Error(ErrorCode::kParse, "bad segment length '" + item + "'");
        }
      }
      PointConfiguration a = CayleyOfSegments(ls);
      Emit(out, cayley_job, MatrixToJson(a.matrix()), MatrixText(a.matrix()));
    };
  });

  Job specialize_job;
  std::size_t specialize_index = 0;
  auto* specialize = app.add_subcommand("check-specialization",
                                  "divisibility of the restriction x_j = 0");
  AddInput(specialize, specialize_job, "B");
  specialize->add_option("--index,-j", specialize_index, "1-based row on a non-splitting line")
      ->required()
      ->check(CLI::PositiveNumber);
  specialize->callback([&] {
    action = [&] {
      GaleConfiguration b = GaleInput(specialize_job);
      SpecializationCheck c = CheckSpecialization(b, specialize_index - 1);
      Json j{{"divides", c.divides},
             {"kept", IndexSetToJson(c.kept)},
             {"sub_discriminant", PolynomialToJson(c.sub_discriminant)},
             {"restricted", PolynomialToJson(c.restricted)}};
      Emit(out, specialize_job, j, Bool(c.divides));
    };
  });

  Job group_job;
  std::size_t k = 0, l = 0;
  auto* group = app.add_subcommand("check-grouping",
                                   "compare restrictions x_k = 0 and x_l = 0");
  AddInput(group, group_job, "B");
  group->add_option("--k", k, "1-based row")->required()->check(CLI::PositiveNumber);
  group->add_option("--l", l, "1-based row")->required()->check(CLI::PositiveNumber);
  group->callback([&] {
    action = [&] {
      bool equal = CheckRestrictionGrouping(GaleInput(group_job), k - 1, l - 1);
      Emit(out, group_job, Json{{"equal", equal}}, Bool(equal));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "discforge: " << e.what() << "\n";
    return 2;
  }
  try {
    if (action) action();
  } catch (const Error& e) {
    err << "discforge: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  }
  return 0;
}

}  // namespace discforge
