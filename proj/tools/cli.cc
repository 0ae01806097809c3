// Copyright 2026 The Invisibility Authors
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

#include "cli.h"

#include <cmath>
#include <filesystem>
#include <functional>
#include <numbers>
#include <ostream>

#include "CLI11.hpp"

#include "invis/colorimetry.h"
#include "invis/error.h"
#include "invis/fixtures.h"
#include "invis/io.h"
#include "invis/quantum_greybox.h"
#include "invis/rigid_body.h"

namespace invis::cli {
namespace {

namespace fs = std::filesystem;
using io::Json;

struct Options {
  double tol_rel = Tolerance{}.rel;
  double tol_abs = Tolerance{}.abs;
  std::uint64_t seed = 1;
  std::string output;

  Tolerance tolerance() const { return {tol_rel, tol_abs}; }
};

// A usage problem detected after CLI11 parsing succeeded.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Action = std::function<Json()>;

Json basis_to_json(const KernelBasis& basis) {
  Json out = Json::array();
  for (const auto& v : basis.vectors) out.push_back(io::vector_to_json(v));
  return out;
}

Json weights_to_json(const color::IlluminationVector& b) { return b.weights; }

color::IlluminationVector base_or_ones(const std::string& text, std::size_t n) {
  if (text.empty()) return {std::vector<double>(n, 1.0)};
  return {io::parse_real_list(text)};
}

std::string stem(const std::string& path) { return fs::path(path).stem().string(); }

Json residuals_to_json(const body::InvisibilityResiduals& r) {
  Json doc;
  doc["mass"] = r.mass;
  doc["dipole"] = r.dipole;
  doc["inertia"] = r.inertia;
  return doc;
}

Json constructed_body(const body::PointMassSet& result, const Options& opt,
                      const std::string& body_out) {
  if (!body_out.empty()) io::write_text_file(body_out, io::body_csv(result));
  Json doc;
  doc["body"] = io::body_to_json(result);
  doc["invisible"] = body::is_invisible(result, opt.tolerance());
  doc["residuals"] = residuals_to_json(body::invisibility_residuals(result));
  return doc;
}

body::Rotation3 parse_rotation(const std::string& axis, double angle_deg, const std::string& reflect,
                               const std::string& matrix) {
  const int given = !axis.empty() + !reflect.empty() + !matrix.empty();
  if (given != 1) throw UsageError("give exactly one of --axis/--angle-deg, --reflect, --matrix");
  auto vec3 = [](const std::string& text) {
    const auto v = io::parse_real_list(text);
    if (v.size() != 3) throw UsageError("expected three comma-separated numbers");
    return body::Vec3(v[0], v[1], v[2]);
  };
  if (!axis.empty()) return body::Rotation3::about_axis(vec3(axis), angle_deg * std::numbers::pi / 180.0);
  if (!reflect.empty()) return body::Rotation3::reflection(vec3(reflect));
  const auto v = io::parse_real_list(matrix);
  if (v.size() != 9) throw UsageError("--matrix needs nine row-major numbers");
  body::Mat3 m;
  m << v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8];
  return body::Rotation3(m);
}

void add_metamer(CLI::App& app, const Options& opt, Action& action) {
  auto* metamer = app.add_subcommand("metamer", "Color metamers of a receptor bank under an illuminant bank");
  metamer->require_subcommand(1);

  struct Args {
    std::string receptors, illuminants, base, b1, b2;
    std::vector<std::string> banks;
  };
  auto args = std::make_shared<Args>();
  auto add_banks = [&](CLI::App* sub) {
    sub->add_option("--receptors", args->receptors, "Receptor bank CSV")->required()->check(CLI::ExistingFile);
    sub->add_option("--illuminants", args->illuminants, "Illuminant bank CSV")->required()->check(CLI::ExistingFile);
  };

  auto* response = metamer->add_subcommand("response", "Response matrix");
  add_banks(response);
  response->callback([&, args] {
    action = [&, args] {
      const auto m = color::response_matrix(io::read_receptors(args->receptors),
                                            io::read_illuminants(args->illuminants));
      Json doc;
      doc["response_matrix"] = io::matrix_to_json(m.eigen());
      return doc;
    };
  });

  auto* space = metamer->add_subcommand("space", "Invisible metamer space");
  add_banks(space);
  space->callback([&, args] {
    action = [&, args] {
      const auto m = color::response_matrix(io::read_receptors(args->receptors),
                                            io::read_illuminants(args->illuminants));
      const auto basis = color::metamer_space(m, opt.tolerance());
      Json doc;
      doc["response_matrix"] = io::matrix_to_json(m.eigen());
      doc["dimension"] = basis.dim();
      doc["metamer_basis"] = basis_to_json(basis);
      return doc;
    };
  });

  auto* family = metamer->add_subcommand("family", "Metamer family around a base illumination");
  add_banks(family);
  family->add_option("--base", args->base, "Comma-separated base weights (default all ones)");
  family->callback([&, args] {
    action = [&, args] {
      const auto receptors = io::read_receptors(args->receptors);
      const auto illuminants = io::read_illuminants(args->illuminants);
      const auto f = color::metamer_family(receptors, illuminants,
                                           base_or_ones(args->base, illuminants.count()), opt.tolerance());
      Json doc;
      doc["response_matrix"] = io::matrix_to_json(color::response_matrix(receptors, illuminants).eigen());
      doc["base"] = weights_to_json(f.base);
      doc["direction"] = weights_to_json(f.direction);
      doc["lambda_range"] = io::interval_to_json(f.lambda_range);
      doc["endpoints"] = Json::array({weights_to_json(f.member(f.lambda_range.lo)),
                                      weights_to_json(f.member(f.lambda_range.hi))});
      return doc;
    };
  });

  auto* same = metamer->add_subcommand("same", "Test whether two illuminations look identical");
  add_banks(same);
  same->add_option("--b1", args->b1, "First weight vector")->required();
  same->add_option("--b2", args->b2, "Second weight vector")->required();
  same->callback([&, args] {
    action = [&, args] {
      Json doc;
      doc["indistinguishable"] = color::indistinguishable(
          io::read_receptors(args->receptors), io::read_illuminants(args->illuminants),
          {io::parse_real_list(args->b1)}, {io::parse_real_list(args->b2)}, opt.tolerance());
      return doc;
    };
  });

  auto* table = metamer->add_subcommand("table", "Differential-diagnosis table across receptor banks");
  table->add_option("--banks", args->banks, "Receptor bank CSVs (name = file stem)")
      ->required()->expected(1, -1)->check(CLI::ExistingFile);
  table->add_option("--illuminants", args->illuminants, "Illuminant bank CSV")->required()->check(CLI::ExistingFile);
  table->add_option("--base", args->base, "Comma-separated base weights (default all ones)");
  table->callback([&, args] {
    action = [&, args] {
      const auto illuminants = io::read_illuminants(args->illuminants);
      std::vector<color::NamedBank> banks;
      for (const auto& path : args->banks) banks.push_back({stem(path), io::read_receptors(path)});
      const auto t = color::discrimination_table(banks, illuminants,
                                                 base_or_ones(args->base, illuminants.count()), opt.tolerance());
      Json table_doc = Json::object();
      Json contrast = Json::object();
      for (std::size_t i = 0; i < t.names.size(); ++i) {
        Json row = Json::object();
        Json crow = Json::object();
        for (std::size_t j = 0; j < t.names.size(); ++j) {
          row[t.names[j]] = static_cast<bool>(t.distinguishes[i][j]);
          crow[t.names[j]] = t.contrast[i][j];
        }
        table_doc[t.names[i]] = std::move(row);
        contrast[t.names[i]] = std::move(crow);
      }
      Json doc;
      doc["discrimination_table"] = std::move(table_doc);
      doc["contrast"] = std::move(contrast);
      doc["off_diagonal_true_fraction"] = t.off_diagonal_true_fraction();
      return doc;
    };
  });
}

void add_body(CLI::App& app, const Options& opt, Action& action) {
  auto* cmd = app.add_subcommand("body", "Dynamically invisible and equivalent rigid bodies");
  cmd->require_subcommand(1);

  struct Args {
    std::string input, other, invisible, body_out, axis, reflect, matrix;
    double angle_deg = 0.0;
    std::vector<std::string> terms;
    std::optional<double> lambda;
  };
  auto args = std::make_shared<Args>();
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", args->input, "Body CSV (mass,x,y,z)")->required()->check(CLI::ExistingFile);
  };

  auto* summary = cmd->add_subcommand("summary", "Total mass, center of mass and inertia");
  add_input(summary);
  summary->callback([&, args] {
    action = [&, args] {
      Json doc;
      doc["summary"] = io::summary_to_json(body::summary(io::read_body(args->input), opt.tolerance()));
      return doc;
    };
  });

  auto* invisible = cmd->add_subcommand("invisible", "Test dynamical invisibility");
  add_input(invisible);
  invisible->callback([&, args] {
    action = [&, args] {
      const auto b = io::read_body(args->input);
      Json doc;
      doc["invisible"] = body::is_invisible(b, opt.tolerance());
      doc["residuals"] = residuals_to_json(body::invisibility_residuals(b));
      doc["summary"] = io::summary_to_json(body::summary(b, opt.tolerance()));
      return doc;
    };
  });

  auto* parity = cmd->add_subcommand("parity", "Parity construction");
  add_input(parity);
  parity->add_option("--body-out", args->body_out, "Also write the result as CSV");
  parity->callback([&, args] {
    action = [&, args] {
      return constructed_body(body::parity_construction(io::read_body(args->input), opt.tolerance()),
                              opt, args->body_out);
    };
  });

  auto* rotate = cmd->add_subcommand("rotate", "Rotation construction");
  add_input(rotate);
  rotate->add_option("--axis", args->axis, "Rotation axis x,y,z");
  rotate->add_option("--angle-deg", args->angle_deg, "Rotation angle in degrees");
  rotate->add_option("--reflect", args->reflect, "Reflect through the plane with normal x,y,z");
  rotate->add_option("--matrix", args->matrix, "Nine row-major entries of an orthogonal matrix");
  rotate->add_option("--body-out", args->body_out, "Also write the result as CSV");
  rotate->callback([&, args] {
    action = [&, args] {
      const auto r = parse_rotation(args->axis, args->angle_deg, args->reflect, args->matrix);
      return constructed_body(body::rotation_construction(io::read_body(args->input), r, opt.tolerance()),
                              opt, args->body_out);
    };
  });

  auto* generalized = cmd->add_subcommand("generalized", "Subtract an equal-mass, equal-inertia body");
  add_input(generalized);
  generalized->add_option("--other", args->other, "Second body CSV")->required()->check(CLI::ExistingFile);
  generalized->add_option("--body-out", args->body_out, "Also write the result as CSV");
  generalized->callback([&, args] {
    action = [&, args] {
      return constructed_body(body::generalized_rotation_construction(
                                  io::read_body(args->input), io::read_body(args->other), opt.tolerance()),
                              opt, args->body_out);
    };
  });

  auto* superpose = cmd->add_subcommand("superpose", "Linear combination of bodies");
  superpose->add_option("--term", args->terms, "coefficient:path, repeatable")->required()->expected(1, -1);
  superpose->add_option("--body-out", args->body_out, "Also write the result as CSV");
  superpose->callback([&, args] {
    action = [&, args] {
      std::vector<body::WeightedBody> terms;
      for (const auto& t : args->terms) {
        const auto colon = t.find(':');
        if (colon == std::string::npos) throw UsageError("--term must look like coefficient:path");
        const auto coef = io::parse_real_list(t.substr(0, colon));
        if (coef.size() != 1) throw UsageError("bad coefficient in --term " + t);
        terms.push_back({coef[0], io::read_body(t.substr(colon + 1))});
      }
      return constructed_body(body::superpose(terms), opt, args->body_out);
    };
  });

  auto* equivalent = cmd->add_subcommand("equivalent", "Test dynamical equivalence of two physical bodies");
  add_input(equivalent);
  equivalent->add_option("--other", args->other, "Second body CSV")->required()->check(CLI::ExistingFile);
  equivalent->callback([&, args] {
    action = [&, args] {
      Json doc;
      doc["equivalent"] =
          body::are_equivalent(io::read_body(args->input), io::read_body(args->other), opt.tolerance());
      return doc;
    };
  });

  auto* family = cmd->add_subcommand("family", "Range of an equivalent-body family");
  add_input(family);
  family->add_option("--invisible", args->invisible, "Invisible body CSV")->required()->check(CLI::ExistingFile);
  family->add_option("--lambda", args->lambda, "Also report the member at this lambda");
  family->callback([&, args] {
    action = [&, args] {
      const auto base = io::read_body(args->input);
      const auto inv = io::read_body(args->invisible);
      Json doc;
      doc["lambda_range"] = io::interval_to_json(body::equivalent_family(base, inv, opt.tolerance()));
      if (args->lambda) {
        const auto member = body::family_member(base, inv, *args->lambda);
        doc["member"] = io::body_to_json(member);
        doc["physical"] = member.physical();
        doc["equivalent"] = member.physical() && body::are_equivalent(base, member, opt.tolerance());
      }
      return doc;
    };
  });
}

void add_qstate(CLI::App& app, const Options& opt, Action& action) {
  auto* cmd = app.add_subcommand("qstate", "Invisible density matrices of a measurement suite");
  cmd->require_subcommand(1);

  struct Args {
    std::string rho, observable, direction, suite, suite_b, record;
    std::size_t dim = 0;
    std::size_t count = 10;
  };
  auto args = std::make_shared<Args>();
  auto file = [](CLI::App* sub, const char* name, std::string& target, const char* help) {
    sub->add_option(name, target, help)->required()->check(CLI::ExistingFile);
  };
  auto suite_dim = [](const std::vector<quantum::HermitianOperator>& suite, std::size_t dim) {
    if (dim > 0) return dim;
    if (suite.empty()) throw UsageError("empty suite needs --dim");
    return suite.front().dim();
  };

  auto* expect = cmd->add_subcommand("expect", "Expectation value Tr(rho M)");
  file(expect, "--rho", args->rho, "Density matrix JSON");
  file(expect, "--observable", args->observable, "Observable JSON");
  expect->callback([&, args] {
    action = [&, args] {
      const quantum::DensityState rho(io::operator_from_json(io::read_json_file(args->rho)));
      Json doc;
      doc["expectation"] =
          quantum::expectation(rho, io::operator_from_json(io::read_json_file(args->observable)));
      return doc;
    };
  });

  auto* space = cmd->add_subcommand("space", "Invisible operator space of a suite");
  file(space, "--suite", args->suite, "Observable suite JSON");
  space->add_option("--dim", args->dim, "Hilbert-space dimension (needed for an empty suite)");
  space->callback([&, args] {
    action = [&, args] {
      const auto suite = io::suite_from_json(io::read_json_file(args->suite));
      const auto basis = quantum::invisible_space(suite_dim(suite, args->dim), suite, opt.tolerance());
      Json doc;
      doc["dimension"] = basis.size();
      Json ops = Json::array();
      for (const auto& x : basis.vectors) ops.push_back(io::operator_to_json(x));
      doc["invisible_basis"] = std::move(ops);
      return doc;
    };
  });

  auto* physical = cmd->add_subcommand("physical", "Test unit trace and positivity");
  file(physical, "--rho", args->rho, "Candidate Hermitian matrix JSON");
  physical->callback([&, args] {
    action = [&, args] {
      const auto rho = io::operator_from_json(io::read_json_file(args->rho));
      Json doc;
      doc["physical"] = quantum::is_physical(rho);
      doc["trace"] = rho.trace().real();
      doc["min_eigenvalue"] = rho.eigenvalues()(0);
      return doc;
    };
  });

  auto* interval = cmd->add_subcommand("interval", "Feasible step interval along an invisible direction");
  file(interval, "--rho", args->rho, "Density matrix JSON");
  file(interval, "--direction", args->direction, "Traceless Hermitian direction JSON");
  interval->callback([&, args] {
    action = [&, args] {
      const quantum::DensityState rho(io::operator_from_json(io::read_json_file(args->rho)));
      Json doc;
      doc["interval"] = io::interval_to_json(quantum::feasible_step_interval(
          rho, io::operator_from_json(io::read_json_file(args->direction)), opt.tolerance()));
      return doc;
    };
  });

  auto* reconstruct = cmd->add_subcommand("reconstruct", "Minimum-norm state consistent with a record");
  file(reconstruct, "--record", args->record, "Measurement record JSON");
  reconstruct->callback([&, args] {
    action = [&, args] {
      const auto r = quantum::reconstruct_affine(io::record_from_json(io::read_json_file(args->record)),
                                                 opt.tolerance());
      Json doc;
      doc["state"] = io::operator_to_json(r.solution);
      doc["physical"] = r.physical;
      doc["min_eigenvalue"] = r.min_eigenvalue;
      doc["residual"] = r.residual;
      return doc;
    };
  });

  auto* sample = cmd->add_subcommand("sample", "Sample physical states consistent with a record");
  file(sample, "--record", args->record, "Measurement record JSON");
  sample->add_option("--count", args->count, "Number of samples")->check(CLI::PositiveNumber);
  sample->callback([&, args] {
    action = [&, args] {
      const auto states = quantum::ambiguity_sample(
          io::record_from_json(io::read_json_file(args->record)), args->count, opt.seed, opt.tolerance());
      Json out = Json::array();
      for (const auto& s : states) out.push_back(io::operator_to_json(s.op()));
      Json doc;
      doc["seed"] = opt.seed;
      doc["samples"] = std::move(out);
      return doc;
    };
  });

  auto* compare = cmd->add_subcommand("compare", "Compare the blind spots of two suites");
  file(compare, "--suite-a", args->suite, "First observable suite JSON");
  file(compare, "--suite-b", args->suite_b, "Second observable suite JSON");
  compare->add_option("--dim", args->dim, "Hilbert-space dimension (needed if both suites are empty)");
  compare->callback([&, args] {
    action = [&, args] {
      const auto a = io::suite_from_json(io::read_json_file(args->suite));
      const auto b = io::suite_from_json(io::read_json_file(args->suite_b));
      const std::size_t dim = args->dim > 0 ? args->dim : suite_dim(a.empty() ? b : a, 0);
      const auto r = quantum::blind_spot_compare(dim, a, b, opt.tolerance());
      auto optional_op = [](const std::optional<quantum::HermitianOperator>& x) {
        return x ? io::operator_to_json(*x) : Json(nullptr);
      };
      Json intersection = Json::array();
      for (const auto& x : r.intersection.vectors) intersection.push_back(io::operator_to_json(x));
      Json report;
      report["dim_a"] = r.dim_a;
      report["dim_b"] = r.dim_b;
      report["dim_intersection"] = r.dim_intersection;
      report["intersection_basis"] = std::move(intersection);
      report["a_resolved_by_b"] = optional_op(r.a_resolved_by_b);
      report["b_resolved_by_a"] = optional_op(r.b_resolved_by_a);
      Json doc;
      doc["report"] = std::move(report);
      return doc;
    };
  });
}

void add_fixtures(CLI::App& app, Action& action) {
  auto* cmd = app.add_subcommand("fixtures", "Write shipped fixture files");
  auto name = std::make_shared<std::string>();
  auto dir = std::make_shared<std::string>(".");
  cmd->add_option("name", *name, "Fixture name, 'all', or 'list'")->required();
  cmd->add_option("--dir", *dir, "Target directory (created if missing)");
  cmd->callback([&action, name, dir] {
    action = [name, dir] {
      Json doc;
      if (*name == "list") {
        doc["fixtures"] = fixtures::names();
        return doc;
      }
      std::vector<fixtures::FixtureFile> files;
      try {
        files = fixtures::files(*name);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      std::error_code ec;
      fs::create_directories(*dir, ec);
      if (ec) throw Error(ErrorKind::kIo, "cannot create directory '" + *dir + "'");
      Json written = Json::array();
      for (const auto& f : files) {
        const fs::path path = fs::path(*dir) / f.filename;
        io::write_text_file(path, f.content);
        written.push_back(path.string());
      }
      doc["fixture"] = *name;
      doc["files"] = std::move(written);
      return doc;
    };
  });
}

Json error_doc(std::string_view kind, const std::string& message, const std::string& precondition) {
  Json e;
  e["kind"] = kind;
  e["message"] = message;
  e["precondition"] = precondition.empty() ? Json(nullptr) : Json(precondition);
  Json doc;
  doc["error"] = std::move(e);
  return doc;
}

void emit(const Json& doc, const Options& opt, std::ostream& out) {
  const std::string text = io::dump(doc);
  if (opt.output.empty() || opt.output == "-") {
    out << text;
  } else {
    io::write_text_file(opt.output, text);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invisibility spaces: metamers, invisible bodies, and grey-box quantum states", "invis"};
  app.fallthrough();
  app.require_subcommand(1);

  Options opt;
  app.add_option("--tol-rel", opt.tol_rel, "Relative rank/positivity tolerance");
  app.add_option("--tol-abs", opt.tol_abs, "Absolute tolerance");
  app.add_option("--seed", opt.seed, "Random seed for sampling");
  app.add_option("--output", opt.output, "Write the JSON report here instead of stdout");

  Action action;
  add_metamer(app, opt, action);
  add_body(app, opt, action);
  add_qstate(app, opt, action);
  add_fixtures(app, action);

  std::vector<std::string> argv_storage = {"invis"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsageOrIo;
  }

  try {
    opt.tolerance().validate();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageOrIo;
  }

  try {
    emit(action(), opt, out);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageOrIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool io_class = e.kind() == ErrorKind::kIo || e.kind() == ErrorKind::kParse;
    try {
      emit(error_doc(error_kind_name(e.kind()), e.what(), e.precondition()), opt, out);
    } catch (const Error&) {
      // Report stays on stderr when the output file itself is unwritable.
    }
    return io_class ? kExitUsageOrIo : kExitDomainError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageOrIo;
  }
}

}  // namespace invis::cli
