// SPDX-License-Identifier: Apache-2.0
#include "rotsurf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "rotsurf/config.hpp"
#include "rotsurf/report.hpp"

namespace rotsurf {

namespace {

struct SurfaceArgs {
  std::string family;
  std::string profile;
  std::string params;
  std::string grid;
  std::string tol;
  std::string path = "closed_form";
  std::string laplacian = "structural";
  std::string perturb;
  std::string out = "-";
  std::string format = "json";
  std::string expect;
  std::uint64_t seed = 1;
  std::string config;
};

void add_surface_options(CLI::App* sub, SurfaceArgs& a, bool classification) {
  sub->add_option("--family", a.family, "surface family (see `families`)")->required();
  sub->add_option("--profile", a.profile, "profile curve kind:k=v,...");
  sub->add_option("--params", a.params, "family parameters k=v,...");
  sub->add_option("--grid", a.grid, "s=lo:hi:n,t=lo:hi:n (default: family domain, 11x11)");
  sub->add_option("--path", a.path, "closed_form | generic")
      ->check(CLI::IsMember({"closed_form", "generic"}));
  sub->add_option("--perturb", a.perturb, "add delta to one closed-form coefficient, field=delta");
  sub->add_option("--out", a.out, "output file, - for stdout");
  sub->add_option("--seed", a.seed, "seed for randomized checks");
  if (classification) {
    sub->add_option("--tol", a.tol, "harm=..,fit=..,const=..,C=..");
    sub->add_option("--laplacian", a.laplacian, "structural | finite_difference")
        ->check(CLI::IsMember({"structural", "finite_difference"}));
    sub->add_option("--expect", a.expect, "exit 1 unless the verdict matches")
        ->check(CLI::IsMember({"harmonic", "first_kind", "second_kind", "not_pointwise_1_type"}));
  }
  sub->add_option("--config", a.config, "key = value file; flags override it");
}

struct Resolved {
  SurfaceFamily family;
  Grid grid;
  std::map<std::string, double> params;
};

// With an explicit grid the family domain is the grid box, padded so the
// finite-difference stencils around boundary points stay inside.
Resolved resolve(const SurfaceArgs& a) {
  const auto params = parse_params(a.params);
  const FamilySpec spec = build_family_spec(
      a.family, a.profile.empty() ? std::nullopt : std::optional<std::string>(a.profile), params);
  if (a.grid.empty()) {
    SurfaceFamily f = make_family(spec);
    Grid g = make_grid(f, default_grid(f));
    return {std::move(f), std::move(g), params};
  }
  const FamilyDomain base = default_domain(spec);
  const GridSpec gs = parse_grid(a.grid, GridSpec{base.s_lo, base.s_hi, 11, base.t_lo, base.t_hi, 11});
  constexpr double pad = 2e-3;
  SurfaceFamily f = make_family(spec, FamilyDomain{gs.s_lo - pad, gs.s_hi + pad, gs.t_lo - pad, gs.t_hi + pad});
  Grid g = make_grid(f, gs);
  return {std::move(f), std::move(g), params};
}

ClassifyOptions classify_options(const SurfaceArgs& a) {
  ClassifyOptions o;
  o.path = a.path == "generic" ? Path::Generic : Path::ClosedForm;
  o.laplacian = a.laplacian == "finite_difference" ? LaplacianSource::FiniteDifference
                                                   : LaplacianSource::Structural;
  Tolerances base;
  if (o.laplacian == LaplacianSource::FiniteDifference) base.tau_fit = kTauFitFd;
  o.tol = parse_tolerances(a.tol, base);
  if (!a.perturb.empty()) o.perturbation = parse_perturbation(a.perturb);
  return o;
}

std::string render(const Report& r, const std::string& format) {
  if (format == "csv") return to_csv(r);
  return to_json(r).dump(2) + "\n";
}

int run_surface(const SurfaceArgs& a, const std::string& command, bool with_classification) {
  const Resolved rs = resolve(a);
  const ClassifyOptions o = classify_options(a);
  Report r = build_report(command, rs.family, rs.grid, o, with_classification);
  r.params = rs.params;
  r.metadata["seed"] = std::to_string(a.seed);
  emit(render(r, a.format), a.out);
  if (!a.expect.empty() && r.classification &&
      to_string(r.classification->verdict) != a.expect) {
    std::cerr << "verdict " << to_string(r.classification->verdict) << ", expected " << a.expect
              << "\n";
    return 1;
  }
  return 0;
}

std::string verify_table(const std::vector<TheoremCheck>& checks, bool verbose) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-28s %-6s %s\n", "id", "result", "facts");
  out << line;
  int passed = 0;
  for (const auto& c : checks) {
    int ok = 0;
    for (const auto& f : c.facts) ok += f.passed;
    passed += c.passed;
    std::snprintf(line, sizeof line, "%-28s %-6s %d/%zu\n", c.id.c_str(), c.passed ? "PASS" : "FAIL",
                  ok, c.facts.size());
    out << line;
    for (const auto& f : c.facts) {
      if (f.passed && !verbose) continue;
      out << "    " << (f.passed ? "ok   " : "FAIL ") << f.name << ": " << f.measured << " (expected "
          << f.expected << ")\n";
    }
  }
  out << passed << "/" << checks.size() << " checks passed\n";
  return out.str();
}

std::string csv_help() {
  std::string s = "CSV columns:";
  for (std::size_t i = 0; i < kCsvColumns.size(); ++i) s += (i ? "," : " ") + kCsvColumns[i];
  return s + "\nBivectors use the Pluecker order 12,13,14,23,24,34.";
}

// Splice `key = value` lines of a --config file into the argument list as
// --key value, skipping keys already given as flags.
std::vector<std::string> with_config(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + i);
      break;
    }
  }
  if (path.empty()) return args;
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML().from_file(path);
  } catch (const CLI::Error& e) {
    throw UsageError("cannot read config '" + path + "': " + e.what());
  }
  auto given = [&](const std::string& flag) {
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
  };
  for (const auto& item : items) {
    const std::string flag = "--" + item.name;
    if (item.name == "config" || given(flag) || item.inputs.empty()) continue;
    if (item.inputs.size() == 1 && item.inputs[0] == "true") {
      args.push_back(flag);
    } else if (!(item.inputs.size() == 1 && item.inputs[0] == "false")) {
      std::string joined;
      for (const auto& v : item.inputs) joined += (joined.empty() ? "" : ",") + v;
      args.push_back(flag);
      args.push_back(joined);
    }
  }
  return args;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Gauss maps of rotational surfaces in pseudo-Euclidean 4-space"};
  app.require_subcommand(1);

  SurfaceArgs analyze_args, classify_args, mesh_args;
  auto* analyze = app.add_subcommand("analyze", "sample frame, second fundamental form and Gauss map");
  add_surface_options(analyze, analyze_args, false);
  analyze->add_option("--format", analyze_args.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  analyze->footer(csv_help());

  auto* classify = app.add_subcommand("classify", "decide the pointwise 1-type kind on a grid");
  add_surface_options(classify, classify_args, true);
  classify->add_option("--format", classify_args.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  classify->footer(csv_help());

  mesh_args.format = "csv";
  auto* mesh = app.add_subcommand("mesh", "emit sampled surface coordinates");
  add_surface_options(mesh, mesh_args, false);
  mesh->add_option("--format", mesh_args.format, "csv | json")->check(CLI::IsMember({"json", "csv"}));

  std::string verify_id, verify_perturb, verify_out = "-", verify_format = "text";
  bool verify_all = false, verify_verbose = false;
  std::uint64_t verify_seed = 1;
  int verify_n = 11;
  auto* verify = app.add_subcommand("verify", "run executable theorem checks");
  auto* id_opt = verify->add_option("id", verify_id, "theorem id (see --list)");
  auto* all_opt = verify->add_flag("--all", verify_all, "run every registered check");
  id_opt->excludes(all_opt);
  bool verify_list = false;
  verify->add_flag("--list", verify_list, "list registered ids");
  verify->add_option("--perturb", verify_perturb, "add delta to one closed-form coefficient, field=delta");
  verify->add_option("--seed", verify_seed, "seed for the randomized path comparison");
  verify->add_option("--grid-n", verify_n, "points per grid axis")->check(CLI::Range(5, 101));
  verify->add_option("--out", verify_out, "output file, - for stdout");
  verify->add_option("--format", verify_format, "text | json")->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--verbose", verify_verbose, "show passing facts too");
  std::string verify_config;
  verify->add_option("--config", verify_config, "key = value file; flags override it");

  std::string families_format = "text";
  auto* families = app.add_subcommand("families", "list the surface family catalog");
  families->add_option("--format", families_format, "text | json")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> args = with_config(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return run_surface(analyze_args, "analyze", false);
    if (*classify) return run_surface(classify_args, "classify", true);
    if (*mesh) {
      const Resolved rs = resolve(mesh_args);
      std::string text = mesh_csv(rs.family, rs.grid);
      if (mesh_args.format == "json") {
        nlohmann::json pts = nlohmann::json::array();
        std::istringstream in(text);
        std::string row;
        std::getline(in, row);
        while (std::getline(in, row)) {
          std::vector<double> v;
          std::istringstream cells(row);
          for (std::string c; std::getline(cells, c, ',');) v.push_back(std::stod(c));
          pts.push_back(v);
        }
        text = nlohmann::json{{"family", rs.family.name},
                              {"columns", {"s", "t", "x1", "x2", "x3", "x4"}},
                              {"points", pts}}
                   .dump(2) +
               "\n";
      }
      emit(text, mesh_args.out);
      return 0;
    }
    if (*families) {
      if (families_format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& [name, desc] : family_catalog()) j.push_back({{"name", name}, {"description", desc}});
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& [name, desc] : family_catalog()) std::printf("%-6s %s\n", name.c_str(), desc.c_str());
      }
      return 0;
    }
    if (*verify) {
      if (verify_list) {
        for (const auto& t : theorem_registry()) std::printf("%-28s %s\n", t.id.c_str(), t.statement.c_str());
        return 0;
      }
      if (!verify_all && verify_id.empty()) throw UsageError("verify: give a theorem id or --all");
      VerifyOptions vo;
      vo.seed = verify_seed;
      vo.grid_n = verify_n;
      if (!verify_perturb.empty()) vo.perturbation = parse_perturbation(verify_perturb);
      std::vector<TheoremCheck> checks =
          verify_all ? run_all_checks(vo) : std::vector<TheoremCheck>{run_theorem_check(verify_id, vo)};
      bool ok = true;
      for (const auto& c : checks) ok = ok && c.passed;
      if (verify_format == "json") {
        Report r;
        r.command = "verify";
        r.checks = checks;
        r.metadata["seed"] = std::to_string(verify_seed);
        if (!verify_perturb.empty()) r.metadata["perturbation"] = verify_perturb;
        emit(to_json(r).dump(2) + "\n", verify_out);
      } else {
        emit(verify_table(checks, verify_verbose), verify_out);
      }
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateError& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return 2;
  } catch (const RangeError& e) {
    std::cerr << "range error: " << e.what() << "\n";
    return 2;
  } catch (const IntegrationHalt& e) {
    std::cerr << "profile integration stopped: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace rotsurf
