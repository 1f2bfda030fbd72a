// SPDX-License-Identifier: Apache-2.0
#include "rotsurf/report.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace rotsurf {

using nlohmann::json;

namespace {

json sym(const Sym2& m) { return json::array({m.m11, m.m12, m.m22}); }
Sym2 sym_from(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()}; }

const char* to_string(LaplacianSource l) {
  return l == LaplacianSource::Structural ? "structural" : "finite_difference";
}

}  // namespace

Report build_report(const std::string& command, const SurfaceFamily& family,
                    const Grid& grid, const ClassifyOptions& opt,
                    bool with_classification) {
  Report r;
  r.command = command;
  r.family = family.name;
  r.profile = profile_name(family.profile);
  r.grid = grid.spec;
  r.tol = opt.tol;
  r.path = to_string(opt.path);
  r.laplacian = to_string(opt.laplacian);
  if (opt.perturbation.field != CoefficientField::None) {
    r.metadata["perturbation"] = std::string(to_string(opt.perturbation.field)) + "=" +
                                 std::to_string(opt.perturbation.delta);
  }
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (grid.masked[k]) continue;
    const GeometrySample g = geometry(family, grid.s[k], grid.t[k], opt.path, opt.perturbation);
    SampleRow row;
    row.s = g.s;
    row.t = g.t;
    row.eps = g.frame.eps;
    row.h3 = g.h3;
    row.h4 = g.h4;
    row.om12 = g.om12;
    row.om34 = g.om34;
    row.H = g.H.coords;
    row.normH2 = g.normH2;
    row.norm_h2 = g.norm_h2;
    row.RD = g.RD;
    row.nu = g.nu.plucker;
    row.lap_nu = opt.laplacian == LaplacianSource::Structural
                     ? g.lap_nu.plucker
                     : laplacian_gauss_fd(family, g.s, g.t).plucker;
    r.samples.push_back(row);
  }
  r.metadata["masked_points"] = std::to_string(grid.size() - grid.unmasked());
  if (!with_classification) return r;

  const ClassificationResult c = classify(family, grid, opt);
  ClassificationSummary sum;
  sum.verdict = c.verdict;
  sum.C = c.C.plucker;
  sum.rank = c.rank;
  sum.ls_residual = c.ls_residual;
  sum.parallel_max = c.parallel_max;
  sum.constancy = c.constancy;
  sum.max_lap_norm = c.max_lap_norm;
  sum.harmonic_fraction = c.harmonic_fraction;
  sum.f_small_flag = c.f_small_flag;
  const std::size_t n = c.C_frame.size();
  for (int i = 0; i < 6 && n > 0; ++i) {
    double lo = INFINITY, hi = -INFINITY, mean = 0;
    for (const auto& row : c.C_frame) {
      lo = std::min(lo, row[i]);
      hi = std::max(hi, row[i]);
      mean += row[i] / n;
    }
    sum.C_frame_mean[i] = mean;
    sum.C_frame_spread[i] = hi - lo;
  }
  for (std::size_t p = 0; p < r.samples.size() && p < c.f_values.size(); ++p) {
    r.samples[p].f = c.f_values[p];
    r.samples[p].f_consistent = c.f_consistent[p];
    r.samples[p].C_frame = c.C_frame[p];
  }
  r.classification = sum;
  return r;
}

json to_json(const Report& r) {
  json j;
  j["command"] = r.command;
  j["family"] = r.family;
  j["profile"] = r.profile;
  j["params"] = r.params;
  j["grid"] = {{"s", {r.grid.s_lo, r.grid.s_hi, r.grid.ns}},
               {"t", {r.grid.t_lo, r.grid.t_hi, r.grid.nt}}};
  j["tolerances"] = {{"harm", r.tol.tau_harm}, {"fit", r.tol.tau_fit},
                     {"const", r.tol.tau_const}, {"C", r.tol.tau_C}};
  j["path"] = r.path;
  j["laplacian"] = r.laplacian;
  j["bivector_order"] = {"12", "13", "14", "23", "24", "34"};
  json rows = json::array();
  for (const SampleRow& s : r.samples) {
    rows.push_back({{"s", s.s}, {"t", s.t}, {"eps", s.eps}, {"h3", sym(s.h3)},
                    {"h4", sym(s.h4)}, {"om12", s.om12}, {"om34", s.om34},
                    {"H", s.H}, {"normH2", s.normH2}, {"norm_h2", s.norm_h2},
                    {"RD", s.RD}, {"nu", s.nu}, {"lap_nu", s.lap_nu}, {"f", s.f},
                    {"f_consistent", s.f_consistent}, {"C_frame", s.C_frame}});
  }
  j["samples"] = rows;
  if (r.classification) {
    const auto& c = *r.classification;
    json f = json::array();
    for (const SampleRow& row : r.samples) f.push_back(row.f);
    j["classification"] = {
        {"verdict", to_string(c.verdict)}, {"C", c.C}, {"rank", c.rank},
        {"C_frame_stats", {{"mean", c.C_frame_mean}, {"spread", c.C_frame_spread}}},
        {"f", f},
        {"residuals", {{"least_squares", c.ls_residual}, {"parallel", c.parallel_max},
                       {"constancy", c.constancy}, {"max_lap_norm", c.max_lap_norm}}},
        {"harmonic_fraction", c.harmonic_fraction}, {"f_small_flag", c.f_small_flag}};
  } else {
    j["classification"] = nullptr;
  }
  json checks = json::array();
  for (const TheoremCheck& c : r.checks) {
    json facts = json::array();
    for (const Fact& f : c.facts)
      facts.push_back({{"name", f.name}, {"expected", f.expected},
                       {"measured", f.measured}, {"passed", f.passed}});
    checks.push_back({{"id", c.id}, {"statement", c.statement},
                      {"witnesses", c.witnesses}, {"facts", facts}, {"passed", c.passed}});
  }
  j["checks"] = checks;
  j["metadata"] = r.metadata;
  return j;
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.family = j.at("family").get<std::string>();
    r.profile = j.at("profile").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, double>>();
    const auto& gs = j.at("grid").at("s");
    const auto& gt = j.at("grid").at("t");
    r.grid = {gs.at(0).get<double>(), gs.at(1).get<double>(), gs.at(2).get<int>(),
              gt.at(0).get<double>(), gt.at(1).get<double>(), gt.at(2).get<int>()};
    const auto& tol = j.at("tolerances");
    r.tol = {tol.at("harm").get<double>(), tol.at("fit").get<double>(),
             tol.at("const").get<double>(), tol.at("C").get<double>()};
    r.path = j.at("path").get<std::string>();
    r.laplacian = j.at("laplacian").get<std::string>();
    for (const json& s : j.at("samples")) {
      SampleRow row;
      row.s = s.at("s").get<double>();
      row.t = s.at("t").get<double>();
      row.eps = s.at("eps").get<std::array<double, 4>>();
      row.h3 = sym_from(s.at("h3"));
      row.h4 = sym_from(s.at("h4"));
      row.om12 = s.at("om12").get<std::array<double, 2>>();
      row.om34 = s.at("om34").get<std::array<double, 2>>();
      row.H = s.at("H").get<std::array<double, 4>>();
      row.normH2 = s.at("normH2").get<double>();
      row.norm_h2 = s.at("norm_h2").get<double>();
      row.RD = s.at("RD").get<double>();
      row.nu = s.at("nu").get<std::array<double, 6>>();
      row.lap_nu = s.at("lap_nu").get<std::array<double, 6>>();
      row.f = s.at("f").get<double>();
      row.f_consistent = s.at("f_consistent").get<bool>();
      row.C_frame = s.at("C_frame").get<std::array<double, 6>>();
      r.samples.push_back(row);
    }
    if (!j.at("classification").is_null()) {
      const json& c = j.at("classification");
      ClassificationSummary sum;
      sum.verdict = verdict_from_string(c.at("verdict").get<std::string>());
      sum.C = c.at("C").get<std::array<double, 6>>();
      sum.rank = c.at("rank").get<int>();
      const json& res = c.at("residuals");
      sum.ls_residual = res.at("least_squares").get<double>();
      sum.parallel_max = res.at("parallel").get<double>();
      sum.constancy = res.at("constancy").get<double>();
      sum.max_lap_norm = res.at("max_lap_norm").get<double>();
      sum.harmonic_fraction = c.at("harmonic_fraction").get<double>();
      sum.f_small_flag = c.at("f_small_flag").get<bool>();
      sum.C_frame_mean = c.at("C_frame_stats").at("mean").get<std::array<double, 6>>();
      sum.C_frame_spread = c.at("C_frame_stats").at("spread").get<std::array<double, 6>>();
      r.classification = sum;
    }
    for (const json& c : j.at("checks")) {
      TheoremCheck tc;
      tc.id = c.at("id").get<std::string>();
      tc.statement = c.at("statement").get<std::string>();
      tc.witnesses = c.at("witnesses").get<std::vector<std::string>>();
      tc.passed = c.at("passed").get<bool>();
      for (const json& f : c.at("facts"))
        tc.facts.push_back({f.at("name").get<std::string>(), f.at("expected").get<std::string>(),
                            f.at("measured").get<std::string>(), f.at("passed").get<bool>()});
      r.checks.push_back(tc);
    }
    r.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed report: ") + e.what());
  }
}

const std::vector<std::string> kCsvColumns{
    "s", "t", "eps1", "eps2", "eps3", "eps4",
    "h3_11", "h3_12", "h3_22", "h4_11", "h4_12", "h4_22",
    "om12_1", "om12_2", "om34_1", "om34_2",
    "H1", "H2", "H3", "H4", "normH2", "norm_h2", "RD",
    "nu12", "nu13", "nu14", "nu23", "nu24", "nu34",
    "lap12", "lap13", "lap14", "lap23", "lap24", "lap34",
    "f", "f_consistent",
    "C12", "C13", "C14", "C23", "C24", "C34"};

std::string to_csv(const Report& r) {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t i = 0; i < kCsvColumns.size(); ++i) out << (i ? "," : "") << kCsvColumns[i];
  out << '\n';
  for (const SampleRow& s : r.samples) {
    std::vector<double> v{s.s, s.t};
    v.insert(v.end(), s.eps.begin(), s.eps.end());
    v.insert(v.end(), {s.h3.m11, s.h3.m12, s.h3.m22, s.h4.m11, s.h4.m12, s.h4.m22,
                       s.om12[0], s.om12[1], s.om34[0], s.om34[1]});
    v.insert(v.end(), s.H.begin(), s.H.end());
    v.insert(v.end(), {s.normH2, s.norm_h2, s.RD});
    v.insert(v.end(), s.nu.begin(), s.nu.end());
    v.insert(v.end(), s.lap_nu.begin(), s.lap_nu.end());
    v.insert(v.end(), {s.f, s.f_consistent ? 1.0 : 0.0});
    v.insert(v.end(), s.C_frame.begin(), s.C_frame.end());
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << '\n';
  }
  return out.str();
}

std::string mesh_csv(const SurfaceFamily& family, const Grid& grid) {
  std::ostringstream out;
  out.precision(17);
  out << "s,t,x1,x2,x3,x4\n";
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (grid.masked[k]) continue;
    const PseudoVector x = family.immersion_jet(grid.s[k], grid.t[k], 0).partial(0, 0);
    out << grid.s[k] << ',' << grid.t[k];
    for (int i = 0; i < 4; ++i) out << ',' << x[i];
    out << '\n';
  }
  return out.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw UsageError("cannot open '" + out + "' for writing");
  f << text;
}

}  // namespace rotsurf
