// SPDX-License-Identifier: Apache-2.0
//
// Structured output of the analyze/classify/verify commands. JSON is the
// canonical form and round-trips through report_from_json; CSV is one row
// per sample with the fixed column list kCsvColumns.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rotsurf/theorems.hpp"

namespace rotsurf {

struct SampleRow {
  double s = 0, t = 0;
  std::array<double, 4> eps{1, 1, 1, 1};
  Sym2 h3, h4;
  std::array<double, 2> om12{}, om34{};
  std::array<double, 4> H{};
  double normH2 = 0, norm_h2 = 0, RD = 0;
  std::array<double, 6> nu{}, lap_nu{};
  // Filled when the report carries a classification.
  double f = 0;
  bool f_consistent = true;
  std::array<double, 6> C_frame{};
};

struct ClassificationSummary {
  Verdict verdict = Verdict::NotPointwise1Type;
  std::array<double, 6> C{};  // ambient Pluecker coordinates
  int rank = 0;
  double ls_residual = 0, parallel_max = 0, constancy = 0;
  double max_lap_norm = 0, harmonic_fraction = 0;
  bool f_small_flag = false;
  std::array<double, 6> C_frame_mean{}, C_frame_spread{};
};

struct Report {
  std::string command;
  std::string family;
  std::string profile;
  std::map<std::string, double> params;
  GridSpec grid;
  Tolerances tol;
  std::string path = "closed_form";
  std::string laplacian = "structural";
  std::vector<SampleRow> samples;
  std::optional<ClassificationSummary> classification;
  std::vector<TheoremCheck> checks;
  std::map<std::string, std::string> metadata;
};

/// Samples on the unmasked grid points, plus the classification when asked.
Report build_report(const std::string& command, const SurfaceFamily& family,
                    const Grid& grid, const ClassifyOptions& opt,
                    bool with_classification);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

extern const std::vector<std::string> kCsvColumns;
std::string to_csv(const Report& r);

/// "s,t,x1,x2,x3,x4" rows on the unmasked grid points.
std::string mesh_csv(const SurfaceFamily& family, const Grid& grid);

/// Write text to `out` ("-" or empty for stdout). Throws UsageError when
/// the file cannot be opened.
void emit(const std::string& text, const std::string& out);

}  // namespace rotsurf
