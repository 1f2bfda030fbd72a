// SPDX-License-Identifier: Apache-2.0
//
// Text grammar shared by the CLI and config files:
//   --params k=v,k=v             numeric family parameters
//   --profile kind:k=v,...       profile curve
//   --grid s=lo:hi:n,t=lo:hi:n   sampling grid
//   --tol harm=..,fit=..,const=..,C=..
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rotsurf/classifier.hpp"

namespace rotsurf {

/// "k=v,k=v" -> map. Throws UsageError on malformed entries or values.
std::map<std::string, std::string> parse_kv_list(const std::string& text);
std::map<std::string, double> parse_params(const std::string& text);

/// "kind:k=v,..." for kind in line, hyperbolic, power, conic, vranceanu, ode.
ProfileCurve parse_profile(const std::string& text);

/// Missing axes keep the values of `base`.
GridSpec parse_grid(const std::string& text, const GridSpec& base);

Tolerances parse_tolerances(const std::string& text, Tolerances base = {});

Perturbation parse_perturbation(const std::string& text);

/// Catalog entry names accepted by --family.
const std::vector<std::pair<std::string, std::string>>& family_catalog();

/// Build a spec from --family, --profile and --params. Unknown parameter
/// names are usage errors.
FamilySpec build_family_spec(const std::string& family,
                             const std::optional<std::string>& profile,
                             const std::map<std::string, double>& params);

}  // namespace rotsurf
