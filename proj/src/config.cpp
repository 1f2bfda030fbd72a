// SPDX-License-Identifier: Apache-2.0
#include "rotsurf/config.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace rotsurf {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

double to_double(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("'" + key + "': expected a number, got '" + text + "'");
  }
}

int to_int(const std::string& key, const std::string& text) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw UsageError("'" + key + "': expected an integer, got '" + text + "'");
  return v;
}

void reject_unknown(const std::map<std::string, double>& params,
                    const std::set<std::string>& allowed, const std::string& what) {
  for (const auto& [k, v] : params)
    if (!allowed.count(k)) throw UsageError(what + ": unknown parameter '" + k + "'");
}

double get(const std::map<std::string, double>& m, const std::string& k, double fallback) {
  const auto it = m.find(k);
  return it == m.end() ? fallback : it->second;
}

}  // namespace

std::map<std::string, std::string> parse_kv_list(const std::string& text) {
  std::map<std::string, std::string> out;
  if (trim(text).empty()) return out;
  for (const std::string& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw UsageError("malformed entry '" + item + "' (expected key=value)");
    const std::string key = trim(item.substr(0, eq));
    if (out.count(key)) throw UsageError("duplicate key '" + key + "'");
    out[key] = trim(item.substr(eq + 1));
  }
  return out;
}

std::map<std::string, double> parse_params(const std::string& text) {
  std::map<std::string, double> out;
  for (const auto& [k, v] : parse_kv_list(text)) out[k] = to_double(k, v);
  return out;
}

ProfileCurve parse_profile(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = trim(text.substr(0, colon));
  auto kv = parse_kv_list(colon == std::string::npos ? "" : text.substr(colon + 1));
  std::optional<std::string> branch;
  if (auto it = kv.find("branch"); it != kv.end()) {
    branch = it->second;
    kv.erase(it);
  }
  std::map<std::string, double> p;
  for (const auto& [k, v] : kv) p[k] = to_double(k, v);
  if (branch && kind != "conic") throw UsageError("'branch' only applies to conic profiles");

  if (kind == "line") {
    reject_unknown(p, {"x0", "x1", "w0", "w1"}, "line profile");
    return LineProfile{get(p, "x0", 0), get(p, "x1", 0), get(p, "w0", 1), get(p, "w1", 0)};
  }
  if (kind == "hyperbolic") {
    reject_unknown(p, {"r0"}, "hyperbolic profile");
    return HyperbolicArcProfile{get(p, "r0", 1)};
  }
  if (kind == "power") {
    reject_unknown(p, {"b0", "exp"}, "power profile");
    return PowerProfile{get(p, "b0", 1), get(p, "exp", 2)};
  }
  if (kind == "conic") {
    reject_unknown(p, {"lambda0", "mu0"}, "conic profile");
    ConicBranch b = ConicBranch::Trigonometric;
    if (branch) {
      if (*branch == "trig") b = ConicBranch::Trigonometric;
      else if (*branch == "hyp") b = ConicBranch::Hyperbolic;
      else throw UsageError("conic branch must be trig or hyp");
    }
    return ConicProfile{get(p, "lambda0", 1), get(p, "mu0", 2), b};
  }
  if (kind == "vranceanu") {
    reject_unknown(p, {"f0", "k"}, "vranceanu profile");
    return VranceanuProfile{get(p, "f0", 1), get(p, "k", 0.1)};
  }
  if (kind == "ode") {
    reject_unknown(p, {"a", "b", "x0", "w0", "phi0", "lo", "hi", "step"}, "ode profile");
    return zero_mean_profile_ode(get(p, "a", 1), get(p, "b", 1), get(p, "x0", 1),
                                 get(p, "w0", 0), get(p, "phi0", 0),
                                 {get(p, "lo", -0.7), get(p, "hi", 0.7)},
                                 get(p, "step", 1e-3));
  }
  throw UsageError("unknown profile kind '" + kind + "'");
}

GridSpec parse_grid(const std::string& text, const GridSpec& base) {
  GridSpec g = base;
  for (const auto& [axis, range] : parse_kv_list(text)) {
    const auto parts = split(range, ':');
    if (parts.size() != 3) throw UsageError("grid axis '" + axis + "' must be lo:hi:n");
    const double lo = to_double(axis, parts[0]), hi = to_double(axis, parts[1]);
    const int n = to_int(axis, parts[2]);
    if (n < 1 || lo > hi) throw UsageError("grid axis '" + axis + "' needs n >= 1 and lo <= hi");
    if (axis == "s") {
      g.s_lo = lo; g.s_hi = hi; g.ns = n;
    } else if (axis == "t") {
      g.t_lo = lo; g.t_hi = hi; g.nt = n;
    } else {
      throw UsageError("unknown grid axis '" + axis + "'");
    }
  }
  return g;
}

Tolerances parse_tolerances(const std::string& text, Tolerances base) {
  const auto p = parse_params(text);
  std::map<std::string, double> q(p.begin(), p.end());
  reject_unknown(q, {"harm", "fit", "const", "C"}, "--tol");
  base.tau_harm = get(p, "harm", base.tau_harm);
  base.tau_fit = get(p, "fit", base.tau_fit);
  base.tau_const = get(p, "const", base.tau_const);
  base.tau_C = get(p, "C", base.tau_C);
  return base;
}

Perturbation parse_perturbation(const std::string& text) {
  const auto kv = parse_kv_list(text);
  if (kv.size() != 1) throw UsageError("--perturb expects a single field=delta");
  const auto& [field, delta] = *kv.begin();
  return {coefficient_field_from_string(field), to_double(field, delta)};
}

const std::vector<std::pair<std::string, std::string>>& family_catalog() {
  static const std::vector<std::pair<std::string, std::string>> catalog{
      {"dr", "double rotational surface in E^4_1; params a,b; profile line|hyperbolic|ode"},
      {"dsmin", "minimal surface of the de Sitter space; params r0,a,b"},
      {"cone", "timelike cone x = c0 w; params c0,w0,a,b"},
      {"plane", "coordinate plane E_i ^ E_j; params i,j (1-based), t"},
      {"m1", "rotational surface M1(b) in E^4_2; param b; profile power|conic|vranceanu|line"},
      {"m2", "rotational surface M2(b) in E^4_2; param b; profile power|conic|vranceanu|line"},
  };
  return catalog;
}

FamilySpec build_family_spec(const std::string& family,
                             const std::optional<std::string>& profile,
                             const std::map<std::string, double>& params) {
  auto need_profile = [&]() {
    if (!profile) throw UsageError("--family " + family + " requires --profile");
    return parse_profile(*profile);
  };
  auto no_profile = [&]() {
    if (profile) throw UsageError("--family " + family + " takes no --profile");
  };
  if (family == "dr") {
    reject_unknown(params, {"a", "b"}, family);
    return DoubleRotationalSpec{get(params, "a", 1), get(params, "b", 1), need_profile()};
  }
  if (family == "dsmin") {
    no_profile();
    reject_unknown(params, {"r0", "a", "b"}, family);
    return DeSitterMinimalSpec{get(params, "r0", 1), get(params, "a", 1), get(params, "b", 1)};
  }
  if (family == "cone") {
    no_profile();
    reject_unknown(params, {"c0", "w0", "a", "b"}, family);
    return ConeSpec{get(params, "c0", 0.5), get(params, "w0", 1), get(params, "a", 1),
                    get(params, "b", 1)};
  }
  if (family == "plane") {
    no_profile();
    reject_unknown(params, {"i", "j", "t"}, family);
    return PlaneSpec{static_cast<int>(get(params, "i", 3)) - 1,
                     static_cast<int>(get(params, "j", 4)) - 1,
                     static_cast<int>(get(params, "t", 1))};
  }
  if (family == "m1" || family == "m2") {
    reject_unknown(params, {"b"}, family);
    const double b = get(params, "b", 1);
    if (family == "m1") return M1Spec{b, need_profile()};
    return M2Spec{b, need_profile()};
  }
  throw UsageError("unknown family '" + family + "'");
}

}  // namespace rotsurf
