// SPDX-License-Identifier: Apache-2.0
//
// Pointwise 1-type decision from samples of the Gauss map nu and its
// Laplacian: Delta nu = f (nu + C) with C = 0 (first kind) or a nonzero
// constant C (second kind).
#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "rotsurf/surface_geometry.hpp"

namespace rotsurf {

enum class Verdict { Harmonic, FirstKind, SecondKind, NotPointwise1Type };

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct Tolerances {
  double tau_harm = 1e-9;
  double tau_fit = 1e-5;  // use kTauFitFd with finite-difference Laplacians
  double tau_const = 1e-3;
  double tau_C = 1e-6;
};

inline constexpr double kTauFitFd = 1e-3;

/// |lap ^ nu|_aux / (|lap|_aux |nu|_aux); 0 when |lap|_aux < tau_harm.
double parallel_residual(const Bivector& nu, const Bivector& lap_nu,
                         double tau_harm = 1e-9);

struct ConstantFit {
  Bivector C;
  double ls_residual = 0;  // max_p parallel_residual(nu_p + C, lap_p)
  int rank = 0;            // rank of the stacked minors system (max 6)
  bool unique = true;
};

/// Least-squares C from lap_p || nu_p + C (15 linear minors per sample).
/// Minimum-norm solution when rank deficient. Throws UsageError with fewer
/// than 25 samples or when every Laplacian is below tau_harm.
ConstantFit solve_constant_C(const std::vector<Bivector>& nu,
                             const std::vector<Bivector>& lap_nu,
                             double tau_harm = 1e-9);

struct FValue {
  double f = 0;
  bool consistent = true;
  double mismatch = 0;  // max_i |lap_i - f v_i| / |lap|_aux over pivot-sized v_i
};

/// Pivot-ratio recovery of f from lap = f (nu + C). Throws DegenerateError
/// when |nu + C|_aux < tau_reg.
FValue recover_f(const Bivector& nu, const Bivector& lap_nu, const Bivector& C,
                 double tau_fit = 1e-5);

/// Frame components C_AB = <<C, e_A ^ e_B>> in pair order 12,13,...,34.
std::array<double, 6> frame_components(const Bivector& C, const MovingFrame& f);
/// Expansion coefficients eps_A eps_B C_AB, so C = sum c_AB e_A ^ e_B.
std::array<double, 6> expansion_coefficients(const Bivector& C,
                                             const MovingFrame& f);

/// Right-hand sides of the six constancy equations for direction e_i.
std::array<double, 6> constancy_rhs(const GeometrySample& g, int i,
                                    const std::array<double, 6>& c);

/// Max over points and directions of |e_i(C_AB) - rhs|; the derivatives are
/// central differences (step h) of C_AB along the frame. Points whose
/// stencil leaves the domain are skipped.
double constancy_residual(const SurfaceFamily& family,
                          const std::function<Bivector(double, double)>& C,
                          const std::vector<std::array<double, 2>>& points,
                          Path path = Path::ClosedForm, double h = 1e-4);
double constancy_residual(const SurfaceFamily& family, const Bivector& C,
                          const std::vector<std::array<double, 2>>& points,
                          Path path = Path::ClosedForm, double h = 1e-4);

struct ClassificationResult {
  Verdict verdict = Verdict::NotPointwise1Type;
  Bivector C;
  int rank = 0;
  std::vector<std::array<double, 2>> points;
  std::vector<double> f_values;
  std::vector<bool> f_consistent;
  std::vector<std::array<double, 6>> C_frame;
  std::vector<std::array<double, 6>> C_expansion;
  double parallel_max = 0;
  double ls_residual = 0;
  double constancy = 0;
  double max_lap_norm = 0;
  double harmonic_fraction = 0;
  bool f_small_flag = false;  // > 50% of points with |lap| < tau_harm
};

/// Verdict from raw samples. `constancy` certifies a candidate C; pass an
/// empty function to skip the certificate (it then reads as 0).
ClassificationResult classify_samples(
    const std::vector<Bivector>& nu, const std::vector<Bivector>& lap_nu,
    const Tolerances& tol,
    const std::function<double(const Bivector&)>& constancy = {});

enum class LaplacianSource { Structural, FiniteDifference };

struct ClassifyOptions {
  Tolerances tol;
  Path path = Path::ClosedForm;
  LaplacianSource laplacian = LaplacianSource::Structural;
  Perturbation perturbation;
};

/// Full pipeline on the unmasked grid points. Throws UsageError when fewer
/// than 25 points remain.
ClassificationResult classify(const SurfaceFamily& family, const Grid& grid,
                              const ClassifyOptions& opt = {});

}  // namespace rotsurf
