// SPDX-License-Identifier: Apache-2.0
//
// Extrinsic geometry of a surface family at a point: frame, second
// fundamental form, normal connection, mean curvature, normal curvature,
// Gauss map and its Laplacian.
//
// Conventions: h^r_ij = <D~_{e_j} e_i, e_r>, omega_AB(X) = <D~_X e_A, e_B>,
// and the Laplacian is the geometer's one, Delta = -Laplace-Beltrami, so the
// position vector satisfies Delta r = -2H.
#pragma once

#include <array>
#include <functional>
#include <vector>

#include "rotsurf/surface_families.hpp"

namespace rotsurf {

/// Where the coefficients come from: the explicit tables of each family or
/// the generic jet pipeline (Gram-Schmidt frame, dual-number derivatives).
enum class Path { ClosedForm, Generic };

const char* to_string(Path p);

struct GeometrySample {
  double s = 0, t = 0;
  MovingFrame frame;
  double eps = 1, eps_star = 1;
  double q = 1, A = 1;
  Sym2 h3, h4;
  std::array<double, 2> om12{};  // omega_12(e1), omega_12(e2)
  std::array<double, 2> om34{};
  std::array<double, 2> trace{};  // tr A_3, tr A_4
  // dtrace[r][i] = e_i(tr A_{r+3})
  std::array<std::array<double, 2>, 2> dtrace{};
  PseudoVector H;
  double normH2 = 0;
  double norm_h2 = 0;
  double RD = 0;
  Bivector nu;
  Bivector lap_nu;
  PseudoVector r;
};

/// Full sample along the chosen path. The Laplacian is the structural one.
GeometrySample closed_form_geometry(const SurfaceFamily& family, double s,
                                    double t, const Perturbation& p = {});
GeometrySample generic_geometry(const SurfaceFamily& family, double s,
                                double t);
GeometrySample geometry(const SurfaceFamily& family, double s, double t,
                        Path path, const Perturbation& p = {});

MovingFrame moving_frame(const SurfaceFamily& family, double s, double t,
                         Path path = Path::ClosedForm);
std::pair<Sym2, Sym2> second_fundamental(const SurfaceFamily& family, double s,
                                         double t, Path path = Path::ClosedForm);
/// ((omega_12(e1), omega_12(e2)), (omega_34(e1), omega_34(e2))).
std::pair<std::array<double, 2>, std::array<double, 2>> connection_forms(
    const SurfaceFamily& family, double s, double t,
    Path path = Path::ClosedForm);

/// H = 1/2 sum_r eps_r tr(A_r) e_r and <H,H>.
std::pair<PseudoVector, double> mean_curvature(const GeometrySample& g);

/// sum eps_i eps_j eps_r (h^r_ij)^2.
double squared_h(const GeometrySample& g);

/// R^D(e1,e2;e3,e4) = sum_i eps_i (h^3_i2 h^4_i1 - h^3_i1 h^4_i2).
double normal_curvature_RD(const GeometrySample& g);

/// (D_{e1} H, D_{e2} H).
std::array<PseudoVector, 2> normal_derivative_DH(const GeometrySample& g);
std::array<PseudoVector, 2> normal_derivative_DH(const SurfaceFamily& family,
                                                 double s, double t,
                                                 Path path = Path::ClosedForm);

/// |LHS - RHS| of the two specialized Codazzi equations of the family,
/// derivatives by five-point central differences (step h) on the closed-form
/// tables.
std::array<double, 2> codazzi_residual(const SurfaceFamily& family, double s,
                                       double t, const Perturbation& p = {},
                                       double h = 1e-4);

/// Hodge complement of the normalized r_s ^ r_t with the family orientation.
Bivector gauss_map(const SurfaceFamily& family, double s, double t);

/// Delta nu assembled from h, omega_34, R^D and the trace gradients.
Bivector laplacian_gauss_structural(const GeometrySample& g);
Bivector laplacian_gauss_structural(const SurfaceFamily& family, double s,
                                    double t, Path path = Path::ClosedForm);

/// Coordinate Laplace-Beltrami on a 9-point stencil of Gauss-map samples.
/// Throws RangeError when the stencil leaves the family domain.
Bivector laplacian_gauss_fd(const SurfaceFamily& family, double s, double t,
                            double h = 1e-3);

/// Same operator applied to the position vector (sign anchor: -2H).
PseudoVector laplacian_position_fd(const SurfaceFamily& family, double s,
                                   double t, double h = 1e-3);

struct GridSpec {
  double s_lo = 0, s_hi = 1;
  int ns = 11;
  double t_lo = 0, t_hi = 1;
  int nt = 11;
};

/// Uniform grid with degenerate points masked out.
struct Grid {
  GridSpec spec;
  std::vector<double> s, t;  // one entry per point, row-major in s
  std::vector<bool> masked;

  std::size_t size() const { return s.size(); }
  std::size_t unmasked() const;
};

/// Grid over the family, masking |q| or |A| < tau_reg. Throws UsageError on
/// bad counts or points outside the family domain.
Grid make_grid(const SurfaceFamily& family, const GridSpec& spec);

GridSpec default_grid(const SurfaceFamily& family, int n = 11);

}  // namespace rotsurf
