// Copyright 2026 The signapprox Authors
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

// Conformal maps of the upper half-plane onto regions {y > C(x)} whose
// boundary is a graph with exponentially flat asymptotes. Double precision.

#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace signapprox {

using Complex = std::complex<double>;

enum class CurveShape {
  kFlat,      // C == 0
  kOneSided,  // C == 0 for x <= 0, rising from a square-root corner at 0
  kEven,      // C == 0 for |x| <= B, even, corners at +-B
};

struct BoundaryCurve {
  CurveShape shape = CurveShape::kFlat;
  std::function<double(double)> height;
  /// cos(height) where the curve is raised; >= 1 on the flat part. The
  /// boundary condition is solved in the form cos(rho) = cos_height(u).
  std::function<double(double)> cos_height;
  std::function<double(double)> cos_height_derivative;
  double left_asymptote = 0.0;
  double right_asymptote = 0.0;
  std::vector<double> corners;
  /// Abscissa of the right corner (0 for one-sided, B for even).
  double corner = 0.0;

  /// arccos(e^{-x}) for x >= 0, 0 for x < 0.
  static BoundaryCurve omega_star();
  /// arccos(cosh B / cosh x) for |x| >= B, 0 inside.
  static BoundaryCurve entire(double B);
  static BoundaryCurve flat();
};

struct MeshSpec {
  /// Step in tau, where t = t_corner + tau^2 (sigma = 1 units).
  double h_tau = 0.05;
  /// Mesh covers t - t_corner in [0, truncation]; constant tail beyond.
  double truncation = 40.0;
};

struct BoundaryDensity {
  /// Real-axis abscissae t_i, right of the corner preimage; increasing.
  std::vector<double> grid;
  /// Im of the map at grid points.
  std::vector<double> rho;
  double tail_level_right = 0.0;
  double tail_start_right = 0.0;
  double tail_level_left = 0.0;
};

struct HalfPlaneMap {
  double sigma = 1.0;
  BoundaryDensity density;
  BoundaryCurve curve;
  MeshSpec mesh;
  double tol = 0.0;
  /// Internal nodes: t_i = corner_preimage + tau_i^2.
  std::vector<double> tau;
  double corner_preimage = 0.0;
  /// Re of the map at grid points (image abscissae).
  std::vector<double> image;
  int iterations = 0;
  /// sup |rho_i - C(Re map(t_i))| over the grid.
  double residual = 0.0;
  bool converged = false;

  /// Schwarz-integral evaluation. For real z the real part is a principal
  /// value and the imaginary part is the density. Throws DomainError for
  /// Im z < 0.
  Complex operator()(Complex z) const;
};

Complex eval_map(const HalfPlaneMap& map, Complex z);

/// Newton iteration on the discretized boundary condition. Throws
/// ResolutionError for meshes that cannot resolve the corner or tol below
/// double resolution; ConvergenceError if the update grows for 10 steps in a
/// row or the iteration limit is hit.
HalfPlaneMap solve_halfplane_map(const BoundaryCurve& curve, double sigma, const MeshSpec& mesh = {},
                                 double tol = 1e-12);

/// t with Re map(t) = x on the real axis right of the corner preimage.
double real_preimage(const HalfPlaneMap& map, double x);

/// (1/pi) int_0^S rho(s) ds / s for rho sampled at s = tau_i^2, piecewise
/// linear in tau. Exact for rho = k sqrt(s).
double integral_ds_over_s(const std::vector<double>& tau, const std::vector<double>& rho);

struct ConstantReport {
  double value = 0.0;
  double value_doubled = 0.0;
  double richardson = 0.0;
  double error_estimate = 0.0;
  double h_tau = 0.0;
  int nodes = 0;
  int nodes_doubled = 0;
};

/// (1/pi) int_0^inf (Im H(t) - (pi/2) chi_[2,inf)(t)) dt / t on the map's own
/// mesh, plus a re-solve on the doubled mesh for the error estimate. The map
/// must be the omega_star map with sigma = 1 and residual <= quad_tol / 10.
ConstantReport compute_c(const HalfPlaneMap& map, double quad_tol = 1e-8);

/// arccos(cosh B / cosh t) + i t.
Complex gamma_b(double B, double t);
double omega_star_height(double x);

struct EntireSolution {
  double B = 0.0;
  /// Corner preimage of the sigma = 1 map on this mesh.
  double A = 0.0;
  HalfPlaneMap map;
};

/// Map onto the region above C_B with h(z) ~ z, h(0) = 0 on one mesh.
EntireSolution solve_entire(double B, const MeshSpec& mesh = {}, double tol = 1e-12);

/// A = h^{-1}(B): Richardson combination of the default and doubled meshes.
/// B < 1 is a DomainError.
double entire_A_of_B(double B, double tol = 1e-12);

/// CSV rows t,rho,curve_height_at_image,residual.
std::string density_csv(const HalfPlaneMap& map);
/// {"sigma","mesh","tol","iterations","residual"}.
std::string map_metadata_json(const HalfPlaneMap& map);

}  // namespace signapprox
