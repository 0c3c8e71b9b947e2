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

// The density is stored on nodes t = t_c + tau^2 with uniform tau. In tau the
// square-root corner becomes a smooth zero, so a piecewise-linear density in
// tau is second-order accurate without grading. Every Cauchy kernel in t
// splits into 1/(tau - r) + 1/(tau + r), integrated exactly against the
// piecewise-linear density.

#include "signapprox/conformal.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <numbers>
#include <sstream>

#include "signapprox/errors.hpp"

namespace signapprox {

namespace {

using std::numbers::pi;

constexpr int kMaxNewton = 100;
constexpr int kGrowthLimit = 10;
constexpr double kDefaultConstant = 0.91893853320467274178;  // log(2 pi) / 2

// Weights c_j with int f(tau) / (tau - w) dtau = sum c_j f_j over the nodes,
// f piecewise linear. For real w the principal value is returned.
void add_cauchy_weights(const std::vector<double>& tau, Complex w, double scale,
                        std::vector<Complex>& out) {
  const std::size_t n = tau.size();
  const bool real_w = w.imag() == 0.0;
  std::vector<Complex> L(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Complex d = tau[j] - w;
    if (real_w) {
      // log 0 := 0 cancels between the two panels meeting at w.
      L[j] = d.real() == 0.0 ? 0.0 : std::log(std::abs(d.real()));
    } else {
      L[j] = std::log(d);
    }
  }
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double dl = tau[j + 1] - tau[j];
    const Complex ell = L[j + 1] - L[j];
    const Complex mu = (w - tau[j]) / dl;
    out[j] += scale * ((1.0 - mu) * ell - 1.0);
    out[j + 1] += scale * (1.0 + mu * ell);
  }
}

// Kernel row: (1/pi) int rho(s) k(s, z) ds as weights on rho_j, where k is
// 1/(s-z) - 1/s (one-sided) or 1/(s-z) - 1/(s+z) (even).
std::vector<Complex> kernel_row(const std::vector<double>& tau, double tc, bool even, Complex z,
                                bool on_axis) {
  std::vector<Complex> row(tau.size(), 0.0);
  Complex R;
  const Complex zr = z - tc;
  if (on_axis) {
    R = zr.real() >= 0.0 ? Complex(std::sqrt(zr.real()), 0.0)
                         : Complex(0.0, std::sqrt(-zr.real()));
  } else {
    R = std::sqrt(zr);
  }
  add_cauchy_weights(tau, R, 1.0 / pi, row);
  add_cauchy_weights(tau, -R, 1.0 / pi, row);
  if (even) {
    const Complex zq = tc + z;
    const Complex Q = Complex(0.0, 1.0) *
                      (on_axis ? Complex(std::sqrt(std::max(zq.real(), 0.0)), 0.0) : std::sqrt(zq));
    add_cauchy_weights(tau, Q, -1.0 / pi, row);
    add_cauchy_weights(tau, -Q, -1.0 / pi, row);
  } else {
    add_cauchy_weights(tau, Complex(0.0, 0.0), -2.0 / pi, row);
  }
  return row;
}

// Constant-density tail beyond S = t_c + tau_N^2.
Complex tail_term(double level, double S, bool even, Complex z, bool on_axis) {
  const double k = level / pi;
  if (on_axis) {
    const double t = z.real();
    if (even) return -k * std::log(std::abs((S - t) / (S + t)));
    return -k * std::log(std::abs(1.0 - t / S));
  }
  if (even) return -k * (std::log(S - z) - std::log(S + z));
  return -k * std::log(1.0 - z / S);
}

double density_at(const HalfPlaneMap& m, double t) {
  const double tc = m.corner_preimage;
  if (t <= tc) return m.density.tail_level_left;
  const double s = std::sqrt(t - tc);
  const auto& tau = m.tau;
  if (s >= tau.back()) return m.density.tail_level_right;
  const auto it = std::upper_bound(tau.begin(), tau.end(), s);
  const std::size_t j = static_cast<std::size_t>(it - tau.begin()) - 1;
  const double f = (s - tau[j]) / (tau[j + 1] - tau[j]);
  return m.density.rho[j] * (1.0 - f) + m.density.rho[j + 1] * f;
}

double curve_height(const BoundaryCurve& c, double x) {
  if (c.shape == CurveShape::kFlat) return 0.0;
  return std::acos(std::min(1.0, c.cos_height(x)));
}

std::vector<double> uniform_tau(const MeshSpec& mesh, double scale) {
  if (!(mesh.h_tau > 0.0) || mesh.h_tau > 0.25) {
    throw ResolutionError("conformal mesh: h_tau must be in (0, 0.25], got " +
                          std::to_string(mesh.h_tau));
  }
  if (!(mesh.truncation > 2.0)) throw ResolutionError("conformal mesh: truncation must exceed 2");
  const int n = static_cast<int>(std::ceil(std::sqrt(mesh.truncation) / mesh.h_tau - 1e-9));
  if (n < 16) throw ResolutionError("conformal mesh: fewer than 16 panels");
  std::vector<double> tau(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) tau[static_cast<std::size_t>(j)] = j * mesh.h_tau * scale;
  return tau;
}

struct Discrete {
  std::vector<double> tau;
  std::vector<double> t;
  Eigen::MatrixXd K;  // rows: nodes 0..N-1; cols: nodes 0..N
  Eigen::VectorXd tail;
  bool even = false;
};

Discrete discretize(std::vector<double> tau, double tc, bool even, double level) {
  Discrete d;
  d.even = even;
  d.tau = std::move(tau);
  const std::size_t n = d.tau.size();
  d.t.resize(n);
  for (std::size_t i = 0; i < n; ++i) d.t[i] = tc + d.tau[i] * d.tau[i];
  const double S = d.t.back();
  d.K.resize(static_cast<long>(n - 1), static_cast<long>(n));
  d.tail.resize(static_cast<long>(n - 1));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto row = kernel_row(d.tau, tc, even, Complex(d.t[i], 0.0), true);
    for (std::size_t j = 0; j < n; ++j) d.K(static_cast<long>(i), static_cast<long>(j)) = row[j].real();
    d.tail(static_cast<long>(i)) = tail_term(level, S, even, Complex(d.t[i], 0.0), true).real();
  }
  return d;
}

double max_abs(const Eigen::VectorXd& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

// Newton on cos(rho_i) = G(u_i), u = sigma t + K rho + tail. rho_0 = 0 at the
// corner, rho_N = level. With free_sigma, sigma is an unknown fixed by
// u_0 = corner_value.
struct NewtonResult {
  Eigen::VectorXd rho;
  double sigma;
  Eigen::VectorXd u;
  int iterations;
};

NewtonResult newton(const Discrete& d, const BoundaryCurve& curve, Eigen::VectorXd rho, double sigma,
                    bool free_sigma, double tol) {
  const long N = static_cast<long>(d.tau.size()) - 1;  // last node index
  const long nr = N - 1;                                // interior unknowns 1..N-1
  const long n = nr + (free_sigma ? 1 : 0);
  Eigen::Map<const Eigen::VectorXd> tv(d.t.data(), N);

  auto residual = [&](const Eigen::VectorXd& r, double s, Eigen::VectorXd& u) {
    u = s * tv + d.K * r + d.tail;
    Eigen::VectorXd F(n);
    for (long i = 1; i < N; ++i) F(i - 1) = std::cos(r(i)) - curve.cos_height(u(i));
    if (free_sigma) F(n - 1) = u(0) - curve.corner;
    return F;
  };

  Eigen::VectorXd u;
  Eigen::VectorXd F = residual(rho, sigma, u);
  double prev_step = INFINITY;
  int growth = 0;
  for (int it = 1; it <= kMaxNewton; ++it) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (long i = 1; i < N; ++i) {
      const double g1 = curve.cos_height_derivative(u(i));
      for (long k = 1; k < N; ++k) J(i - 1, k - 1) = -g1 * d.K(i, k);
      J(i - 1, i - 1) -= std::sin(rho(i));
      if (free_sigma) J(i - 1, n - 1) = -g1 * d.t[static_cast<std::size_t>(i)];
    }
    if (free_sigma) {
      for (long k = 1; k < N; ++k) J(n - 1, k - 1) = d.K(0, k);
      J(n - 1, n - 1) = d.t[0];
    }
    const Eigen::VectorXd dx = J.partialPivLu().solve(-F);
    if (!dx.allFinite()) throw ConvergenceError("conformal Newton: singular Jacobian", prev_step);

    const double f0 = max_abs(F);
    double lam = 1.0;
    Eigen::VectorXd r2 = rho;
    double s2 = sigma;
    Eigen::VectorXd u2;
    Eigen::VectorXd F2;
    for (;;) {
      r2 = rho;
      r2.segment(1, nr) += lam * dx.head(nr);
      s2 = free_sigma ? sigma + lam * dx(n - 1) : sigma;
      F2 = residual(r2, s2, u2);
      if ((F2.allFinite() && max_abs(F2) < (1.0 - 1e-4 * lam) * f0) || lam < 1e-3) break;
      lam /= 2.0;
    }
    rho = std::move(r2);
    sigma = s2;
    u = std::move(u2);
    F = std::move(F2);

    const double step = max_abs(dx);
    if (step <= tol) return {std::move(rho), sigma, std::move(u), it};
    growth = step > prev_step ? growth + 1 : 0;
    if (growth >= kGrowthLimit) {
      throw ConvergenceError("conformal Newton: update grew for " + std::to_string(kGrowthLimit) +
                                 " consecutive steps (line-search factor " + std::to_string(lam) + ")",
                             step);
    }
    prev_step = step;
  }
  throw ConvergenceError("conformal Newton: no convergence in " + std::to_string(kMaxNewton) +
                             " iterations",
                         prev_step);
}

HalfPlaneMap assemble(const BoundaryCurve& curve, const MeshSpec& mesh, double tol, double sigma,
                      std::vector<double> tau, double tc, const Eigen::VectorXd& rho,
                      const Eigen::VectorXd& u, int iterations) {
  HalfPlaneMap m;
  m.sigma = sigma;
  m.curve = curve;
  m.mesh = mesh;
  m.tol = tol;
  m.tau = std::move(tau);
  m.corner_preimage = tc;
  m.iterations = iterations;
  m.converged = true;
  m.density.tail_level_right = curve.right_asymptote;
  m.density.tail_level_left = curve.left_asymptote;
  m.density.tail_start_right = tc + m.tau.back() * m.tau.back();
  const std::size_t n = m.tau.size();
  for (std::size_t i = 0; i < n; ++i) {
    m.density.grid.push_back(tc + m.tau[i] * m.tau[i]);
    m.density.rho.push_back(rho(static_cast<long>(i)));
  }
  // The truncation node itself carries no boundary equation.
  for (std::size_t i = 0; i + 1 < n; ++i) m.image.push_back(u(static_cast<long>(i)));
  // The corner node is pinned; a rounding-level offset there would show up
  // amplified through the square-root profile of C.
  if (std::abs(m.image[0] - curve.corner) <= 64 * 2.2e-16 * std::max(1.0, curve.corner)) {
    m.image[0] = curve.corner;
  }
  double res = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    res = std::max(res, std::abs(m.density.rho[i] - curve_height(curve, m.image[i])));
  }
  m.residual = res;
  return m;
}

void check_tol(double tol) {
  if (!(tol >= 1e-14)) throw ResolutionError("conformal solve: tol below double resolution");
}

// Corner preimage guess from B = A + log(A)/2 + c.
double corner_guess(double B) {
  double lo = 1e-6;
  double hi = B + 10.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (mid + 0.5 * std::log(mid) + kDefaultConstant > B ? hi : lo) = mid;
  }
  return std::max(0.5 * (lo + hi), 0.25);
}

// Even curve: corner preimage pinned, sigma free.
NewtonResult solve_even_free_sigma(const BoundaryCurve& curve, const MeshSpec& mesh, double tol,
                                   double A_pin, std::vector<double>& tau_out) {
  tau_out = uniform_tau(mesh, 1.0);
  const Discrete d = discretize(tau_out, A_pin, true, curve.right_asymptote);
  const long n = static_cast<long>(tau_out.size());
  Eigen::VectorXd rho(n);
  for (long i = 0; i < n; ++i) {
    const double s = tau_out[static_cast<std::size_t>(i)];
    rho(i) = curve_height(curve, curve.corner + s * s);
  }
  rho(0) = 0.0;
  rho(n - 1) = curve.right_asymptote;
  return newton(d, curve, rho, 1.0, true, tol);
}

}  // namespace

BoundaryCurve BoundaryCurve::omega_star() {
  BoundaryCurve c;
  c.shape = CurveShape::kOneSided;
  c.height = omega_star_height;
  c.cos_height = [](double x) { return std::exp(-x); };
  c.cos_height_derivative = [](double x) { return -std::exp(-x); };
  c.left_asymptote = 0.0;
  c.right_asymptote = pi / 2;
  c.corners = {0.0};
  c.corner = 0.0;
  return c;
}

BoundaryCurve BoundaryCurve::entire(double B) {
  if (!(B > 0.0)) throw DomainError("BoundaryCurve::entire: B must be positive");
  BoundaryCurve c;
  c.shape = CurveShape::kEven;
  // cosh B / cosh x without overflow.
  auto G = [B](double x) {
    const double ax = std::abs(x);
    return std::exp(B - ax) * (1.0 + std::exp(-2.0 * B)) / (1.0 + std::exp(-2.0 * ax));
  };
  c.cos_height = G;
  c.cos_height_derivative = [G](double x) { return -G(x) * std::tanh(x); };
  c.height = [G](double x) { return std::acos(std::min(1.0, G(x))); };
  c.left_asymptote = pi / 2;
  c.right_asymptote = pi / 2;
  c.corners = {-B, B};
  c.corner = B;
  return c;
}

BoundaryCurve BoundaryCurve::flat() {
  BoundaryCurve c;
  c.shape = CurveShape::kFlat;
  c.height = [](double) { return 0.0; };
  c.cos_height = [](double) { return 1.0; };
  c.cos_height_derivative = [](double) { return 0.0; };
  return c;
}

double omega_star_height(double x) { return x >= 0.0 ? std::acos(std::exp(-x)) : 0.0; }

Complex gamma_b(double B, double t) {
  if (!(B > 0.0)) throw DomainError("gamma_b: B must be positive");
  if (t < B) throw DomainError("gamma_b: t below B");
  const double ratio = std::exp(B - t) * (1.0 + std::exp(-2.0 * B)) / (1.0 + std::exp(-2.0 * t));
  return {std::acos(std::min(1.0, ratio)), t};
}

Complex eval_map(const HalfPlaneMap& m, Complex z) {
  if (z.imag() < 0.0) throw DomainError("eval_map: Im z < 0");
  if (m.curve.shape == CurveShape::kFlat) return m.sigma * z;
  const bool even = m.curve.shape == CurveShape::kEven;
  const bool on_axis = z.imag() == 0.0;
  if (on_axis && even && z.real() < 0.0) {
    const Complex w = eval_map(m, Complex(-z.real(), 0.0));
    return {-w.real(), w.imag()};
  }
  const double tc = m.corner_preimage;
  const auto row = kernel_row(m.tau, tc, even, z, on_axis);
  Complex acc = m.sigma * z;
  for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * m.density.rho[j];
  acc += tail_term(m.density.tail_level_right, m.density.tail_start_right, even, z, on_axis);
  if (on_axis) return {acc.real(), density_at(m, z.real())};
  return acc;
}

Complex HalfPlaneMap::operator()(Complex z) const { return eval_map(*this, z); }

HalfPlaneMap solve_halfplane_map(const BoundaryCurve& curve, double sigma, const MeshSpec& mesh,
                                 double tol) {
  if (!(sigma > 0.0)) throw DomainError("solve_halfplane_map: sigma must be positive");
  check_tol(tol);
  switch (curve.shape) {
    case CurveShape::kFlat: {
      HalfPlaneMap m;
      m.sigma = sigma;
      m.curve = curve;
      m.mesh = mesh;
      m.tol = tol;
      m.tau = uniform_tau(mesh, 1.0 / std::sqrt(sigma));
      for (double s : m.tau) {
        m.density.grid.push_back(s * s);
        m.density.rho.push_back(0.0);
        m.image.push_back(sigma * s * s);
      }
      m.density.tail_start_right = m.density.grid.back();
      m.converged = true;
      return m;
    }
    case CurveShape::kOneSided: {
      // Nodes scale with 1/sqrt(sigma) so that rho_sigma(t) = rho_1(sigma t) node by node.
      auto tau = uniform_tau(mesh, 1.0 / std::sqrt(sigma));
      const Discrete d = discretize(tau, 0.0, false, curve.right_asymptote);
      const long n = static_cast<long>(tau.size());
      Eigen::VectorXd rho(n);
      for (long i = 0; i < n; ++i) rho(i) = curve_height(curve, sigma * d.t[static_cast<std::size_t>(i)]);
      rho(0) = 0.0;
      rho(n - 1) = curve.right_asymptote;
      NewtonResult r = newton(d, curve, rho, sigma, false, tol);
      Eigen::VectorXd u(n);
      u.head(n - 1) = r.u;
      u(n - 1) = 0.0;
      return assemble(curve, mesh, tol, sigma, std::move(tau), 0.0, r.rho, u, r.iterations);
    }
    case CurveShape::kEven: {
      const double A_pin = corner_guess(curve.corner);
      std::vector<double> tau;
      NewtonResult r = solve_even_free_sigma(curve, mesh, tol, A_pin, tau);
      if (!(r.sigma > 0.0)) throw ConvergenceError("conformal Newton: sigma left (0, inf)", r.sigma);
      // h_sigma(z) = h_found(z sigma / sigma_found): rescale abscissae.
      const double stretch = r.sigma / sigma;
      for (double& s : tau) s *= std::sqrt(stretch);
      const long n = static_cast<long>(tau.size());
      Eigen::VectorXd u(n);
      u.head(n - 1) = r.u;
      u(n - 1) = 0.0;
      return assemble(curve, mesh, tol, sigma, std::move(tau), A_pin * stretch, r.rho, u, r.iterations);
    }
  }
  throw InternalError("solve_halfplane_map: unknown curve shape");
}

double real_preimage(const HalfPlaneMap& map, double x) {
  const double tc = map.corner_preimage;
  const double x0 = eval_map(map, Complex(tc, 0.0)).real();
  if (x < x0) throw DomainError("real_preimage: x left of the corner image");
  double lo = tc;
  double hi = tc + 1.0;
  while (eval_map(map, Complex(hi, 0.0)).real() < x) {
    hi = tc + 2.0 * (hi - tc);
    if (hi > 1e12) throw DomainError("real_preimage: x out of reach");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    (eval_map(map, Complex(mid, 0.0)).real() < x ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double integral_ds_over_s(const std::vector<double>& tau, const std::vector<double>& rho) {
  if (tau.size() != rho.size() || tau.size() < 2) {
    throw DomainError("integral_ds_over_s: need matching node and value lists");
  }
  // ds / s = 2 dtau / tau = (1/(tau - 0) + 1/(tau + 0)) dtau.
  std::vector<Complex> w(tau.size(), 0.0);
  add_cauchy_weights(tau, Complex(0.0, 0.0), 2.0 / pi, w);
  double acc = 0.0;
  for (std::size_t j = 0; j < tau.size(); ++j) acc += w[j].real() * rho[j];
  return acc;
}

namespace {

double c_on(const HalfPlaneMap& m) {
  const double S = m.density.tail_start_right;
  return integral_ds_over_s(m.tau, m.density.rho) - 0.5 * std::log(S / 2.0);
}

}  // namespace

ConstantReport compute_c(const HalfPlaneMap& map, double quad_tol) {
  if (map.curve.shape != CurveShape::kOneSided || map.sigma != 1.0 || map.corner_preimage != 0.0) {
    throw PreconditionError("compute_c: needs the one-sided map with sigma = 1");
  }
  if (!map.converged || !(map.residual <= quad_tol / 10.0)) {
    throw PreconditionError("compute_c: map residual " + std::to_string(map.residual) +
                            " exceeds quad_tol/10");
  }
  ConstantReport rep;
  rep.h_tau = map.mesh.h_tau;
  rep.nodes = static_cast<int>(map.tau.size());
  rep.value = c_on(map);
  MeshSpec fine = map.mesh;
  fine.h_tau /= 2.0;
  const HalfPlaneMap m2 = solve_halfplane_map(map.curve, 1.0, fine, map.tol);
  rep.nodes_doubled = static_cast<int>(m2.tau.size());
  rep.value_doubled = c_on(m2);
  rep.richardson = (4.0 * rep.value_doubled - rep.value) / 3.0;
  rep.error_estimate = std::abs(rep.value_doubled - rep.value);
  return rep;
}

EntireSolution solve_entire(double B, const MeshSpec& mesh, double tol) {
  if (!(B >= 1.0)) throw DomainError("solve_entire: B below 1 needs finer corner meshes");
  const BoundaryCurve curve = BoundaryCurve::entire(B);
  EntireSolution s;
  s.B = B;
  s.map = solve_halfplane_map(curve, 1.0, mesh, tol);
  s.A = s.map.corner_preimage;
  return s;
}

double entire_A_of_B(double B, double tol) {
  if (!(B >= 1.0)) throw DomainError("entire_A_of_B: B below 1 needs finer corner meshes");
  const MeshSpec coarse{};
  MeshSpec fine = coarse;
  fine.h_tau /= 2.0;
  const double a1 = solve_entire(B, coarse, tol).A;
  const double a2 = solve_entire(B, fine, tol).A;
  return (4.0 * a2 - a1) / 3.0;
}

std::string density_csv(const HalfPlaneMap& map) {
  std::ostringstream os;
  os << "t,rho,curve_height_at_image,residual\n";
  char buf[160];
  for (std::size_t i = 0; i < map.image.size(); ++i) {
    const double h = curve_height(map.curve, map.image[i]);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", map.density.grid[i],
                  map.density.rho[i], h, map.density.rho[i] - h);
    os << buf;
  }
  return os.str();
}

std::string map_metadata_json(const HalfPlaneMap& map) {
  nlohmann::ordered_json j;
  j["sigma"] = map.sigma;
  j["mesh"] = {{"h_tau", map.mesh.h_tau}, {"truncation", map.mesh.truncation},
               {"nodes", map.tau.size()}};
  j["tol"] = map.tol;
  j["iterations"] = map.iterations;
  j["residual"] = map.residual;
  return j.dump();
}

}  // namespace signapprox
