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

#include "signapprox/linear_program.hpp"

#include <string>

#include "signapprox/errors.hpp"

namespace signapprox {

namespace {

constexpr int kDegenerateRunForBland = 50;

class Simplex {
 public:
  Simplex(const LinearProgram& lp, Bits precision)
      : lp_(lp),
        P_(precision),
        rows_(lp.rhs.size()),
        n_(lp.columns.size()),
        eps_(epsilon_bits(precision - 24, precision)) {
    binv_.assign(rows_, std::vector<Real>(rows_, Real::zero(P_)));
    for (std::size_t i = 0; i < rows_; ++i) {
      binv_[i][i] = Real::one(P_);
      basis_.push_back(n_ + i);
      xb_.push_back(lp.rhs[i].with_precision(P_));
      if (xb_.back().sign() < 0) throw InternalError("solve_lp: negative right-hand side");
    }
  }

  // Phase 1 maximizes minus the sum of artificials; phase 2 the real cost.
  void run(bool phase_two) {
    phase_two_ = phase_two;
    int degenerate = 0;
    const int limit = 50 * static_cast<int>(n_ + rows_) + 1000;
    for (;;) {
      if (++pivots_ > limit) throw InternalError("solve_lp: pivot limit reached");
      const auto y = multipliers();
      const bool bland = degenerate > kDegenerateRunForBland;
      std::size_t enter = n_ + rows_;
      Real best = eps_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (in_basis(j)) continue;
        Real d = cost(j);
        for (std::size_t i = 0; i < rows_; ++i) d -= y[i] * lp_.columns[j][i];
        if (d > best) {
          enter = j;
          if (bland) break;
          best = d;
        }
      }
      if (enter == n_ + rows_) {
        --pivots_;
        return;
      }
      std::vector<Real> alpha(rows_, Real::zero(P_));
      for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < rows_; ++k) alpha[i] += binv_[i][k] * lp_.columns[enter][k];
      }
      std::size_t leave = rows_;
      Real ratio = Real::zero(P_);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (phase_two_ && basis_[i] >= n_ && abs(alpha[i]) > eps_) {
          // A zero-level artificial must leave before it can move.
          leave = i;
          ratio = Real::zero(P_);
          break;
        }
        if (!(alpha[i] > eps_)) continue;
        Real r = xb_[i] / alpha[i];
        if (leave == rows_ || r < ratio || (r == ratio && basis_[i] < basis_[leave])) {
          leave = i;
          ratio = std::move(r);
        }
      }
      if (leave == rows_) throw InternalError("solve_lp: unbounded objective");
      degenerate = ratio.is_zero() ? degenerate + 1 : 0;
      pivot(leave, enter, alpha);
    }
  }

  Real objective() const {
    Real z = Real::zero(P_);
    for (std::size_t i = 0; i < rows_; ++i) z += cost(basis_[i]) * xb_[i];
    return z;
  }

  LpSolution solution() const {
    LpSolution s{std::vector<Real>(n_, Real::zero(P_)), multipliers(), objective(), pivots_};
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < n_) s.x[basis_[i]] = xb_[i];
    }
    return s;
  }

  const Real& eps() const { return eps_; }

 private:
  Real cost(std::size_t j) const {
    if (!phase_two_) return j >= n_ ? Real(-1.0, P_) : Real::zero(P_);
    return j >= n_ ? Real::zero(P_) : lp_.cost[j].with_precision(P_);
  }

  bool in_basis(std::size_t j) const {
    for (std::size_t b : basis_) {
      if (b == j) return true;
    }
    return false;
  }

  std::vector<Real> multipliers() const {
    std::vector<Real> y(rows_, Real::zero(P_));
    for (std::size_t i = 0; i < rows_; ++i) {
      const Real cb = cost(basis_[i]);
      if (cb.is_zero()) continue;
      for (std::size_t k = 0; k < rows_; ++k) y[k] += cb * binv_[i][k];
    }
    return y;
  }

  void pivot(std::size_t leave, std::size_t enter, const std::vector<Real>& alpha) {
    const Real piv = alpha[leave];
    for (Real& v : binv_[leave]) v /= piv;
    xb_[leave] /= piv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == leave || alpha[i].is_zero()) continue;
      for (std::size_t k = 0; k < rows_; ++k) binv_[i][k] -= alpha[i] * binv_[leave][k];
      xb_[i] -= alpha[i] * xb_[leave];
      // Rounding can push a basic value a hair below zero.
      if (xb_[i].sign() < 0 && abs(xb_[i]) < eps_) xb_[i] = Real::zero(P_);
    }
    basis_[leave] = enter;
  }

  const LinearProgram& lp_;
  Bits P_;
  std::size_t rows_;
  std::size_t n_;
  Real eps_;
  bool phase_two_ = false;
  int pivots_ = 0;
  std::vector<std::vector<Real>> binv_;
  std::vector<std::size_t> basis_;
  std::vector<Real> xb_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, Bits precision) {
  if (lp.cost.size() != lp.columns.size()) throw InternalError("solve_lp: cost size mismatch");
  for (const auto& col : lp.columns) {
    if (col.size() != lp.rhs.size()) throw InternalError("solve_lp: column size mismatch");
  }
  Simplex s(lp, precision);
  s.run(false);
  if (s.objective() < -s.eps()) {
    throw InternalError("solve_lp: infeasible (phase-one objective " +
                        s.objective().to_decimal(8) + ")");
  }
  s.run(true);
  return s.solution();
}

}  // namespace signapprox
