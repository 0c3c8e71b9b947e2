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

#pragma once

#include <vector>

#include "signapprox/real.hpp"

namespace signapprox {

/// maximize c^T x subject to A x = b, x >= 0, with b >= 0.
/// A is stored by columns: columns[j] has one entry per row.
struct LinearProgram {
  std::vector<std::vector<Real>> columns;
  std::vector<Real> cost;
  std::vector<Real> rhs;
};

struct LpSolution {
  std::vector<Real> x;
  /// Simplex multipliers: c_j - y^T A_j <= 0 for every column at optimum.
  std::vector<Real> y;
  Real objective;
  int pivots = 0;
};

/// Two-phase revised simplex with an explicit basis inverse. Dantzig pricing,
/// switching to Bland's rule after a run of degenerate pivots. Throws
/// InternalError when the program is infeasible or unbounded.
LpSolution solve_lp(const LinearProgram& lp, Bits precision);

}  // namespace signapprox
