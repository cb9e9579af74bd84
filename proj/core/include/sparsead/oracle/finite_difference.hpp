// Copyright 2026 The sparsead Authors.
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

// Central finite differences, the derivative oracle that shares no code
// with the forward-mode carriers.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "sparsead/matrix.hpp"

namespace sparsead::oracle {

/// h = scale * max(1, |x|). The default scale, cbrt(eps), balances the
/// O(h^2) truncation error of a central difference against rounding.
struct StepPolicy {
  double scale = std::cbrt(std::numeric_limits<double>::epsilon());

  double step(double x) const noexcept {
    return scale * std::max(1.0, std::fabs(x));
  }
};

using VectorFunction =
    std::function<std::vector<double>(std::span<const double>)>;

/// d f / d x_col at `point`, one entry per output.
std::vector<double> fd_column(const VectorFunction& f,
                              std::span<const double> point, std::size_t col,
                              StepPolicy policy = {});

/// Full Jacobian, outputs by inputs.
Matrix<double> fd_jacobian(const VectorFunction& f,
                           std::span<const double> point,
                           StepPolicy policy = {});

/// Scalar convenience.
double fd_derivative(const std::function<double(double)>& f, double x,
                     StepPolicy policy = {});

}  // namespace sparsead::oracle
