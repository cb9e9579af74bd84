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


#include "sparsead/oracle/finite_difference.hpp"

#include <string>

#include "sparsead/errors.hpp"

namespace sparsead::oracle {

std::vector<double> fd_column(const VectorFunction& f,
                              std::span<const double> point, std::size_t col,
                              StepPolicy policy) {
  if (col >= point.size()) {
    throw ShapeMismatch("fd_column: column " + std::to_string(col) +
                        " out of range");
  }
  std::vector<double> x(point.begin(), point.end());
  const double h = policy.step(x[col]);
  x[col] = point[col] + h;
  const std::vector<double> up = f(x);
  x[col] = point[col] - h;
  const std::vector<double> down = f(x);
  if (up.size() != down.size()) {
    throw ShapeMismatch("fd_column: function output length changed");
  }
  std::vector<double> column(up.size());
  for (std::size_t r = 0; r < up.size(); ++r) {
    column[r] = (up[r] - down[r]) / (2.0 * h);
  }
  return column;
}

Matrix<double> fd_jacobian(const VectorFunction& f,
                           std::span<const double> point, StepPolicy policy) {
  const std::size_t rows = f(point).size();
  Matrix<double> jac(rows, point.size(), 0.0);
  for (std::size_t c = 0; c < point.size(); ++c) {
    const std::vector<double> column = fd_column(f, point, c, policy);
    if (column.size() != rows) {
      throw ShapeMismatch("fd_jacobian: function output length changed");
    }
    for (std::size_t r = 0; r < rows; ++r) {
      jac(r, c) = column[r];
    }
  }
  return jac;
}

double fd_derivative(const std::function<double(double)>& f, double x,
                     StepPolicy policy) {
  const double h = policy.step(x);
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace sparsead::oracle
