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

// Rank-1 reductions over sequences of SparseDual. Every fold runs left to
// right in storage order, so results are reproducible bit for bit and the
// value channel matches the equivalent loop over plain reals.

#include <cstddef>
#include <span>
#include <vector>

#include "sparsead/matrix.hpp"
#include "sparsead/sparse_dual.hpp"

namespace sparsead {

/// 0 + v[0] + v[1] + ...; the empty sum is constant 0.
SparseDual sum(std::span<const SparseDual> v);

/// 1 * v[0] * v[1] * ...; the empty product is constant 1.
SparseDual product(std::span<const SparseDual> v);

/// sum(a[i] * b[i]). Throws ShapeMismatch if the lengths differ.
SparseDual dot_product(std::span<const SparseDual> a,
                       std::span<const SparseDual> b);
SparseDual dot_product(std::span<const double> a, std::span<const SparseDual> b);

/// y[i] = dot_product(row i of a, x). Throws ShapeMismatch unless
/// a.cols() == x.size().
std::vector<SparseDual> matmul(const Matrix<SparseDual>& a,
                               std::span<const SparseDual> x);
std::vector<SparseDual> matmul(const Matrix<double>& a,
                               std::span<const SparseDual> x);

/// Fold of max2 / min2, including their tie rule. Throw EmptySequence on
/// empty input.
SparseDual maxval(std::span<const SparseDual> v);
SparseDual minval(std::span<const SparseDual> v);

/// 1-based position of the first largest / smallest value; derivatives are
/// not looked at. Throw EmptySequence on empty input.
std::size_t maxloc(std::span<const SparseDual> v);
std::size_t minloc(std::span<const SparseDual> v);

}  // namespace sparsead
