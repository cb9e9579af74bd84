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

// Declaring independent variables and reading results back out: values,
// single partials, sparse Jacobians as (row, column, value) triplets, and
// the fill-in report used to pick the smallest sufficient capacity.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sparsead/sparse_dual.hpp"

namespace sparsead {

/// Makes `target` the independent variable `id` with the given value: it
/// holds exactly one entry, {id -> 1.0}, and anything stored before is
/// dropped. Throws InvalidIdentifier if id < 1.
void seed_independent(Index id, SparseDual& target, double value);

/// Elementwise form. All three sequences must have the same length.
void seed_independent(std::span<const Index> ids, std::span<SparseDual> targets,
                      std::span<const double> values);

/// Seeds targets[k] as independent (first_id + k) with values[k].
void seed_independent_range(Index first_id, std::span<SparseDual> targets,
                            std::span<const double> values);

inline double value(const SparseDual& x) noexcept { return x.value(); }

std::vector<double> values(std::span<const SparseDual> xs);

/// Partial of x with respect to independent `id`, 0.0 when not stored.
/// Throws InvalidIdentifier if id < 1.
double derivative(const SparseDual& x, Index id);

/// Sparse Jacobian in coordinate form. Row r is position r (1-based) in
/// the sequence handed to jacobian_triplets; the column is the identifier.
struct JacobianTriplets {
  std::vector<Index> rows;
  std::vector<Index> cols;
  std::vector<double> vals;
  /// Number of valid entries, or minus the required count when the buffer
  /// was too small (rows/cols/vals are then left untouched).
  std::int64_t nz = 0;
};

/// Writes every stored entry of every f[i] (stored zeros included) as
/// (i+1, identifier, partial): rows ascending, columns ascending within a
/// row. The buffer length is the smallest of the three spans. Returns the
/// entry count, or -(entry count) without writing anything when it does
/// not fit.
std::int64_t jacobian(std::span<const SparseDual> f, std::span<Index> rows,
                      std::span<Index> cols, std::span<double> vals);

/// Allocating wrapper around jacobian() with a buffer of `buffer_len`
/// entries. On success the vectors are trimmed to nz.
JacobianTriplets jacobian_triplets(std::span<const SparseDual> f,
                                   std::size_t buffer_len);

/// Total stored entries over f; the buffer length jacobian() needs.
std::size_t jacobian_size(std::span<const SparseDual> f) noexcept;

struct FillinReport {
  /// Largest nnz over the inspected values: the smallest capacity that
  /// would have sufficed for them.
  std::size_t ldsize_opt = 0;
  /// Lower bandwidth, max(row - col) over stored entries, at least 0.
  std::size_t ml = 0;
  /// Upper bandwidth, max(col - row) over stored entries, at least 0.
  std::size_t mu = 0;
};

/// Fill-in of the final outputs of a computation. Row numbers are 1-based
/// positions in f. Only meaningful if the run used a large enough capacity
/// to begin with.
FillinReport fillin(std::span<const SparseDual> f) noexcept;

}  // namespace sparsead
