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


#include "sparsead/seed_extract.hpp"

#include <algorithm>

#include "sparsead/errors.hpp"

namespace sparsead {

namespace {

void require_valid_id(long long id) {
  if (id < 1) {
    throw InvalidIdentifier(id);
  }
}

}  // namespace

void seed_independent(Index id, SparseDual& target, double value) {
  require_valid_id(id);
  const Index ids[] = {id};
  const double ones[] = {1.0};
  target = SparseDual::from_entries(value, ids, ones);
}

void seed_independent(std::span<const Index> ids, std::span<SparseDual> targets,
                      std::span<const double> values) {
  if (ids.size() != targets.size() || values.size() != targets.size()) {
    throw ShapeMismatch("seed_independent: ids, targets and values differ in length");
  }
  for (std::size_t k = 0; k < targets.size(); ++k) {
    seed_independent(ids[k], targets[k], values[k]);
  }
}

void seed_independent_range(Index first_id, std::span<SparseDual> targets,
                            std::span<const double> values) {
  if (values.size() != targets.size()) {
    throw ShapeMismatch("seed_independent_range: targets and values differ in length");
  }
  require_valid_id(first_id);
  for (std::size_t k = 0; k < targets.size(); ++k) {
    seed_independent(first_id + static_cast<Index>(k), targets[k], values[k]);
  }
}

std::vector<double> values(std::span<const SparseDual> xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (const SparseDual& x : xs) {
    out.push_back(x.value());
  }
  return out;
}

double derivative(const SparseDual& x, Index id) {
  require_valid_id(id);
  return x.partial(id);
}

std::size_t jacobian_size(std::span<const SparseDual> f) noexcept {
  std::size_t n = 0;
  for (const SparseDual& x : f) {
    n += x.nnz();
  }
  return n;
}

std::int64_t jacobian(std::span<const SparseDual> f, std::span<Index> rows,
                      std::span<Index> cols, std::span<double> vals) {
  const std::size_t needed = jacobian_size(f);
  const std::size_t available =
      std::min({rows.size(), cols.size(), vals.size()});
  if (needed > available) {
    return -static_cast<std::int64_t>(needed);
  }
  std::size_t k = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto idx = f[i].indices();
    const auto d = f[i].partials();
    for (std::size_t e = 0; e < idx.size(); ++e, ++k) {
      rows[k] = static_cast<Index>(i + 1);
      cols[k] = idx[e];
      vals[k] = d[e];
    }
  }
  return static_cast<std::int64_t>(k);
}

JacobianTriplets jacobian_triplets(std::span<const SparseDual> f,
                                   std::size_t buffer_len) {
  JacobianTriplets out;
  out.rows.resize(buffer_len);
  out.cols.resize(buffer_len);
  out.vals.resize(buffer_len);
  out.nz = jacobian(f, out.rows, out.cols, out.vals);
  if (out.nz >= 0) {
    const auto n = static_cast<std::size_t>(out.nz);
    out.rows.resize(n);
    out.cols.resize(n);
    out.vals.resize(n);
  }
  return out;
}

FillinReport fillin(std::span<const SparseDual> f) noexcept {
  FillinReport report;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto row = static_cast<long long>(i + 1);
    report.ldsize_opt = std::max(report.ldsize_opt, f[i].nnz());
    for (const Index col : f[i].indices()) {
      if (row > col) {
        report.ml = std::max(report.ml, static_cast<std::size_t>(row - col));
      } else {
        report.mu = std::max(report.mu, static_cast<std::size_t>(col - row));
      }
    }
  }
  return report;
}

}  // namespace sparsead
