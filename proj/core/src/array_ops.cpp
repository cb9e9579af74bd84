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


#include "sparsead/array_ops.hpp"

#include <string>

#include "sparsead/errors.hpp"
#include "sparsead/functions.hpp"

namespace sparsead {

namespace {

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) {
    throw ShapeMismatch("dot_product: lengths " + std::to_string(a) + " and " +
                        std::to_string(b) + " differ");
  }
}

void require_nonempty(std::span<const SparseDual> v, const char* what) {
  if (v.empty()) {
    throw EmptySequence(std::string(what) + " of an empty sequence");
  }
}

}  // namespace

SparseDual sum(std::span<const SparseDual> v) {
  SparseDual acc(0.0);
  for (const SparseDual& x : v) {
    acc = acc + x;
  }
  return acc;
}

SparseDual product(std::span<const SparseDual> v) {
  SparseDual acc(1.0);
  for (const SparseDual& x : v) {
    acc = acc * x;
  }
  return acc;
}

SparseDual dot_product(std::span<const SparseDual> a,
                       std::span<const SparseDual> b) {
  require_same_length(a.size(), b.size());
  SparseDual acc(0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc = acc + a[i] * b[i];
  }
  return acc;
}

SparseDual dot_product(std::span<const double> a, std::span<const SparseDual> b) {
  require_same_length(a.size(), b.size());
  SparseDual acc(0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc = acc + a[i] * b[i];
  }
  return acc;
}

namespace {

template <class T>
std::vector<SparseDual> matmul_impl(const Matrix<T>& a,
                                    std::span<const SparseDual> x) {
  if (a.cols() != x.size()) {
    throw ShapeMismatch("matmul: matrix has " + std::to_string(a.cols()) +
                        " columns, vector has " + std::to_string(x.size()) +
                        " entries");
  }
  std::vector<SparseDual> y;
  y.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    y.push_back(dot_product(a.row(r), x));
  }
  return y;
}

}  // namespace

std::vector<SparseDual> matmul(const Matrix<SparseDual>& a,
                               std::span<const SparseDual> x) {
  return matmul_impl(a, x);
}

std::vector<SparseDual> matmul(const Matrix<double>& a,
                               std::span<const SparseDual> x) {
  return matmul_impl(a, x);
}

SparseDual maxval(std::span<const SparseDual> v) {
  require_nonempty(v, "maxval");
  SparseDual acc = v.front();
  for (const SparseDual& x : v.subspan(1)) {
    acc = max2(acc, x);
  }
  return acc;
}

SparseDual minval(std::span<const SparseDual> v) {
  require_nonempty(v, "minval");
  SparseDual acc = v.front();
  for (const SparseDual& x : v.subspan(1)) {
    acc = min2(acc, x);
  }
  return acc;
}

std::size_t maxloc(std::span<const SparseDual> v) {
  require_nonempty(v, "maxloc");
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i].value() > v[best].value()) {
      best = i;
    }
  }
  return best + 1;
}

std::size_t minloc(std::span<const SparseDual> v) {
  require_nonempty(v, "minloc");
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i].value() < v[best].value()) {
      best = i;
    }
  }
  return best + 1;
}

}  // namespace sparsead
