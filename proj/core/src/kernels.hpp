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

// Building blocks shared by the SparseDual operators: map every stored
// partial through a unary rule, or merge two sorted entry lists through a
// binary rule. Identifiers missing on one side enter the rule as 0.0.

#include <algorithm>
#include <cstddef>

#include "sparsead/chain_rules.hpp"
#include "sparsead/config.hpp"
#include "sparsead/errors.hpp"
#include "sparsead/sparse_dual.hpp"

namespace sparsead::detail {

/// Size of the union of the two (sorted) identifier sets.
std::size_t union_size(const SparseDual& a, const SparseDual& b) noexcept;

[[noreturn]] void throw_overflow(const SparseDual& a, const SparseDual& b);

template <class F>
SparseDual map_partials(const SparseDual& a, double value, F rule) {
  SparseDual out;
  const std::size_t n = a.nnz();
  DualAccess::prepare(out, value, n);
  const auto src_idx = a.indices();
  const auto src = a.partials();
  Index* idx = DualAccess::indices(out);
  double* d = DualAccess::partials(out);
  for (std::size_t k = 0; k < n; ++k) {
    idx[k] = src_idx[k];
    d[k] = rule(src[k]);
  }
  DualAccess::set_size(out, n);
  return out;
}

template <class F>
SparseDual merge_partials(const SparseDual& a, const SparseDual& b,
                          double value, F rule) {
  const auto ia = a.indices();
  const auto ib = b.indices();
  const auto pa = a.partials();
  const auto pb = b.partials();
  const std::size_t na = ia.size();
  const std::size_t nb = ib.size();
  const std::size_t slots = std::min(na + nb, capacity());

  SparseDual out;
  DualAccess::prepare(out, value, slots);
  Index* idx = DualAccess::indices(out);
  double* d = DualAccess::partials(out);

  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  while (i < na || j < nb) {
    if (k == slots) {
      throw_overflow(a, b);
    }
    if (j == nb || (i < na && ia[i] < ib[j])) {
      idx[k] = ia[i];
      d[k] = rule(pa[i], 0.0);
      ++i;
    } else if (i == na || ib[j] < ia[i]) {
      idx[k] = ib[j];
      d[k] = rule(0.0, pb[j]);
      ++j;
    } else {
      idx[k] = ia[i];
      d[k] = rule(pa[i], pb[j]);
      ++i;
      ++j;
    }
    ++k;
  }
  DualAccess::set_size(out, k);
  return out;
}

inline SparseDual nan_partials(const SparseDual& a, double value) {
  return map_partials(a, value, [](double) { return kQuietNaN; });
}

inline SparseDual nan_partials(const SparseDual& a, const SparseDual& b,
                               double value) {
  return merge_partials(a, b, value, [](double, double) { return kQuietNaN; });
}

template <class Partial>
SparseDual apply_step(const SparseDual& a, const SparseDual& b,
                      const rules::BinaryStep<Partial>& step) {
  if (step.singular) {
    return nan_partials(a, b, step.value);
  }
  return merge_partials(a, b, step.value, step.partial);
}

}  // namespace sparsead::detail
