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

// Reference forward-mode dual number with one gradient slot per independent
// variable. It runs the same chain rules as SparseDual, in the same order,
// so the two must agree bit for bit; the only difference is storage.

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "sparsead/chain_rules.hpp"
#include "sparsead/sparse_dual.hpp"

namespace sparsead::oracle {

class DenseDual {
 public:
  /// A constant in a problem with `n` independents.
  DenseDual(double value, std::size_t n)
      : value_(value), gradient_(n, 0.0), stored_(n, 0) {}
  /// Explicit gradient; every nonzero slot counts as stored.
  DenseDual(double value, std::vector<double> gradient);
  /// Explicit gradient and stored-slot mask of the same length.
  DenseDual(double value, std::vector<double> gradient,
            std::vector<unsigned char> stored);

  /// Independent `id` (1-based) seeded with d/dx_id = 1.
  static DenseDual variable(Index id, double value, std::size_t n);

  double value() const noexcept { return value_; }
  std::span<const double> gradient() const noexcept { return gradient_; }
  /// Slots that carry a dependency, exactly the identifiers a sparse
  /// dual would store for the same computation (zero partials included).
  std::span<const unsigned char> stored() const noexcept { return stored_; }
  std::size_t size() const noexcept { return gradient_.size(); }
  /// Any stored slot.
  bool is_active() const noexcept;
  bool is_stored(Index id) const { return stored_.at(static_cast<std::size_t>(id) - 1) != 0; }
  double partial(Index id) const { return gradient_.at(static_cast<std::size_t>(id) - 1); }

 private:
  double value_;
  std::vector<double> gradient_;
  std::vector<unsigned char> stored_;
};

/// Applies `rule` to every stored slot of a; other slots stay 0.
template <class F>
DenseDual map_gradient(const DenseDual& a, double value, F rule) {
  std::vector<double> g(a.size(), 0.0);
  const auto src = a.gradient();
  const auto mask = a.stored();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (mask[i]) g[i] = rule(src[i]);
  }
  return DenseDual(value, std::move(g), {mask.begin(), mask.end()});
}

void require_same_size(const DenseDual& a, const DenseDual& b);

/// Applies `rule` to every slot stored in a or b; other slots stay 0.
template <class F>
DenseDual zip_gradient(const DenseDual& a, const DenseDual& b, double value,
                       F rule) {
  require_same_size(a, b);
  std::vector<double> g(a.size(), 0.0);
  std::vector<unsigned char> mask(a.size(), 0);
  const auto ga = a.gradient();
  const auto gb = b.gradient();
  const auto ma = a.stored();
  const auto mb = b.stored();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (ma[i] || mb[i]) {
      mask[i] = 1;
      g[i] = rule(ga[i], gb[i]);
    }
  }
  return DenseDual(value, std::move(g), std::move(mask));
}

DenseDual operator+(const DenseDual& a);
DenseDual operator-(const DenseDual& a);
DenseDual operator+(const DenseDual& a, const DenseDual& b);
DenseDual operator-(const DenseDual& a, const DenseDual& b);
DenseDual operator*(const DenseDual& a, const DenseDual& b);
DenseDual operator/(const DenseDual& a, const DenseDual& b);
DenseDual operator+(const DenseDual& a, double b);
DenseDual operator+(double a, const DenseDual& b);
DenseDual operator-(const DenseDual& a, double b);
DenseDual operator-(double a, const DenseDual& b);
DenseDual operator*(const DenseDual& a, double b);
DenseDual operator*(double a, const DenseDual& b);
DenseDual operator/(const DenseDual& a, double b);
DenseDual operator/(double a, const DenseDual& b);

DenseDual pow(const DenseDual& a, int n);
DenseDual pow(const DenseDual& a, double e);
DenseDual pow(const DenseDual& a, const DenseDual& b);

DenseDual apply_unary(const UnaryRule& rule, const DenseDual& x);
DenseDual sin(const DenseDual& x);
DenseDual cos(const DenseDual& x);
DenseDual exp(const DenseDual& x);
DenseDual log(const DenseDual& x);
DenseDual sqrt(const DenseDual& x);
DenseDual tanh(const DenseDual& x);

DenseDual atan2(const DenseDual& y, const DenseDual& x);
DenseDual max2(const DenseDual& a, const DenseDual& b);
DenseDual min2(const DenseDual& a, const DenseDual& b);
DenseDual sign2(const DenseDual& a, const DenseDual& b);
DenseDual dim2(const DenseDual& a, const DenseDual& b);
DenseDual mod2(const DenseDual& a, const DenseDual& b);
DenseDual modulo2(const DenseDual& a, const DenseDual& b);

inline std::partial_ordering operator<=>(const DenseDual& a,
                                         const DenseDual& b) noexcept {
  return a.value() <=> b.value();
}

}  // namespace sparsead::oracle
