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

// Model problems used by the CLI, the benchmarks and the tests. Each one is
// a template over the number type so the same code runs on plain reals (for
// finite differences), on SparseDual and on the dense oracle.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace sparsead::bench {

/// Second-difference stencil f[i] = x[i+1] - 2 x[i] + x[i-1] on the
/// interior; f[0] and f[n-1] are `zero`. Needs x.size() >= 3.
template <class T>
std::vector<T> stencil(std::span<const T> x, const T& zero) {
  const std::size_t n = x.size();
  std::vector<T> f;
  f.reserve(n);
  f.push_back(zero);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    f.push_back(x[i + 1] - 2.0 * x[i] + x[i - 1]);
  }
  f.push_back(zero);
  return f;
}

struct NetworkShape {
  std::size_t shells = 10;
  std::size_t species = 14;

  std::size_t size() const noexcept { return shells * species; }
};

/// Temperature of a shell; passive, so it contributes no dependencies.
inline double shell_temperature(std::size_t shell) noexcept {
  return 1.0 + 0.05 * static_cast<double>(shell % 40);
}

/// Deterministic starting abundances, all positive.
std::vector<double> network_initial_state(NetworkShape shape);

/// Synthetic reaction network: shells are independent of each other, and
/// within a shell every species' rate depends on every species of that
/// shell. Rate j of a shell with abundances y and temperature t:
///
///   A_j exp(-E_j / t) y[j-1] y[j+1] - B_j y[j]^2 + C y[j] sqrt(sum(y))
///
/// with neighbours taken cyclically. Output k is the rate of species
/// k % species in shell k / species.
template <class T>
std::vector<T> network_rates(std::span<const T> y, NetworkShape shape) {
  using std::sqrt;
  const std::size_t m = shape.species;
  std::vector<T> rates;
  rates.reserve(y.size());
  for (std::size_t s = 0; s < shape.shells; ++s) {
    const auto shell = y.subspan(s * m, m);
    const double temp = shell_temperature(s);
    T total = shell[0];
    for (std::size_t k = 1; k < m; ++k) {
      total = total + shell[k];
    }
    const T coupling = sqrt(total);
    for (std::size_t j = 0; j < m; ++j) {
      const double jd = static_cast<double>(j);
      const double a = 1.0 + 0.1 * jd;
      const double e = 0.5 + 0.03 * jd;
      const double b = 0.2 + 0.01 * jd;
      const T& prev = shell[(j + m - 1) % m];
      const T& next = shell[(j + 1) % m];
      rates.push_back(a * std::exp(-e / temp) * (prev * next) -
                      b * (shell[j] * shell[j]) + 0.05 * (shell[j] * coupling));
    }
  }
  return rates;
}

}  // namespace sparsead::bench
