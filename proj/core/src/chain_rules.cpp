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


#include "sparsead/chain_rules.hpp"

#include <cmath>

namespace sparsead::rules {

double tanh_multiplier(double x) noexcept {
  const double ax = std::fabs(x);
  if (ax < kTanhSwitch) {
    // Squaring sech rather than cosh keeps the result representable (as a
    // subnormal) long after cosh^2 would overflow.
    const double sech = 1.0 / std::cosh(x);
    return sech * sech;
  }
  return 4.0 * std::exp(-2.0 * ax);
}

BinaryStep<Linear> pow_step(double a, double b) noexcept {
  const double value = std::pow(a, b);
  if (a <= 0.0) {
    return {value, {0.0, 0.0}, true};
  }
  return {value, {value * b / a, value * std::log(a)}};
}

BinaryStep<Linear> atan2_step(double y, double x) noexcept {
  const double value = std::atan2(y, x);
  if (x == 0.0 && y == 0.0) {
    return {value, {0.0, 0.0}, true};
  }
  const double r2 = x * x + y * y;
  return {value, {x / r2, -y / r2}};
}

BinaryStep<Linear> sign_step(double a, double b, bool a_active,
                             bool b_active) noexcept {
  const double value = sign_value(a, b);
  const bool singular = (a == 0.0 && a_active) || (b == 0.0 && b_active);
  const double sa = a >= 0.0 ? 1.0 : -1.0;
  const double sb = b >= 0.0 ? 1.0 : -1.0;
  return {value, {sa * sb, 0.0}, singular};
}

BinaryStep<Linear> dim_step(double a, double b) noexcept {
  const double value = dim_value(a, b);
  if (a > b) {
    return {value, {1.0, -1.0}};
  }
  if (a == b) {
    return {value, {0.0, 0.0}, true};
  }
  return {value, {0.0, 0.0}};
}

BinaryStep<Linear> mod_step(double a, double b) noexcept {
  const double value = mod_value(a, b);
  // The remainder jumps wherever a is an exact multiple of b.
  return {value, {1.0, -std::trunc(a / b)}, value == 0.0};
}

double modulo_value(double a, double b) noexcept {
  double r = std::fmod(a, b);
  if (r != 0.0 && ((r < 0.0) != (b < 0.0))) {
    r += b;
  }
  return r;
}

BinaryStep<Linear> modulo_step(double a, double b) noexcept {
  const double value = modulo_value(a, b);
  return {value, {1.0, -std::floor(a / b)}, std::fmod(a, b) == 0.0};
}

}  // namespace sparsead::rules
