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

// Local derivative rules shared by every dual-number representation in the
// project. Each binary rule is a functor mapping the operands' partials with
// respect to one independent variable to the result's partial; each unary
// rule maps one partial. Missing entries are passed as 0.0, so a sparse and
// a dense carrier that both apply these functors produce bitwise-identical
// partials.

#include <cmath>
#include <limits>
#include <string_view>

namespace sparsead {

inline constexpr double kQuietNaN = std::numeric_limits<double>::quiet_NaN();

namespace rules {

struct Identity {
  double operator()(double p) const noexcept { return p; }
};
struct Negate {
  double operator()(double p) const noexcept { return -p; }
};
struct Scale {
  double factor;
  double operator()(double p) const noexcept { return factor * p; }
};
struct DivideBy {
  double divisor;
  double operator()(double p) const noexcept { return p / divisor; }
};

struct Sum {
  double operator()(double pa, double pb) const noexcept { return pa + pb; }
};
struct Difference {
  double operator()(double pa, double pb) const noexcept { return pa - pb; }
};
/// Product rule: a * b' + b * a'.
struct Product {
  double a;
  double b;
  double operator()(double pa, double pb) const noexcept {
    return a * pb + b * pa;
  }
};
/// Quotient rule: (a' b - a b') / b^2.
struct Quotient {
  double a;
  double b;
  double operator()(double pa, double pb) const noexcept {
    return (pa * b - a * pb) / (b * b);
  }
};
/// General two-argument chain rule: da * a' + db * b'.
struct Linear {
  double da;
  double db;
  double operator()(double pa, double pb) const noexcept {
    return da * pa + db * pb;
  }
};

/// Result of linearising a binary function at a point. When `singular` is
/// set the derivative does not exist there and every partial of the result
/// becomes NaN.
template <class Partial>
struct BinaryStep {
  double value;
  Partial partial;
  bool singular = false;
};

/// Which operand max2/min2 return.
enum class Pick { First, Second, Tie };

inline Pick pick_max(double a, double b) noexcept {
  return a > b ? Pick::First : (b > a ? Pick::Second : Pick::Tie);
}
inline Pick pick_min(double a, double b) noexcept {
  return a < b ? Pick::First : (b < a ? Pick::Second : Pick::Tie);
}

/// Derivative multiplier of tanh. Uses sech^2 below the switch point and
/// 4 exp(-2|x|) above it, which is finite for every input.
double tanh_multiplier(double x) noexcept;

/// |x| at which tanh_multiplier switches formulas: twice the decimal
/// exponent range of double (2 * 307 = 614).
inline constexpr double kTanhSwitch =
    2.0 * (std::numeric_limits<double>::max_exponent10 <
                   -std::numeric_limits<double>::min_exponent10
               ? std::numeric_limits<double>::max_exponent10
               : -std::numeric_limits<double>::min_exponent10);

/// n * x^(n-1).
inline double powi_multiplier(double x, int n) noexcept {
  return static_cast<double>(n) * std::pow(x, n - 1);
}
inline double powr_multiplier(double x, double e) noexcept {
  return e * std::pow(x, e - 1.0);
}

// Binary elementary functions. `a_active` / `b_active` report whether the
// operand depends on any independent variable; a non-differentiable point
// only matters when something flows through it.

BinaryStep<Linear> pow_step(double a, double b) noexcept;
BinaryStep<Linear> atan2_step(double y, double x) noexcept;
BinaryStep<Linear> sign_step(double a, double b, bool a_active,
                             bool b_active) noexcept;
BinaryStep<Linear> dim_step(double a, double b) noexcept;
BinaryStep<Linear> mod_step(double a, double b) noexcept;
BinaryStep<Linear> modulo_step(double a, double b) noexcept;

// Plain-real versions, for evaluating the same expressions without
// derivatives.
inline double sign_value(double a, double b) noexcept {
  return b >= 0.0 ? std::fabs(a) : -std::fabs(a);
}
inline double dim_value(double a, double b) noexcept {
  return a > b ? a - b : 0.0;
}
inline double mod_value(double a, double b) noexcept { return std::fmod(a, b); }
double modulo_value(double a, double b) noexcept;

}  // namespace rules

/// An elementary function of one argument: its value and the multiplier
/// dg/du applied to every incoming partial.
struct UnaryRule {
  std::string_view name;
  double (*value)(double);
  double (*derivative)(double);
  /// Points where the function is continuous but not differentiable;
  /// nullptr when there are none. Active operands there get NaN partials.
  bool (*singular)(double);
  std::string_view domain_note;

  bool is_singular(double x) const noexcept {
    return singular != nullptr && singular(x);
  }
};

}  // namespace sparsead
