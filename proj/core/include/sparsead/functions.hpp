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

#include <span>
#include <string_view>

#include "sparsead/chain_rules.hpp"
#include "sparsead/sparse_dual.hpp"

namespace sparsead {

namespace rules {

extern const UnaryRule kSin;
extern const UnaryRule kCos;
extern const UnaryRule kTan;
extern const UnaryRule kExp;
extern const UnaryRule kLog;
extern const UnaryRule kLog10;
extern const UnaryRule kSqrt;
extern const UnaryRule kSinh;
extern const UnaryRule kCosh;
extern const UnaryRule kTanh;
extern const UnaryRule kAsin;
extern const UnaryRule kAcos;
extern const UnaryRule kAtan;
extern const UnaryRule kAbs;

}  // namespace rules

/// Every unary rule the library implements.
std::span<const UnaryRule> unary_rules() noexcept;

/// Looks a rule up by name ("sin", "log10", ...); nullptr if unknown.
const UnaryRule* find_unary_rule(std::string_view name) noexcept;

/// Applies `rule` to x: the value goes through rule.value, every stored
/// partial is multiplied by rule.derivative(x.value()). At the rule's
/// non-differentiable points an active x gets NaN in every partial.
SparseDual apply_unary(const UnaryRule& rule, const SparseDual& x);

/// The same rule on a plain real.
inline double apply_unary(const UnaryRule& rule, double x) {
  return rule.value(x);
}

SparseDual sin(const SparseDual& x);
SparseDual cos(const SparseDual& x);
SparseDual tan(const SparseDual& x);
SparseDual exp(const SparseDual& x);
SparseDual log(const SparseDual& x);
SparseDual log10(const SparseDual& x);
SparseDual sqrt(const SparseDual& x);
SparseDual sinh(const SparseDual& x);
SparseDual cosh(const SparseDual& x);
/// Derivative multiplier from rules::tanh_multiplier; never overflows.
SparseDual tanh(const SparseDual& x);
SparseDual asin(const SparseDual& x);
SparseDual acos(const SparseDual& x);
SparseDual atan(const SparseDual& x);
SparseDual abs(const SparseDual& x);

/// atan2(y, x). Partials are NaN at the origin.
SparseDual atan2(const SparseDual& y, const SparseDual& x);

/// The operand with the larger value, entries copied. On an exact tie the
/// operands are returned unchanged when their entries are identical, and
/// otherwise with NaN in every partial of the union.
SparseDual max2(const SparseDual& a, const SparseDual& b);
SparseDual min2(const SparseDual& a, const SparseDual& b);

/// |a| carrying the sign of b (b >= 0 counts as positive).
SparseDual sign2(const SparseDual& a, const SparseDual& b);

/// Positive difference max(a - b, 0).
SparseDual dim2(const SparseDual& a, const SparseDual& b);

/// a - trunc(a / b) * b.
SparseDual mod2(const SparseDual& a, const SparseDual& b);

/// a - floor(a / b) * b.
SparseDual modulo2(const SparseDual& a, const SparseDual& b);

// Plain-real counterparts with identical value semantics, so the same
// generic code can run with or without derivatives.
inline double max2(double a, double b) noexcept { return b > a ? b : a; }
inline double min2(double a, double b) noexcept { return b < a ? b : a; }
inline double sign2(double a, double b) noexcept { return rules::sign_value(a, b); }
inline double dim2(double a, double b) noexcept { return rules::dim_value(a, b); }
inline double mod2(double a, double b) noexcept { return rules::mod_value(a, b); }
inline double modulo2(double a, double b) noexcept {
  return rules::modulo_value(a, b);
}

}  // namespace sparsead
