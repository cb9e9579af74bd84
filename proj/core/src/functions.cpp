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


#include "sparsead/functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "kernels.hpp"

namespace sparsead {

namespace rules {

namespace {

bool at_zero(double x) { return x == 0.0; }
bool at_unit(double x) { return std::fabs(x) == 1.0; }

}  // namespace

const UnaryRule kSin{
    "sin", [](double x) { return std::sin(x); },
    [](double x) { return std::cos(x); }, nullptr, "everywhere"};

const UnaryRule kCos{
    "cos", [](double x) { return std::cos(x); },
    [](double x) { return -std::sin(x); }, nullptr, "everywhere"};

const UnaryRule kTan{"tan", [](double x) { return std::tan(x); },
                     [](double x) {
                       const double c = std::cos(x);
                       return 1.0 / (c * c);
                     },
                     nullptr, "poles at pi/2 + k pi"};

const UnaryRule kExp{
    "exp", [](double x) { return std::exp(x); },
    [](double x) { return std::exp(x); }, nullptr, "everywhere"};

const UnaryRule kLog{"log", [](double x) { return std::log(x); },
                     [](double x) { return 1.0 / x; }, nullptr,
                     "x > 0; IEEE results elsewhere"};

const UnaryRule kLog10{
    "log10", [](double x) { return std::log10(x); },
    [](double x) { return 1.0 / (x * std::numbers::ln10); }, nullptr,
    "x > 0; IEEE results elsewhere"};

const UnaryRule kSqrt{"sqrt", [](double x) { return std::sqrt(x); },
                      [](double x) { return 0.5 / std::sqrt(x); }, at_zero,
                      "x > 0; not differentiable at 0"};

const UnaryRule kSinh{
    "sinh", [](double x) { return std::sinh(x); },
    [](double x) { return std::cosh(x); }, nullptr, "everywhere"};

const UnaryRule kCosh{
    "cosh", [](double x) { return std::cosh(x); },
    [](double x) { return std::sinh(x); }, nullptr, "everywhere"};

const UnaryRule kTanh{"tanh", [](double x) { return std::tanh(x); },
                      tanh_multiplier, nullptr, "everywhere"};

const UnaryRule kAsin{"asin", [](double x) { return std::asin(x); },
                      [](double x) { return 1.0 / std::sqrt(1.0 - x * x); },
                      at_unit, "|x| < 1; not differentiable at +-1"};

const UnaryRule kAcos{"acos", [](double x) { return std::acos(x); },
                      [](double x) { return -1.0 / std::sqrt(1.0 - x * x); },
                      at_unit, "|x| < 1; not differentiable at +-1"};

const UnaryRule kAtan{
    "atan", [](double x) { return std::atan(x); },
    [](double x) { return 1.0 / (1.0 + x * x); }, nullptr, "everywhere"};

const UnaryRule kAbs{"abs", [](double x) { return std::fabs(x); },
                     [](double x) { return x > 0.0 ? 1.0 : -1.0; }, at_zero,
                     "not differentiable at 0"};

}  // namespace rules

namespace {

const std::array<UnaryRule, 14> kAllRules = {
    rules::kSin,  rules::kCos,  rules::kTan,   rules::kExp,  rules::kLog,
    rules::kLog10, rules::kSqrt, rules::kSinh, rules::kCosh, rules::kTanh,
    rules::kAsin, rules::kAcos, rules::kAtan,  rules::kAbs};

bool is_active(const SparseDual& x) { return x.nnz() > 0; }

}  // namespace

std::span<const UnaryRule> unary_rules() noexcept { return kAllRules; }

const UnaryRule* find_unary_rule(std::string_view name) noexcept {
  for (const UnaryRule& rule : kAllRules) {
    if (rule.name == name) {
      return &rule;
    }
  }
  return nullptr;
}

SparseDual apply_unary(const UnaryRule& rule, const SparseDual& x) {
  const double value = rule.value(x.value());
  if (!is_active(x)) {
    return SparseDual(value);
  }
  if (rule.is_singular(x.value())) {
    return detail::nan_partials(x, value);
  }
  return detail::map_partials(x, value,
                              rules::Scale{rule.derivative(x.value())});
}

SparseDual sin(const SparseDual& x) { return apply_unary(rules::kSin, x); }
SparseDual cos(const SparseDual& x) { return apply_unary(rules::kCos, x); }
SparseDual tan(const SparseDual& x) { return apply_unary(rules::kTan, x); }
SparseDual exp(const SparseDual& x) { return apply_unary(rules::kExp, x); }
SparseDual log(const SparseDual& x) { return apply_unary(rules::kLog, x); }
SparseDual log10(const SparseDual& x) { return apply_unary(rules::kLog10, x); }
SparseDual sqrt(const SparseDual& x) { return apply_unary(rules::kSqrt, x); }
SparseDual sinh(const SparseDual& x) { return apply_unary(rules::kSinh, x); }
SparseDual cosh(const SparseDual& x) { return apply_unary(rules::kCosh, x); }
SparseDual tanh(const SparseDual& x) { return apply_unary(rules::kTanh, x); }
SparseDual asin(const SparseDual& x) { return apply_unary(rules::kAsin, x); }
SparseDual acos(const SparseDual& x) { return apply_unary(rules::kAcos, x); }
SparseDual atan(const SparseDual& x) { return apply_unary(rules::kAtan, x); }
SparseDual abs(const SparseDual& x) { return apply_unary(rules::kAbs, x); }

SparseDual atan2(const SparseDual& y, const SparseDual& x) {
  return detail::apply_step(y, x, rules::atan2_step(y.value(), x.value()));
}

namespace {

bool same_entries(const SparseDual& a, const SparseDual& b) {
  const auto ia = a.indices();
  const auto ib = b.indices();
  const auto pa = a.partials();
  const auto pb = b.partials();
  if (ia.size() != ib.size()) {
    return false;
  }
  for (std::size_t k = 0; k < ia.size(); ++k) {
    if (ia[k] != ib[k] || !(pa[k] == pb[k])) {
      return false;
    }
  }
  return true;
}

SparseDual select(const SparseDual& a, const SparseDual& b, rules::Pick pick) {
  switch (pick) {
    case rules::Pick::First:
      return a;
    case rules::Pick::Second:
      return b;
    case rules::Pick::Tie:
      break;
  }
  if (same_entries(a, b)) {
    return a;
  }
  return detail::nan_partials(a, b, a.value());
}

}  // namespace

SparseDual max2(const SparseDual& a, const SparseDual& b) {
  return select(a, b, rules::pick_max(a.value(), b.value()));
}

SparseDual min2(const SparseDual& a, const SparseDual& b) {
  return select(a, b, rules::pick_min(a.value(), b.value()));
}

SparseDual sign2(const SparseDual& a, const SparseDual& b) {
  return detail::apply_step(
      a, b, rules::sign_step(a.value(), b.value(), is_active(a), is_active(b)));
}

SparseDual dim2(const SparseDual& a, const SparseDual& b) {
  return detail::apply_step(a, b, rules::dim_step(a.value(), b.value()));
}

SparseDual mod2(const SparseDual& a, const SparseDual& b) {
  return detail::apply_step(a, b, rules::mod_step(a.value(), b.value()));
}

SparseDual modulo2(const SparseDual& a, const SparseDual& b) {
  return detail::apply_step(a, b, rules::modulo_step(a.value(), b.value()));
}

}  // namespace sparsead
