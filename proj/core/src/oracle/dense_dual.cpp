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


#include "sparsead/oracle/dense_dual.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sparsead/errors.hpp"
#include "sparsead/functions.hpp"

namespace sparsead::oracle {

DenseDual::DenseDual(double value, std::vector<double> gradient)
    : value_(value), gradient_(std::move(gradient)), stored_(gradient_.size()) {
  for (std::size_t i = 0; i < gradient_.size(); ++i) {
    stored_[i] = gradient_[i] != 0.0 ? 1 : 0;
  }
}

DenseDual::DenseDual(double value, std::vector<double> gradient,
                     std::vector<unsigned char> stored)
    : value_(value), gradient_(std::move(gradient)), stored_(std::move(stored)) {
  if (stored_.size() != gradient_.size()) {
    throw ShapeMismatch("stored-slot mask does not match gradient length");
  }
}

DenseDual DenseDual::variable(Index id, double value, std::size_t n) {
  if (id < 1) {
    throw InvalidIdentifier(id);
  }
  if (static_cast<std::size_t>(id) > n) {
    throw ShapeMismatch("identifier " + std::to_string(id) +
                        " exceeds gradient length " + std::to_string(n));
  }
  DenseDual out(value, n);
  out.gradient_[static_cast<std::size_t>(id) - 1] = 1.0;
  out.stored_[static_cast<std::size_t>(id) - 1] = 1;
  return out;
}

bool DenseDual::is_active() const noexcept {
  return std::any_of(stored_.begin(), stored_.end(),
                     [](unsigned char s) { return s != 0; });
}

void require_same_size(const DenseDual& a, const DenseDual& b) {
  if (a.size() != b.size()) {
    throw ShapeMismatch("dense duals with gradient lengths " +
                        std::to_string(a.size()) + " and " +
                        std::to_string(b.size()));
  }
}

namespace {

DenseDual nan_gradient(const DenseDual& a, double value) {
  return map_gradient(a, value, [](double) { return kQuietNaN; });
}

DenseDual nan_gradient(const DenseDual& a, const DenseDual& b, double value) {
  return zip_gradient(a, b, value, [](double, double) { return kQuietNaN; });
}

template <class Partial>
DenseDual apply_step(const DenseDual& a, const DenseDual& b,
                     const rules::BinaryStep<Partial>& step) {
  if (step.singular) {
    return nan_gradient(a, b, step.value);
  }
  return zip_gradient(a, b, step.value, step.partial);
}

DenseDual select(const DenseDual& a, const DenseDual& b, rules::Pick pick) {
  switch (pick) {
    case rules::Pick::First:
      return a;
    case rules::Pick::Second:
      return b;
    case rules::Pick::Tie:
      break;
  }
  require_same_size(a, b);
  if (std::equal(a.stored().begin(), a.stored().end(), b.stored().begin()) &&
      std::equal(a.gradient().begin(), a.gradient().end(),
                 b.gradient().begin())) {
    return a;
  }
  return nan_gradient(a, b, a.value());
}

}  // namespace

DenseDual operator+(const DenseDual& a) { return a; }
DenseDual operator-(const DenseDual& a) {
  return map_gradient(a, -a.value(), rules::Negate{});
}
DenseDual operator+(const DenseDual& a, const DenseDual& b) {
  return zip_gradient(a, b, a.value() + b.value(), rules::Sum{});
}
DenseDual operator-(const DenseDual& a, const DenseDual& b) {
  return zip_gradient(a, b, a.value() - b.value(), rules::Difference{});
}
DenseDual operator*(const DenseDual& a, const DenseDual& b) {
  return zip_gradient(a, b, a.value() * b.value(),
                      rules::Product{a.value(), b.value()});
}
DenseDual operator/(const DenseDual& a, const DenseDual& b) {
  return zip_gradient(a, b, a.value() / b.value(),
                      rules::Quotient{a.value(), b.value()});
}

DenseDual operator+(const DenseDual& a, double b) {
  return map_gradient(a, a.value() + b, rules::Identity{});
}
DenseDual operator+(double a, const DenseDual& b) {
  return map_gradient(b, a + b.value(), rules::Identity{});
}
DenseDual operator-(const DenseDual& a, double b) {
  return map_gradient(a, a.value() - b, rules::Identity{});
}
DenseDual operator-(double a, const DenseDual& b) {
  return map_gradient(b, a - b.value(), rules::Negate{});
}
DenseDual operator*(const DenseDual& a, double b) {
  return map_gradient(a, a.value() * b, rules::Scale{b});
}
DenseDual operator*(double a, const DenseDual& b) {
  return map_gradient(b, a * b.value(), rules::Scale{a});
}
DenseDual operator/(const DenseDual& a, double b) {
  return map_gradient(a, a.value() / b, rules::DivideBy{b});
}
DenseDual operator/(double a, const DenseDual& b) {
  return map_gradient(b, a / b.value(),
                      [q = rules::Quotient{a, b.value()}](double p) {
                        return q(0.0, p);
                      });
}

DenseDual pow(const DenseDual& a, int n) {
  return map_gradient(a, std::pow(a.value(), n),
                      rules::Scale{rules::powi_multiplier(a.value(), n)});
}
DenseDual pow(const DenseDual& a, double e) {
  return map_gradient(a, std::pow(a.value(), e),
                      rules::Scale{rules::powr_multiplier(a.value(), e)});
}
DenseDual pow(const DenseDual& a, const DenseDual& b) {
  return apply_step(a, b, rules::pow_step(a.value(), b.value()));
}

DenseDual apply_unary(const UnaryRule& rule, const DenseDual& x) {
  const double value = rule.value(x.value());
  if (!x.is_active()) {
    return DenseDual(value, x.size());
  }
  if (rule.is_singular(x.value())) {
    return nan_gradient(x, value);
  }
  return map_gradient(x, value, rules::Scale{rule.derivative(x.value())});
}

DenseDual sin(const DenseDual& x) { return apply_unary(rules::kSin, x); }
DenseDual cos(const DenseDual& x) { return apply_unary(rules::kCos, x); }
DenseDual exp(const DenseDual& x) { return apply_unary(rules::kExp, x); }
DenseDual log(const DenseDual& x) { return apply_unary(rules::kLog, x); }
DenseDual sqrt(const DenseDual& x) { return apply_unary(rules::kSqrt, x); }
DenseDual tanh(const DenseDual& x) { return apply_unary(rules::kTanh, x); }

DenseDual atan2(const DenseDual& y, const DenseDual& x) {
  return apply_step(y, x, rules::atan2_step(y.value(), x.value()));
}
DenseDual max2(const DenseDual& a, const DenseDual& b) {
  return select(a, b, rules::pick_max(a.value(), b.value()));
}
DenseDual min2(const DenseDual& a, const DenseDual& b) {
  return select(a, b, rules::pick_min(a.value(), b.value()));
}
DenseDual sign2(const DenseDual& a, const DenseDual& b) {
  return apply_step(a, b,
                    rules::sign_step(a.value(), b.value(), a.is_active(),
                                     b.is_active()));
}
DenseDual dim2(const DenseDual& a, const DenseDual& b) {
  return apply_step(a, b, rules::dim_step(a.value(), b.value()));
}
DenseDual mod2(const DenseDual& a, const DenseDual& b) {
  return apply_step(a, b, rules::mod_step(a.value(), b.value()));
}
DenseDual modulo2(const DenseDual& a, const DenseDual& b) {
  return apply_step(a, b, rules::modulo_step(a.value(), b.value()));
}

}  // namespace sparsead::oracle
