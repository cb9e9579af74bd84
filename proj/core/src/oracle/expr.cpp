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


#include "sparsead/oracle/expr.hpp"

#include <algorithm>
#include <sstream>

#include "sparsead/errors.hpp"
#include "sparsead/seed_extract.hpp"

namespace sparsead::oracle {

std::string_view to_string(BinaryOp op) noexcept {
  switch (op) {
    case BinaryOp::Add:
      return "+";
    case BinaryOp::Sub:
      return "-";
    case BinaryOp::Mul:
      return "*";
    case BinaryOp::Div:
      return "/";
    case BinaryOp::Pow:
      return "pow";
    case BinaryOp::Atan2:
      return "atan2";
    case BinaryOp::Max:
      return "max";
    case BinaryOp::Min:
      return "min";
    case BinaryOp::Sign:
      return "sign";
    case BinaryOp::Dim:
      return "dim";
    case BinaryOp::Mod:
      return "mod";
    case BinaryOp::Modulo:
      return "modulo";
  }
  return "?";
}

Expr Expr::variable(Index id) {
  if (id < 1) {
    throw InvalidIdentifier(id);
  }
  return Expr(Variable{id});
}

Expr Expr::constant(double value) { return Expr(Constant{value}); }

Expr Expr::unary(const UnaryRule& rule, Expr arg) {
  return Expr(Unary{&rule, std::move(arg.node_)});
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  return Expr(Binary{op, std::move(lhs.node_), std::move(rhs.node_)});
}

Expr Expr::power(Expr base, int exponent) {
  return Expr(Power{std::move(base.node_), exponent});
}

std::size_t Expr::depth() const noexcept {
  return std::visit(
      [](const auto& n) -> std::size_t {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Unary>) {
          return 1 + Expr(n.arg).depth();
        } else if constexpr (std::is_same_v<N, Binary>) {
          return 1 + std::max(Expr(n.lhs).depth(), Expr(n.rhs).depth());
        } else if constexpr (std::is_same_v<N, Power>) {
          return 1 + Expr(n.base).depth();
        } else {
          return 0;
        }
      },
      node_->kind);
}

std::size_t Expr::node_count() const noexcept {
  return std::visit(
      [](const auto& n) -> std::size_t {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Unary>) {
          return 1 + Expr(n.arg).node_count();
        } else if constexpr (std::is_same_v<N, Binary>) {
          return 1 + Expr(n.lhs).node_count() + Expr(n.rhs).node_count();
        } else if constexpr (std::is_same_v<N, Power>) {
          return 1 + Expr(n.base).node_count();
        } else {
          return 1;
        }
      },
      node_->kind);
}

std::string Expr::to_string() const {
  return std::visit(
      [](const auto& n) -> std::string {
        using N = std::decay_t<decltype(n)>;
        std::ostringstream out;
        out.precision(17);
        if constexpr (std::is_same_v<N, Variable>) {
          out << 'x' << n.id;
        } else if constexpr (std::is_same_v<N, Constant>) {
          out << n.value;
        } else if constexpr (std::is_same_v<N, Unary>) {
          out << n.rule->name << '(' << Expr(n.arg).to_string() << ')';
        } else if constexpr (std::is_same_v<N, Binary>) {
          out << oracle::to_string(n.op) << '(' << Expr(n.lhs).to_string() << ", "
              << Expr(n.rhs).to_string() << ')';
        } else {
          out << '(' << Expr(n.base).to_string() << ")^" << n.exponent;
        }
        return out.str();
      },
      node_->kind);
}

namespace {

double seed_value(const Seeds& seeds, Index id) {
  const auto it = seeds.find(id);
  if (it == seeds.end()) {
    throw InvalidIdentifier(id);
  }
  return it->second;
}

}  // namespace

double real_eval(const Expr& expr, const Seeds& seeds) {
  return expr.evaluate<double>([&](Index id) { return seed_value(seeds, id); },
                               [](double v) { return v; });
}

SparseDual sparse_eval(const Expr& expr, const Seeds& seeds) {
  return expr.evaluate<SparseDual>(
      [&](Index id) {
        SparseDual x;
        seed_independent(id, x, seed_value(seeds, id));
        return x;
      },
      [](double v) { return SparseDual(v); });
}

DenseDual dense_eval(const Expr& expr, const Seeds& seeds, std::size_t n) {
  return expr.evaluate<DenseDual>(
      [&](Index id) { return DenseDual::variable(id, seed_value(seeds, id), n); },
      [n](double v) { return DenseDual(v, n); });
}

}  // namespace sparsead::oracle
