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

// Immutable expression trees over independent variables. A tree can be
// evaluated with any number type that provides the library's operator set
// (double, SparseDual, DenseDual); every evaluation visits the nodes in the
// same order, which is what makes cross-representation comparisons exact.

#include <cmath>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <variant>

#include "sparsead/chain_rules.hpp"
#include "sparsead/functions.hpp"
#include "sparsead/oracle/dense_dual.hpp"
#include "sparsead/sparse_dual.hpp"

namespace sparsead::oracle {

enum class BinaryOp {
  Add,
  Sub,
  Mul,
  Div,
  Pow,
  Atan2,
  Max,
  Min,
  Sign,
  Dim,
  Mod,
  Modulo,
};

std::string_view to_string(BinaryOp op) noexcept;

class Expr {
 public:
  static Expr variable(Index id);
  static Expr constant(double value);
  static Expr unary(const UnaryRule& rule, Expr arg);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);
  static Expr power(Expr base, int exponent);

  std::size_t depth() const noexcept;
  std::size_t node_count() const noexcept;
  std::string to_string() const;

  /// Evaluates the tree. `var(id)` produces the leaf for independent `id`,
  /// `lift(v)` turns a constant into a T.
  template <class T, class Var, class Lift>
  T evaluate(Var&& var, Lift&& lift) const;

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Variable {
    Index id;
  };
  struct Constant {
    double value;
  };
  struct Unary {
    const UnaryRule* rule;
    NodePtr arg;
  };
  struct Binary {
    BinaryOp op;
    NodePtr lhs;
    NodePtr rhs;
  };
  struct Power {
    NodePtr base;
    int exponent;
  };
  struct Node {
    std::variant<Variable, Constant, Unary, Binary, Power> kind;
  };

  template <class Kind>
  explicit Expr(Kind kind)
      : node_(std::make_shared<const Node>(Node{std::move(kind)})) {}
  explicit Expr(NodePtr node) : node_(std::move(node)) {}

  template <class T, class Var, class Lift>
  static T evaluate_node(const Node& node, Var& var, Lift& lift);

  NodePtr node_;
};

inline Expr operator+(Expr a, Expr b) {
  return Expr::binary(BinaryOp::Add, std::move(a), std::move(b));
}
inline Expr operator-(Expr a, Expr b) {
  return Expr::binary(BinaryOp::Sub, std::move(a), std::move(b));
}
inline Expr operator*(Expr a, Expr b) {
  return Expr::binary(BinaryOp::Mul, std::move(a), std::move(b));
}
inline Expr operator/(Expr a, Expr b) {
  return Expr::binary(BinaryOp::Div, std::move(a), std::move(b));
}

/// Binary operator dispatch shared by every number type.
template <class T>
T apply_binary(BinaryOp op, const T& a, const T& b) {
  using std::atan2;
  using std::pow;
  using sparsead::dim2;
  using sparsead::max2;
  using sparsead::min2;
  using sparsead::mod2;
  using sparsead::modulo2;
  using sparsead::sign2;
  switch (op) {
    case BinaryOp::Add:
      return a + b;
    case BinaryOp::Sub:
      return a - b;
    case BinaryOp::Mul:
      return a * b;
    case BinaryOp::Div:
      return a / b;
    case BinaryOp::Pow:
      return pow(a, b);
    case BinaryOp::Atan2:
      return atan2(a, b);
    case BinaryOp::Max:
      return max2(a, b);
    case BinaryOp::Min:
      return min2(a, b);
    case BinaryOp::Sign:
      return sign2(a, b);
    case BinaryOp::Dim:
      return dim2(a, b);
    case BinaryOp::Mod:
      return mod2(a, b);
    case BinaryOp::Modulo:
      return modulo2(a, b);
  }
  return a;
}

template <class T, class Var, class Lift>
T Expr::evaluate(Var&& var, Lift&& lift) const {
  return evaluate_node<T>(*node_, var, lift);
}

template <class T, class Var, class Lift>
T Expr::evaluate_node(const Node& node, Var& var, Lift& lift) {
  using sparsead::apply_unary;
  using std::pow;
  return std::visit(
      [&](const auto& n) -> T {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Variable>) {
          return var(n.id);
        } else if constexpr (std::is_same_v<N, Constant>) {
          return lift(n.value);
        } else if constexpr (std::is_same_v<N, Unary>) {
          return apply_unary(*n.rule, evaluate_node<T>(*n.arg, var, lift));
        } else if constexpr (std::is_same_v<N, Binary>) {
          T lhs = evaluate_node<T>(*n.lhs, var, lift);
          T rhs = evaluate_node<T>(*n.rhs, var, lift);
          return apply_binary<T>(n.op, lhs, rhs);
        } else {
          return pow(evaluate_node<T>(*n.base, var, lift), n.exponent);
        }
      },
      node.kind);
}

using Seeds = std::map<Index, double>;

/// Plain-real evaluation.
double real_eval(const Expr& expr, const Seeds& seeds);

/// Forward mode with SparseDual; independents seeded from `seeds`.
SparseDual sparse_eval(const Expr& expr, const Seeds& seeds);

/// Forward mode with full-length gradients of size n. Every identifier in
/// the tree must be in 1..n.
DenseDual dense_eval(const Expr& expr, const Seeds& seeds, std::size_t n);

}  // namespace sparsead::oracle
