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


#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "sparsead/oracle/dense_dual.hpp"
#include "sparsead/oracle/expr.hpp"
#include "sparsead/oracle/finite_difference.hpp"
#include "sparsead/sparsead.hpp"
#include "support/random_expr.hpp"
#include "support/suites.hpp"

namespace sparsead::oracle {
namespace {

DenseDual abs_of_zero(const DenseDual& z) {
  return apply_unary(rules::kAbs, z - z.value());
}

TEST(DenseDualTest, ProductGradient) {
  const Expr e = Expr::variable(1) * Expr::variable(2);
  const DenseDual d = dense_eval(e, {{1, 2.0}, {2, 3.0}}, 3);
  EXPECT_EQ(d.value(), 6.0);
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d.partial(1), 3.0);
  EXPECT_EQ(d.partial(2), 2.0);
  EXPECT_EQ(d.partial(3), 0.0);
}

TEST(DenseDualTest, VariableAndConstant) {
  const DenseDual x = DenseDual::variable(2, 4.0, 3);
  EXPECT_TRUE(x.is_active());
  EXPECT_EQ(x.gradient()[1], 1.0);
  const DenseDual c(4.0, 3);
  EXPECT_FALSE(c.is_active());
  const DenseDual r = sqrt(x);
  EXPECT_EQ(r.value(), 2.0);
  EXPECT_EQ(r.partial(2), 0.25);
  EXPECT_THROW(x + DenseDual(1.0, 2), ShapeMismatch);
}

TEST(DenseDualTest, NaNPolicyMatchesSparse) {
  const DenseDual x = DenseDual::variable(1, 0.0, 2);
  const DenseDual r = sqrt(x);
  EXPECT_TRUE(std::isnan(r.partial(1)));
  EXPECT_EQ(r.partial(2), 0.0);
  EXPECT_EQ(sqrt(DenseDual(0.0, 2)).partial(1), 0.0);
}

TEST(DenseDualTest, StoredZeroKeepsOperandActive) {
  // x - x has a stored zero partial: still active, like the sparse dual.
  const DenseDual x = DenseDual::variable(1, 2.0, 2);
  const DenseDual z = x - x;
  EXPECT_TRUE(z.is_active());
  EXPECT_TRUE(z.is_stored(1));
  EXPECT_FALSE(z.is_stored(2));
  EXPECT_TRUE(std::isnan(abs_of_zero(z).partial(1)));
}

TEST(ExprTest, ShapeAndPrinting) {
  const Expr e = Expr::unary(rules::kSin, Expr::power(Expr::variable(1), 2));
  EXPECT_EQ(e.depth(), 2u);  // edges on the longest path
  EXPECT_EQ(e.node_count(), 3u);
  EXPECT_EQ(e.to_string(), "sin((x1)^2)");
  EXPECT_DOUBLE_EQ(real_eval(e, {{1, 5.0}}), -0.1323517500977730);
  const SparseDual s = sparse_eval(e, {{1, 5.0}});
  EXPECT_DOUBLE_EQ(s.partial(1), 9.912028118634735);
}

TEST(FiniteDifferenceTest, Square) {
  EXPECT_NEAR(fd_derivative([](double x) { return x * x; }, 3.0), 6.0, 1e-8);
}

TEST(FiniteDifferenceTest, SineOfSquare) {
  const double d = fd_derivative([](double x) { return std::sin(x * x); }, 5.0);
  EXPECT_NEAR(d, 9.912028118634735, 1e-6 * 9.912028118634735);
}

TEST(FiniteDifferenceTest, StepScalesWithMagnitude) {
  const StepPolicy p;
  EXPECT_EQ(p.step(0.5), p.scale);
  EXPECT_EQ(p.step(-4.0), 4.0 * p.scale);
}

TEST(FiniteDifferenceTest, JacobianOfLinearMap) {
  const auto f = [](std::span<const double> x) {
    return std::vector<double>{2.0 * x[0] + x[1], -x[1]};
  };
  const std::vector<double> point = {1.0, 2.0};
  const Matrix<double> j = fd_jacobian(f, point);
  EXPECT_NEAR(j(0, 0), 2.0, 1e-8);
  EXPECT_NEAR(j(0, 1), 1.0, 1e-8);
  EXPECT_NEAR(j(1, 0), 0.0, 1e-8);
  EXPECT_NEAR(j(1, 1), -1.0, 1e-8);
}

TEST(OracleProperty, SparseDensePlainBitwiseEquivalent) {
  testing::TreeGenerator gen(20261018);
  const testing::TreeOptions options;
  for (int trial = 0; trial < 1000; ++trial) {
    const Expr e = gen.tree(options);
    ASSERT_LE(e.depth(), options.max_depth) << e.to_string();
    const Seeds seeds = gen.seeds(options.num_vars);
    const auto failure = testing::equivalence_failure(e, seeds, options.num_vars);
    ASSERT_FALSE(failure) << "trial " << trial << ": " << *failure;
  }
}

TEST(OracleProperty, SmoothTreesMatchFiniteDifferences) {
  testing::TreeGenerator gen(4242);
  testing::TreeOptions options;
  options.max_depth = 5;
  options.num_vars = 4;
  options.smooth_only = true;
  for (int trial = 0; trial < 200; ++trial) {
    const Expr e = gen.tree(options);
    const Seeds seeds = gen.seeds(options.num_vars);
    const SparseDual s = sparse_eval(e, seeds);
    for (const auto& [id, x0] : seeds) {
      const double fd = fd_derivative(
          [&, id = id](double t) {
            Seeds moved = seeds;
            moved[id] = t;
            return real_eval(e, moved);
          },
          x0);
      const double ad = s.partial(id);
      ASSERT_LE(std::fabs(ad - fd), std::max(1e-6 * std::fabs(fd), 1e-6))
          << e.to_string() << " d/dx" << id;
    }
  }
}

}  // namespace
}  // namespace sparsead::oracle
