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
#include <string>
#include <vector>

#include "sparsead/sparsead.hpp"
#include "support/suites.hpp"

namespace sparsead {
namespace {

SparseDual var(Index id, double x) { return SparseDual(x, {{id, 1.0}}); }

TEST(FunctionsTest, SineScalesSeed) {
  const SparseDual r = sin(SparseDual(1.0, {{1, 2.0}}));
  EXPECT_DOUBLE_EQ(r.value(), 0.8414709848078965);
  EXPECT_DOUBLE_EQ(r.partial(1), 1.080604611736280);
}

TEST(FunctionsTest, ExpAndLog) {
  const SparseDual e = exp(var(1, 0.0));
  EXPECT_EQ(e.value(), 1.0);
  EXPECT_EQ(e.partial(1), 1.0);
  const SparseDual l = log(var(1, 2.0));
  EXPECT_DOUBLE_EQ(l.partial(1), 0.5);
  const SparseDual l10 = log10(var(1, 10.0));
  EXPECT_DOUBLE_EQ(l10.value(), 1.0);
  EXPECT_DOUBLE_EQ(l10.partial(1), 1.0 / (10.0 * std::log(10.0)));
}

TEST(FunctionsTest, SqrtAtZeroIsNaN) {
  const SparseDual r = sqrt(var(1, 0.0));
  EXPECT_EQ(r.value(), 0.0);
  ASSERT_EQ(r.nnz(), 1u);
  EXPECT_TRUE(std::isnan(r.partial(1)));
}

TEST(FunctionsTest, PassiveOperandStaysConstantAtSingularPoint) {
  const SparseDual r = abs(SparseDual(0.0));
  EXPECT_EQ(r.value(), 0.0);
  EXPECT_EQ(r.nnz(), 0u);
  EXPECT_EQ(sqrt(SparseDual(0.0)).nnz(), 0u);
}

TEST(FunctionsTest, NonDifferentiablePointsGiveNaN) {
  EXPECT_TRUE(std::isnan(abs(var(1, 0.0)).partial(1)));
  EXPECT_TRUE(std::isnan(asin(var(1, 1.0)).partial(1)));
  EXPECT_TRUE(std::isnan(asin(var(1, -1.0)).partial(1)));
  EXPECT_TRUE(std::isnan(acos(var(1, 1.0)).partial(1)));
  EXPECT_TRUE(std::isnan(acos(var(1, -1.0)).partial(1)));

  // All stored partials turn NaN, not just some.
  const SparseDual two(0.0, {{1, 1.0}, {3, -2.0}});
  const SparseDual r = abs(two);
  ASSERT_EQ(r.nnz(), 2u);
  EXPECT_TRUE(std::isnan(r.partials()[0]));
  EXPECT_TRUE(std::isnan(r.partials()[1]));
}

TEST(FunctionsTest, AbsAwayFromZero) {
  EXPECT_EQ(abs(var(1, -2.0)).partial(1), -1.0);
  EXPECT_EQ(abs(var(1, 2.0)).partial(1), 1.0);
}

TEST(FunctionsTest, TanhDerivative) {
  EXPECT_EQ(tanh(var(1, 0.0)).partial(1), 1.0);
  for (const double x : {700.0, -700.0}) {
    const SparseDual r = tanh(var(1, x));
    EXPECT_TRUE(std::isfinite(r.partial(1)));
    EXPECT_GE(r.partial(1), 0.0);
    EXPECT_LT(r.partial(1), 1e-300);
  }
}

TEST(FunctionsTest, TanhSwitchIsSixHundredFourteen) {
  EXPECT_EQ(rules::kTanhSwitch, 614.0);
  const double below = 613.9;
  const double above = 614.1;
  const double sech = 1.0 / std::cosh(below);
  EXPECT_EQ(rules::tanh_multiplier(below), sech * sech);
  EXPECT_EQ(rules::tanh_multiplier(above), 4.0 * std::exp(-2.0 * above));
  EXPECT_EQ(rules::tanh_multiplier(-above), 4.0 * std::exp(-2.0 * above));
}

TEST(FunctionsTest, TanhMultiplierFiniteNonNegativeAndMonotone) {
  double previous = rules::tanh_multiplier(0.0);
  for (double x = 0.5; x <= 1e4; x += 0.5) {
    const double m = rules::tanh_multiplier(x);
    ASSERT_TRUE(std::isfinite(m)) << x;
    ASSERT_GE(m, 0.0) << x;
    ASSERT_LE(m, previous) << x;
    ASSERT_EQ(m, rules::tanh_multiplier(-x)) << x;
    previous = m;
  }
}

TEST(FunctionsTest, MaxPicksWinnerEntries) {
  const SparseDual a = var(1, 1.0);
  const SparseDual b = var(2, 2.0);
  const SparseDual m = max2(a, b);
  EXPECT_EQ(m.value(), 2.0);
  ASSERT_EQ(m.nnz(), 1u);
  EXPECT_EQ(m.indices()[0], 2);
  EXPECT_EQ(m.partial(2), 1.0);

  const SparseDual n = min2(a, b);
  EXPECT_EQ(n.value(), 1.0);
  EXPECT_EQ(n.indices()[0], 1);
}

TEST(FunctionsTest, MaxTieWithDifferentEntriesIsNaN) {
  const SparseDual m = max2(var(1, 1.0), var(2, 1.0));
  EXPECT_EQ(m.value(), 1.0);
  ASSERT_EQ(m.nnz(), 2u);
  EXPECT_TRUE(std::isnan(m.partials()[0]));
  EXPECT_TRUE(std::isnan(m.partials()[1]));

  // Identical operands tie harmlessly.
  const SparseDual x = var(1, 1.0);
  EXPECT_TRUE(identical(max2(x, x), x));
  EXPECT_TRUE(identical(min2(x, x), x));
}

TEST(FunctionsTest, Atan2) {
  const SparseDual r = atan2(var(1, 0.0), var(2, 1.0));
  EXPECT_EQ(r.value(), 0.0);
  EXPECT_EQ(r.partial(1), 1.0);
  EXPECT_EQ(r.partial(2), 0.0);

  const SparseDual origin = atan2(var(1, 0.0), var(2, 0.0));
  EXPECT_TRUE(std::isnan(origin.partial(1)));
  EXPECT_TRUE(std::isnan(origin.partial(2)));
}

TEST(FunctionsTest, SignTransfersMagnitude) {
  const SparseDual r = sign2(var(1, -3.0), var(2, 2.0));
  EXPECT_EQ(r.value(), 3.0);
  EXPECT_EQ(r.partial(1), -1.0);
  EXPECT_EQ(r.partial(2), 0.0);
  const SparseDual zero_a = sign2(var(1, 0.0), var(2, 2.0));
  EXPECT_TRUE(std::isnan(zero_a.partial(1)));
  const SparseDual zero_b = sign2(var(1, 2.0), var(2, 0.0));
  EXPECT_TRUE(std::isnan(zero_b.partial(1)));
}

TEST(FunctionsTest, DimAndModValues) {
  EXPECT_EQ(dim2(var(1, 5.0), var(2, 3.0)).value(), 2.0);
  EXPECT_EQ(dim2(var(1, 3.0), var(2, 5.0)).value(), 0.0);
  EXPECT_EQ(dim2(3.0, 5.0), 0.0);
  EXPECT_EQ(mod2(-7.0, 3.0), -1.0);
  EXPECT_EQ(modulo2(-7.0, 3.0), 2.0);
  EXPECT_EQ(modulo2(7.0, -3.0), -2.0);

  const SparseDual m = mod2(var(1, 7.5), var(2, 2.0));
  EXPECT_EQ(m.value(), 1.5);
  EXPECT_EQ(m.partial(1), 1.0);
  EXPECT_EQ(m.partial(2), -3.0);

  const SparseDual jump = mod2(var(1, 6.0), var(2, 2.0));
  EXPECT_TRUE(std::isnan(jump.partial(1)));
}

TEST(FunctionsTest, RuleTableIsComplete) {
  std::vector<std::string> names;
  for (const UnaryRule& rule : unary_rules()) names.emplace_back(rule.name);
  EXPECT_EQ(names, (std::vector<std::string>{"sin", "cos", "tan", "exp", "log",
                                             "log10", "sqrt", "sinh", "cosh",
                                             "tanh", "asin", "acos", "atan",
                                             "abs"}));
  ASSERT_NE(find_unary_rule("tanh"), nullptr);
  EXPECT_EQ(find_unary_rule("tanh")->name, "tanh");
  EXPECT_EQ(find_unary_rule("erf"), nullptr);
}

TEST(FunctionsProperty, UnaryAndBinaryMatchFiniteDifferences) {
  for (const std::string& f : testing::fd_suite_failures(2024)) ADD_FAILURE() << f;
}

TEST(FunctionsProperty, NaNPolicyIsTotal) {
  for (const std::string& f : testing::nan_policy_failures()) ADD_FAILURE() << f;
}

}  // namespace
}  // namespace sparsead
