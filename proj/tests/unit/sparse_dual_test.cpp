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

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "sparsead/sparsead.hpp"

namespace sparsead {
namespace {

std::uint64_t bits(double x) { return std::bit_cast<std::uint64_t>(x); }

void expect_entries(const SparseDual& d, std::vector<Index> ids,
                    std::vector<double> partials) {
  ASSERT_EQ(d.nnz(), ids.size());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    EXPECT_EQ(d.indices()[k], ids[k]) << "entry " << k;
    EXPECT_EQ(d.partials()[k], partials[k]) << "entry " << k;
  }
}

TEST(SparseDualTest, ConstantHasNoEntries) {
  const SparseDual zero(0.0);
  EXPECT_EQ(zero.value(), 0.0);
  EXPECT_EQ(zero.nnz(), 0u);

  const SparseDual c(3.5);
  EXPECT_EQ(c.value(), 3.5);
  EXPECT_TRUE(c.is_constant());
  EXPECT_EQ(derivative(SparseDual(7.0), 1), 0.0);
}

TEST(SparseDualTest, ExplicitEntriesAreValidated) {
  EXPECT_THROW(SparseDual(1.0, {{2, 1.0}, {1, 1.0}}), InvalidEntries);
  EXPECT_THROW(SparseDual(1.0, {{2, 1.0}, {2, 1.0}}), InvalidEntries);
  EXPECT_THROW(SparseDual(1.0, {{0, 1.0}}), InvalidIdentifier);

  const Index ids[] = {1, 3};
  const double d[] = {1.0};
  EXPECT_THROW(SparseDual::from_entries(0.0, ids, d), ShapeMismatch);
}

TEST(SparseDualTest, AddDisjointUnion) {
  const SparseDual a(1.0, {{1, 1.0}});
  const SparseDual b(2.0, {{2, 1.0}});
  const SparseDual c = a + b;
  EXPECT_EQ(c.value(), 3.0);
  expect_entries(c, {1, 2}, {1.0, 1.0});
}

TEST(SparseDualTest, CancellationKeepsEntry) {
  const SparseDual a(1.0, {{1, 1.0}});
  const SparseDual b(-1.0, {{1, -1.0}});
  const SparseDual c = a + b;
  EXPECT_EQ(c.value(), 0.0);
  expect_entries(c, {1}, {0.0});

  const SparseDual d = a - a;
  expect_entries(d, {1}, {0.0});
}

TEST(SparseDualTest, SubtractAndNegate) {
  const SparseDual a(5.0, {{1, 2.0}, {4, 1.0}});
  const SparseDual b(3.0, {{2, 1.0}, {4, 3.0}});
  const SparseDual c = a - b;
  EXPECT_EQ(c.value(), 2.0);
  expect_entries(c, {1, 2, 4}, {2.0, -1.0, -2.0});

  const SparseDual n = -a;
  EXPECT_EQ(n.value(), -5.0);
  expect_entries(n, {1, 4}, {-2.0, -1.0});
}

TEST(SparseDualTest, MultiplyScalesBySecondOperandValue) {
  const SparseDual x(3.0, {{1, 1.0}});
  const SparseDual c = SparseDual(2.0) * x;
  EXPECT_EQ(c.value(), 6.0);
  expect_entries(c, {1}, {2.0});

  const SparseDual mixed = 2.0 * x;
  EXPECT_TRUE(identical(mixed, c));
}

TEST(SparseDualTest, MultiplySquare) {
  const SparseDual x(1.0, {{1, 1.0}});
  const SparseDual sq = x * x;
  EXPECT_EQ(sq.value(), 1.0);
  expect_entries(sq, {1}, {2.0});
}

TEST(SparseDualTest, MultiplyByZeroRetainsEntry) {
  const SparseDual c = SparseDual(0.0) * SparseDual(5.0, {{3, 4.0}});
  EXPECT_EQ(c.value(), 0.0);
  expect_entries(c, {3}, {0.0});
}

TEST(SparseDualTest, ProductRuleOnDistinctVariables) {
  const SparseDual a(2.0, {{1, 1.0}});
  const SparseDual b(3.0, {{2, 1.0}});
  expect_entries(a * b, {1, 2}, {3.0, 2.0});
}

TEST(SparseDualTest, DivideQuotientRule) {
  const SparseDual x(2.0, {{1, 1.0}});
  const SparseDual q = x / x;
  EXPECT_EQ(q.value(), 1.0);
  expect_entries(q, {1}, {0.0});

  const SparseDual r = SparseDual(1.0) / x;
  EXPECT_EQ(r.value(), 0.5);
  expect_entries(r, {1}, {-0.25});

  const SparseDual rs = 1.0 / x;
  EXPECT_TRUE(identical(rs, r));

  expect_entries(x / 4.0, {1}, {0.25});
}

TEST(SparseDualTest, DivisionByZeroFollowsIeee) {
  const SparseDual x(1.0, {{1, 1.0}});
  const SparseDual q = x / SparseDual(0.0);
  EXPECT_EQ(q.value(), HUGE_VAL);
  ASSERT_EQ(q.nnz(), 1u);
  EXPECT_FALSE(std::isfinite(q.partials()[0]));
}

TEST(SparseDualTest, IntegerPower) {
  const SparseDual x(1.0, {{1, 1.0}});
  const SparseDual p = pow(x, 2);
  EXPECT_EQ(p.value(), 1.0);
  expect_entries(p, {1}, {2.0});

  const SparseDual neg = pow(SparseDual(-2.0, {{1, 1.0}}), 2);
  EXPECT_EQ(neg.value(), 4.0);
  expect_entries(neg, {1}, {-4.0});

  const SparseDual cube_at_zero = pow(SparseDual(0.0, {{1, 1.0}}), 3);
  expect_entries(cube_at_zero, {1}, {0.0});

  // 0^0: value by IEEE convention, derivative undefined.
  const SparseDual zero_zero = pow(SparseDual(0.0, {{1, 1.0}}), 0);
  EXPECT_EQ(zero_zero.value(), 1.0);
  EXPECT_TRUE(std::isnan(zero_zero.partials()[0]));
}

TEST(SparseDualTest, GeneralPower) {
  const SparseDual a(2.0, {{1, 1.0}});
  const SparseDual b(3.0, {{2, 1.0}});
  const SparseDual p = pow(a, b);
  EXPECT_DOUBLE_EQ(p.value(), 8.0);
  ASSERT_EQ(p.nnz(), 2u);
  EXPECT_DOUBLE_EQ(p.partials()[0], 12.0);               // b a^(b-1)
  EXPECT_DOUBLE_EQ(p.partials()[1], 8.0 * std::log(2.0));  // a^b log a

  const SparseDual bad = pow(SparseDual(-1.0, {{1, 1.0}}), SparseDual(0.5));
  ASSERT_EQ(bad.nnz(), 1u);
  EXPECT_TRUE(std::isnan(bad.partials()[0]));
}

TEST(SparseDualTest, RealExponentPower) {
  const SparseDual x(4.0, {{1, 1.0}});
  const SparseDual r = pow(x, 0.5);
  EXPECT_EQ(r.value(), 2.0);
  expect_entries(r, {1}, {0.25});
}

TEST(SparseDualTest, CompareUsesValuesOnly) {
  const SparseDual a(1.0, {{1, 9.9}});
  const SparseDual b(1.0, {{2, -3.0}});
  EXPECT_EQ(compare(a, b), std::partial_ordering::equivalent);
  EXPECT_EQ(compare(SparseDual(1.0), SparseDual(2.0)), std::partial_ordering::less);
  EXPECT_EQ(compare(SparseDual(2.0), SparseDual(1.0)), std::partial_ordering::greater);
  EXPECT_TRUE(a == b);
  EXPECT_TRUE(SparseDual(1.0) < SparseDual(2.0));
  EXPECT_TRUE(a >= 1.0);
}

TEST(SparseDualTest, CopyAndMoveKeepHeapEntries) {
  // More entries than fit inline.
  SparseDual big(1.0, {{1, 1.0}, {2, 2.0}, {3, 3.0}, {4, 4.0}, {5, 5.0}, {6, 6.0}});
  const SparseDual copy = big;
  EXPECT_TRUE(identical(copy, big));
  SparseDual moved = std::move(big);
  EXPECT_TRUE(identical(moved, copy));
  SparseDual assigned(0.0);
  assigned = moved;
  EXPECT_TRUE(identical(assigned, copy));
  assigned = SparseDual(2.0, {{7, 1.0}});
  expect_entries(assigned, {7}, {1.0});
}

TEST(SparseDualTest, CompoundAssignment) {
  SparseDual x(2.0, {{1, 1.0}});
  x += SparseDual(1.0, {{2, 1.0}});
  x *= 2.0;
  EXPECT_EQ(x.value(), 6.0);
  expect_entries(x, {1, 2}, {2.0, 2.0});
  x -= 1.0;
  x /= SparseDual(5.0);
  EXPECT_EQ(x.value(), 1.0);
}

// Random duals over identifiers 1..12 with at most 4 entries each.
SparseDual random_dual(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 4);
  std::uniform_real_distribution<double> val(-3.0, 3.0);
  std::vector<Index> ids;
  for (Index i = 1; i <= 12; ++i) ids.push_back(i);
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(static_cast<std::size_t>(count(rng)));
  std::sort(ids.begin(), ids.end());
  std::vector<double> partials;
  for (std::size_t k = 0; k < ids.size(); ++k) partials.push_back(val(rng));
  return SparseDual::from_entries(val(rng), ids, partials);
}

TEST(SparseDualProperty, BinaryResultsAreSortedUnions) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const SparseDual a = random_dual(rng);
    const SparseDual b = random_dual(rng);
    for (const SparseDual& r : {a + b, a - b, a * b, a / b}) {
      const auto idx = r.indices();
      ASSERT_LE(r.nnz(), capacity());
      ASSERT_LE(r.nnz(), a.nnz() + b.nnz());
      for (std::size_t k = 1; k < idx.size(); ++k) {
        ASSERT_LT(idx[k - 1], idx[k]);
      }
      // No pruning: every operand identifier survives.
      for (const Index id : a.indices()) {
        ASSERT_TRUE(std::binary_search(idx.begin(), idx.end(), id));
      }
      for (const Index id : b.indices()) {
        ASSERT_TRUE(std::binary_search(idx.begin(), idx.end(), id));
      }
    }
    // Linearity: exact entrywise sums and differences.
    const SparseDual s = a + b;
    const SparseDual d = a - b;
    for (const Index id : s.indices()) {
      ASSERT_EQ(bits(s.partial(id)), bits(a.partial(id) + b.partial(id)));
      ASSERT_EQ(bits(d.partial(id)), bits(a.partial(id) - b.partial(id)));
    }
    // Unary operations keep the pattern.
    for (const SparseDual& r : {-a, 3.0 * a, a / 2.0, a + 1.0, pow(a, 3)}) {
      ASSERT_TRUE(std::equal(r.indices().begin(), r.indices().end(),
                             a.indices().begin(), a.indices().end()));
    }
  }
}

TEST(SparseDualProperty, CompareIgnoresDerivativeScaling) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> scale(-100.0, 100.0);
  for (int trial = 0; trial < 500; ++trial) {
    const SparseDual a = random_dual(rng);
    const SparseDual b = random_dual(rng);
    const double sa = scale(rng);
    const double sb = scale(rng);
    // Rescale only the derivative part: keep the value, scale partials.
    const auto rescale = [](const SparseDual& x, double f) {
      std::vector<double> p(x.partials().begin(), x.partials().end());
      for (double& v : p) v *= f;
      return SparseDual::from_entries(x.value(), x.indices(), p);
    };
    ASSERT_EQ(compare(a, b), compare(rescale(a, sa), rescale(b, sb)));
  }
}

TEST(SparseDualProperty, ValueChannelMatchesPlainReals) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> v(-2.0, 2.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double xa = v(rng);
    const double xb = v(rng);
    const SparseDual a(xa, {{1, 1.0}});
    const SparseDual b(xb, {{2, 1.0}});
    const SparseDual r = (a * b + 3.0) / (b - 5.0) - pow(a, 2) * 0.5;
    const double plain = (xa * xb + 3.0) / (xb - 5.0) - std::pow(xa, 2) * 0.5;
    ASSERT_EQ(bits(r.value()), bits(plain));
  }
}

}  // namespace
}  // namespace sparsead
