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


// Runs with capacity 1 so that overflow is easy to provoke.

#include <gtest/gtest.h>

#include <vector>

#include "sparsead/sparsead.hpp"

namespace sparsead {
namespace {

TEST(CapacityTest, ConfiguredCapacityIsOne) {
  EXPECT_EQ(capacity(), 1u);
  EXPECT_EQ(current_config().overflow_policy, OverflowPolicy::Error);
}

TEST(CapacityTest, UnionBeyondCapacityThrows) {
  const SparseDual a(0.0, {{1, 1.0}});
  const SparseDual b(0.0, {{2, 1.0}});
  EXPECT_THROW(a + b, CapacityOverflow);
  EXPECT_THROW(a - b, CapacityOverflow);
  EXPECT_THROW(a * b, CapacityOverflow);
  EXPECT_THROW(a / b, CapacityOverflow);
  EXPECT_THROW(atan2(a, b), CapacityOverflow);
  try {
    (void)(a + b);
  } catch (const CapacityOverflow& e) {
    EXPECT_EQ(e.required(), 2u);
    EXPECT_EQ(e.capacity(), 1u);
  }
}

TEST(CapacityTest, SameIdentifierFits) {
  const SparseDual a(2.0, {{1, 1.0}});
  const SparseDual r = a * a + a;
  EXPECT_EQ(r.nnz(), 1u);
  EXPECT_EQ(r.partial(1), 5.0);
}

TEST(CapacityTest, ExplicitEntriesBeyondCapacityThrow) {
  EXPECT_THROW(SparseDual(0.0, {{1, 1.0}, {2, 1.0}}), CapacityOverflow);
}

TEST(CapacityTest, SumOverflowsOnSecondIdentifier) {
  std::vector<SparseDual> x(2);
  seed_independent(1, x[0], 1.0);
  seed_independent(2, x[1], 1.0);
  EXPECT_THROW(sum(x), CapacityOverflow);
}

TEST(ConfigTest, FrozenAfterFirstDual) {
  const SparseDual d(1.0);
  EXPECT_TRUE(config_frozen());
  EXPECT_THROW(set_capacity(2), ConfigFrozen);
  // Re-stating the current configuration is not a change.
  EXPECT_NO_THROW(set_capacity(1));
  EXPECT_EQ(capacity(), 1u);
}

TEST(ConfigTest, ZeroCapacityRejected) {
  EXPECT_THROW(set_capacity(0), InvalidConfig);
}

}  // namespace
}  // namespace sparsead
