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

#include <atomic>
#include <cstddef>
#include <cstdint>

namespace sparsead {

/// What happens when a result needs more derivative slots than `capacity`.
enum class OverflowPolicy {
  Error,
};

/// Process-wide settings. `capacity` bounds the number of derivative
/// entries any single SparseDual may hold.
struct ADConfig {
  std::size_t capacity = 16;
  OverflowPolicy overflow_policy = OverflowPolicy::Error;
};

inline constexpr std::size_t kDefaultCapacity = ADConfig{}.capacity;

namespace detail {
extern std::atomic<std::size_t> g_capacity;
extern std::atomic<bool> g_frozen;
void freeze_slow() noexcept;
}  // namespace detail

/// Replaces the process configuration. Allowed any number of times before
/// the first SparseDual is constructed; afterwards only a call that leaves
/// the configuration unchanged succeeds, anything else throws ConfigFrozen.
/// Throws InvalidConfig for capacity 0.
void configure(const ADConfig& config);

/// Shorthand for configure({capacity, OverflowPolicy::Error}).
void set_capacity(std::size_t capacity);

ADConfig current_config() noexcept;

inline std::size_t capacity() noexcept {
  return detail::g_capacity.load(std::memory_order_relaxed);
}

inline bool config_frozen() noexcept {
  return detail::g_frozen.load(std::memory_order_relaxed);
}

inline void freeze_config() noexcept {
  if (!config_frozen()) {
    detail::freeze_slow();
  }
}

}  // namespace sparsead
