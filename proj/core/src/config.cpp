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


#include "sparsead/config.hpp"

#include <mutex>
#include <string>

#include "sparsead/errors.hpp"

namespace sparsead {

namespace detail {

std::atomic<std::size_t> g_capacity{kDefaultCapacity};
std::atomic<bool> g_frozen{false};

namespace {
std::mutex g_config_mutex;
OverflowPolicy g_policy = OverflowPolicy::Error;
}  // namespace

void freeze_slow() noexcept {
  std::lock_guard lock(g_config_mutex);
  g_frozen.store(true, std::memory_order_release);
}

}  // namespace detail

void configure(const ADConfig& config) {
  if (config.capacity < 1) {
    throw InvalidConfig("capacity must be at least 1");
  }
  std::lock_guard lock(detail::g_config_mutex);
  if (detail::g_frozen.load(std::memory_order_acquire)) {
    if (config.capacity == detail::g_capacity.load() &&
        config.overflow_policy == detail::g_policy) {
      return;
    }
    throw ConfigFrozen("configuration cannot change after the first dual "
                       "number is constructed (capacity is " +
                       std::to_string(detail::g_capacity.load()) + ")");
  }
  detail::g_capacity.store(config.capacity, std::memory_order_release);
  detail::g_policy = config.overflow_policy;
}

void set_capacity(std::size_t capacity) {
  configure({capacity, OverflowPolicy::Error});
}

ADConfig current_config() noexcept {
  std::lock_guard lock(detail::g_config_mutex);
  return {detail::g_capacity.load(), detail::g_policy};
}

}  // namespace sparsead
