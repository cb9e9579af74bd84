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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>

#include "json.hpp"

namespace sparsead::bench {

/// One timed run.
struct BenchRecord {
  std::string case_name;
  std::size_t n_independent = 0;
  /// Derivative slots per value: the sparse capacity, or the gradient
  /// length for the dense oracle.
  std::size_t capacity = 0;
  std::int64_t wall_time_ns = 0;
  std::size_t peak_bytes_estimate = 0;
  std::size_t jacobian_nnz = 0;
};

/// count * (1 + capacity) * (bytes per real + bytes per index): every
/// value reserves its full slot count plus one slot for the value and the
/// entry count.
std::size_t peak_bytes_estimate(std::size_t dual_count, std::size_t capacity);

inline constexpr const char* kCsvHeader =
    "case,n,capacity,wall_time_ns,peak_bytes_estimate,jacobian_nnz";

std::string to_csv_row(const BenchRecord& record);
nlohmann::json to_json(const BenchRecord& record);

void write_csv(const std::filesystem::path& path,
               std::span<const BenchRecord> records);

}  // namespace sparsead::bench
