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


#include "sparsead/bench/record.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sparsead/sparse_dual.hpp"

namespace sparsead::bench {

std::size_t peak_bytes_estimate(std::size_t dual_count, std::size_t capacity) {
  return dual_count * (1 + capacity) * (sizeof(double) + sizeof(Index));
}

std::string to_csv_row(const BenchRecord& record) {
  std::ostringstream out;
  out << record.case_name << ',' << record.n_independent << ','
      << record.capacity << ',' << record.wall_time_ns << ','
      << record.peak_bytes_estimate << ',' << record.jacobian_nnz;
  return out.str();
}

nlohmann::json to_json(const BenchRecord& record) {
  return {
      {"case", record.case_name},
      {"n", record.n_independent},
      {"capacity", record.capacity},
      {"wall_time_ns", record.wall_time_ns},
      {"peak_bytes_estimate", record.peak_bytes_estimate},
      {"jacobian_nnz", record.jacobian_nnz},
  };
}

void write_csv(const std::filesystem::path& path,
               std::span<const BenchRecord> records) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << kCsvHeader << '\n';
  for (const BenchRecord& r : records) {
    out << to_csv_row(r) << '\n';
  }
}

}  // namespace sparsead::bench
