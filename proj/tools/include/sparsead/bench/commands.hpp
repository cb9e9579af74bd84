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

// The work behind each CLI subcommand, callable without the CLI. The
// run_* functions compute and check; the cmd_* functions print and map
// the outcome to an exit code (0 success, 1 any failed check).

#include <array>
#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "sparsead/bench/problems.hpp"
#include "sparsead/bench/record.hpp"
#include "sparsead/seed_extract.hpp"

namespace sparsead::bench {

/// f = sin(x^2) at x = (1, 5) with identifiers (1, 2), next to the
/// closed-form derivative 2 x cos(x^2).
struct VerifyReport {
  std::array<double, 2> x{};
  std::array<double, 2> f{};
  std::array<double, 2> df_dx1{};
  std::array<double, 2> df_dx2{};
  std::array<double, 2> analytic_dx1{};
  std::array<double, 2> analytic_dx2{};
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

VerifyReport run_verify();
void print_verify(const VerifyReport& report, std::ostream& out);
int cmd_verify(std::ostream& out);

/// |actual - expected| <= max(rel * |expected|, abs_floor).
bool close_enough(double actual, double expected, double rel = 1e-6,
                  double abs_floor = 1e-8) noexcept;

struct StencilReport {
  BenchRecord record;
  JacobianTriplets triplets;
  FillinReport fill;
  std::size_t fd_checked = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Seeds n independents (all at 1.0), evaluates the stencil with the
/// current capacity, and checks the triplets, the fill-in (3, 1, 1) and up
/// to `fd_samples` entries against finite differences.
StencilReport run_stencil(std::size_t n, std::size_t fd_samples = 100);

/// Sets the capacity, runs the stencil, writes `row col value` lines to
/// `triplets_out` and a summary to `out`.
int cmd_stencil(std::size_t n, std::size_t capacity, std::ostream& triplets_out,
                std::ostream& out);

struct NetworkReport {
  BenchRecord record;
  FillinReport fill;
  std::size_t fd_checked = 0;
  double fd_max_rel_error = 0.0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Evaluates the synthetic network with the current capacity; checks the
/// fill-in equals the species count and samples partials against finite
/// differences.
NetworkReport run_network(NetworkShape shape, std::size_t fd_samples = 100);

/// capacity 0 means "species".
int cmd_network(std::size_t shells, std::size_t species, std::size_t capacity,
                std::ostream& out);

struct BenchOptions {
  std::size_t repeats = 5;
  std::chrono::nanoseconds min_sample = std::chrono::milliseconds(20);
};

/// Sparse (current capacity) against dense full-gradient evaluation of the
/// stencil Jacobian at n, plus the sparse run at 2n for scaling.
struct BenchReport {
  BenchRecord sparse;
  BenchRecord dense;
  BenchRecord sparse_doubled;
  /// dense time / sparse time.
  double speedup = 0.0;
  /// sparse bytes / dense bytes.
  double memory_ratio = 0.0;
  /// sparse time at 2n / sparse time at n.
  double scaling_ratio = 0.0;

  std::vector<BenchRecord> records() const { return {sparse, dense, sparse_doubled}; }
  nlohmann::json to_json() const;
};

BenchReport run_bench(std::size_t n, BenchOptions options = {});

/// Times one sparse stencil Jacobian pass at n: best of `repeats`.
BenchRecord time_sparse_stencil(std::size_t n, BenchOptions options = {});
BenchRecord time_dense_stencil(std::size_t n, BenchOptions options = {});

int cmd_bench(std::size_t n, const std::optional<std::filesystem::path>& csv,
              const std::optional<std::filesystem::path>& json,
              std::ostream& out);

}  // namespace sparsead::bench
