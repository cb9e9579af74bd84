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


#include "sparsead/bench/commands.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sparsead/config.hpp"
#include "sparsead/errors.hpp"
#include "sparsead/functions.hpp"
#include "sparsead/oracle/dense_dual.hpp"
#include "sparsead/oracle/finite_difference.hpp"
#include "sparsead/sparse_dual.hpp"

namespace sparsead::bench {

namespace {

using Clock = std::chrono::steady_clock;

std::string format_es(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%25.15E", v);
  return buf;
}

std::string line(const char* label, double a, double b) {
  return std::string(label) + format_es(a) + format_es(b);
}

// Agreement to 15 significant digits.
bool same_to_15_digits(double a, double b) noexcept {
  return std::fabs(a - b) <= 5e-15 * std::fabs(b);
}

std::vector<double> plain_stencil(std::span<const double> x) {
  return stencil<double>(x, 0.0);
}

std::int64_t elapsed_ns(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                             start)
      .count();
}

// Best per-pass time over `repeats` samples, each long enough to be timed.
template <class Pass>
std::int64_t best_time_ns(Pass&& pass, const BenchOptions& options) {
  auto start = Clock::now();
  pass();
  const std::int64_t first = std::max<std::int64_t>(1, elapsed_ns(start));
  const std::int64_t passes = std::clamp<std::int64_t>(
      options.min_sample.count() / first, 1, 1'000'000);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::size_t r = 0; r < std::max<std::size_t>(1, options.repeats); ++r) {
    start = Clock::now();
    for (std::int64_t p = 0; p < passes; ++p) {
      pass();
    }
    best = std::min(best, elapsed_ns(start));
  }
  return std::max<std::int64_t>(1, best / passes);
}

std::vector<SparseDual> seeded(std::size_t n, double value) {
  std::vector<SparseDual> x(n);
  const std::vector<double> values(n, value);
  seed_independent_range(1, x, values);
  return x;
}

std::size_t sparse_stencil_pass(std::size_t n) {
  const std::vector<SparseDual> x = seeded(n, 1.0);
  const std::vector<SparseDual> f =
      stencil<SparseDual>(x, SparseDual(0.0));
  const JacobianTriplets jac = jacobian_triplets(f, jacobian_size(f));
  return static_cast<std::size_t>(jac.nz);
}

std::size_t dense_stencil_pass(std::size_t n) {
  std::vector<oracle::DenseDual> x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    x.push_back(oracle::DenseDual::variable(static_cast<Index>(i + 1), 1.0, n));
  }
  const std::vector<oracle::DenseDual> f =
      stencil<oracle::DenseDual>(x, oracle::DenseDual(0.0, n));
  std::size_t nnz = 0;
  for (const auto& row : f) {
    for (const double g : row.gradient()) {
      nnz += g != 0.0 ? 1 : 0;
    }
  }
  return nnz;
}

}  // namespace

bool close_enough(double actual, double expected, double rel,
                  double abs_floor) noexcept {
  return std::fabs(actual - expected) <=
         std::max(rel * std::fabs(expected), abs_floor);
}

// ---------------------------------------------------------------- verify

VerifyReport run_verify() {
  VerifyReport report;
  report.x = {1.0, 5.0};
  std::array<SparseDual, 2> x;
  const Index ids[] = {1, 2};
  seed_independent(ids, x, report.x);

  std::array<SparseDual, 2> f;
  for (std::size_t i = 0; i < 2; ++i) {
    f[i] = sin(pow(x[i], 2));
    report.f[i] = value(f[i]);
    report.df_dx1[i] = derivative(f[i], 1);
    report.df_dx2[i] = derivative(f[i], 2);
  }
  const auto fp = [](double xp) { return 2.0 * xp * std::cos(xp * xp); };
  report.analytic_dx1 = {fp(report.x[0]), 0.0};
  report.analytic_dx2 = {0.0, fp(report.x[1])};

  for (std::size_t i = 0; i < 2; ++i) {
    if (!same_to_15_digits(report.f[i], std::sin(report.x[i] * report.x[i]))) {
      report.failures.push_back("f(" + std::to_string(i + 1) +
                                ") differs from sin(x^2)");
    }
  }
  if (!same_to_15_digits(report.df_dx1[0], report.analytic_dx1[0])) {
    report.failures.push_back("df1/dx1 differs from 2 x cos(x^2)");
  }
  if (!same_to_15_digits(report.df_dx2[1], report.analytic_dx2[1])) {
    report.failures.push_back("df2/dx2 differs from 2 x cos(x^2)");
  }
  if (report.df_dx1[1] != 0.0 || report.df_dx2[0] != 0.0) {
    report.failures.push_back("cross derivatives are not exactly zero");
  }
  return report;
}

void print_verify(const VerifyReport& r, std::ostream& out) {
  out << line("x array =", r.x[0], r.x[1]) << '\n'
      << line("f array =", r.f[0], r.f[1]) << '\n'
      << " ***sparsead:\n"
      << line("df/dx1  =", r.df_dx1[0], r.df_dx1[1]) << '\n'
      << line("df/dx2  =", r.df_dx2[0], r.df_dx2[1]) << '\n'
      << " ***Analytic:\n"
      << line("df/dx1  =", r.analytic_dx1[0], r.analytic_dx1[1]) << '\n'
      << line("df/dx2  =", r.analytic_dx2[0], r.analytic_dx2[1]) << '\n';
  for (const std::string& failure : r.failures) {
    out << "FAIL: " << failure << '\n';
  }
}

int cmd_verify(std::ostream& out) {
  const VerifyReport report = run_verify();
  print_verify(report, out);
  return report.ok() ? 0 : 1;
}

// --------------------------------------------------------------- stencil

StencilReport run_stencil(std::size_t n, std::size_t fd_samples) {
  if (n < 3) {
    throw std::invalid_argument("stencil needs n >= 3");
  }
  StencilReport report;
  std::vector<SparseDual> f;
  const auto start = Clock::now();
  try {
    const std::vector<SparseDual> x = seeded(n, 1.0);
    f = stencil<SparseDual>(x, SparseDual(0.0));
    report.triplets = jacobian_triplets(f, jacobian_size(f));
  } catch (const CapacityOverflow& e) {
    report.failures.push_back(e.what());
    return report;
  }
  const std::int64_t elapsed = std::max<std::int64_t>(1, elapsed_ns(start));
  report.fill = fillin(f);

  const JacobianTriplets& jac = report.triplets;
  report.record = {"stencil",
                   n,
                   capacity(),
                   elapsed,
                   peak_bytes_estimate(2 * n, capacity()),
                   static_cast<std::size_t>(std::max<std::int64_t>(0, jac.nz))};

  const auto expected_nz = static_cast<std::int64_t>(3 * (n - 2));
  if (jac.nz != expected_nz) {
    report.failures.push_back("expected " + std::to_string(expected_nz) +
                              " Jacobian entries, got " +
                              std::to_string(jac.nz));
    return report;
  }
  constexpr double kRow[] = {1.0, -2.0, 1.0};
  for (std::int64_t k = 0; k < jac.nz; ++k) {
    const auto entry = static_cast<std::size_t>(k);
    const auto row = static_cast<Index>(2 + k / 3);
    const auto col = static_cast<Index>(row - 1 + k % 3);
    if (jac.rows[entry] != row || jac.cols[entry] != col ||
        jac.vals[entry] != kRow[k % 3]) {
      report.failures.push_back("unexpected triplet at position " +
                                std::to_string(k + 1));
      break;
    }
  }
  if (report.fill.ldsize_opt != 3 || report.fill.ml != 1 || report.fill.mu != 1) {
    report.failures.push_back(
        "fill-in (" + std::to_string(report.fill.ldsize_opt) + ", " +
        std::to_string(report.fill.ml) + ", " + std::to_string(report.fill.mu) +
        ") != (3, 1, 1)");
  }

  // Finite-difference spot checks, grouped by column.
  const std::vector<double> point(n, 1.0);
  std::mt19937_64 rng(20070611);
  std::uniform_int_distribution<std::size_t> pick(0, jac.vals.size() - 1);
  std::map<Index, std::vector<std::size_t>> by_column;
  for (std::size_t s = 0; s < std::min(fd_samples, jac.vals.size()); ++s) {
    const std::size_t k = fd_samples >= jac.vals.size() ? s : pick(rng);
    by_column[jac.cols[k]].push_back(k);
  }
  for (const auto& [col, entries] : by_column) {
    const std::vector<double> column = oracle::fd_column(
        plain_stencil, point, static_cast<std::size_t>(col - 1));
    for (const std::size_t k : entries) {
      const double fd = column[static_cast<std::size_t>(jac.rows[k] - 1)];
      if (!close_enough(jac.vals[k], fd, 1e-6, 1e-9)) {
        report.failures.push_back("entry (" + std::to_string(jac.rows[k]) +
                                  ", " + std::to_string(col) +
                                  ") disagrees with finite differences");
      }
      ++report.fd_checked;
    }
  }
  return report;
}

int cmd_stencil(std::size_t n, std::size_t cap, std::ostream& triplets_out,
                std::ostream& out) {
  set_capacity(cap);
  const StencilReport report = run_stencil(n);
  const JacobianTriplets& jac = report.triplets;
  if (jac.nz > 0) {
    char buf[96];
    for (std::size_t k = 0; k < static_cast<std::size_t>(jac.nz); ++k) {
      std::snprintf(buf, sizeof buf, "%d %d %.17g\n", jac.rows[k], jac.cols[k],
                    jac.vals[k]);
      triplets_out << buf;
    }
  }
  out << "# nz " << jac.nz << '\n'
      << "# fillin ldsize_opt " << report.fill.ldsize_opt << " ml "
      << report.fill.ml << " mu " << report.fill.mu << '\n'
      << "# fd_checked " << report.fd_checked << '\n'
      << "# " << kCsvHeader << '\n'
      << "# " << to_csv_row(report.record) << '\n';
  for (const std::string& failure : report.failures) {
    out << "FAIL: " << failure << '\n';
  }
  return report.ok() ? 0 : 1;
}

// --------------------------------------------------------------- network

NetworkReport run_network(NetworkShape shape, std::size_t fd_samples) {
  if (shape.shells < 1 || shape.species < 1) {
    throw std::invalid_argument("network needs shells >= 1 and species >= 1");
  }
  NetworkReport report;
  const std::size_t n = shape.size();
  const std::vector<double> y0 = network_initial_state(shape);

  std::vector<SparseDual> rates;
  const auto start = Clock::now();
  try {
    std::vector<SparseDual> y(n);
    seed_independent_range(1, y, y0);
    rates = network_rates<SparseDual>(y, shape);
  } catch (const CapacityOverflow& e) {
    report.failures.push_back(e.what());
    return report;
  }
  const std::int64_t elapsed = std::max<std::int64_t>(1, elapsed_ns(start));
  report.fill = fillin(rates);
  report.record = {"network",           n,
                   capacity(),          elapsed,
                   peak_bytes_estimate(2 * n, capacity()),
                   jacobian_size(rates)};

  if (report.fill.ldsize_opt != shape.species) {
    report.failures.push_back("fill-in " + std::to_string(report.fill.ldsize_opt) +
                              " != species " + std::to_string(shape.species));
  }
  if (report.record.jacobian_nnz != n * shape.species) {
    report.failures.push_back("Jacobian has " +
                              std::to_string(report.record.jacobian_nnz) +
                              " entries, expected " +
                              std::to_string(n * shape.species));
  }

  const oracle::VectorFunction plain = [shape](std::span<const double> y) {
    return network_rates<double>(y, shape);
  };
  std::mt19937_64 rng(140);
  std::uniform_int_distribution<std::size_t> pick_row(0, n - 1);
  std::uniform_int_distribution<std::size_t> pick_entry(0, shape.species - 1);
  std::map<Index, std::vector<std::size_t>> by_column;  // column -> rows
  for (std::size_t s = 0; s < fd_samples; ++s) {
    const std::size_t row = pick_row(rng);
    const auto cols = rates[row].indices();
    if (cols.empty()) {
      continue;
    }
    by_column[cols[pick_entry(rng) % cols.size()]].push_back(row);
  }
  for (const auto& [col, rows] : by_column) {
    const std::vector<double> column =
        oracle::fd_column(plain, y0, static_cast<std::size_t>(col - 1));
    for (const std::size_t row : rows) {
      const double ad = rates[row].partial(col);
      const double fd = column[row];
      const double rel = std::fabs(ad - fd) / std::max(std::fabs(fd), 1e-300);
      report.fd_max_rel_error = std::max(report.fd_max_rel_error, rel);
      if (!close_enough(ad, fd)) {
        report.failures.push_back("d rate " + std::to_string(row + 1) +
                                  " / d y" + std::to_string(col) +
                                  " disagrees with finite differences");
      }
      ++report.fd_checked;
    }
  }
  return report;
}

int cmd_network(std::size_t shells, std::size_t species, std::size_t cap,
                std::ostream& out) {
  set_capacity(cap == 0 ? species : cap);
  const NetworkReport report = run_network({shells, species});
  out << kCsvHeader << '\n'
      << to_csv_row(report.record) << '\n'
      << "# independents " << report.record.n_independent << '\n'
      << "# fillin ldsize_opt " << report.fill.ldsize_opt << " ml "
      << report.fill.ml << " mu " << report.fill.mu << '\n'
      << "# fd_checked " << report.fd_checked << " max_rel_error "
      << report.fd_max_rel_error << '\n';
  for (const std::string& failure : report.failures) {
    out << "FAIL: " << failure << '\n';
  }
  return report.ok() ? 0 : 1;
}

// ----------------------------------------------------------------- bench

BenchRecord time_sparse_stencil(std::size_t n, BenchOptions options) {
  std::size_t nnz = 0;
  const std::int64_t t =
      best_time_ns([&] { nnz = sparse_stencil_pass(n); }, options);
  return {"stencil_sparse", n, capacity(), t,
          peak_bytes_estimate(2 * n, capacity()), nnz};
}

BenchRecord time_dense_stencil(std::size_t n, BenchOptions options) {
  std::size_t nnz = 0;
  const std::int64_t t =
      best_time_ns([&] { nnz = dense_stencil_pass(n); }, options);
  return {"stencil_dense", n, n, t, peak_bytes_estimate(2 * n, n), nnz};
}

BenchReport run_bench(std::size_t n, BenchOptions options) {
  if (n < 100) {
    throw std::invalid_argument("bench needs n >= 100");
  }
  BenchReport report;
  report.sparse = time_sparse_stencil(n, options);
  report.dense = time_dense_stencil(n, options);
  report.sparse_doubled = time_sparse_stencil(2 * n, options);
  report.sparse_doubled.case_name = "stencil_sparse_2n";
  report.speedup = static_cast<double>(report.dense.wall_time_ns) /
                   static_cast<double>(report.sparse.wall_time_ns);
  report.memory_ratio =
      static_cast<double>(report.sparse.peak_bytes_estimate) /
      static_cast<double>(report.dense.peak_bytes_estimate);
  report.scaling_ratio = static_cast<double>(report.sparse_doubled.wall_time_ns) /
                         static_cast<double>(report.sparse.wall_time_ns);
  return report;
}

nlohmann::json BenchReport::to_json() const {
  nlohmann::json records = nlohmann::json::array();
  for (const BenchRecord& r : this->records()) {
    records.push_back(bench::to_json(r));
  }
  return {{"records", records},
          {"speedup", speedup},
          {"memory_ratio", memory_ratio},
          {"scaling_ratio", scaling_ratio}};
}

int cmd_bench(std::size_t n, const std::optional<std::filesystem::path>& csv,
              const std::optional<std::filesystem::path>& json,
              std::ostream& out) {
  set_capacity(3);
  const BenchReport report = run_bench(n);
  const std::vector<BenchRecord> records = report.records();
  out << kCsvHeader << '\n';
  for (const BenchRecord& r : records) {
    out << to_csv_row(r) << '\n';
  }
  out << "# speedup (dense/sparse) " << report.speedup << '\n'
      << "# memory ratio (sparse/dense) " << report.memory_ratio << '\n'
      << "# scaling (sparse 2n / n) " << report.scaling_ratio << '\n';
  if (csv) {
    write_csv(*csv, records);
  }
  if (json) {
    std::ofstream file(*json);
    if (!file) {
      throw std::runtime_error("cannot open " + json->string() + " for writing");
    }
    file << report.to_json().dump(2) << '\n';
  }
  return 0;
}

}  // namespace sparsead::bench
