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


// Command-line front end: verify, stencil, network and bench.

#include <cstddef>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sparsead/bench/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Sparse forward-mode AD: verification and benchmarks"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Differentiate sin(x^2) and compare with the closed form");

  auto* stencil = app.add_subcommand("stencil", "Jacobian of the second-difference stencil");
  std::size_t stencil_n = 10;
  std::size_t stencil_capacity = 3;
  std::string triplets_path;
  stencil->add_option("--n", stencil_n, "Number of independents")->check(CLI::Range(3, 100'000'000));
  stencil->add_option("--capacity", stencil_capacity, "Derivative capacity")->check(CLI::PositiveNumber);
  stencil->add_option("--triplets", triplets_path, "Write 'row col value' lines here instead of stdout");

  auto* network = app.add_subcommand("network", "Synthetic block-diagonal reaction network");
  std::size_t shells = 10;
  std::size_t species = 14;
  std::size_t network_capacity = 0;
  network->add_option("--shells", shells, "Number of shells")->check(CLI::PositiveNumber);
  network->add_option("--species", species, "Species per shell")->check(CLI::PositiveNumber);
  network->add_option("--capacity", network_capacity, "Derivative capacity (default: species)");

  auto* bench = app.add_subcommand("bench", "Sparse vs dense stencil Jacobian timing");
  std::size_t bench_n = 2000;
  std::string csv_path;
  std::string json_path;
  bench->add_option("--n", bench_n, "Number of independents")->check(CLI::Range(100, 100'000'000));
  bench->add_option("--csv", csv_path, "Write records as CSV");
  bench->add_option("--json", json_path, "Write records as JSON");

  CLI11_PARSE(app, argc, argv);

  namespace sb = sparsead::bench;
  try {
    if (*verify) {
      return sb::cmd_verify(std::cout);
    }
    if (*stencil) {
      if (triplets_path.empty()) {
        return sb::cmd_stencil(stencil_n, stencil_capacity, std::cout, std::cout);
      }
      std::ofstream dump(triplets_path);
      if (!dump) {
        std::cerr << "cannot open " << triplets_path << '\n';
        return 1;
      }
      return sb::cmd_stencil(stencil_n, stencil_capacity, dump, std::cout);
    }
    if (*network) {
      return sb::cmd_network(shells, species, network_capacity, std::cout);
    }
    if (*bench) {
      const auto opt_path = [](const std::string& p) {
        return p.empty() ? std::nullopt
                         : std::optional<std::filesystem::path>(p);
      };
      return sb::cmd_bench(bench_n, opt_path(csv_path), opt_path(json_path),
                           std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
