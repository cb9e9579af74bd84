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


#include "sparsead/bench/problems.hpp"

namespace sparsead::bench {

std::vector<double> network_initial_state(NetworkShape shape) {
  std::vector<double> y(shape.size());
  for (std::size_t k = 0; k < y.size(); ++k) {
    y[k] = 0.1 + 0.05 * static_cast<double>((7 * k + 3) % 11);
  }
  return y;
}

}  // namespace sparsead::bench
