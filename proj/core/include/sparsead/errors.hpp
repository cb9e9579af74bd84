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
#include <stdexcept>
#include <string>

namespace sparsead {

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A result would need more derivative slots than the configured capacity.
class CapacityOverflow : public Error {
 public:
  CapacityOverflow(std::size_t required, std::size_t capacity)
      : Error("derivative capacity exceeded: need at least " +
              std::to_string(required) + " slots, capacity is " +
              std::to_string(capacity)),
        required_(required),
        capacity_(capacity) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t capacity() const noexcept { return capacity_; }

 private:
  std::size_t required_;
  std::size_t capacity_;
};

/// Independent-variable identifiers are 1-based.
class InvalidIdentifier : public Error {
 public:
  explicit InvalidIdentifier(long long id)
      : Error("invalid independent identifier " + std::to_string(id) +
              " (identifiers start at 1)") {}
};

/// Explicit entries that are unsorted or repeat an identifier.
class InvalidEntries : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class EmptySequence : public Error {
 public:
  using Error::Error;
};

/// Configuration is read-only once the first dual number exists.
class ConfigFrozen : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

}  // namespace sparsead
