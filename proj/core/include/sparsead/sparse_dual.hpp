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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

#include "sparsead/config.hpp"

namespace sparsead {

/// Identifier of an independent variable. Identifiers are 1-based.
using Index = std::int32_t;

/// One stored partial derivative: d(self)/d(x[index]) = partial.
struct Entry {
  Index index;
  double partial;
};

class SparseDual;

namespace detail {
struct DualAccess;
}

/// A value together with an index-compressed list of first partial
/// derivatives.
///
/// Entries are kept sorted by identifier with no duplicates. An identifier
/// that is not stored has a partial of exactly zero. Entries whose partial
/// becomes 0.0 through cancellation are kept, so the stored pattern is the
/// structural dependency set of the value.
///
/// At most `sparsead::capacity()` entries may be stored; operations whose
/// result would need more throw CapacityOverflow. Up to kInlineSlots
/// entries live inside the object itself, larger sets go to the heap.
class SparseDual {
 public:
  static constexpr std::size_t kInlineSlots = 4;

  /// The constant 0.0.
  SparseDual() noexcept { freeze_config(); }

  /// A constant: no dependencies on any independent variable.
  SparseDual(double value) noexcept : value_(value) { freeze_config(); }  // NOLINT

  /// A value with explicit entries. Entries must have identifiers >= 1 in
  /// strictly increasing order and fit into the configured capacity.
  SparseDual(double value, std::initializer_list<Entry> entries);

  static SparseDual from_entries(double value, std::span<const Index> indices,
                                 std::span<const double> partials);

  SparseDual(const SparseDual& other);
  SparseDual(SparseDual&& other) noexcept;
  SparseDual& operator=(const SparseDual& other);
  SparseDual& operator=(SparseDual&& other) noexcept;
  ~SparseDual() { release(); }

  double value() const noexcept { return value_; }
  std::size_t nnz() const noexcept { return size_; }
  bool is_constant() const noexcept { return size_ == 0; }

  std::span<const Index> indices() const noexcept {
    return {index_data(), size_};
  }
  std::span<const double> partials() const noexcept {
    return {partial_data(), size_};
  }

  /// Stored partial for `id`, 0.0 when `id` is not stored. No validation.
  double partial(Index id) const noexcept;

  SparseDual& operator+=(const SparseDual& rhs);
  SparseDual& operator-=(const SparseDual& rhs);
  SparseDual& operator*=(const SparseDual& rhs);
  SparseDual& operator/=(const SparseDual& rhs);
  SparseDual& operator+=(double rhs);
  SparseDual& operator-=(double rhs);
  SparseDual& operator*=(double rhs);
  SparseDual& operator/=(double rhs);

 private:
  friend struct detail::DualAccess;

  struct InlineSlots {
    double partials[kInlineSlots];
    Index indices[kInlineSlots];
  };
  struct HeapSlots {
    double* partials;
    Index* indices;
  };
  union Slots {
    InlineSlots local;
    HeapSlots heap;
  };

  bool on_heap() const noexcept { return slots_ > kInlineSlots; }
  double* partial_data() noexcept {
    return on_heap() ? store_.heap.partials : store_.local.partials;
  }
  const double* partial_data() const noexcept {
    return on_heap() ? store_.heap.partials : store_.local.partials;
  }
  Index* index_data() noexcept {
    return on_heap() ? store_.heap.indices : store_.local.indices;
  }
  const Index* index_data() const noexcept {
    return on_heap() ? store_.heap.indices : store_.local.indices;
  }

  // Makes room for `count` entries; existing entries are discarded.
  void reserve_discard(std::size_t count);
  void release() noexcept;

  double value_ = 0.0;
  std::uint32_t size_ = 0;
  std::uint32_t slots_ = kInlineSlots;
  Slots store_;
};

namespace detail {

/// Write access for the kernels that build results in place.
struct DualAccess {
  static void prepare(SparseDual& d, double value, std::size_t count) {
    d.reserve_discard(count);
    d.value_ = value;
    d.size_ = 0;
  }
  static Index* indices(SparseDual& d) noexcept { return d.index_data(); }
  static double* partials(SparseDual& d) noexcept { return d.partial_data(); }
  static void set_size(SparseDual& d, std::size_t n) noexcept {
    d.size_ = static_cast<std::uint32_t>(n);
  }
  static void set_value(SparseDual& d, double v) noexcept { d.value_ = v; }
};

}  // namespace detail

SparseDual operator+(const SparseDual& a);
SparseDual operator-(const SparseDual& a);

SparseDual operator+(const SparseDual& a, const SparseDual& b);
SparseDual operator-(const SparseDual& a, const SparseDual& b);
SparseDual operator*(const SparseDual& a, const SparseDual& b);
SparseDual operator/(const SparseDual& a, const SparseDual& b);

SparseDual operator+(const SparseDual& a, double b);
SparseDual operator+(double a, const SparseDual& b);
SparseDual operator-(const SparseDual& a, double b);
SparseDual operator-(double a, const SparseDual& b);
SparseDual operator*(const SparseDual& a, double b);
SparseDual operator*(double a, const SparseDual& b);
SparseDual operator/(const SparseDual& a, double b);
SparseDual operator/(double a, const SparseDual& b);

/// a^n. The derivative multiplier is n * a^(n-1), which is NaN at 0^0.
SparseDual pow(const SparseDual& a, int n);
/// a^e for a real exponent.
SparseDual pow(const SparseDual& a, double e);
/// a^b with both arguments active. Partials are NaN for a <= 0.
SparseDual pow(const SparseDual& a, const SparseDual& b);

/// Orders by value only; derivatives are ignored.
std::partial_ordering compare(const SparseDual& a, const SparseDual& b) noexcept;

inline std::partial_ordering operator<=>(const SparseDual& a,
                                         const SparseDual& b) noexcept {
  return a.value() <=> b.value();
}
inline bool operator==(const SparseDual& a, const SparseDual& b) noexcept {
  return a.value() == b.value();
}
inline std::partial_ordering operator<=>(const SparseDual& a, double b) noexcept {
  return a.value() <=> b;
}
inline bool operator==(const SparseDual& a, double b) noexcept {
  return a.value() == b;
}

/// Structural equality: same value, same identifiers, same partials, all
/// compared bitwise.
bool identical(const SparseDual& a, const SparseDual& b) noexcept;

}  // namespace sparsead
