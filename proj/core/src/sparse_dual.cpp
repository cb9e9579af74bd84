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


#include "sparsead/sparse_dual.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <new>
#include <vector>

#include "kernels.hpp"
#include "sparsead/chain_rules.hpp"
#include "sparsead/errors.hpp"

namespace sparsead {

namespace detail {

std::size_t union_size(const SparseDual& a, const SparseDual& b) noexcept {
  const auto ia = a.indices();
  const auto ib = b.indices();
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t n = 0;
  while (i < ia.size() && j < ib.size()) {
    if (ia[i] < ib[j]) {
      ++i;
    } else if (ib[j] < ia[i]) {
      ++j;
    } else {
      ++i;
      ++j;
    }
    ++n;
  }
  return n + (ia.size() - i) + (ib.size() - j);
}

void throw_overflow(const SparseDual& a, const SparseDual& b) {
  throw CapacityOverflow(union_size(a, b), capacity());
}

}  // namespace detail

namespace {

constexpr std::size_t kBytesPerSlot = sizeof(double) + sizeof(Index);

}  // namespace

void SparseDual::release() noexcept {
  if (on_heap()) {
    ::operator delete(store_.heap.partials);
    slots_ = kInlineSlots;
  }
}

void SparseDual::reserve_discard(std::size_t count) {
  if (count <= kInlineSlots) {
    release();
  } else if (count > slots_) {
    void* block = ::operator new(count * kBytesPerSlot);
    release();
    store_.heap.partials = static_cast<double*>(block);
    store_.heap.indices =
        reinterpret_cast<Index*>(static_cast<double*>(block) + count);
    slots_ = static_cast<std::uint32_t>(count);
  }
  size_ = 0;
}

namespace {

void validate_entries(std::span<const Index> indices) {
  if (indices.size() > capacity()) {
    throw CapacityOverflow(indices.size(), capacity());
  }
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] < 1) {
      throw InvalidIdentifier(indices[k]);
    }
    if (k > 0 && indices[k - 1] >= indices[k]) {
      throw InvalidEntries("identifiers must be strictly increasing");
    }
  }
}

}  // namespace

SparseDual::SparseDual(double value, std::initializer_list<Entry> entries)
    : value_(value) {
  freeze_config();
  std::vector<Index> ids;
  ids.reserve(entries.size());
  for (const Entry& e : entries) {
    ids.push_back(e.index);
  }
  validate_entries(ids);
  reserve_discard(entries.size());
  Index* idx = index_data();
  double* d = partial_data();
  for (const Entry& e : entries) {
    *idx++ = e.index;
    *d++ = e.partial;
  }
  size_ = static_cast<std::uint32_t>(entries.size());
}

SparseDual SparseDual::from_entries(double value, std::span<const Index> indices,
                                    std::span<const double> partials) {
  if (indices.size() != partials.size()) {
    throw ShapeMismatch("indices and partials differ in length");
  }
  validate_entries(indices);
  SparseDual out(value);
  out.reserve_discard(indices.size());
  std::copy(indices.begin(), indices.end(), out.index_data());
  std::copy(partials.begin(), partials.end(), out.partial_data());
  out.size_ = static_cast<std::uint32_t>(indices.size());
  return out;
}

SparseDual::SparseDual(const SparseDual& other) : value_(other.value_) {
  reserve_discard(other.size_);
  std::copy_n(other.index_data(), other.size_, index_data());
  std::copy_n(other.partial_data(), other.size_, partial_data());
  size_ = other.size_;
}

SparseDual::SparseDual(SparseDual&& other) noexcept
    : value_(other.value_), size_(other.size_), slots_(other.slots_) {
  if (other.on_heap()) {
    store_.heap = other.store_.heap;
    other.slots_ = kInlineSlots;
  } else {
    std::copy_n(other.store_.local.indices, size_, store_.local.indices);
    std::copy_n(other.store_.local.partials, size_, store_.local.partials);
  }
  other.size_ = 0;
}

SparseDual& SparseDual::operator=(const SparseDual& other) {
  if (this != &other) {
    reserve_discard(other.size_);
    std::copy_n(other.index_data(), other.size_, index_data());
    std::copy_n(other.partial_data(), other.size_, partial_data());
    size_ = other.size_;
    value_ = other.value_;
  }
  return *this;
}

SparseDual& SparseDual::operator=(SparseDual&& other) noexcept {
  if (this != &other) {
    release();
    value_ = other.value_;
    size_ = other.size_;
    slots_ = other.slots_;
    if (other.on_heap()) {
      store_.heap = other.store_.heap;
      other.slots_ = kInlineSlots;
    } else {
      std::copy_n(other.store_.local.indices, size_, store_.local.indices);
      std::copy_n(other.store_.local.partials, size_, store_.local.partials);
    }
    other.size_ = 0;
  }
  return *this;
}

double SparseDual::partial(Index id) const noexcept {
  const auto idx = indices();
  const auto it = std::lower_bound(idx.begin(), idx.end(), id);
  if (it == idx.end() || *it != id) {
    return 0.0;
  }
  return partial_data()[it - idx.begin()];
}

SparseDual& SparseDual::operator+=(const SparseDual& rhs) {
  return *this = *this + rhs;
}
SparseDual& SparseDual::operator-=(const SparseDual& rhs) {
  return *this = *this - rhs;
}
SparseDual& SparseDual::operator*=(const SparseDual& rhs) {
  return *this = *this * rhs;
}
SparseDual& SparseDual::operator/=(const SparseDual& rhs) {
  return *this = *this / rhs;
}
SparseDual& SparseDual::operator+=(double rhs) { return *this = *this + rhs; }
SparseDual& SparseDual::operator-=(double rhs) { return *this = *this - rhs; }
SparseDual& SparseDual::operator*=(double rhs) { return *this = *this * rhs; }
SparseDual& SparseDual::operator/=(double rhs) { return *this = *this / rhs; }

using detail::map_partials;
using detail::merge_partials;

SparseDual operator+(const SparseDual& a) { return a; }

SparseDual operator-(const SparseDual& a) {
  return map_partials(a, -a.value(), rules::Negate{});
}

SparseDual operator+(const SparseDual& a, const SparseDual& b) {
  return merge_partials(a, b, a.value() + b.value(), rules::Sum{});
}

SparseDual operator-(const SparseDual& a, const SparseDual& b) {
  return merge_partials(a, b, a.value() - b.value(), rules::Difference{});
}

SparseDual operator*(const SparseDual& a, const SparseDual& b) {
  return merge_partials(a, b, a.value() * b.value(),
                        rules::Product{a.value(), b.value()});
}

SparseDual operator/(const SparseDual& a, const SparseDual& b) {
  return merge_partials(a, b, a.value() / b.value(),
                        rules::Quotient{a.value(), b.value()});
}

SparseDual operator+(const SparseDual& a, double b) {
  return map_partials(a, a.value() + b, rules::Identity{});
}
SparseDual operator+(double a, const SparseDual& b) {
  return map_partials(b, a + b.value(), rules::Identity{});
}
SparseDual operator-(const SparseDual& a, double b) {
  return map_partials(a, a.value() - b, rules::Identity{});
}
SparseDual operator-(double a, const SparseDual& b) {
  return map_partials(b, a - b.value(), rules::Negate{});
}
SparseDual operator*(const SparseDual& a, double b) {
  return map_partials(a, a.value() * b, rules::Scale{b});
}
SparseDual operator*(double a, const SparseDual& b) {
  return map_partials(b, a * b.value(), rules::Scale{a});
}
SparseDual operator/(const SparseDual& a, double b) {
  return map_partials(a, a.value() / b, rules::DivideBy{b});
}
SparseDual operator/(double a, const SparseDual& b) {
  // d(a/b) = -a b' / b^2
  return map_partials(b, a / b.value(),
                      [q = rules::Quotient{a, b.value()}](double p) {
                        return q(0.0, p);
                      });
}

SparseDual pow(const SparseDual& a, int n) {
  return map_partials(a, std::pow(a.value(), n),
                      rules::Scale{rules::powi_multiplier(a.value(), n)});
}

SparseDual pow(const SparseDual& a, double e) {
  return map_partials(a, std::pow(a.value(), e),
                      rules::Scale{rules::powr_multiplier(a.value(), e)});
}

SparseDual pow(const SparseDual& a, const SparseDual& b) {
  return detail::apply_step(a, b, rules::pow_step(a.value(), b.value()));
}

std::partial_ordering compare(const SparseDual& a, const SparseDual& b) noexcept {
  return a.value() <=> b.value();
}

bool identical(const SparseDual& a, const SparseDual& b) noexcept {
  const auto same_bits = [](double x, double y) {
    return std::memcmp(&x, &y, sizeof(double)) == 0;
  };
  if (!same_bits(a.value(), b.value()) || a.nnz() != b.nnz()) {
    return false;
  }
  const auto ia = a.indices();
  const auto ib = b.indices();
  const auto pa = a.partials();
  const auto pb = b.partials();
  for (std::size_t k = 0; k < ia.size(); ++k) {
    if (ia[k] != ib[k] || !same_bits(pa[k], pb[k])) {
      return false;
    }
  }
  return true;
}

}  // namespace sparsead
