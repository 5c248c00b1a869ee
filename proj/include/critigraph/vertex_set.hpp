/*
Copyright 2026 The critigraph Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "critigraph/errors.hpp"

namespace critigraph {

using Vertex = int;

/// Largest supported order: one adjacency row per machine word.
inline constexpr int kMaxOrder = 64;

namespace detail {

constexpr std::uint64_t bit(Vertex v) noexcept { return std::uint64_t{1} << v; }

/// Mask with the low `n` bits set, valid for 0 <= n <= 64.
constexpr std::uint64_t low_mask(int n) noexcept {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

inline void check_id(Vertex v, int limit) {
    if (v < 0 || v >= limit)
        throw BoundsError("vertex id " + std::to_string(v) + " out of range [0, " +
                          std::to_string(limit) + ")");
}

} // namespace detail

/// A set of vertex ids stored as a single 64-bit word.
class VertexSet {
  public:
    class iterator {
      public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex *;
        using reference = Vertex;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}

        Vertex operator*() const { return std::countr_zero(rest_); }
        iterator &operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator &) const = default;

      private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    VertexSet(std::initializer_list<Vertex> members) {
        for (Vertex v : members)
            insert(v);
    }

    /// {0, ..., n-1}
    static VertexSet first(int n) {
        if (n < 0 || n > kMaxOrder)
            throw CapacityError("vertex set size " + std::to_string(n) + " exceeds 64");
        return VertexSet(detail::low_mask(n));
    }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr int size() const noexcept { return std::popcount(bits_); }

    bool contains(Vertex v) const noexcept {
        return v >= 0 && v < kMaxOrder && (bits_ & detail::bit(v)) != 0;
    }

    VertexSet &insert(Vertex v) {
        detail::check_id(v, kMaxOrder);
        bits_ |= detail::bit(v);
        return *this;
    }

    VertexSet &erase(Vertex v) {
        detail::check_id(v, kMaxOrder);
        bits_ &= ~detail::bit(v);
        return *this;
    }

    /// Smallest member; the set must be nonempty.
    Vertex min() const {
        if (bits_ == 0)
            throw UsageError("min() of an empty vertex set");
        return std::countr_zero(bits_);
    }

    /// True when every member is below `order`.
    constexpr bool within(int order) const noexcept { return (bits_ & ~detail::low_mask(order)) == 0; }

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;

  private:
    std::uint64_t bits_ = 0;
};

} // namespace critigraph
