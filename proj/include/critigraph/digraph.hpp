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

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "critigraph/errors.hpp"
#include "critigraph/vertex_set.hpp"

namespace critigraph {

/// Marks a vertex that has no image under a relabeling.
inline constexpr Vertex kRemoved = -1;

/// Loop-free simple digraph on at most 64 vertices. Row v of the adjacency
/// holds the out-neighbourhood of v; bits at or above the order are zero.
class Digraph {
  public:
    using Row = std::uint64_t;
    using Rows = std::array<Row, kMaxOrder>;

    Digraph() = default;

    explicit Digraph(int order) : order_(order) {
        if (order < 0 || order > kMaxOrder)
            throw CapacityError("digraph order " + std::to_string(order) + " outside [0, 64]");
    }

    /// Builds a digraph from raw out-rows, validating the loop and range invariants.
    static Digraph from_rows(int order, std::span<const Row> rows) {
        Digraph d(order);
        if (static_cast<int>(rows.size()) != order)
            throw UsageError("expected " + std::to_string(order) + " rows, got " +
                             std::to_string(rows.size()));
        for (int v = 0; v < order; ++v) {
            if (rows[v] & ~detail::low_mask(order))
                throw BoundsError("row " + std::to_string(v) + " has bits beyond the order");
            if (rows[v] & detail::bit(v))
                throw LoopError("self-loop at vertex " + std::to_string(v));
            d.rows_[v] = rows[v];
        }
        return d;
    }

    int order() const noexcept { return order_; }
    VertexSet vertices() const noexcept { return VertexSet(detail::low_mask(order_)); }

    bool has_edge(Vertex u, Vertex v) const {
        check(u);
        check(v);
        return (rows_[u] & detail::bit(v)) != 0;
    }

    /// Inserts (u,v); a no-op when the edge already exists.
    Digraph &add_edge(Vertex u, Vertex v) {
        check(u);
        check(v);
        if (u == v)
            throw LoopError("self-loop at vertex " + std::to_string(u));
        rows_[u] |= detail::bit(v);
        return *this;
    }

    Digraph with_edge(Vertex u, Vertex v) const {
        Digraph copy = *this;
        copy.add_edge(u, v);
        return copy;
    }

    /// E+(v)
    VertexSet out_set(Vertex v) const {
        check(v);
        return VertexSet(rows_[v]);
    }

    /// E-(v)
    VertexSet in_set(Vertex v) const {
        check(v);
        Row in = 0;
        for (int u = 0; u < order_; ++u)
            in |= ((rows_[u] >> v) & 1U) << u;
        return VertexSet(in);
    }

    int out_degree(Vertex v) const { return out_set(v).size(); }
    int in_degree(Vertex v) const { return in_set(v).size(); }

    /// |E+(v)| + |E-(v)|; a double-arc partner counts twice.
    int degree(Vertex v) const { return out_degree(v) + in_degree(v); }

    int edge_count() const noexcept {
        int total = 0;
        for (int v = 0; v < order_; ++v)
            total += std::popcount(rows_[v]);
        return total;
    }

    std::span<const Row> rows() const noexcept { return {rows_.data(), static_cast<std::size_t>(order_)}; }

    /// In-rows: bit u of row v is set iff (u,v) is an edge.
    Rows transpose_rows() const noexcept {
        Rows in{};
        for (int u = 0; u < order_; ++u)
            for (Row r = rows_[u]; r; r &= r - 1)
                in[std::countr_zero(r)] |= detail::bit(u);
        return in;
    }

    /// Edges sorted by (u, v).
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(static_cast<std::size_t>(edge_count()));
        for (int u = 0; u < order_; ++u)
            for (Vertex v : VertexSet(rows_[u]))
                out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Digraph &, const Digraph &) = default;

  private:
    void check(Vertex v) const { detail::check_id(v, order_); }

    int order_ = 0;
    Rows rows_{};
};

/// Graph produced by deleting vertices, with the old-id -> new-id relabeling.
/// Removed vertices map to kRemoved.
struct Deletion {
    Digraph graph;
    std::vector<Vertex> old_to_new;
};

/// D/A: `merged_vertex` is the image of every member of A.
struct ContractionResult {
    Digraph graph;
    Vertex merged_vertex = 0;
    std::vector<Vertex> old_to_new;
};

inline Digraph new_digraph(int n) { return Digraph(n); }

inline Digraph add_edge(const Digraph &d, Vertex u, Vertex v) { return d.with_edge(u, v); }

namespace detail {

/// Vertices reachable from `start` inside `alive`, following `rows`.
inline std::uint64_t closure(std::span<const std::uint64_t> rows, std::uint64_t alive, Vertex start) noexcept {
    std::uint64_t seen = bit(start);
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1)
            next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
        next &= alive & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

/// Strong connectivity of the subgraph induced by `alive`. At most one live
/// vertex counts as strongly connected.
inline bool strongly_connected_within(std::span<const std::uint64_t> out, std::span<const std::uint64_t> in,
                                      std::uint64_t alive) noexcept {
    if (std::popcount(alive) <= 1)
        return true;
    const Vertex start = std::countr_zero(alive);
    return closure(out, alive, start) == alive && closure(in, alive, start) == alive;
}

/// Rank of each member of `keep` in ascending order; kRemoved elsewhere.
inline std::vector<Vertex> compaction(int order, std::uint64_t keep) {
    std::vector<Vertex> map(static_cast<std::size_t>(order), kRemoved);
    Vertex next = 0;
    for (Vertex v = 0; v < order; ++v)
        if (keep & bit(v))
            map[static_cast<std::size_t>(v)] = next++;
    return map;
}

/// Rebuilds `d` under `map`, dropping edges whose endpoints are unmapped or collapse together.
inline Digraph relabel(const Digraph &d, const std::vector<Vertex> &map, int new_order) {
    Digraph out(new_order);
    for (auto [u, v] : d.edges()) {
        const Vertex a = map[static_cast<std::size_t>(u)];
        const Vertex b = map[static_cast<std::size_t>(v)];
        if (a != kRemoved && b != kRemoved && a != b)
            out.add_edge(a, b);
    }
    return out;
}

inline void check_subset(const Digraph &d, VertexSet a) {
    if (!a.within(d.order()))
        throw BoundsError("vertex set has members outside [0, " + std::to_string(d.order()) + ")");
}

} // namespace detail

/// D - A, survivors compacted in ascending order.
inline Deletion remove_vertices(const Digraph &d, VertexSet a) {
    detail::check_subset(d, a);
    auto map = detail::compaction(d.order(), d.vertices().bits() & ~a.bits());
    const int new_order = d.order() - a.size();
    Digraph g = detail::relabel(d, map, new_order);
    return {std::move(g), std::move(map)};
}

/// D/A. The merged vertex takes the compacted slot of min(A); its out- and
/// in-neighbourhoods are the unions over A with A itself removed.
inline ContractionResult contract(const Digraph &d, VertexSet a) {
    if (a.empty())
        throw UsageError("cannot contract an empty vertex set");
    detail::check_subset(d, a);
    const Vertex anchor = a.min();
    const std::uint64_t keep = d.vertices().bits() & ~(a.bits() & ~detail::bit(anchor));
    auto map = detail::compaction(d.order(), keep);
    const Vertex merged = map[static_cast<std::size_t>(anchor)];
    for (Vertex v : a)
        map[static_cast<std::size_t>(v)] = merged;
    const int new_order = d.order() - a.size() + 1;
    Digraph g = detail::relabel(d, map, new_order);
    return {std::move(g), merged, std::move(map)};
}

inline VertexSet reachable_set(const Digraph &d, Vertex v) {
    detail::check_id(v, d.order());
    return VertexSet(detail::closure(d.rows(), d.vertices().bits(), v));
}

/// Exact decision procedure; order 0 and 1 count as strongly connected.
inline bool is_strongly_connected(const Digraph &d) {
    const auto in = d.transpose_rows();
    return detail::strongly_connected_within(d.rows(), in, d.vertices().bits());
}

} // namespace critigraph
