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

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "critigraph/digraph.hpp"
#include "critigraph/io.hpp"

namespace critigraph {

/// A directed cycle (v_1, ..., v_k): consecutive entries and (v_k, v_1) are edges.
struct Cycle {
    std::vector<Vertex> vertices;

    int size() const noexcept { return static_cast<int>(vertices.size()); }

    VertexSet vertex_set() const {
        VertexSet s;
        for (Vertex v : vertices)
            s.insert(v);
        return s;
    }

    friend bool operator==(const Cycle &, const Cycle &) = default;
};

/// Degree profile of a chordless cycle against the bound n - k + 2.
struct Lemma2Report {
    int n = 0;
    int cycle_size = 0;
    std::vector<Vertex> cycle;
    std::vector<int> degrees; ///< aligned with `cycle`
    int bound = 0;
    int strict_count = 0;
    bool pass = false;
};

/// Quantities around the contraction J = D/V(C) and the checked inequalities:
///   |E(D)| - |E(J)| <= s(n) - s(n-k+1)
///   d_J(c) <= n - k
///   sum of cycle degrees <= (n-1)k - n + 4   (check_assertion2 only)
struct AssertionReport {
    int n = 0;
    int k = 0;
    std::vector<Vertex> cycle;
    int edge_count_D = 0;
    int edge_count_J = 0;
    std::int64_t s_n = 0;
    std::int64_t s_n_minus_k_plus_1 = 0;
    int d_J_c = 0;
    int external_edge_count = 0; ///< r: edges not incident with V(C)
    int cycle_degree_sum = 0;
    std::int64_t assertion1_bound = 0;
    int eq1_bound = 0;
    std::int64_t assertion2_bound = 0;
    bool assertion1_pass = false;
    bool eq1_pass = false;
    std::optional<bool> assertion2_pass;

    bool pass() const noexcept { return assertion1_pass && eq1_pass && assertion2_pass.value_or(true); }
};

/// C(n,2) - n + 4, the extremal edge count for n >= 4.
inline std::int64_t s(std::int64_t n) {
    if (n < 2)
        throw DomainError("s(n) is defined for n >= 2, got " + std::to_string(n));
    if (n > (std::int64_t{1} << 31))
        throw DomainError("s(n) argument too large");
    return n * (n - 1) / 2 - n + 4;
}

namespace detail {

inline std::uint64_t without(std::uint64_t set, Vertex v) noexcept { return set & ~bit(v); }

/// Vertex-criticality on raw rows. A 2-vertex graph is critical iff strongly
/// connected: deleting a vertex from it counts as disconnecting.
inline bool critical_rows(std::span<const std::uint64_t> out, std::span<const std::uint64_t> in, int n) noexcept {
    const std::uint64_t all = low_mask(n);
    if (!strongly_connected_within(out, in, all))
        return false;
    if (n == 2)
        return true;
    for (Vertex v = 0; v < n; ++v)
        if (strongly_connected_within(out, in, without(all, v)))
            return false;
    return true;
}

inline void require_cycle_of(const Digraph &d, const Cycle &c) {
    const int k = c.size();
    if (k < 2)
        throw PreconditionError("a cycle needs at least 2 vertices");
    VertexSet seen;
    for (Vertex v : c.vertices) {
        if (v < 0 || v >= d.order())
            throw PreconditionError("cycle vertex " + std::to_string(v) + " is not a vertex of D");
        if (seen.contains(v))
            throw PreconditionError("cycle repeats vertex " + std::to_string(v));
        seen.insert(v);
    }
    for (int i = 0; i < k; ++i) {
        const Vertex a = c.vertices[static_cast<std::size_t>(i)];
        const Vertex b = c.vertices[static_cast<std::size_t>((i + 1) % k)];
        if (!d.has_edge(a, b))
            throw PreconditionError("(" + std::to_string(a) + "," + std::to_string(b) +
                                    ") is not an edge of D, so C is not a cycle of D");
    }
}

inline int induced_edge_count(const Digraph &d, VertexSet s) {
    int count = 0;
    for (Vertex v : s)
        count += std::popcount(d.rows()[static_cast<std::size_t>(v)] & s.bits());
    return count;
}

} // namespace detail

/// Strongly connected, and deleting any single vertex destroys strong
/// connectivity. Order 2: critical iff strongly connected (the double arc).
inline bool is_vertex_critical(const Digraph &d) {
    if (d.order() < 2)
        throw DomainError("vertex-criticality is defined for order >= 2");
    const auto in = d.transpose_rows();
    return detail::critical_rows(d.rows(), in, d.order());
}

/// Smallest z whose deletion leaves D strongly connected, or nullopt when D is critical.
inline std::optional<Vertex> non_critical_witness(const Digraph &d) {
    if (d.order() < 2)
        throw PreconditionError("order must be at least 2");
    const auto in = d.transpose_rows();
    const std::uint64_t all = d.vertices().bits();
    if (!detail::strongly_connected_within(d.rows(), in, all))
        throw PreconditionError("digraph is not strongly connected");
    if (d.order() == 2)
        return std::nullopt;
    for (Vertex z = 0; z < d.order(); ++z)
        if (detail::strongly_connected_within(d.rows(), in, detail::without(all, z)))
            return z;
    return std::nullopt;
}

/// The extremal vertex-critical digraph with s(n) edges, 0-indexed: the
/// Hamiltonian cycle i -> i+1 (mod n), every back edge i -> j with
/// 2 <= j < i <= n-1, and the edge 1 -> 0. In 1-based terms this is the cycle
/// (v_1, ..., v_n) plus (v_i, v_j) for 3 <= j < i <= n plus (v_2, v_1).
inline Digraph extremal_digraph(int n) {
    if (n < 4)
        throw DomainError("the extremal construction needs n >= 4, got " + std::to_string(n));
    Digraph d(n);
    for (Vertex i = 0; i < n; ++i)
        d.add_edge(i, (i + 1) % n);
    for (Vertex i = 3; i < n; ++i)
        for (Vertex j = 2; j < i; ++j)
            d.add_edge(i, j);
    d.add_edge(1, 0);
    return d;
}

/// No edge joins two cycle vertices except the k cycle edges. Equivalent to
/// the induced subgraph on V(C) having exactly k edges.
inline bool is_chordless(const Digraph &d, const Cycle &c) {
    detail::require_cycle_of(d, c);
    return detail::induced_edge_count(d, c.vertex_set()) == c.size();
}

/// A shortest directed cycle (hence chordless). Among shortest cycles, each
/// written from its smallest vertex, the lexicographically smallest wins.
inline Cycle find_chordless_cycle(const Digraph &d) {
    const int n = d.order();
    if (n < 2 || !is_strongly_connected(d))
        throw PreconditionError("find_chordless_cycle needs a strongly connected digraph of order >= 2");
    const auto in = d.transpose_rows();
    constexpr int kUnreached = kMaxOrder + 1;

    // dist[y]: length of a shortest path y -> root using only vertices >= root.
    auto distances_to = [&](Vertex root) {
        std::array<int, kMaxOrder> dist;
        dist.fill(kUnreached);
        const std::uint64_t allowed = d.vertices().bits() & ~detail::low_mask(root);
        std::uint64_t seen = detail::bit(root);
        std::uint64_t frontier = seen;
        dist[static_cast<std::size_t>(root)] = 0;
        for (int layer = 1; frontier; ++layer) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1)
                next |= in[static_cast<std::size_t>(std::countr_zero(f))];
            next &= allowed & ~seen;
            for (Vertex y : VertexSet(next))
                dist[static_cast<std::size_t>(y)] = layer;
            seen |= next;
            frontier = next;
        }
        return dist;
    };

    int girth = kUnreached;
    Vertex root = -1;
    std::array<int, kMaxOrder> root_dist{};
    for (Vertex r = 0; r < n; ++r) {
        auto dist = distances_to(r);
        int best = kUnreached;
        for (Vertex y : VertexSet(d.rows()[static_cast<std::size_t>(r)] & ~detail::low_mask(r + 1)))
            best = std::min(best, dist[static_cast<std::size_t>(y)] + 1);
        if (best < girth) {
            girth = best;
            root = r;
            root_dist = dist;
        }
    }

    // Greedy walk: every closed walk of length `girth` through the root is a
    // simple cycle, so taking the smallest successor that can still close in
    // time yields the lexicographically smallest one.
    Cycle c;
    c.vertices.push_back(root);
    Vertex cur = root;
    for (int remaining = girth; remaining > 1; --remaining) {
        Vertex chosen = -1;
        for (Vertex y : VertexSet(d.rows()[static_cast<std::size_t>(cur)] & ~detail::low_mask(root + 1))) {
            if (root_dist[static_cast<std::size_t>(y)] <= remaining - 1) {
                chosen = y;
                break;
            }
        }
        if (chosen < 0)
            throw InvariantError("shortest-cycle walk got stuck", serialize_edge_list(d));
        c.vertices.push_back(chosen);
        cur = chosen;
    }
    return c;
}

/// Every chordless cycle once, written from its smallest vertex, in
/// lexicographic order. Double arcs are chordless 2-cycles.
inline std::vector<Cycle> all_chordless_cycles(const Digraph &d) {
    constexpr int kMaxEnumerationOrder = 8;
    const int n = d.order();
    if (n > kMaxEnumerationOrder)
        throw CapacityError("all_chordless_cycles supports order <= 8, got " + std::to_string(n));
    const auto in = d.transpose_rows();
    const auto out = d.rows();
    std::vector<Cycle> cycles;
    std::vector<Vertex> path;

    // Extending the path with y is allowed only if y has no edge to or from
    // earlier path vertices other than last -> y and a closing y -> root.
    std::function<void(Vertex, std::uint64_t)> extend = [&](Vertex root, std::uint64_t on_path) {
        const Vertex last = path.back();
        const std::uint64_t before_last = detail::without(on_path, last);
        const std::uint64_t after_root = detail::without(on_path, root);
        for (Vertex y : VertexSet(out[static_cast<std::size_t>(last)] & ~detail::low_mask(root + 1) & ~on_path)) {
            const auto yi = static_cast<std::size_t>(y);
            if (in[yi] & before_last)
                continue;
            if (out[yi] & after_root)
                continue;
            path.push_back(y);
            if (out[yi] & detail::bit(root))
                cycles.push_back(Cycle{path});
            else
                extend(root, on_path | detail::bit(y));
            path.pop_back();
        }
    };

    for (Vertex root = 0; root < n; ++root) {
        path.assign(1, root);
        extend(root, detail::bit(root));
    }
    return cycles;
}

namespace detail {

inline Vertex removable_vertex_step(const Digraph &d, Vertex v) {
    const int n = d.order();
    if (n == 2)
        return 1 - v;

    const auto in = d.transpose_rows();
    const std::uint64_t partners = d.rows()[static_cast<std::size_t>(v)] & in[static_cast<std::size_t>(v)];
    if (partners == 0)
        throw InvariantError("vertex of degree >= n without a double-arc partner", serialize_edge_list(d));
    const Vertex u = std::countr_zero(partners);
    if (strongly_connected_within(d.rows(), in, without(d.vertices().bits(), u)))
        return u;

    auto merged = contract(d, VertexSet{u, v});
    const Vertex w = merged.merged_vertex;
    if (merged.graph.degree(w) < n - 1)
        throw InvariantError("merged vertex has degree below n-1 after contracting a double arc",
                             serialize_edge_list(d));
    const Vertex inner = removable_vertex_step(merged.graph, w);

    Vertex z = kRemoved;
    for (Vertex old = 0; old < n; ++old)
        if (merged.old_to_new[static_cast<std::size_t>(old)] == inner)
            z = old;
    if (z == kRemoved || z == u || z == v)
        throw InvariantError("contracted witness has no preimage outside the merged pair", serialize_edge_list(d));
    if (!strongly_connected_within(d.rows(), in, without(d.vertices().bits(), z)))
        throw InvariantError("lifted witness " + std::to_string(z) + " does not leave D strongly connected",
                             serialize_edge_list(d));
    return z;
}

} // namespace detail

/// Given a strongly connected D and a vertex v of degree >= n, returns z != v
/// with D - z strongly connected, by repeatedly contracting v with its
/// smallest double-arc partner. The result is re-checked before returning.
inline Vertex find_removable_vertex(const Digraph &d, Vertex v) {
    const int n = d.order();
    detail::check_id(v, n);
    if (n < 2)
        throw DomainError("find_removable_vertex needs order >= 2");
    if (!is_strongly_connected(d))
        throw DomainError("find_removable_vertex needs a strongly connected digraph");
    if (d.degree(v) < n)
        throw DomainError("vertex " + std::to_string(v) + " has degree " + std::to_string(d.degree(v)) +
                          " < n = " + std::to_string(n));

    const Vertex z = detail::removable_vertex_step(d, v);
    const auto in = d.transpose_rows();
    if (z == v || !detail::strongly_connected_within(d.rows(), in, detail::without(d.vertices().bits(), z)))
        throw InvariantError("find_removable_vertex postcondition failed for z = " + std::to_string(z),
                             serialize_edge_list(d));
    return z;
}

namespace detail {

/// Shared preconditions: D critical, C a chordless cycle of D, V(C) != V(D).
inline void require_proper_chordless_cycle(const Digraph &d, const Cycle &c) {
    if (d.order() < 2 || !is_vertex_critical(d))
        throw DomainError("precondition failed: D is not vertex-critical");
    try {
        require_cycle_of(d, c);
    } catch (const PreconditionError &e) {
        throw DomainError(std::string("precondition failed: ") + e.what());
    }
    if (induced_edge_count(d, c.vertex_set()) != c.size())
        throw DomainError("precondition failed: C is not chordless");
    if (c.size() == d.order())
        throw DomainError("precondition failed: V(C) = V(D)");
}

inline AssertionReport assertion_report(const Digraph &d, const Cycle &c) {
    require_proper_chordless_cycle(d, c);
    const int n = d.order();
    const int k = c.size();
    if (n < k + 2)
        throw DomainError("precondition failed: n < k + 2");

    const VertexSet cycle = c.vertex_set();
    AssertionReport r;
    r.n = n;
    r.k = k;
    r.cycle = c.vertices;
    r.edge_count_D = d.edge_count();

    const auto contracted = contract(d, cycle);
    r.edge_count_J = contracted.graph.edge_count();
    r.d_J_c = contracted.graph.degree(contracted.merged_vertex);

    r.external_edge_count = remove_vertices(d, cycle).graph.edge_count();
    for (Vertex v : c.vertices)
        r.cycle_degree_sum += d.degree(v);
    if (r.edge_count_D != r.external_edge_count - k + r.cycle_degree_sum)
        throw InvariantError("edge count identity |E(D)| = r - k + sum d(u) failed", serialize_edge_list(d));

    r.s_n = s(n);
    r.s_n_minus_k_plus_1 = s(n - k + 1);
    r.assertion1_bound = r.s_n - r.s_n_minus_k_plus_1;
    r.eq1_bound = n - k;
    r.assertion2_bound = static_cast<std::int64_t>(n - 1) * k - n + 4;
    r.assertion1_pass = r.edge_count_D - r.edge_count_J <= r.assertion1_bound;
    r.eq1_pass = r.d_J_c <= r.eq1_bound;
    return r;
}

} // namespace detail

/// Checks every cycle degree against n - k + 2, with at least two strict.
inline Lemma2Report check_lemma2(const Digraph &d, const Cycle &c) {
    detail::require_proper_chordless_cycle(d, c);
    Lemma2Report r;
    r.n = d.order();
    r.cycle_size = c.size();
    r.cycle = c.vertices;
    r.bound = r.n - r.cycle_size + 2;
    bool within = true;
    for (Vertex v : c.vertices) {
        const int deg = d.degree(v);
        r.degrees.push_back(deg);
        within = within && deg <= r.bound;
        if (deg < r.bound)
            ++r.strict_count;
    }
    r.pass = within && r.strict_count >= 2;
    return r;
}

inline AssertionReport check_assertion1(const Digraph &d, const Cycle &c) { return detail::assertion_report(d, c); }

/// D - V(C) strongly connected, i.e. J = D/V(C) is not vertex-critical.
inline bool assertion2_applies(const Digraph &d, const Cycle &c) {
    return is_strongly_connected(remove_vertices(d, c.vertex_set()).graph);
}

/// Like check_assertion1, additionally checking the cycle degree sum against
/// (n-1)k - n + 4. Requires D - V(C) to be strongly connected.
inline AssertionReport check_assertion2(const Digraph &d, const Cycle &c) {
    AssertionReport r = detail::assertion_report(d, c);
    if (!assertion2_applies(d, c))
        throw DomainError("precondition failed: D - V(C) is not strongly connected (J is critical)");
    r.assertion2_pass = r.cycle_degree_sum <= r.assertion2_bound;
    return r;
}

} // namespace critigraph
