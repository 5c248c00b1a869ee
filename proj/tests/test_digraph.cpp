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

#include <catch2/catch_amalgamated.hpp>

#include "critigraph/criticality.hpp"
#include "critigraph/digraph.hpp"

using namespace critigraph;

namespace {

Digraph directed_cycle(int n) {
    Digraph d(n);
    for (int i = 0; i < n; ++i)
        d.add_edge(i, (i + 1) % n);
    return d;
}

Digraph double_arc() { return Digraph(2).add_edge(0, 1).add_edge(1, 0); }

Digraph complete_bidirected(int n) {
    Digraph d(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v)
                d.add_edge(u, v);
    return d;
}

} // namespace

TEST_CASE("new_digraph builds edgeless graphs up to 64 vertices", "[digraph]") {
    CHECK(new_digraph(3).order() == 3);
    CHECK(new_digraph(3).edge_count() == 0);
    CHECK(new_digraph(0).order() == 0);
    CHECK(new_digraph(64).order() == 64);
    CHECK_THROWS_AS(new_digraph(65), CapacityError);
    CHECK_THROWS_AS(new_digraph(-1), CapacityError);
}

TEST_CASE("add_edge is idempotent and rejects loops and bad ids", "[digraph]") {
    const Digraph empty(2);
    const Digraph one = add_edge(empty, 0, 1);
    CHECK(one.edge_count() == 1);
    CHECK(empty.edge_count() == 0);
    CHECK(add_edge(one, 0, 1).edge_count() == 1);
    CHECK_THROWS_AS(add_edge(empty, 0, 0), LoopError);
    CHECK_THROWS_AS(add_edge(empty, 0, 2), BoundsError);
    CHECK_THROWS_AS(add_edge(empty, -1, 1), BoundsError);
}

TEST_CASE("out_set and in_set", "[digraph]") {
    const auto c3 = directed_cycle(3);
    CHECK(c3.out_set(0) == VertexSet{1});
    CHECK(c3.in_set(0) == VertexSet{2});

    const auto arc = double_arc();
    CHECK(arc.out_set(0) == VertexSet{1});
    CHECK(arc.in_set(0) == VertexSet{1});

    CHECK(extremal_digraph(4).in_set(0) == VertexSet{1, 3});
    CHECK_THROWS_AS(c3.out_set(3), BoundsError);
    CHECK_THROWS_AS(c3.in_set(-1), BoundsError);
}

TEST_CASE("degree counts a double-arc partner twice", "[digraph]") {
    CHECK(double_arc().degree(0) == 2);
    CHECK(complete_bidirected(3).degree(0) == 4);
    const auto ext = extremal_digraph(4);
    for (Vertex v = 0; v < 4; ++v)
        CHECK(ext.degree(v) == 3);
    CHECK_THROWS_AS(ext.degree(4), BoundsError);
}

TEST_CASE("edge_count", "[digraph]") {
    for (int n = 2; n <= 10; ++n)
        CHECK(directed_cycle(n).edge_count() == n);
    CHECK(Digraph(7).edge_count() == 0);
    for (int n = 4; n <= 12; ++n)
        CHECK(extremal_digraph(n).edge_count() == n * (n - 1) / 2 - n + 4);
}

TEST_CASE("remove_vertices compacts surviving ids", "[digraph]") {
    const auto cut = remove_vertices(directed_cycle(3), VertexSet{1});
    CHECK(cut.graph.order() == 2);
    CHECK(cut.graph.edges() == std::vector<std::pair<Vertex, Vertex>>{{1, 0}});
    CHECK(cut.old_to_new == std::vector<Vertex>{0, kRemoved, 1});

    const auto ext = extremal_digraph(4);
    const auto none = remove_vertices(ext, VertexSet{});
    CHECK(none.graph == ext);
    CHECK(none.old_to_new == std::vector<Vertex>{0, 1, 2, 3});

    const auto minus2 = remove_vertices(ext, VertexSet{2});
    CHECK(minus2.graph.order() == 3);
    using E = std::pair<Vertex, Vertex>;
    CHECK(minus2.graph.edges() == std::vector<E>{{0, 1}, {1, 0}, {2, 0}});
    CHECK(minus2.old_to_new[3] == 2);

    CHECK_THROWS_AS(remove_vertices(ext, VertexSet{4}), BoundsError);
}

TEST_CASE("contract merges a set per the union formula", "[digraph]") {
    const auto c3 = contract(directed_cycle(3), VertexSet{0, 1});
    CHECK(c3.graph.order() == 2);
    CHECK(c3.graph == double_arc());
    CHECK(c3.merged_vertex == 0);
    CHECK(c3.old_to_new == std::vector<Vertex>{0, 0, 1});
    CHECK(is_strongly_connected(c3.graph));

    const auto ext4 = extremal_digraph(4);
    const auto single = contract(ext4, VertexSet{2});
    CHECK(single.graph == ext4);
    CHECK(single.merged_vertex == 2);
    CHECK(single.old_to_new == std::vector<Vertex>{0, 1, 2, 3});

    const auto ext5 = contract(extremal_digraph(5), VertexSet{0, 1});
    CHECK(ext5.graph.order() == 4);
    CHECK(ext5.graph.edge_count() == 7);
    CHECK(ext5.graph.out_set(ext5.merged_vertex) == VertexSet{1}); // old 2
    CHECK(ext5.graph.in_set(ext5.merged_vertex) == VertexSet{3});  // old 4
    CHECK_FALSE(ext5.graph.has_edge(0, 0));

    CHECK_THROWS_AS(contract(ext4, VertexSet{}), UsageError);
    CHECK_THROWS_AS(contract(ext4, VertexSet{1, 9}), BoundsError);
}

TEST_CASE("contract places the merged vertex at min(A)'s compacted slot", "[digraph]") {
    // A = {1, 3} in a 5-vertex graph: survivors 0, 2, 4 plus merged at slot 1.
    const Digraph d = Digraph(5).add_edge(0, 3).add_edge(3, 4).add_edge(4, 1).add_edge(2, 0);
    const auto r = contract(d, VertexSet{1, 3});
    CHECK(r.merged_vertex == 1);
    CHECK(r.old_to_new == std::vector<Vertex>{0, 1, 2, 1, 3});
    using E = std::pair<Vertex, Vertex>;
    CHECK(r.graph.edges() == std::vector<E>{{0, 1}, {1, 3}, {2, 0}, {3, 1}});
}

TEST_CASE("is_strongly_connected", "[digraph]") {
    for (int n = 2; n <= 64; n += 7)
        CHECK(is_strongly_connected(directed_cycle(n)));
    CHECK_FALSE(is_strongly_connected(Digraph(2).add_edge(0, 1)));
    CHECK(is_strongly_connected(extremal_digraph(6)));
    CHECK(is_strongly_connected(Digraph(0)));
    CHECK(is_strongly_connected(Digraph(1)));
    CHECK_FALSE(is_strongly_connected(Digraph(2)));
}

TEST_CASE("reachable_set", "[digraph]") {
    CHECK(reachable_set(directed_cycle(3), 0) == VertexSet{0, 1, 2});
    CHECK(reachable_set(Digraph(2).add_edge(0, 1), 1) == VertexSet{1});

    // extremal_digraph(4) - {0}: old 1, 2, 3 become 0, 1, 2 with edges 0->1, 1->2, 2->1.
    const auto cut = remove_vertices(extremal_digraph(4), VertexSet{0}).graph;
    CHECK(reachable_set(cut, 0) == VertexSet{0, 1, 2});
    CHECK(reachable_set(cut, 1) == VertexSet{1, 2});
    CHECK_FALSE(is_strongly_connected(cut));

    CHECK_THROWS_AS(reachable_set(cut, 3), BoundsError);
}

TEST_CASE("VertexSet basics", "[digraph]") {
    VertexSet s{5, 1, 63};
    CHECK(s.size() == 3);
    CHECK(s.min() == 1);
    CHECK(s.to_vector() == std::vector<Vertex>{1, 5, 63});
    CHECK(s.contains(63));
    CHECK_FALSE(s.contains(64));
    CHECK_FALSE(s.within(63));
    CHECK(s.within(64));
    CHECK_THROWS_AS(VertexSet{}.min(), UsageError);
    CHECK_THROWS_AS(s.insert(64), BoundsError);
    CHECK(VertexSet::first(64).size() == 64);
}

TEST_CASE("Digraph::from_rows validates the row invariants", "[digraph]") {
    const std::vector<std::uint64_t> good{0b10, 0b01};
    CHECK(Digraph::from_rows(2, good) == double_arc());
    const std::vector<std::uint64_t> loop{0b01, 0b00};
    CHECK_THROWS_AS(Digraph::from_rows(2, loop), LoopError);
    const std::vector<std::uint64_t> wide{0b100, 0b00};
    CHECK_THROWS_AS(Digraph::from_rows(2, wide), BoundsError);
}
