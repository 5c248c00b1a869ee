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

// JSON renderings of the library's result types. to_json/from_json are
// lossless; the render_* helpers drop timing or per-chunk detail on request
// so that reports from different runs can be compared byte for byte.

#include <string>

#include "json.hpp"

#include "critigraph/criticality.hpp"
#include "critigraph/digraph.hpp"
#include "critigraph/enumeration.hpp"

namespace critigraph {

using json = nlohmann::ordered_json;

inline void to_json(json &j, const Digraph &d) {
    json edges = json::array();
    for (auto [u, v] : d.edges())
        edges.push_back({u, v});
    j = json{{"order", d.order()}, {"edges", std::move(edges)}};
}

inline void from_json(const json &j, Digraph &d) {
    Digraph g(j.at("order").get<int>());
    for (const auto &e : j.at("edges"))
        g.add_edge(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    d = g;
}

inline void to_json(json &j, const Cycle &c) { j = c.vertices; }
inline void from_json(const json &j, Cycle &c) { c.vertices = j.get<std::vector<Vertex>>(); }

inline void to_json(json &j, const Lemma2Report &r) {
    j = json{{"n", r.n},           {"cycle_size", r.cycle_size},     {"cycle", r.cycle}, {"degrees", r.degrees},
             {"bound", r.bound}, {"strict_count", r.strict_count}, {"pass", r.pass}};
}

inline void from_json(const json &j, Lemma2Report &r) {
    j.at("n").get_to(r.n);
    j.at("cycle_size").get_to(r.cycle_size);
    j.at("cycle").get_to(r.cycle);
    j.at("degrees").get_to(r.degrees);
    j.at("bound").get_to(r.bound);
    j.at("strict_count").get_to(r.strict_count);
    j.at("pass").get_to(r.pass);
}

inline void to_json(json &j, const AssertionReport &r) {
    j = json{{"n", r.n},
             {"k", r.k},
             {"cycle", r.cycle},
             {"edge_count_D", r.edge_count_D},
             {"edge_count_J", r.edge_count_J},
             {"s_n", r.s_n},
             {"s_n_minus_k_plus_1", r.s_n_minus_k_plus_1},
             {"d_J_c", r.d_J_c},
             {"external_edge_count", r.external_edge_count},
             {"cycle_degree_sum", r.cycle_degree_sum},
             {"assertion1_bound", r.assertion1_bound},
             {"eq1_bound", r.eq1_bound},
             {"assertion2_bound", r.assertion2_bound},
             {"assertion1_pass", r.assertion1_pass},
             {"eq1_pass", r.eq1_pass},
             {"assertion2_pass", r.assertion2_pass ? json(*r.assertion2_pass) : json(nullptr)}};
}

inline void from_json(const json &j, AssertionReport &r) {
    j.at("n").get_to(r.n);
    j.at("k").get_to(r.k);
    j.at("cycle").get_to(r.cycle);
    j.at("edge_count_D").get_to(r.edge_count_D);
    j.at("edge_count_J").get_to(r.edge_count_J);
    j.at("s_n").get_to(r.s_n);
    j.at("s_n_minus_k_plus_1").get_to(r.s_n_minus_k_plus_1);
    j.at("d_J_c").get_to(r.d_J_c);
    j.at("external_edge_count").get_to(r.external_edge_count);
    j.at("cycle_degree_sum").get_to(r.cycle_degree_sum);
    j.at("assertion1_bound").get_to(r.assertion1_bound);
    j.at("eq1_bound").get_to(r.eq1_bound);
    j.at("assertion2_bound").get_to(r.assertion2_bound);
    j.at("assertion1_pass").get_to(r.assertion1_pass);
    j.at("eq1_pass").get_to(r.eq1_pass);
    const auto &a2 = j.at("assertion2_pass");
    r.assertion2_pass = a2.is_null() ? std::nullopt : std::optional<bool>(a2.get<bool>());
}

inline void to_json(json &j, const ChunkResult &c) {
    j = json{{"index", c.index},
             {"max_edges", c.max_edges},
             {"attain_count", c.attain_count},
             {"witness_mask", c.witness_mask ? json(*c.witness_mask) : json(nullptr)},
             {"critical_count", c.critical_count}};
}

inline void from_json(const json &j, ChunkResult &c) {
    j.at("index").get_to(c.index);
    j.at("max_edges").get_to(c.max_edges);
    j.at("attain_count").get_to(c.attain_count);
    const auto &w = j.at("witness_mask");
    c.witness_mask = w.is_null() ? std::nullopt : std::optional<std::uint64_t>(w.get<std::uint64_t>());
    j.at("critical_count").get_to(c.critical_count);
}

inline void to_json(json &j, const SearchReport &r) {
    j = json{{"n", r.n},
             {"max_edges", r.max_edges},
             {"s_n", s(r.n)},
             {"witness_mask", r.witness_mask},
             {"witness", r.witness},
             {"attain_count", r.attain_count},
             {"graphs_scanned", r.graphs_scanned},
             {"critical_count", r.critical_count},
             {"elapsed", r.elapsed.count()},
             {"chunk_bits", r.chunk_bits},
             {"chunk_results", r.chunk_results}};
}

inline void from_json(const json &j, SearchReport &r) {
    j.at("n").get_to(r.n);
    j.at("max_edges").get_to(r.max_edges);
    j.at("witness_mask").get_to(r.witness_mask);
    j.at("witness").get_to(r.witness);
    j.at("attain_count").get_to(r.attain_count);
    j.at("graphs_scanned").get_to(r.graphs_scanned);
    j.at("critical_count").get_to(r.critical_count);
    r.elapsed = std::chrono::milliseconds(j.value("elapsed", std::int64_t{0}));
    r.chunk_bits = j.value("chunk_bits", 0);
    r.chunk_results = j.value("chunk_results", std::vector<ChunkResult>{});
}

inline void to_json(json &j, const Violation &v) { j = json{{"mask", v.mask}, {"details", v.details}}; }

inline void from_json(const json &j, Violation &v) {
    j.at("mask").get_to(v.mask);
    j.at("details").get_to(v.details);
}

inline void to_json(json &j, const VerificationReport &r) {
    j = json{{"property", r.property},
             {"n", r.n},
             {"passed", r.passed()},
             {"instances_checked", r.instances_checked},
             {"precondition_skips", r.precondition_skips},
             {"violations", r.violations},
             {"populations", r.populations},
             {"elapsed", r.elapsed.count()}};
}

inline void from_json(const json &j, VerificationReport &r) {
    j.at("property").get_to(r.property);
    j.at("n").get_to(r.n);
    j.at("instances_checked").get_to(r.instances_checked);
    j.at("precondition_skips").get_to(r.precondition_skips);
    j.at("violations").get_to(r.violations);
    j.at("populations").get_to(r.populations);
    r.elapsed = std::chrono::milliseconds(j.value("elapsed", std::int64_t{0}));
}

struct RenderOptions {
    bool timing = true;
    bool chunk_detail = false;
};

inline std::string render(const json &j) { return j.dump(2) + "\n"; }

inline std::string render_search_report(const SearchReport &r, RenderOptions options = {}) {
    json j = r;
    if (!options.timing)
        j.erase("elapsed");
    if (!options.chunk_detail) {
        j.erase("chunk_bits");
        j.erase("chunk_results");
    }
    return render(j);
}

inline std::string render_verification_report(const VerificationReport &r, RenderOptions options = {}) {
    json j = r;
    if (!options.timing)
        j.erase("elapsed");
    return render(j);
}

} // namespace critigraph
