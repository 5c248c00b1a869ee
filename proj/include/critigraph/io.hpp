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

// Text formats for digraphs.
//
// Edge list: the first non-comment line holds the order n; every further
// non-comment line is "u v" for a directed edge u -> v. '#' starts a comment.
// Serialization is canonical: edges sorted by (u, v), no comments.

#include <charconv>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "critigraph/digraph.hpp"

namespace critigraph {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

inline std::optional<long long> parse_integer(std::string_view token) {
    long long value = 0;
    const auto *end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        return std::nullopt;
    return value;
}

} // namespace detail

inline Digraph parse_edge_list(std::string_view text) {
    std::optional<Digraph> graph;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const auto tokens = detail::split_ws(line);
        if (tokens.empty())
            continue;

        if (!graph) {
            if (tokens.size() != 1)
                throw ParseError(line_no, "expected the vertex count on its own line");
            auto n = detail::parse_integer(tokens[0]);
            if (!n || *n < 0)
                throw ParseError(line_no, "vertex count is not a non-negative integer");
            if (*n > kMaxOrder)
                throw ValidationError(line_no, "vertex count " + std::to_string(*n) + " exceeds 64");
            graph.emplace(static_cast<int>(*n));
            continue;
        }

        if (tokens.size() != 2)
            throw ParseError(line_no, "expected an edge \"u v\"");
        auto u = detail::parse_integer(tokens[0]);
        auto v = detail::parse_integer(tokens[1]);
        if (!u || !v)
            throw ParseError(line_no, "edge endpoints must be integers");
        const long long n = graph->order();
        if (*u < 0 || *u >= n || *v < 0 || *v >= n)
            throw ValidationError(line_no, "edge endpoint out of range [0, " + std::to_string(n) + ")");
        if (*u == *v)
            throw ValidationError(line_no, "self-loop at vertex " + std::to_string(*u));
        const auto a = static_cast<Vertex>(*u);
        const auto b = static_cast<Vertex>(*v);
        if (graph->has_edge(a, b))
            throw ValidationError(line_no, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
        graph->add_edge(a, b);
    }
    if (!graph)
        throw ParseError(line_no == 0 ? 1 : line_no, "missing vertex count");
    return *graph;
}

inline std::string serialize_edge_list(const Digraph &d) {
    std::ostringstream out;
    out << d.order() << '\n';
    for (auto [u, v] : d.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

/// n lines of n '0'/'1' characters; row u, column v is the edge u -> v.
inline std::string serialize_matrix(const Digraph &d) {
    std::string out;
    out.reserve(static_cast<std::size_t>(d.order() * (d.order() + 1)));
    for (Vertex u = 0; u < d.order(); ++u) {
        const auto row = d.out_set(u);
        for (Vertex v = 0; v < d.order(); ++v)
            out.push_back(row.contains(v) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

/// Graphviz DOT with numeric ids. Every vertex is declared so isolated ones survive.
inline std::string serialize_dot(const Digraph &d) {
    std::ostringstream out;
    out << "digraph {\n";
    for (Vertex v = 0; v < d.order(); ++v)
        out << "  " << v << ";\n";
    for (auto [u, v] : d.edges())
        out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace critigraph
