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

// Command-line front end. run_cli() is the whole program minus main(), so
// tests can drive it with in-memory streams.
//
// Exit codes: 0 success / property holds, 1 property violated or a negative
// answer to an asserting flag, 2 usage, parse or precondition error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "critigraph/criticality.hpp"
#include "critigraph/digraph.hpp"
#include "critigraph/enumeration.hpp"
#include "critigraph/io.hpp"
#include "critigraph/report.hpp"

namespace critigraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline std::string read_input(const std::string &path, std::istream &in) {
    if (path == "-")
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot read " + path);
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline std::string format_graph(const Digraph &d, const std::string &format) {
    if (format == "dot")
        return serialize_dot(d);
    if (format == "matrix")
        return serialize_matrix(d);
    return serialize_edge_list(d);
}

/// --jobs default: $CRITIGRAPH_JOBS, else the hardware concurrency.
inline int default_jobs() {
    if (const char *env = std::getenv("CRITIGRAPH_JOBS")) {
        auto value = critigraph::detail::parse_integer(env);
        if (!value || *value < 1 || *value > 1024)
            throw UsageError(std::string("CRITIGRAPH_JOBS must be a positive integer, got \"") + env + "\"");
        return static_cast<int>(*value);
    }
    return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

inline std::string join(const std::vector<Vertex> &vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i)
        s += (i ? " " : "") + std::to_string(vs[i]);
    return s;
}

} // namespace detail

inline int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Vertex-critical strongly connected digraphs: analysis and exhaustive verification",
                 "critigraph"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    const std::vector<std::string> formats{"edgelist", "dot", "matrix"};

    // construct
    int construct_n = 0;
    std::string construct_format = "edgelist";
    auto *construct = app.add_subcommand("construct", "Print the extremal vertex-critical digraph on n vertices");
    construct->add_option("--n", construct_n, "Vertex count (n >= 4)")->required();
    construct->add_option("--format", construct_format, "Output format")->check(CLI::IsMember(formats));

    // check
    std::string check_file;
    bool check_sc = false, check_critical = false, check_degrees = false;
    auto *check = app.add_subcommand("check", "Report properties of an edge-list digraph");
    check->add_option("file", check_file, "Edge-list file, or - for stdin")->required();
    check->add_flag("--sc", check_sc, "Fail (exit 1) unless strongly connected");
    check->add_flag("--critical", check_critical, "Fail (exit 1) unless vertex-critical; prints a witness");
    check->add_flag("--degrees", check_degrees, "Print out/in/total degree per vertex");

    // removable
    std::string removable_file;
    int removable_vertex = 0;
    auto *removable = app.add_subcommand("removable", "Find z != v with D - z strongly connected (needs d(v) >= n)");
    removable->add_option("file", removable_file, "Edge-list file, or - for stdin")->required();
    removable->add_option("--vertex", removable_vertex, "The high-degree vertex v")->required();

    // cycle
    std::string cycle_file;
    bool cycle_all = false;
    std::string cycle_check;
    auto *cycle = app.add_subcommand("cycle", "Print a shortest (chordless) directed cycle");
    cycle->add_option("file", cycle_file, "Edge-list file, or - for stdin")->required();
    cycle->add_flag("--all", cycle_all, "Print every chordless cycle (order <= 8)");
    cycle->add_option("--check", cycle_check, "Evaluate a bound on the printed cycle and emit its report")
        ->check(CLI::IsMember({"lemma2", "assertion1", "assertion2"}));

    // contract
    std::string contract_file;
    std::vector<Vertex> contract_set;
    std::string contract_format = "edgelist";
    auto *contract_cmd = app.add_subcommand("contract", "Contract a vertex set into one vertex");
    contract_cmd->add_option("file", contract_file, "Edge-list file, or - for stdin")->required();
    contract_cmd->add_option("--set", contract_set, "Comma-separated vertex ids")->required()->delimiter(',');
    contract_cmd->add_option("--format", contract_format, "Output format")->check(CLI::IsMember(formats));

    // search
    int search_n = 0;
    std::optional<int> search_jobs;
    int search_chunk_bits = 16;
    std::string search_checkpoint;
    bool search_long_run = false, search_no_timing = false, search_chunk_detail = false, search_progress = false;
    auto *search = app.add_subcommand("search", "Exhaustive maximum edge count of critical digraphs on n vertices");
    search->add_option("--n", search_n, "Vertex count (2..6; 6 needs --long-run)")->required();
    search->add_option("--jobs", search_jobs, "Worker threads (default $CRITIGRAPH_JOBS or all cores)");
    search->add_option("--chunk-bits", search_chunk_bits, "log2 of the number of work chunks");
    search->add_option("--checkpoint", search_checkpoint, "Checkpoint file to resume from and append to");
    search->add_flag("--long-run", search_long_run, "Allow n = 6 (2^30 digraphs)");
    search->add_flag("--no-timing", search_no_timing, "Omit the elapsed field");
    search->add_flag("--chunk-detail", search_chunk_detail, "Include per-chunk results in the report");
    search->add_flag("--progress", search_progress, "Print chunk progress to stderr");

    // verify
    std::string verify_property;
    int verify_n = 0;
    std::optional<int> verify_jobs;
    int verify_chunk_bits = 16;
    bool verify_long_run = false, verify_no_timing = false;
    auto *verify = app.add_subcommand("verify", "Exhaustively verify a bound; exit 1 on any violation");
    verify->add_option("--property", verify_property, "Property to verify")
        ->required()
        ->check(CLI::IsMember({"theorem", "lemma1", "lemma2", "assertion1", "assertion2", "schwarz"}));
    verify->add_option("--n", verify_n, "Vertex count")->required();
    verify->add_option("--jobs", verify_jobs, "Worker threads for --property theorem");
    verify->add_option("--chunk-bits", verify_chunk_bits, "Chunking for --property theorem");
    verify->add_flag("--long-run", verify_long_run, "Allow n = 6 for --property theorem");
    verify->add_flag("--no-timing", verify_no_timing, "Omit the elapsed field");

    // convert
    std::string convert_file;
    std::string convert_to;
    auto *convert = app.add_subcommand("convert", "Re-emit an edge-list digraph in another format");
    convert->add_option("file", convert_file, "Edge-list file, or - for stdin")->required();
    convert->add_option("--to", convert_to, "Output format")->required()->check(CLI::IsMember(formats));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*construct) {
            out << detail::format_graph(extremal_digraph(construct_n), construct_format);
            return kExitOk;
        }

        if (*check) {
            const Digraph d = parse_edge_list(detail::read_input(check_file, in));
            const bool sc = is_strongly_connected(d);
            out << "order " << d.order() << '\n' << "edges " << d.edge_count() << '\n';
            out << "strongly_connected " << (sc ? "yes" : "no") << '\n';
            std::optional<bool> critical;
            if (d.order() >= 2) {
                critical = is_vertex_critical(d);
                out << "vertex_critical " << (*critical ? "yes" : "no") << '\n';
                if (sc && !*critical)
                    out << "witness " << *non_critical_witness(d) << '\n';
            }
            if (check_degrees)
                for (Vertex v = 0; v < d.order(); ++v)
                    out << "degree " << v << ' ' << d.out_degree(v) << ' ' << d.in_degree(v) << ' ' << d.degree(v)
                        << '\n';
            if (check_critical && !critical)
                throw DomainError("vertex-criticality is defined for order >= 2");
            if ((check_sc && !sc) || (check_critical && !*critical))
                return kExitViolation;
            return kExitOk;
        }

        if (*removable) {
            const Digraph d = parse_edge_list(detail::read_input(removable_file, in));
            out << find_removable_vertex(d, removable_vertex) << '\n';
            return kExitOk;
        }

        if (*cycle) {
            const Digraph d = parse_edge_list(detail::read_input(cycle_file, in));
            if (cycle_all) {
                for (const auto &c : all_chordless_cycles(d))
                    out << detail::join(c.vertices) << '\n';
                return kExitOk;
            }
            const Cycle c = find_chordless_cycle(d);
            if (cycle_check.empty()) {
                out << detail::join(c.vertices) << '\n';
                return kExitOk;
            }
            if (cycle_check == "lemma2") {
                const auto r = check_lemma2(d, c);
                out << render(json(r));
                return r.pass ? kExitOk : kExitViolation;
            }
            const auto r = cycle_check == "assertion1" ? check_assertion1(d, c) : check_assertion2(d, c);
            out << render(json(r));
            return r.pass() ? kExitOk : kExitViolation;
        }

        if (*contract_cmd) {
            const Digraph d = parse_edge_list(detail::read_input(contract_file, in));
            VertexSet a;
            for (Vertex v : contract_set)
                a.insert(v);
            const auto result = contract(d, a);
            const char *comment = contract_format == "dot" ? "// " : "# ";
            if (contract_format != "matrix") {
                out << comment << "merged_vertex " << result.merged_vertex << '\n';
                out << comment << "old_to_new " << detail::join(result.old_to_new) << '\n';
            }
            out << detail::format_graph(result.graph, contract_format);
            return kExitOk;
        }

        if (*search) {
            SearchOptions options;
            options.jobs = search_jobs ? *search_jobs : detail::default_jobs();
            options.chunk_bits = search_chunk_bits;
            options.long_run = search_long_run;
            if (!search_checkpoint.empty())
                options.checkpoint = search_checkpoint;
            if (search_progress)
                options.progress = [&err](std::uint64_t done, std::uint64_t total) {
                    if (done == total || done % std::max<std::uint64_t>(1, total / 100) == 0)
                        err << "chunks " << done << "/" << total << '\n';
                };
            const auto report = max_critical_edges(search_n, options);
            out << render_search_report(report, {.timing = !search_no_timing, .chunk_detail = search_chunk_detail});
            return kExitOk;
        }

        if (*verify) {
            VerificationReport report;
            if (verify_property == "theorem") {
                SearchOptions options;
                options.jobs = verify_jobs ? *verify_jobs : detail::default_jobs();
                options.chunk_bits = verify_chunk_bits;
                options.long_run = verify_long_run;
                report = verify_theorem(verify_n, options);
            } else if (verify_property == "lemma1") {
                report = verify_lemma1_exhaustive(verify_n);
            } else if (verify_property == "lemma2") {
                report = verify_lemma2_exhaustive(verify_n);
            } else if (verify_property == "schwarz") {
                report = verify_schwarz_exhaustive(verify_n);
            } else {
                auto both = verify_assertions_exhaustive(verify_n);
                report = verify_property == "assertion1" ? std::move(both.first) : std::move(both.second);
            }
            out << render_verification_report(report, {.timing = !verify_no_timing});
            return report.passed() ? kExitOk : kExitViolation;
        }

        if (*convert) {
            const Digraph d = parse_edge_list(detail::read_input(convert_file, in));
            out << detail::format_graph(d, convert_to);
            return kExitOk;
        }
    } catch (const InvariantError &e) {
        err << "invariant violated: " << e.what() << '\n' << e.instance();
        return kExitViolation;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::filesystem::filesystem_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace critigraph::cli
