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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "critigraph/cli.hpp"

using namespace critigraph;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string> &args, const std::string &stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = cli::run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string &name, const std::string &content) {
    const auto p = std::filesystem::temp_directory_path() / ("critigraph_cli_" + name);
    std::ofstream(p) << content;
    return p.string();
}

} // namespace

TEST_CASE("construct prints the extremal digraph", "[cli]") {
    const auto r = run({"construct", "--n", "5", "--format", "edgelist"});
    CHECK(r.code == 0);
    const Digraph d = parse_edge_list(r.out);
    CHECK(d.edge_count() == 9);
    CHECK(d == extremal_digraph(5));

    CHECK(run({"construct", "--n", "4", "--format", "matrix"}).out == "0100\n1010\n0001\n1010\n");
    CHECK(run({"construct", "--n", "4", "--format", "dot"}).out.starts_with("digraph {\n"));
    CHECK(run({"construct", "--n", "3"}).code == 2);
    CHECK(run({"construct", "--n", "5", "--format", "png"}).code == 2);
}

TEST_CASE("check reports properties and asserts on request", "[cli]") {
    const auto bad = write_temp("bad.txt", "3\n0 1\n1 0\n0 2\n2 0\n1 2\n2 1\n");
    const auto r = run({"check", bad, "--critical"});
    CHECK(r.code == 1);
    CHECK(r.out.find("vertex_critical no") != std::string::npos);
    CHECK(r.out.find("witness 0") != std::string::npos);

    const auto good = run({"check", "-", "--critical", "--sc", "--degrees"}, serialize_edge_list(extremal_digraph(4)));
    CHECK(good.code == 0);
    CHECK(good.out.find("degree 0 1 2 3\n") != std::string::npos);

    CHECK(run({"check", "-", "--sc"}, "2\n0 1\n").code == 1);
    CHECK(run({"check", "-"}, "2\n0 1\n").code == 0);
    CHECK(run({"check", "-", "--critical"}, "1\n").code == 2);
    const auto parse_fail = run({"check", "-"}, "2\n0 0\n");
    CHECK(parse_fail.code == 2);
    CHECK(parse_fail.err.find("line 2") != std::string::npos);
    CHECK(run({"check", "/nonexistent/graph.txt"}).code == 2);
}

TEST_CASE("removable, cycle, contract and convert adapt library calls", "[cli]") {
    const std::string four = "4\n0 1\n1 0\n0 2\n2 0\n1 3\n3 2\n2 1\n";
    auto r = run({"removable", "-", "--vertex", "0"}, four);
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");
    CHECK(run({"removable", "-", "--vertex", "3"}, four).code == 2);

    const std::string ext5 = serialize_edge_list(extremal_digraph(5));
    CHECK(run({"cycle", "-"}, ext5).out == "0 1\n");
    CHECK(run({"cycle", "-", "--all"}, ext5).out == "0 1\n2 3\n3 4\n");
    r = run({"cycle", "-", "--check", "assertion1"}, ext5);
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("edge_count_J") == 7);
    r = run({"cycle", "-", "--check", "lemma2"}, ext5);
    CHECK(json::parse(r.out).at("strict_count") == 2);
    r = run({"cycle", "-", "--check", "assertion2"}, ext5);
    CHECK(json::parse(r.out).at("assertion2_pass") == true);
    CHECK(run({"cycle", "-"}, "2\n0 1\n").code == 2);

    r = run({"contract", "-", "--set", "0,1"}, ext5);
    CHECK(r.code == 0);
    CHECK(r.out.starts_with("# merged_vertex 0\n# old_to_new 0 0 1 2 3\n4\n"));
    CHECK(parse_edge_list(r.out).edge_count() == 7);
    CHECK(run({"contract", "-", "--set", "0,9"}, ext5).code == 2);

    CHECK(run({"convert", "-", "--to", "matrix"}, "2\n0 1\n1 0\n").out == "01\n10\n");
    CHECK(run({"convert", "-", "--to", "dot"}, "2\n1 0\n").out == "digraph {\n  0;\n  1;\n  1 -> 0;\n}\n");
}

TEST_CASE("search and verify emit reports", "[cli]") {
    auto r = run({"search", "--n", "4", "--jobs", "1", "--no-timing"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j.at("max_edges") == 6);
    CHECK(j.at("graphs_scanned") == 4096);
    CHECK_FALSE(j.contains("elapsed"));

    const auto one = run({"search", "--n", "4", "--jobs", "1", "--no-timing"});
    const auto many = run({"search", "--n", "4", "--jobs", "8", "--chunk-bits", "10", "--no-timing"});
    CHECK(one.out == many.out);

    CHECK(run({"search", "--n", "6"}).code == 2);
    CHECK(run({"search", "--n", "7", "--long-run"}).code == 2);

    r = run({"verify", "--property", "theorem", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("passed") == true);
    CHECK(run({"verify", "--property", "theorem", "--n", "3"}).code == 2);
    CHECK(run({"verify", "--property", "lemma1", "--n", "3"}).code == 0);
    CHECK(run({"verify", "--property", "lemma2", "--n", "4"}).code == 0);
    CHECK(run({"verify", "--property", "assertion1", "--n", "4"}).code == 0);
    r = run({"verify", "--property", "assertion2", "--n", "4", "--no-timing"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("populations").contains("precondition_not_met"));
    CHECK(run({"verify", "--property", "schwarz", "--n", "4"}).code == 0);
    CHECK(run({"verify", "--property", "girth", "--n", "4"}).code == 2);
}

TEST_CASE("search checkpoint via the CLI", "[cli]") {
    const auto path = std::filesystem::temp_directory_path() / "critigraph_cli_search.ckpt";
    std::filesystem::remove(path);
    const auto first = run({"search", "--n", "4", "--jobs", "1", "--chunk-bits", "6", "--checkpoint", path.string(),
                            "--no-timing"});
    CHECK(first.code == 0);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "critigraph-checkpoint v1 n=4 chunkbits=6");
    const auto again = run({"search", "--n", "4", "--jobs", "1", "--chunk-bits", "6", "--checkpoint", path.string(),
                            "--no-timing"});
    CHECK(again.out == first.out);
    std::filesystem::remove(path);
}

TEST_CASE("usage errors exit 2 with usage text", "[cli]") {
    auto r = run({"search", "--n", "4", "--bogus"});
    CHECK(r.code == 2);
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"construct"}).code == 2);
    r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("search") != std::string::npos);
}

TEST_CASE("CRITIGRAPH_JOBS sets the default worker count", "[cli]") {
    ::setenv("CRITIGRAPH_JOBS", "3", 1);
    CHECK(cli::detail::default_jobs() == 3);
    CHECK(run({"search", "--n", "3", "--no-timing"}).code == 0);
    ::setenv("CRITIGRAPH_JOBS", "zero", 1);
    CHECK(run({"search", "--n", "3"}).code == 2);
    CHECK(run({"search", "--n", "3", "--jobs", "2"}).code == 0);
    ::unsetenv("CRITIGRAPH_JOBS");
    CHECK(cli::detail::default_jobs() >= 1);
}
