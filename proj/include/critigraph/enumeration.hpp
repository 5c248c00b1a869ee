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
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "critigraph/criticality.hpp"
#include "critigraph/digraph.hpp"
#include "critigraph/io.hpp"

namespace critigraph {

/// Largest order whose full mask space (2^(n(n-1)) <= 2^42) may be indexed.
inline constexpr int kMaxMaskOrder = 7;

/// Index into the labeled loop-free digraphs on n vertices. Bit i of the mask
/// is the i-th off-diagonal cell in row-major order: (0,1), (0,2), ...,
/// (1,0), (1,2), ...
struct MaskCursor {
    int n = 0;
    std::uint64_t mask = 0;

    friend bool operator==(const MaskCursor &, const MaskCursor &) = default;
};

namespace detail {

inline int cell_count(int n) noexcept { return n * (n - 1); }

inline void check_mask_order(int n) {
    if (n < 0 || n > kMaxMaskOrder)
        throw CapacityError("mask enumeration supports 0 <= n <= 7, got " + std::to_string(n));
}

/// Out-rows of the digraph encoded by `mask`: row u is the u-th (n-1)-bit
/// field with a zero spliced in at the diagonal position u.
inline void rows_from_mask(int n, std::uint64_t mask, std::uint64_t *rows) noexcept {
    const int width = n - 1;
    const std::uint64_t field = low_mask(width);
    for (int u = 0; u < n; ++u) {
        const std::uint64_t r = (mask >> (u * width)) & field;
        rows[u] = (r & low_mask(u)) | ((r >> u) << (u + 1));
    }
}

inline std::uint64_t mask_from_rows(int n, std::span<const std::uint64_t> rows) noexcept {
    const int width = n - 1;
    std::uint64_t mask = 0;
    for (int u = 0; u < n; ++u) {
        const std::uint64_t r = rows[static_cast<std::size_t>(u)];
        const std::uint64_t packed = (r & low_mask(u)) | ((r >> (u + 1)) << u);
        mask |= packed << (u * width);
    }
    return mask;
}

inline void transpose(int n, const std::uint64_t *out, std::uint64_t *in) noexcept {
    std::fill(in, in + n, std::uint64_t{0});
    for (int u = 0; u < n; ++u)
        for (std::uint64_t r = out[u]; r; r &= r - 1)
            in[std::countr_zero(r)] |= bit(u);
}

} // namespace detail

inline Digraph decode(MaskCursor cursor) {
    detail::check_mask_order(cursor.n);
    if (cursor.mask & ~detail::low_mask(detail::cell_count(cursor.n)))
        throw BoundsError("mask has bits beyond the " + std::to_string(detail::cell_count(cursor.n)) +
                          " adjacency cells of order " + std::to_string(cursor.n));
    std::array<std::uint64_t, kMaxMaskOrder> rows{};
    detail::rows_from_mask(cursor.n, cursor.mask, rows.data());
    return Digraph::from_rows(cursor.n, std::span(rows.data(), static_cast<std::size_t>(cursor.n)));
}

inline MaskCursor encode(const Digraph &d) {
    detail::check_mask_order(d.order());
    return {d.order(), detail::mask_from_rows(d.order(), d.rows())};
}

/// Necessary condition for strong connectivity (n >= 2): every vertex has an
/// out-edge and an in-edge.
inline bool passes_degree_filter(int n, std::span<const std::uint64_t> rows) noexcept {
    std::uint64_t any_in = 0;
    for (int u = 0; u < n; ++u) {
        if (rows[static_cast<std::size_t>(u)] == 0)
            return false;
        any_in |= rows[static_cast<std::size_t>(u)];
    }
    return any_in == detail::low_mask(n);
}

/// Outcome of one chunk of the mask space.
struct ChunkResult {
    std::uint64_t index = 0;
    int max_edges = -1; ///< -1 when the chunk holds no critical digraph
    std::uint64_t attain_count = 0;
    std::optional<std::uint64_t> witness_mask; ///< smallest mask attaining max_edges
    std::uint64_t critical_count = 0;

    friend bool operator==(const ChunkResult &, const ChunkResult &) = default;
};

struct SearchOptions {
    int jobs = 1;
    int chunk_bits = 16;
    std::optional<std::filesystem::path> checkpoint;
    bool long_run = false;
    /// Called after each newly computed chunk with (chunks done, total chunks).
    std::function<void(std::uint64_t, std::uint64_t)> progress;
};

/// Exhaustive M(n) search result.
struct SearchReport {
    int n = 0;
    int chunk_bits = 0;
    int max_edges = -1;
    std::uint64_t witness_mask = 0;
    Digraph witness;
    std::uint64_t attain_count = 0;
    std::uint64_t graphs_scanned = 0;
    std::uint64_t critical_count = 0;
    std::chrono::milliseconds elapsed{0};
    std::vector<ChunkResult> chunk_results;
};

/// A failed instance, replayable with decode({n, mask}).
struct Violation {
    std::uint64_t mask = 0;
    std::string details;

    friend bool operator==(const Violation &, const Violation &) = default;
};

struct VerificationReport {
    std::string property;
    int n = 0;
    std::uint64_t instances_checked = 0;
    std::uint64_t precondition_skips = 0;
    std::vector<Violation> violations;
    /// Named population sizes (precondition outcomes, critical digraph counts, ...).
    std::map<std::string, std::uint64_t> populations;
    std::chrono::milliseconds elapsed{0};

    bool passed() const noexcept { return violations.empty(); }
};

// ---------------------------------------------------------------------------
// Checkpoint files
//
//   critigraph-checkpoint v1 n=<n> chunkbits=<b>
//   <chunk-index> <partial-max> <partial-count> <witness-mask-or-dash> <critical-count>
//
// partial-max is -1 for a chunk without critical digraphs. A final line
// without a terminating newline is treated as torn and ignored.
// ---------------------------------------------------------------------------

inline std::string checkpoint_header(int n, int chunk_bits) {
    return "critigraph-checkpoint v1 n=" + std::to_string(n) + " chunkbits=" + std::to_string(chunk_bits);
}

inline std::string checkpoint_line(const ChunkResult &c) {
    std::ostringstream out;
    out << c.index << ' ' << c.max_edges << ' ' << c.attain_count << ' ';
    if (c.witness_mask)
        out << *c.witness_mask;
    else
        out << '-';
    out << ' ' << c.critical_count;
    return out.str();
}

/// Completed chunks recorded in a checkpoint document, keyed by chunk index.
inline std::map<std::uint64_t, ChunkResult> parse_checkpoint(std::string_view text, int n, int chunk_bits) {
    std::map<std::uint64_t, ChunkResult> done;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
        const std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            break; // torn final line
        const std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (line_no == 1) {
            if (line != checkpoint_header(n, chunk_bits))
                throw ParseError(1, "checkpoint header \"" + std::string(line) + "\" does not match \"" +
                                        checkpoint_header(n, chunk_bits) + "\"");
            continue;
        }
        const auto tokens = detail::split_ws(line);
        if (tokens.empty())
            continue;
        if (tokens.size() != 5)
            throw ParseError(line_no, "checkpoint entry needs 5 fields");
        auto index = detail::parse_integer(tokens[0]);
        auto max = detail::parse_integer(tokens[1]);
        auto count = detail::parse_integer(tokens[2]);
        auto critical = detail::parse_integer(tokens[4]);
        if (!index || !max || !count || !critical || *index < 0 || *count < 0 || *critical < 0 || *max < -1)
            throw ParseError(line_no, "malformed checkpoint entry");
        if (*index >= (1LL << chunk_bits))
            throw ParseError(line_no, "chunk index out of range");
        ChunkResult c;
        c.index = static_cast<std::uint64_t>(*index);
        c.max_edges = static_cast<int>(*max);
        c.attain_count = static_cast<std::uint64_t>(*count);
        c.critical_count = static_cast<std::uint64_t>(*critical);
        if (tokens[3] != "-") {
            auto w = detail::parse_integer(tokens[3]);
            if (!w || *w < 0)
                throw ParseError(line_no, "malformed witness mask");
            c.witness_mask = static_cast<std::uint64_t>(*w);
        }
        done[c.index] = c;
    }
    return done;
}

namespace detail {

/// Appends chunk lines to a checkpoint file, creating it with a header first.
class CheckpointWriter {
  public:
    CheckpointWriter(const std::filesystem::path &path, int n, int chunk_bits, bool fresh) {
        if (fresh) {
            out_.open(path, std::ios::out | std::ios::trunc);
            out_ << checkpoint_header(n, chunk_bits) << '\n';
        } else {
            out_.open(path, std::ios::out | std::ios::app);
        }
        if (!out_)
            throw UsageError("cannot open checkpoint file " + path.string());
        out_.flush();
    }

    void record(const ChunkResult &c) {
        std::lock_guard lock(mutex_);
        out_ << checkpoint_line(c) << '\n';
        out_.flush();
    }

  private:
    std::mutex mutex_;
    std::ofstream out_;
};

inline std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Runs `task(i)` for every index in `todo` on `jobs` threads. The first
/// exception thrown by any task is rethrown after all workers stop.
template <typename Task>
void run_parallel(const std::vector<std::uint64_t> &todo, int jobs, Task &&task) {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1);
            if (i >= todo.size())
                return;
            try {
                task(todo[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed = true;
            }
        }
    };
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(todo.size())));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto &t : pool)
            t.join();
    }
    if (error)
        std::rethrow_exception(error);
}

/// Search kernel over [begin, end): degree filter, strong connectivity, then
/// the per-vertex deletions with early exit.
inline ChunkResult scan_chunk(int n, std::uint64_t index, std::uint64_t begin, std::uint64_t end) {
    ChunkResult result;
    result.index = index;
    const int schwarz_bound = n * (n - 1) / 2;
    std::array<std::uint64_t, kMaxMaskOrder> out{};
    std::array<std::uint64_t, kMaxMaskOrder> in{};
    const auto rows = std::span<const std::uint64_t>(out.data(), static_cast<std::size_t>(n));
    const auto cols = std::span<const std::uint64_t>(in.data(), static_cast<std::size_t>(n));
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        rows_from_mask(n, mask, out.data());
        if (!passes_degree_filter(n, rows))
            continue;
        transpose(n, out.data(), in.data());
        if (!critical_rows(rows, cols, n))
            continue;
        ++result.critical_count;
        const int edges = std::popcount(mask);
        if (n >= 3 && edges > schwarz_bound)
            throw InvariantError("critical digraph with " + std::to_string(edges) + " > C(n,2) edges at mask " +
                                     std::to_string(mask),
                                 serialize_edge_list(decode({n, mask})));
        if (edges > result.max_edges) {
            result.max_edges = edges;
            result.attain_count = 1;
            result.witness_mask = mask;
        } else if (edges == result.max_edges) {
            ++result.attain_count;
        }
    }
    return result;
}

} // namespace detail

/// Exact M(n) by scanning every labeled loop-free digraph on n vertices.
/// The report is independent of worker count; chunk_results depend only on chunk_bits.
inline SearchReport max_critical_edges(int n, const SearchOptions &options = {}) {
    if (n < 2 || n > 6)
        throw CapacityError("max_critical_edges supports 2 <= n <= 6, got " + std::to_string(n));
    if (n == 6 && !options.long_run)
        throw CapacityError("n = 6 scans 2^30 digraphs and requires the long-run flag");
    if (options.chunk_bits < 0 || options.chunk_bits > 30)
        throw UsageError("chunk bits must lie in [0, 30]");

    const auto start = std::chrono::steady_clock::now();
    const int cells = detail::cell_count(n);
    const int chunk_bits = std::min(options.chunk_bits, cells);
    const int low_bits = cells - chunk_bits;
    const std::uint64_t chunks = std::uint64_t{1} << chunk_bits;

    std::vector<ChunkResult> results(chunks);
    std::vector<bool> have(chunks, false);
    std::optional<detail::CheckpointWriter> writer;
    if (options.checkpoint) {
        bool fresh = true;
        if (std::filesystem::exists(*options.checkpoint)) {
            const std::string text = detail::read_file(*options.checkpoint);
            for (auto &[index, c] : parse_checkpoint(text, n, chunk_bits)) {
                results[index] = c;
                have[index] = true;
            }
            // Drop a torn final line so appended entries start on a fresh line.
            const std::size_t complete = text.rfind('\n') + 1;
            if (complete != text.size())
                std::filesystem::resize_file(*options.checkpoint, complete);
            fresh = complete == 0;
        }
        writer.emplace(*options.checkpoint, n, chunk_bits, fresh);
    }

    std::vector<std::uint64_t> todo;
    for (std::uint64_t c = 0; c < chunks; ++c)
        if (!have[c])
            todo.push_back(c);

    std::atomic<std::uint64_t> done{chunks - todo.size()};
    detail::run_parallel(todo, options.jobs, [&](std::uint64_t c) {
        const std::uint64_t begin = c << low_bits;
        const std::uint64_t end = (c + 1) << low_bits;
        results[c] = detail::scan_chunk(n, c, begin, end);
        if (writer)
            writer->record(results[c]);
        const auto finished = ++done;
        if (options.progress)
            options.progress(finished, chunks);
    });

    SearchReport report;
    report.n = n;
    report.chunk_bits = chunk_bits;
    report.graphs_scanned = std::uint64_t{1} << cells;
    for (const auto &c : results) {
        report.critical_count += c.critical_count;
        if (c.max_edges < 0)
            continue;
        if (c.max_edges > report.max_edges) {
            report.max_edges = c.max_edges;
            report.attain_count = c.attain_count;
            report.witness_mask = *c.witness_mask;
        } else if (c.max_edges == report.max_edges) {
            report.attain_count += c.attain_count;
        }
    }
    if (report.max_edges >= 0)
        report.witness = decode({n, report.witness_mask});
    report.chunk_results = std::move(results);
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

/// Labeled strongly connected loop-free digraphs on n vertices.
inline std::uint64_t count_strongly_connected(int n, int jobs = 1) {
    if (n < 0 || n > 5)
        throw CapacityError("count_strongly_connected supports 0 <= n <= 5, got " + std::to_string(n));
    if (n <= 1)
        return 1;
    const int cells = detail::cell_count(n);
    const int chunk_bits = std::min(cells, 8);
    const int low_bits = cells - chunk_bits;
    std::vector<std::uint64_t> todo(std::uint64_t{1} << chunk_bits);
    for (std::uint64_t c = 0; c < todo.size(); ++c)
        todo[c] = c;
    std::vector<std::uint64_t> partial(todo.size(), 0);
    detail::run_parallel(todo, jobs, [&](std::uint64_t c) {
        std::array<std::uint64_t, kMaxMaskOrder> out{};
        std::array<std::uint64_t, kMaxMaskOrder> in{};
        const auto rows = std::span<const std::uint64_t>(out.data(), static_cast<std::size_t>(n));
        for (std::uint64_t mask = c << low_bits; mask < (c + 1) << low_bits; ++mask) {
            detail::rows_from_mask(n, mask, out.data());
            if (!passes_degree_filter(n, rows))
                continue;
            detail::transpose(n, out.data(), in.data());
            if (detail::strongly_connected_within(rows, std::span<const std::uint64_t>(in.data(), rows.size()),
                                                  detail::low_mask(n)))
                ++partial[c];
        }
    });
    std::uint64_t total = 0;
    for (auto p : partial)
        total += p;
    return total;
}

namespace detail {

inline void check_sweep_range(const char *name, int n, int lo, int hi) {
    if (n < lo || n > hi)
        throw CapacityError(std::string(name) + " supports " + std::to_string(lo) + " <= n <= " + std::to_string(hi) +
                            ", got " + std::to_string(n));
}

/// Calls visit(mask, digraph) for every vertex-critical digraph on n vertices.
template <typename Visit>
std::uint64_t for_each_critical(int n, Visit &&visit) {
    std::array<std::uint64_t, kMaxMaskOrder> out{};
    std::array<std::uint64_t, kMaxMaskOrder> in{};
    const auto rows = std::span<const std::uint64_t>(out.data(), static_cast<std::size_t>(n));
    const auto cols = std::span<const std::uint64_t>(in.data(), static_cast<std::size_t>(n));
    std::uint64_t count = 0;
    const std::uint64_t total = std::uint64_t{1} << cell_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        rows_from_mask(n, mask, out.data());
        if (!passes_degree_filter(n, rows))
            continue;
        transpose(n, out.data(), in.data());
        if (!critical_rows(rows, cols, n))
            continue;
        ++count;
        visit(mask, Digraph::from_rows(n, rows));
    }
    return count;
}

inline std::string cycle_text(const Cycle &c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
        s += (i ? "," : "") + std::to_string(c.vertices[i]);
    return s + ")";
}

inline std::chrono::milliseconds since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
}

} // namespace detail

/// Runs find_removable_vertex on every (strongly connected D, v with degree >= n)
/// and re-checks D - z through an independent deletion.
inline VerificationReport verify_lemma1_exhaustive(int n) {
    detail::check_sweep_range("verify_lemma1_exhaustive", n, 2, 5);
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.property = "lemma1";
    report.n = n;
    std::uint64_t strongly_connected = 0;
    const std::uint64_t total = std::uint64_t{1} << detail::cell_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const Digraph d = decode({n, mask});
        if (!is_strongly_connected(d))
            continue;
        ++strongly_connected;
        for (Vertex v = 0; v < n; ++v) {
            if (d.degree(v) < n)
                continue;
            ++report.instances_checked;
            try {
                const Vertex z = find_removable_vertex(d, v);
                if (z == v || !is_strongly_connected(remove_vertices(d, VertexSet{z}).graph))
                    report.violations.push_back(
                        {mask, "v=" + std::to_string(v) + " z=" + std::to_string(z) + ": D - z not strongly connected"});
            } catch (const InvariantError &e) {
                report.violations.push_back({mask, "v=" + std::to_string(v) + ": " + e.what()});
            }
        }
    }
    report.populations["strongly_connected"] = strongly_connected;
    report.elapsed = detail::since(start);
    return report;
}

/// check_lemma2 on every (critical D, chordless C with V(C) != V(D)).
/// Hamiltonian chordless cycles are counted as precondition skips.
inline VerificationReport verify_lemma2_exhaustive(int n) {
    detail::check_sweep_range("verify_lemma2_exhaustive", n, 4, 5);
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.property = "lemma2";
    report.n = n;
    const auto critical = detail::for_each_critical(n, [&](std::uint64_t mask, const Digraph &d) {
        for (const Cycle &c : all_chordless_cycles(d)) {
            if (c.size() == n) {
                ++report.precondition_skips;
                continue;
            }
            ++report.instances_checked;
            const auto r = check_lemma2(d, c);
            if (!r.pass)
                report.violations.push_back({mask, "cycle " + detail::cycle_text(c) + " strict_count=" +
                                                       std::to_string(r.strict_count) +
                                                       " bound=" + std::to_string(r.bound)});
        }
    });
    report.populations["critical_digraphs"] = critical;
    report.elapsed = detail::since(start);
    return report;
}

/// Sweeps check_assertion1 over every (critical D, chordless C, V(C) != V(D))
/// and check_assertion2 over the part where D - V(C) is strongly connected.
/// The second report's populations also record how the degree-sum inequality
/// fares on the instances outside its precondition.
inline std::pair<VerificationReport, VerificationReport> verify_assertions_exhaustive(int n) {
    detail::check_sweep_range("verify_assertions_exhaustive", n, 4, 5);
    const auto start = std::chrono::steady_clock::now();
    VerificationReport first;
    first.property = "assertion1";
    first.n = n;
    VerificationReport second;
    second.property = "assertion2";
    second.n = n;
    std::uint64_t met = 0, not_met = 0, holds_outside = 0, fails_outside = 0;

    const auto critical = detail::for_each_critical(n, [&](std::uint64_t mask, const Digraph &d) {
        for (const Cycle &c : all_chordless_cycles(d)) {
            if (c.size() == n || n < c.size() + 2) {
                ++first.precondition_skips;
                ++second.precondition_skips;
                continue;
            }
            ++first.instances_checked;
            const auto r = check_assertion1(d, c);
            if (!r.assertion1_pass || !r.eq1_pass)
                first.violations.push_back(
                    {mask, "cycle " + detail::cycle_text(c) + " |E(D)|-|E(J)|=" +
                               std::to_string(r.edge_count_D - r.edge_count_J) + " bound=" +
                               std::to_string(r.assertion1_bound) + " d_J(c)=" + std::to_string(r.d_J_c)});

            if (assertion2_applies(d, c)) {
                ++met;
                ++second.instances_checked;
                const auto r2 = check_assertion2(d, c);
                if (!*r2.assertion2_pass)
                    second.violations.push_back({mask, "cycle " + detail::cycle_text(c) + " degree sum " +
                                                           std::to_string(r2.cycle_degree_sum) + " > " +
                                                           std::to_string(r2.assertion2_bound)});
            } else {
                ++not_met;
                ++second.precondition_skips;
                if (r.cycle_degree_sum <= r.assertion2_bound)
                    ++holds_outside;
                else
                    ++fails_outside;
            }
        }
    });
    first.populations["critical_digraphs"] = critical;
    second.populations["critical_digraphs"] = critical;
    second.populations["precondition_met"] = met;
    second.populations["precondition_not_met"] = not_met;
    second.populations["unconditional_holds_when_not_met"] = holds_outside;
    second.populations["unconditional_fails_when_not_met"] = fails_outside;
    first.elapsed = second.elapsed = detail::since(start);
    return {std::move(first), std::move(second)};
}

/// Every critical digraph has at most C(n,2) edges and maximum degree <= n-1.
/// Starts at n = 3: the double arc (critical at order 2) exceeds both.
inline VerificationReport verify_schwarz_exhaustive(int n) {
    detail::check_sweep_range("verify_schwarz_exhaustive", n, 3, 5);
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.property = "schwarz";
    report.n = n;
    const int bound = n * (n - 1) / 2;
    detail::for_each_critical(n, [&](std::uint64_t mask, const Digraph &d) {
        ++report.instances_checked;
        if (d.edge_count() > bound)
            report.violations.push_back({mask, std::to_string(d.edge_count()) + " edges > C(n,2)"});
        for (Vertex v = 0; v < n; ++v)
            if (d.degree(v) > n - 1)
                report.violations.push_back({mask, "vertex " + std::to_string(v) + " has degree " +
                                                       std::to_string(d.degree(v)) + " > n-1"});
    });
    report.populations["critical_digraphs"] = report.instances_checked;
    report.elapsed = detail::since(start);
    return report;
}

/// Runs max_critical_edges and compares the result with s(n) (n >= 4).
inline VerificationReport verify_theorem(int n, const SearchOptions &options = {}) {
    if (n < 4)
        throw DomainError("the extremal edge count s(n) is claimed for n >= 4 only");
    const auto search = max_critical_edges(n, options);
    VerificationReport report;
    report.property = "theorem";
    report.n = n;
    report.instances_checked = search.graphs_scanned;
    report.populations["critical_digraphs"] = search.critical_count;
    report.populations["attain_count"] = search.attain_count;
    report.populations["max_edges"] = static_cast<std::uint64_t>(std::max(search.max_edges, 0));
    report.populations["s_n"] = static_cast<std::uint64_t>(s(n));
    if (search.max_edges != s(n))
        report.violations.push_back({search.witness_mask, "max_edges " + std::to_string(search.max_edges) +
                                                              " != s(n) = " + std::to_string(s(n))});
    else if (!is_vertex_critical(search.witness) || search.witness.edge_count() != search.max_edges)
        report.violations.push_back({search.witness_mask, "witness is not a critical digraph with max_edges edges"});
    report.elapsed = search.elapsed;
    return report;
}

} // namespace critigraph
